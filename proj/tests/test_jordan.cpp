#include "quatgrad/jordan/m2.hpp"
#include "quatgrad/jordan/short_grading.hpp"
#include "quatgrad/linalg/random.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace quatgrad;
using namespace quatgrad::jordan;

namespace {

// dim {X : X B + B X = 0} by plain elimination.
std::size_t naive_jordan_centralizer_dim(const Matrix& B) {
    const std::size_t n = B.rows();
    Matrix m(n * n, n * n);
    for (std::size_t a = 0; a < n * n; ++a) {
        Matrix X = Matrix::unit(n, a / n, a % n);
        Matrix img = X * B + B * X;
        for (std::size_t k = 0; k < n * n; ++k) m(k, a) = img.entries()[k];
    }
    return n * n - testgen::naive_rank(m);
}

Matrix companion(const std::vector<long>& ascending) {
    const std::size_t n = ascending.size();
    Matrix C(n, n);
    for (std::size_t i = 1; i < n; ++i) C(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) C(i, n - 1) = -ascending[i];
    return C;
}

}  // namespace

TEST_CASE("make_jordan dimensions and examples") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(make_jordan(JordanFamily::full, n).dim() == static_cast<std::size_t>(n * n));
        CHECK(make_jordan(JordanFamily::sym, n).dim() == static_cast<std::size_t>(n * (n + 1) / 2));
        CHECK(make_jordan(JordanFamily::skew, n).dim() == static_cast<std::size_t>(n * (2 * n - 1)));
        CHECK(make_jordan(JordanFamily::spin, n).dim() == static_cast<std::size_t>(n + 1));
    }
    JordanAlgebraModel f2 = make_jordan(JordanFamily::full, 2);
    Vector A = full_coordinates(Matrix{{0, 1}, {0, 0}}), B = full_coordinates(Matrix{{0, 0}, {1, 0}});
    CHECK(f2.product(A, B) == full_coordinates(Matrix::identity(2) * ratio(1, 2)));

    JordanAlgebraModel s = make_jordan(JordanFamily::spin, 4);
    auto u = s.unit();
    REQUIRE(u.has_value());
    CHECK(*u == s.basis_vector(0));
    Vector x{Rational(2), Rational(1), Rational(0), Rational(-1), Rational(3)};
    Vector y{Rational(-1), Rational(0), Rational(2), Rational(1), Rational(1)};
    // (a,u)o(b,v) = (ab + <u,v>, av + bu)
    Vector expect{Rational(-2 + 0 + 0 - 1 + 3), Rational(-1), Rational(4), Rational(2 + 1), Rational(2 - 3)};
    CHECK(s.product(x, y) == expect);

    CHECK(make_jordan(JordanFamily::sym, 2).unit().has_value());
    CHECK_THROWS(make_jordan(JordanFamily::full, 0));
    CHECK_THROWS(make_jordan(JordanFamily::short_grading, 2));
}

TEST_CASE("property: Jordan axioms for every family") {
    std::mt19937_64 rng(3);
    for (JordanFamily fam : {JordanFamily::full, JordanFamily::sym, JordanFamily::skew, JordanFamily::spin})
        for (int n = 1; n <= 3; ++n) {
            auto J = make_jordan(fam, n);
            auto v = validate(J, rng, 30);
            CAPTURE(family_name(fam));
            CAPTURE(n);
            CHECK(v.ok());
            CHECK(v.commutative);
        }
    // a non-Jordan product must be caught: the associative product on 2x2 matrices
    std::vector<std::vector<Vector>> table(4, std::vector<Vector>(4, Vector(4)));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) table[i][j] = (Matrix::unit(2, i / 2, i % 2) * Matrix::unit(2, j / 2, j % 2)).flatten();
    JordanAlgebraModel bad(JordanFamily::full, 2, {"a", "b", "c", "d"}, table);
    CHECK_FALSE(validate(bad, rng, 5).ok());
}

TEST_CASE("jordan_centralizer examples") {
    auto J = make_jordan(JordanFamily::full, 2);
    CHECK(jordan_centralizer(J, *J.unit()).dim() == 0);
    CHECK(jordan_centralizer(J, Vector(4)).dim() == 4);
    CHECK(jordan_centralizer(J, full_coordinates(Matrix{{0, 1}, {1, 0}})).dim() == 2);
}

TEST_CASE("property: jordan_centralizer agrees with a direct kernel") {
    std::mt19937_64 rng(21);
    for (int n = 2; n <= 4; ++n) {
        auto J = make_jordan(JordanFamily::full, n);
        for (int t = 0; t < 15; ++t) {
            Matrix B = testgen::random_matrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n), 2, 60);
            CHECK(jordan_centralizer(J, full_coordinates(B)).dim() == naive_jordan_centralizer_dim(B));
        }
    }
}

TEST_CASE("short gradings: structure checks and Jordan algebras") {
    for (const auto& id : short_grading_ids()) {
        CAPTURE(id);
        ShortGrading sg = short_grading(id);
        auto c = check_short_grading(sg);
        CHECK(c.sl2_triple);
        CHECK(c.abelian_radicals);
        CHECK(c.minus_e_trivial);
        CHECK(c.ge_split);
        CHECK(c.e_structure);
        JordanAlgebraModel J = from_short_grading(sg);
        CHECK(J.dim() == jordan_dim(sg.family, sg.family_n));
        CHECK(J.unit().has_value());
    }
    CHECK(from_short_grading(short_grading("sp4-sym")).dim() == 3);
    CHECK(from_short_grading(short_grading("sl4-full")).dim() == 4);
    CHECK(from_short_grading(short_grading("so6-spin")).dim() == 4);
    CHECK_THROWS(short_grading("so12-skew2"));
    CHECK_THROWS(short_grading("sl5-full"));
}

TEST_CASE("the unit of g(-1) is f/2") {
    ShortGrading sg = short_grading("sp4-sym");
    auto J = from_short_grading(sg);
    CHECK(*J.unit() == minus_coordinates(sg, sg.f * ratio(1, 2)));
}

TEST_CASE("Jordan triads match the expected pieces") {
    struct Case {
        std::string id;
        std::array<std::size_t, 4> dims;
    };
    for (const Case& c : {Case{"sp4-sym", {1, 3, 3, 3}}, Case{"sl4-full", {3, 4, 4, 4}}, Case{"so6-spin", {3, 4, 4, 4}},
                          Case{"sp6-sym", {3, 6, 6, 6}}, Case{"so8-skew", {10, 6, 6, 6}}}) {
        CAPTURE(c.id);
        JordanTriad t = build_jordan_triad(short_grading(c.id));
        CHECK(t.qd.dims() == c.dims);
        auto ch = check_triad(t);
        CHECK(ch.pieces_match);
        CHECK(ch.h_in_01);
        CHECK(ch.e_plus_f_in_10);
        CHECK(ch.e_minus_f_in_11);
        CHECK(ch.sl2_distinct);
        CHECK(t.qd.sigma3() == t.qd.sigma1().compose(t.qd.sigma2()));
    }
}

TEST_CASE("property: TKK identity and transport of commuting pairs") {
    std::mt19937_64 rng(77);
    for (const auto& id : short_grading_ids()) {
        CAPTURE(id);
        ShortGrading sg = short_grading(id);
        JordanAlgebraModel J = from_short_grading(sg);
        Matrix zero(sg.algebra->size(), sg.algebra->size());
        for (int t = 0; t < 100; ++t) {
            Vector cx = random_vector(Subspace::full(J.dim()), rng), cy = random_vector(Subspace::full(J.dim()), rng);
            Matrix x = minus_element(sg, cx), y = minus_element(sg, cy);
            CHECK(tkk_identity_check(sg, x, y));
            if (!is_zero(J.product(cx, cy))) CHECK_FALSE(tkk_identity_check(sg, x, y, 2));
            auto p = commuting_pair_transport(sg, x, y);
            CHECK(p.commute == is_zero(J.product(cx, cy)));
        }
        CHECK(tkk_identity_check(sg, zero, minus_element(sg, J.basis_vector(0))));
        // pairs with x o y = 0 from the Jordan centralizers of basis elements
        int found = 0;
        for (std::size_t i = 0; i < J.dim(); ++i) {
            Vector cx = J.basis_vector(i);
            Subspace z = jordan_centralizer(J, cx);
            if (z.dim() == 0) continue;
            Vector cy = random_vector(z, rng);
            if (is_zero(cy)) cy = z.basis()[0];
            ++found;
            auto p = commuting_pair_transport(sg, minus_element(sg, cx), minus_element(sg, cy));
            CHECK(p.commute);
            CHECK(is_zero(J.product(cx, cy)));
        }
        CHECK(found > 0);
        Matrix u = minus_element(sg, *J.unit());
        CHECK_FALSE(commuting_pair_transport(sg, u, u).commute);
        auto p0 = commuting_pair_transport(sg, u, zero);
        CHECK(p0.second.is_zero());
        CHECK(p0.commute);
    }
}

TEST_CASE("M<2> membership and sampling") {
    CHECK(m2_membership(Matrix{{0, 1}, {1, 0}}));
    CHECK(is_regular(Matrix{{0, 1}, {1, 0}}));
    Matrix c3 = companion({0, -1, 0});  // t^3 - t
    CHECK(m2_membership(c3));
    CHECK(is_regular(c3));
    CHECK_FALSE(m2_membership(Matrix::identity(3)));
    CHECK_FALSE(is_regular(Matrix::identity(3)));
    std::mt19937_64 rng(4);
    for (std::size_t n = 1; n <= 6; ++n) {
        Matrix B = sample_m2_regular(n, rng);
        CHECK(m2_membership(B));
        CHECK(is_regular(B));
        CHECK(m2_constraint_count(n) == (n + 1) / 2);
        CHECK(m2_jacobian_rank(B) == (n + 1) / 2);
        // odd coefficients of det(t - B): for a companion matrix they are the
        // coefficients of t^(n-1), t^(n-3), ...
        for (std::size_t k = 1; k <= n; k += 2) CHECK(B(n - k, n - 1) == 0);
    }
}

TEST_CASE("fiber_bound_report: centralizer dim n and bound n^2 + [n/2]") {
    std::mt19937_64 rng(10);
    const std::vector<std::size_t> bounds{0, 0, 5, 10, 18};
    for (std::size_t n = 2; n <= 4; ++n) {
        auto r = fiber_bound_report(n, rng);
        CAPTURE(n);
        CHECK(r.ok());
        CHECK(r.jordan_centralizer_dim == n);
        CHECK(naive_jordan_centralizer_dim(r.sample) == n);
        CHECK(r.bound == bounds[n]);
    }
    CHECK_THROWS(fiber_bound_report(1, rng));
}
