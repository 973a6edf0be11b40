#include "generators.hpp"

#include "quatgrad/lie/elements.hpp"
#include "quatgrad/linalg/elimination.hpp"
#include "quatgrad/partitions/calculus.hpp"

#include <doctest.h>

using namespace quatgrad;
using namespace quatgrad::lie;
using quatgrad::partitions::Partition;

namespace {
Matrix random_element(std::mt19937_64& rng, const LieAlgebra& g) {
    Vector c(g.dim());
    for (auto& x : c) x = testgen::uniform(rng, -3, 3);
    return g.element(c);
}

std::size_t classical_dim(Family f, std::size_t n) {
    switch (f) {
        case Family::gl: return n * n;
        case Family::sl: return n * n - 1;
        case Family::so: return n * (n - 1) / 2;
        case Family::sp: return n * (n + 1) / 2;
    }
    return 0;
}
}  // namespace

TEST_CASE("build_algebra examples") {
    auto sl2 = build_algebra(Family::sl, 2);
    CHECK(sl2->dim() == 3);
    CHECK(sl2->rank() == 1);
    auto sp4 = build_algebra(Family::sp, 4);
    CHECK(sp4->dim() == 10);
    CHECK(sp4->rank() == 2);
    auto so5 = build_algebra(Family::so, 5);
    CHECK(so5->dim() == 10);
    CHECK(so5->rank() == 2);
    CHECK_THROWS(build_algebra(Family::sp, 3));
    CHECK_THROWS(build_algebra(Family::sl, 1));
}

TEST_CASE("property: dimensions, closure, form invariance and rank via diagonal Cartan") {
    for (Family f : {Family::gl, Family::sl, Family::so, Family::sp})
        for (std::size_t n = 2; n <= 7; ++n) {
            if (f == Family::sp && n % 2) continue;
            auto g = build_algebra(f, n);
            CAPTURE(g->name());
            CHECK(g->dim() == classical_dim(f, n));
            for (const auto& b : g->basis())
                if (g->has_form()) CHECK((b.transpose() * g->form() + g->form() * b).is_zero());
            for (std::size_t i = 0; i < g->dim(); ++i)
                for (std::size_t j = i + 1; j < g->dim(); ++j) CHECK(g->contains(commutator(g->basis()[i], g->basis()[j])));
            // Diagonal matrices in g form a Cartan subalgebra for split forms.
            std::vector<Matrix> diag;
            for (std::size_t i = 0; i < n; ++i) diag.push_back(Matrix::unit(n, i, i));
            std::vector<Vector> diag_coords;
            for (const auto& b : g->basis()) {
                bool is_diag = true;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        if (r != c && b(r, c) != 0) is_diag = false;
                if (is_diag) diag_coords.push_back(g->coordinates(b));
            }
            CHECK(diag_coords.size() == g->rank());
        }
}

TEST_CASE("bracket") {
    auto sl2 = build_algebra(Family::sl, 2);
    LieElement e(sl2, Matrix{{0, 1}, {0, 0}});
    LieElement f(sl2, Matrix{{0, 0}, {1, 0}});
    LieElement h(sl2, Matrix{{1, 0}, {0, -1}});
    CHECK(bracket(e, f) == h);
    CHECK(bracket(h, e) == Rational(2) * e);
    CHECK(bracket(e, e).matrix().is_zero());
    auto gl2 = build_algebra(Family::gl, 2);
    LieElement e2(gl2, Matrix{{0, 1}, {0, 0}});
    CHECK_THROWS_AS(bracket(e, e2), std::invalid_argument);
    CHECK_THROWS(LieElement(sl2, Matrix::identity(2)));
}

TEST_CASE("property: Jacobi identity for random triples") {
    std::mt19937_64 rng(21);
    for (auto [f, n] : {std::pair{Family::sl, 3}, {Family::so, 5}, {Family::sp, 4}, {Family::gl, 3}}) {
        auto g = build_algebra(f, n);
        for (int t = 0; t < 10; ++t) {
            Matrix x = random_element(rng, *g), y = random_element(rng, *g), z = random_element(rng, *g);
            Matrix j = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
            CHECK(j.is_zero());
        }
    }
}

TEST_CASE("centralizer examples") {
    auto sl2 = build_algebra(Family::sl, 2);
    CHECK(sl2->centralizer({Matrix(2, 2)}) == sl2->whole());
    Matrix e{{0, 1}, {0, 0}};
    Subspace ze = sl2->centralizer({e});
    CHECK(ze.dim() == 1);
    CHECK(ze == sl2->span_of({e}));
    Subspace zh = sl2->centralizer({Matrix{{1, 0}, {0, -1}}});
    CHECK(zh == sl2->span_of({Matrix{{1, 0}, {0, -1}}}));
}

TEST_CASE("nilpotent_from_partition examples") {
    auto gl3 = build_algebra(Family::gl, 3);
    Matrix e = nilpotent_from_partition(gl3, Partition({3})).matrix();
    CHECK(rank(e) == 2);
    CHECK(rank(e * e) == 1);
    CHECK(e.power(3).is_zero());

    auto sp4 = build_algebra(Family::sp, 4);
    Matrix e22 = nilpotent_from_partition(sp4, Partition({2, 2})).matrix();
    CHECK((e22 * e22).is_zero());
    CHECK(rank(e22) == 2);
    CHECK((e22.transpose() * sp4->form() + sp4->form() * e22).is_zero());

    auto so5 = build_algebra(Family::so, 5);
    Matrix e311 = nilpotent_from_partition(so5, Partition({3, 1, 1})).matrix();
    CHECK(e311.power(3).is_zero());
    CHECK(jordan_type(e311) == Partition({3, 1, 1}));
    CHECK(jordan_type(nilpotent_from_partition(so5, Partition({2, 2, 1})).matrix()) == Partition({2, 2, 1}));
}

TEST_CASE("nilpotent_from_partition rejects bad input") {
    auto so4 = build_algebra(Family::so, 4);
    CHECK_THROWS_AS(nilpotent_from_partition(so4, Partition({2, 1, 1})), std::invalid_argument);
    auto sp4 = build_algebra(Family::sp, 4);
    CHECK_THROWS_AS(nilpotent_from_partition(sp4, Partition({3, 1})), std::invalid_argument);
    CHECK_THROWS_AS(nilpotent_from_partition(sp4, Partition({2, 2, 2})), std::invalid_argument);
}

TEST_CASE("property: Jordan type round trip for every admissible partition up to size 12") {
    for (Family f : {Family::gl, Family::sl, Family::so, Family::sp})
        for (int n = 2; n <= 12; ++n) {
            if (f == Family::sp && n % 2) continue;
            if ((f == Family::gl || f == Family::sl) && n > 9) continue;
            auto g = build_algebra(f, static_cast<std::size_t>(n));
            for (const auto& p : partitions::partitions_of(n)) {
                if (f == Family::so && !p.admissible_so()) continue;
                if (f == Family::sp && !p.admissible_sp()) continue;
                CAPTURE(g->name());
                CAPTURE(p.to_string());
                LieElement e = nilpotent_from_partition(g, p);
                CHECK(jordan_type(e.matrix()) == p);
                CHECK(is_nilpotent(e.matrix()));
            }
        }
}

TEST_CASE("split_congruence rejects non-split forms") {
    CHECK_THROWS(split_congruence(Matrix{{1, 0}, {0, 1}}, Family::so));
    CHECK_THROWS(split_congruence(Matrix{{1, 1}, {1, 0}}, Family::so));
    Matrix T = split_congruence(Matrix{{1, 0}, {0, -1}}, Family::so);
    CHECK(T.transpose() * Matrix{{1, 0}, {0, -1}} * T == split_form(Family::so, 2));
}

TEST_CASE("semisimple and nilpotent tests") {
    CHECK(is_semisimple(Matrix{{1, 0}, {0, -1}}));
    Matrix j{{0, 1}, {0, 0}};
    CHECK(is_nilpotent(j));
    CHECK_FALSE(is_semisimple(j));
    Matrix m{{1, 1, 0}, {0, 1, 0}, {0, 0, -2}};
    CHECK_FALSE(is_semisimple(m));
    CHECK(is_semisimple(Matrix{{0, 1}, {1, 0}}));
    CHECK(is_semisimple(Matrix{{0, -1}, {1, 0}}));  // eigenvalues +-i
    CHECK_FALSE(is_nilpotent(Matrix{{0, 1}, {1, 0}}));
}

TEST_CASE("property: semisimplicity is conjugation invariant") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; ++t) {
        Vector d{Rational(testgen::uniform(rng, -2, 2)), Rational(testgen::uniform(rng, -2, 2)),
                 Rational(testgen::uniform(rng, -2, 2)), Rational(testgen::uniform(rng, -2, 2))};
        Matrix g = testgen::random_invertible(rng, 4);
        Matrix s = g * Matrix::diagonal(d) * g.inverse();
        CHECK(is_semisimple(s));
        Matrix n = Matrix::unit(4, 0, 1);
        if (d[0] == d[1]) CHECK_FALSE(is_semisimple(g * (Matrix::diagonal(d) + n) * g.inverse()));
    }
}

TEST_CASE("property: gl centralizer dimension matches the block formula") {
    for (int n = 1; n <= 6; ++n) {
        auto g = build_algebra(Family::gl, static_cast<std::size_t>(n));
        for (const auto& p : partitions::partitions_of(n)) {
            Matrix e = nilpotent_from_partition(g, p).matrix();
            CHECK(static_cast<long>(g->centralizer({e}).dim()) == partitions::dim_cent_gl(p));
        }
    }
}
