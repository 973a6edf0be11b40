#include "generators.hpp"

#include "quatgrad/linalg/elimination.hpp"
#include "quatgrad/linalg/polynomial.hpp"
#include "quatgrad/linalg/subspace.hpp"

#include <doctest.h>

using namespace quatgrad;

namespace {
Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("ratio is always reduced with positive denominator") {
    Rational q = ratio(2, 6);
    CHECK(q.get_num() == 1);
    CHECK(q.get_den() == 3);
    Rational r = ratio(3, -9);
    CHECK(r.get_num() == -1);
    CHECK(r.get_den() == 3);
    CHECK(q + r == 0);
    CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
    Matrix m{{1, 1, 0}};
    Subspace k = kernel_basis(m);
    CHECK(k.dim() == 2);
    for (const auto& v : k.basis()) CHECK(is_zero(m * v));
}

TEST_CASE("property: fraction-free rank agrees with naive elimination") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = testgen::uniform(rng, 1, 9), c = testgen::uniform(rng, 1, 9);
        Matrix m = (t % 3 == 0) ? testgen::random_low_rank(rng, r, c, testgen::uniform(rng, 1, 4))
                                : testgen::random_matrix(rng, r, c, 5, static_cast<int>(testgen::uniform(rng, 0, 80)));
        CHECK(rank(m) == testgen::naive_rank(m));
    }
}

TEST_CASE("property: rank-nullity and kernel annihilation") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = testgen::uniform(rng, 1, 8), c = testgen::uniform(rng, 1, 8);
        Matrix m = testgen::random_low_rank(rng, r, c, testgen::uniform(rng, 1, 4));
        Subspace k = kernel_basis(m);
        CHECK(rank(m) + k.dim() == c);
        for (const auto& v : k.basis()) CHECK(is_zero(m * v));
    }
}

TEST_CASE("rref is canonical: row-equivalent matrices give equal subspaces") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        Matrix m = testgen::random_low_rank(rng, 5, 7, 3);
        Matrix g = testgen::random_invertible(rng, 5);
        std::vector<Vector> a, b;
        Matrix gm = g * m;
        for (std::size_t i = 0; i < 5; ++i) {
            a.push_back(m.row(i));
            b.push_back(gm.row(i));
        }
        CHECK(Subspace::span(7, a) == Subspace::span(7, b));
    }
}

TEST_CASE("subspace operations") {
    Vector e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0}), e3 = vec({0, 0, 1});
    Subspace a = Subspace::span(3, {e1}), b = Subspace::span(3, {e2});
    CHECK(intersect(a, b).dim() == 0);
    CHECK(intersect(a, a) == a);
    Subspace x = Subspace::span(3, {e1, e2}), y = Subspace::span(3, {e2, e3});
    CHECK(intersect(x, y) == Subspace::span(3, {e2}));
    CHECK(sum(x, y).dim() == 3);
    CHECK(x.contains(vec({3, -2, 0})));
    CHECK_FALSE(x.contains(vec({0, 0, 1})));
    CHECK_THROWS(intersect(a, Subspace::full(2)));
    Vector c = x.coordinates(vec({3, -2, 0}));
    CHECK(x.combine(c) == vec({3, -2, 0}));
    CHECK_THROWS(x.coordinates(e3));
}

TEST_CASE("property: Grassmann identity") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = testgen::uniform(rng, 2, 7);
        auto random_space = [&] {
            std::size_t k = testgen::uniform(rng, 0, n);
            std::vector<Vector> vs;
            Matrix m = testgen::random_low_rank(rng, k + 1, n, testgen::uniform(rng, 1, n));
            for (std::size_t i = 0; i < k; ++i) vs.push_back(m.row(i));
            return Subspace::span(n, vs);
        };
        Subspace a = random_space(), b = random_space();
        Subspace i = intersect(a, b);
        CHECK(a.dim() + b.dim() == i.dim() + sum(a, b).dim());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
    }
}

TEST_CASE("solve") {
    Matrix m{{1, 2}, {3, 4}};
    auto x = solve(m, vec({5, 6}));
    REQUIRE(x);
    CHECK(m * *x == vec({5, 6}));
    CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, vec({1, 2})));
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 20; ++t) {
        Matrix g = testgen::random_invertible(rng, 5);
        CHECK(g * g.inverse() == Matrix::identity(5));
    }
    CHECK_THROWS(Matrix({{1, 2}, {2, 4}}).inverse());
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly_coefficients(Matrix::identity(2)) == vec({1, -2, 1}));
    CHECK(char_poly_coefficients(Matrix{{0, 1}, {1, 0}}) == vec({1, 0, -1}));
    CHECK(char_poly_coefficients(Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}) == vec({1, 0, 0, 0}));
    CHECK_THROWS(char_poly(Matrix(2, 3)));
}

TEST_CASE("property: char_poly matches det(tI - m) at sample points and is conjugation invariant") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = testgen::uniform(rng, 1, 5);
        Matrix m = testgen::random_matrix(rng, n, n);
        Polynomial p = char_poly(m);
        for (long s = -2; s <= 2; ++s) {
            Matrix a = Matrix::identity(n) * Rational(s) - m;
            CHECK(p(Rational(s)) == testgen::naive_det(a));
        }
        Matrix g = testgen::random_invertible(rng, n);
        CHECK(char_poly(g * m * g.inverse()) == p);
        CHECK(p(m).is_zero());  // Cayley-Hamilton
    }
}

TEST_CASE("polynomial utilities") {
    Polynomial p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    Polynomial q({Rational(1), Rational(1)});                // x + 1
    auto [quo, rem] = divmod(p, q);
    CHECK(rem.is_zero());
    CHECK(quo == Polynomial({Rational(-1), Rational(1)}));
    CHECK(gcd(p, q) == q);
    Polynomial cube = q * q * q;
    CHECK(squarefree_part(cube) == q);
    auto roots = rational_roots(p * q * Polynomial({Rational(0), Rational(2), Rational(-3)}));
    // roots: -1 (twice), 0, 2/3, 1
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == std::make_pair(Rational(-1), std::size_t{2}));
    CHECK(roots[1].first == 0);
    CHECK(roots[2].first == ratio(2, 3));
    CHECK(roots[3].first == 1);
    CHECK(rational_roots(Polynomial({Rational(1), Rational(0), Rational(1)})).empty());
}

TEST_CASE("primitive integer vector") {
    Vector v{ratio(-1, 2), ratio(1, 3), Rational(0)};
    auto p = primitive_integer_vector(v);
    CHECK(p[0] == 3);
    CHECK(p[1] == -2);
    CHECK(p[2] == 0);
}
