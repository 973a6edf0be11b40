#include "quatgrad/gradings/catalog.hpp"
#include "quatgrad/lie/elements.hpp"
#include "quatgrad/linalg/random.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace quatgrad;
using namespace quatgrad::gradings;
using lie::Family;

namespace {

std::size_t dim_so(std::size_t n) { return n * (n - 1) / 2; }
std::size_t dim_sp(std::size_t n) { return n * (n + 1) / 2; }

std::vector<Matrix> basis_of(const lie::LieAlgebra& g, const Subspace& s) { return g.elements(s); }

// Minimal dimension of z(x) cap z(y) over a few random y in z(x): the rank of z(x).
std::size_t centralizer_rank(const lie::LieAlgebra& g, const Matrix& x, std::mt19937_64& rng) {
    Subspace zx = g.centralizer({x});
    std::size_t best = zx.dim();
    for (int t = 0; t < 4; ++t) {
        Matrix y = g.element(random_vector(zx, rng, 5));
        best = std::min(best, g.centralizer({x, y}).dim());
    }
    return best;
}

}  // namespace

TEST_CASE("make_involution examples") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto g = lie::build_algebra(Family::sl, n);
        Z2Grading gr = grading_of(Involution::negative_transpose(g));
        CHECK(gr.g0.dim() == n * (n - 1) / 2);
        CHECK(gr.g1.dim() == n * (n + 1) / 2 - 1);
        for (const auto& x : g->elements(gr.g0)) CHECK(x.transpose() == -x);
    }
    auto sl2 = lie::build_algebra(Family::sl, 2);
    Z2Grading d = grading_of(Involution::inner(sl2, Matrix::diagonal({Rational(1), Rational(-1)}), "d"));
    CHECK(d.g0.dim() == 1);
    CHECK_THROWS_AS(Involution::inner(sl2, Matrix::identity(2), "id"), std::invalid_argument);
    CHECK_THROWS_AS(Involution::inner(sl2, Matrix::diagonal({Rational(-1), Rational(-1)}), "-id"), std::invalid_argument);

    auto sp4 = lie::build_algebra(Family::sp, 4);
    Z2Grading h = grading_of(Involution::inner(sp4, sp4->form(), "Ad(F)"));
    CHECK(h.g0.dim() == 4);
    CHECK(h.g1.dim() == 6);

    // a diagonal matrix that does not preserve the orthogonal form
    auto so4 = lie::build_algebra(Family::so, 4);
    CHECK_THROWS_AS(Involution::inner(so4, Matrix::diagonal({Rational(1), Rational(1), Rational(1), Rational(-1)}), "bad"),
                    std::invalid_argument);
    // Ad(S) with S^2 not scalar
    CHECK_THROWS_AS(Involution::inner(sl2, Matrix{{1, 1}, {0, 2}}, "bad"), std::invalid_argument);
}

TEST_CASE("is_maximal_rank examples") {
    for (std::size_t n = 2; n <= 5; ++n) CHECK(is_maximal_rank(catalog_grading("sl" + std::to_string(n) + "-so" + std::to_string(n)).grading));
    CHECK(is_maximal_rank(catalog_grading("sp4-gl2").grading));
    CHECK(is_maximal_rank(catalog_grading("sp6-gl3").grading));
    for (std::size_t n = 4; n <= 7; ++n)
        CHECK_FALSE(is_maximal_rank(catalog_grading("so" + std::to_string(n) + "-so" + std::to_string(n - 1)).grading));
    CHECK_FALSE(is_maximal_rank(catalog_grading("sl4-sp4").grading));
}

TEST_CASE("quaternionic examples and rejects") {
    for (std::size_t n = 5; n <= 7; ++n) {
        auto d = catalog_decomposition("so" + std::to_string(n) + "-chain");
        CHECK(d.qd.dims() == std::array<std::size_t, 4>{dim_so(n - 2), n - 2, n - 2, 1});
    }
    for (auto [N, m] : {std::pair<std::size_t, std::size_t>{4, 1}, {6, 1}, {6, 2}, {8, 1}}) {
        std::string id = "sl" + std::to_string(N) + "-sp-dyad" + (m == 1 ? "" : "-m" + std::to_string(m));
        auto d = catalog_decomposition(id);
        CHECK(d.qd.dim(0, 0) == dim_sp(2 * m) + dim_sp(N - 2 * m));
        CHECK(d.qd.dim(1, 0) == d.qd.dim(0, 1));
    }
    auto sl3 = catalog_decomposition("sl3-maxrank-dyad");
    CHECK(is_maximal_rank(grading_of(sl3.qd.sigma1())));
    CHECK(is_maximal_rank(grading_of(sl3.qd.sigma2())));
    CHECK(sl3.qd.sigma1().commutes_with(sl3.qd.sigma2()));

    auto g = lie::build_algebra(Family::sl, 2);
    auto s = Involution::negative_transpose(g);
    CHECK_THROWS_AS(quaternionic(s, s), std::invalid_argument);
    auto p = Involution::inner(g, Matrix{{1, 1}, {0, -1}}, "Ad(P)");
    CHECK_FALSE(s.commutes_with(p));
    CHECK_THROWS_AS(quaternionic(s, p), std::invalid_argument);
}

TEST_CASE("reorient relabels the same four pieces") {
    auto d = catalog_decomposition("so6-chain");
    auto r = reorient(d.qd, {1, 1}, {0, 1});
    CHECK(r.piece(0, 0) == d.qd.piece(0, 0));
    CHECK(r.piece(0, 1) == d.qd.piece(1, 1));
    CHECK(r.piece(1, 0) == d.qd.piece(0, 1));
    CHECK(r.piece(1, 1) == d.qd.piece(1, 0));
    CHECK_THROWS(reorient(d.qd, {1, 1}, {1, 1}));
    CHECK_THROWS(reorient(d.qd, {0, 0}, {1, 1}));
}

TEST_CASE("graded_centralizer_dims") {
    auto c = catalog_grading("sl3-so3");
    auto z = graded_centralizer_dims(c.grading, Matrix(3, 3));
    CHECK(z[0] == c.grading.g0.dim());
    CHECK(z[1] == c.grading.g1.dim());
    CHECK_THROWS(graded_centralizer_dims(c.grading, Matrix::unit(3, 0, 1)));
    auto sl2 = catalog_grading("sl2-so2");
    auto zz = graded_centralizer_dims(sl2.grading, sl2.rational_css[0]);
    CHECK(zz[0] == 0);
    CHECK(zz[1] == 1);
    auto q = catalog_decomposition("so5-chain");
    auto zq = graded_centralizer_dims(q.qd, q.rational_css[0]);
    CHECK(zq[3] == 1);
    CHECK(zq[0] == q.qd.dim(0, 0));
}

TEST_CASE("catalog entries load and carry certified rational CSS") {
    for (const auto& id : grading_ids()) {
        CAPTURE(id);
        auto c = catalog_grading(id);
        CHECK(c.rational_css.size() > 0);
    }
    for (const auto& id : decomposition_ids()) {
        CAPTURE(id);
        auto d = catalog_decomposition(id);
        for (const auto& inc : check_bracket_inclusions(d.qd)) CHECK(inc.holds);
        CHECK(check_bracket_inclusions(d.qd).size() == 10);
    }
    CHECK_THROWS(catalog_grading("sl3-sp3"));
    CHECK_THROWS(catalog_decomposition("nonsense"));
}

TEST_CASE("property: dim G.x = 2 dim G0.x for random x in g1 of every catalog grading") {
    std::mt19937_64 rng(5);
    for (const auto& id : grading_ids()) {
        CAPTURE(id);
        auto c = catalog_grading(id);
        const auto& g = *c.grading.algebra();
        auto b0 = basis_of(g, c.grading.g0), b1 = basis_of(g, c.grading.g1), all = g.basis();
        for (int t = 0; t < 50; ++t) {
            // mostly generic, sometimes sparse elements with larger centralizers
            Matrix x = g.element(random_vector(c.grading.g1, rng, t % 3 == 0 ? 1 : 3));
            std::size_t z = testgen::naive_centralizer_dim(all, x), z0 = testgen::naive_centralizer_dim(b0, x);
            CHECK(g.dim() - z == 2 * (b0.size() - z0));
            auto lib = graded_centralizer_dims(c.grading, x);
            CHECK(lib[0] == z0);
            CHECK(lib[1] == testgen::naive_centralizer_dim(b1, x));
            if (is_maximal_rank(c.grading)) CHECK(lib[1] == lib[0] + g.rank());
        }
    }
}

TEST_CASE("property: maximal rank is inherited by centralizers of semisimple elements") {
    std::mt19937_64 rng(8);
    for (const std::string id : {"sl3-so3", "sl4-so4", "sp4-gl2", "sl2-diag"}) {
        CAPTURE(id);
        auto c = catalog_grading(id);
        const auto& g = *c.grading.algebra();
        int tested = 0;
        for (int t = 0; t < 20 && tested < 6; ++t) {
            Matrix x = g.element(random_vector(c.grading.g1, rng, t % 2 == 0 ? 1 : 2));
            if (!lie::is_semisimple(x)) continue;
            ++tested;
            auto z = graded_centralizer_dims(c.grading, x);
            CHECK(z[1] - z[0] == centralizer_rank(g, x, rng));
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("property: bracket table holds for random homogeneous elements") {
    std::mt19937_64 rng(13);
    for (const std::string id : {"so6-chain", "sl4-sp-dyad", "sp4-sym-triad", "sl4-full-triad"}) {
        CAPTURE(id);
        auto d = catalog_decomposition(id);
        const auto& g = *d.qd.algebra();
        for (int t = 0; t < 10; ++t)
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) {
                    Matrix x = g.element(random_vector(d.qd.piece(p / 2, p % 2), rng));
                    Matrix y = g.element(random_vector(d.qd.piece(q / 2, q % 2), rng));
                    int i = (p / 2 + q / 2) % 2, j = (p % 2 + q % 2) % 2;
                    CHECK(d.qd.piece(i, j).contains(g.coordinates(commutator(x, y))));
                }
    }
}
