#include "quatgrad/commvar/css.hpp"

#include "quatgrad/lie/elements.hpp"
#include "quatgrad/linalg/random.hpp"

#include <stdexcept>

namespace quatgrad::commvar {

bool is_css(const lie::LieAlgebra& g, const std::vector<Matrix>& c, const Subspace& ambient) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!ambient.contains(g.coordinates(c[i]))) return false;
        if (!lie::is_semisimple(c[i])) return false;
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!commutator(c[i], c[j]).is_zero()) return false;
    }
    Subspace s = g.span_of(c);
    return s.dim() == c.size() && g.centralizer(c, ambient) == s;
}

CartanSubspace grow_css(const lie::LieAlgebra& g, std::vector<Matrix> start, const Subspace& grow_in,
                        const Subspace& ambient, std::mt19937_64& rng, int budget) {
    std::vector<Matrix> c = std::move(start);
    Subspace s = g.span_of(c);
    int spent = 0;
    while (true) {
        Subspace z = g.centralizer(c, grow_in);
        if (s.contains(z)) break;
        bool added = false;
        for (long range = 2; !added; ++range) {
            if (++spent > budget) throw std::runtime_error("grow_css: random budget exhausted");
            Vector v = random_vector(z, rng, range);
            if (s.contains(v)) continue;
            Matrix x = g.element(v);
            if (!lie::is_semisimple(x)) continue;
            c.push_back(x);
            s = g.span_of(c);
            added = true;
        }
    }
    if (!is_css(g, c, ambient)) throw std::logic_error("grow_css: result is not a CSS of the ambient space");
    return CartanSubspace{c, s, ambient};
}

CartanSubspace build_css(const lie::LieAlgebra& g, const Subspace& target, std::mt19937_64& rng) {
    return grow_css(g, {}, target, target, rng);
}

std::vector<Matrix> HomogeneousCSS::basis() const {
    std::vector<Matrix> out = a10;
    out.insert(out.end(), a11.begin(), a11.end());
    return out;
}

HomogeneousCSS homogeneous_css(const QuaternionicDecomposition& qd, PieceIndex first, std::mt19937_64& rng) {
    const auto& g = *qd.algebra();
    if (!(first == PieceIndex{1, 0} || first == PieceIndex{1, 1}))
        throw std::invalid_argument("homogeneous_css: start from g10 or g11");
    PieceIndex second = first == PieceIndex{1, 0} ? PieceIndex{1, 1} : PieceIndex{1, 0};
    const Subspace& p1 = qd.piece(first.i, first.j);
    const Subspace& p2 = qd.piece(second.i, second.j);
    CartanSubspace little = build_css(g, p1, rng);
    CartanSubspace full = grow_css(g, little.basis, p2, qd.odd_first(), rng);
    HomogeneousCSS h;
    std::vector<Matrix> rest(full.basis.begin() + static_cast<long>(little.dim()), full.basis.end());
    if (first == PieceIndex{1, 0}) {
        h.a10 = little.basis;
        h.a11 = rest;
    } else {
        h.a10 = rest;
        h.a11 = little.basis;
    }
    return h;
}

std::size_t standard_component_dim(const QuaternionicDecomposition& qd, const HomogeneousCSS& h) {
    const auto& g = *qd.algebra();
    std::size_t a01 = g.centralizer(h.basis(), qd.piece(0, 1)).dim();
    return qd.dim(1, 0) + qd.dim(1, 1) - qd.dim(0, 1) + a01;
}

CommutatorMap make_commutator_map(PieceIndex alpha, PieceIndex beta, PieceIndex gamma) {
    auto nonzero = [](PieceIndex p) { return !(p == PieceIndex{0, 0}); };
    if (!nonzero(alpha) || !nonzero(beta) || !nonzero(gamma) || alpha == beta || beta == gamma || alpha == gamma)
        throw std::invalid_argument("commutator map: (alpha, beta, gamma) must be a permutation of 01, 10, 11");
    return {alpha, beta, gamma};
}

Subspace differential_image(const QuaternionicDecomposition& qd, const CommutatorMap& cm, const Matrix& x, const Matrix& y) {
    const auto& g = *qd.algebra();
    const Subspace& pa = qd.piece(cm.alpha.i, cm.alpha.j);
    const Subspace& pb = qd.piece(cm.beta.i, cm.beta.j);
    const Subspace& pc = qd.piece(cm.gamma.i, cm.gamma.j);
    if (!pa.contains(g.coordinates(x)) || !pb.contains(g.coordinates(y)))
        throw std::invalid_argument("differential_image: point outside the source pieces");
    std::vector<Vector> vs;
    for (const auto& b : g.elements(pb)) vs.push_back(g.coordinates(commutator(x, b), false));
    for (const auto& a : g.elements(pa)) vs.push_back(g.coordinates(commutator(a, y), false));
    Subspace img = Subspace::span(g.dim(), vs);
    if (!pc.contains(img)) throw std::logic_error("differential_image: image leaves the target piece");
    return img;
}

std::optional<std::pair<Matrix, Matrix>> dominance_witness(const QuaternionicDecomposition& qd, const CommutatorMap& cm,
                                                           std::mt19937_64& rng, int trials) {
    const auto& g = *qd.algebra();
    const Subspace& pc = qd.piece(cm.gamma.i, cm.gamma.j);
    const Subspace& pa = qd.piece(cm.alpha.i, cm.alpha.j);
    const Subspace& pb = qd.piece(cm.beta.i, cm.beta.j);
    if (pc.dim() == 0) return std::make_pair(Matrix(g.size(), g.size()), Matrix(g.size(), g.size()));
    for (int t = 0; t < trials; ++t) {
        Matrix x = g.element(random_vector(pa, rng, 3 + t));
        Matrix y = g.element(random_vector(pb, rng, 3 + t));
        if (intersect(g.centralizer({x}, pc), g.centralizer({y}, pc)).dim() == 0) return std::make_pair(x, y);
    }
    return std::nullopt;
}

std::size_t local_component_dim(const QuaternionicDecomposition& qd, const HomogeneousCSS& h, std::mt19937_64& rng) {
    const auto& g = *qd.algebra();
    const CommutatorMap cm = standard_map();
    std::size_t best = 0;
    for (int t = 0; t < 3; ++t) {
        Matrix x(g.size(), g.size()), y(g.size(), g.size());
        std::uniform_int_distribution<long> coef(1, 9 + t);
        for (const auto& a : h.a10) x += a * Rational(coef(rng));
        for (const auto& b : h.a11) y += b * Rational(coef(rng));
        best = std::max(best, differential_image(qd, cm, x, y).dim());
    }
    return qd.dim(1, 0) + qd.dim(1, 1) - best;
}

ConjugacyResult conjugacy_criterion(const QuaternionicDecomposition& qd, std::mt19937_64& rng) {
    const auto& g = *qd.algebra();
    ConjugacyResult r;
    r.dim_c1star = build_css(g, qd.odd_first(), rng).dim();
    r.dim_c10 = build_css(g, qd.piece(1, 0), rng).dim();
    r.dim_c11 = build_css(g, qd.piece(1, 1), rng).dim();
    r.unique_standard = r.dim_c1star == r.dim_c10 + r.dim_c11;
    r.homogeneous.push_back(homogeneous_css(qd, {1, 0}, rng));
    r.homogeneous.push_back(homogeneous_css(qd, {1, 1}, rng));
    r.bounds_hold = true;
    for (const auto& h : r.homogeneous) {
        auto dv = h.dimension_vector();
        if (dv[0] > r.dim_c10 || dv[1] > r.dim_c11 || dv[0] + dv[1] != r.dim_c1star) r.bounds_hold = false;
    }
    return r;
}

ConjugacyResult conjugacy_criterion(const QuaternionicDecomposition& qd, const CommutatorMap& cm, std::mt19937_64& rng) {
    return conjugacy_criterion(gradings::reorient(qd, cm.gamma, cm.alpha), rng);
}

}  // namespace quatgrad::commvar
