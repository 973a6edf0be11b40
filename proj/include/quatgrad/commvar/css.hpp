#pragma once

#include "quatgrad/gradings/grading.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace quatgrad::commvar {

using gradings::PieceIndex;
using gradings::QuaternionicDecomposition;

// Pairwise commuting semisimple elements with z(c) cap ambient = c.
struct CartanSubspace {
    std::vector<Matrix> basis;
    Subspace span;     // in algebra coordinates
    Subspace ambient;  // where maximality was certified
    std::size_t dim() const { return basis.size(); }
};

// Grows c from `start` by adjoining random semisimple elements of z(c) cap grow_in
// until nothing is left, then certifies z(c) cap ambient = c. Throws
// std::runtime_error when the random budget runs out.
CartanSubspace grow_css(const lie::LieAlgebra& g, std::vector<Matrix> start, const Subspace& grow_in,
                        const Subspace& ambient, std::mt19937_64& rng, int budget = 200);

// A CSS of a single piece (little CSS) or of any subspace closed under the grading.
CartanSubspace build_css(const lie::LieAlgebra& g, const Subspace& target, std::mt19937_64& rng);

// z(c) cap ambient == span(c), every basis element semisimple, all commuting.
bool is_css(const lie::LieAlgebra& g, const std::vector<Matrix>& c, const Subspace& ambient);

struct HomogeneousCSS {
    std::vector<Matrix> a10, a11;
    std::array<std::size_t, 2> dimension_vector() const { return {a10.size(), a11.size()}; }
    std::vector<Matrix> basis() const;
};

// A little CSS of the `first` piece (10 or 11), completed by a little CSS of the
// other piece inside its centralizer; certified as a CSS of g10 + g11.
HomogeneousCSS homogeneous_css(const QuaternionicDecomposition& qd, PieceIndex first, std::mt19937_64& rng);

// dim g1* - dim g01 + dim (z(c) cap g01).
std::size_t standard_component_dim(const QuaternionicDecomposition& qd, const HomogeneousCSS& h);

// Commutator map g_alpha x g_beta -> g_gamma.
struct CommutatorMap {
    PieceIndex alpha, beta, gamma;
};
CommutatorMap make_commutator_map(PieceIndex alpha, PieceIndex beta, PieceIndex gamma);
inline CommutatorMap standard_map() { return {{1, 0}, {1, 1}, {0, 1}}; }

// [x, g_beta] + [g_alpha, y] inside g_gamma.
Subspace differential_image(const QuaternionicDecomposition& qd, const CommutatorMap& cm, const Matrix& x, const Matrix& y);

// Random (x, y) with z(x)_gamma cap z(y)_gamma = 0.
std::optional<std::pair<Matrix, Matrix>> dominance_witness(const QuaternionicDecomposition& qd, const CommutatorMap& cm,
                                                           std::mt19937_64& rng, int trials = 20);

// dim g1* - dim(image of the differential) at a random point of the CSS.
std::size_t local_component_dim(const QuaternionicDecomposition& qd, const HomogeneousCSS& h, std::mt19937_64& rng);

struct ConjugacyResult {
    std::size_t dim_c1star = 0, dim_c10 = 0, dim_c11 = 0;
    bool unique_standard = false;
    std::vector<HomogeneousCSS> homogeneous;  // 10-first, then 11-first
    bool bounds_hold = false;                 // d0 <= dim c10 and d1 <= dim c11 for each
};
ConjugacyResult conjugacy_criterion(const QuaternionicDecomposition& qd, std::mt19937_64& rng);
// Same criterion for g_alpha x g_beta -> g_gamma, after relabelling the pieces.
ConjugacyResult conjugacy_criterion(const QuaternionicDecomposition& qd, const CommutatorMap& cm, std::mt19937_64& rng);

}  // namespace quatgrad::commvar
