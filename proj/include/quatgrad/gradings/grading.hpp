#pragma once

#include "quatgrad/gradings/involution.hpp"

#include <array>
#include <string>
#include <vector>

namespace quatgrad::gradings {

struct Z2Grading {
    Involution sigma;
    Subspace g0;
    Subspace g1;

    const lie::AlgebraPtr& algebra() const { return sigma.algebra(); }
};

// Eigenspace split; the bracket relations of the grading are verified.
Z2Grading grading_of(const Involution& sigma);

// dim g1 - dim g0 == rk g.
bool is_maximal_rank(const Z2Grading& grading);

// Index of the piece containing x (0 or 1); throws if x is not homogeneous.
int homogeneous_degree(const Z2Grading& grading, const Matrix& x);

// {dim z(x) cap g0, dim z(x) cap g1} for homogeneous x.
std::array<std::size_t, 2> graded_centralizer_dims(const Z2Grading& grading, const Matrix& x);

// g = sum of g_ij with sigma1 = (-1)^i and sigma2 = (-1)^j on g_ij.
class QuaternionicDecomposition {
public:
    QuaternionicDecomposition(Involution s1, Involution s2);

    const lie::AlgebraPtr& algebra() const { return s1_.algebra(); }
    const Involution& sigma1() const { return s1_; }
    const Involution& sigma2() const { return s2_; }
    const Involution& sigma3() const { return s3_; }
    const Subspace& piece(int i, int j) const { return pieces_[static_cast<std::size_t>(2 * i + j)]; }
    std::size_t dim(int i, int j) const { return piece(i, j).dim(); }
    // g_{1*} = g10 + g11
    Subspace odd_first() const { return sum(piece(1, 0), piece(1, 1)); }
    std::array<std::size_t, 4> dims() const { return {dim(0, 0), dim(0, 1), dim(1, 0), dim(1, 1)}; }

private:
    Involution s1_, s2_, s3_;
    std::array<Subspace, 4> pieces_;
};

// Validates commutation, distinctness and all bracket inclusions.
QuaternionicDecomposition quaternionic(const Involution& s1, const Involution& s2);

struct BracketInclusion {
    int i, j, k, l;  // [g_ij, g_kl] inside g_{i+k, j+l}
    bool holds;
};
// The ten unordered pairs of pieces, each checked on all basis pairs.
std::vector<BracketInclusion> check_bracket_inclusions(const QuaternionicDecomposition& qd);

// Piece labels 01, 10, 11 as (i, j) pairs.
struct PieceIndex {
    int i, j;
    friend bool operator==(const PieceIndex&, const PieceIndex&) = default;
    std::string to_string() const { return std::to_string(i) + std::to_string(j); }
};
PieceIndex parse_piece(const std::string& s);

// Piece (i,j) containing x, or throws when x is not homogeneous.
PieceIndex homogeneous_piece(const QuaternionicDecomposition& qd, const Matrix& x);

// dims of z(x) cap g_ij indexed as [2i + j].
std::array<std::size_t, 4> graded_centralizer_dims(const QuaternionicDecomposition& qd, const Matrix& x);

// The same four subspaces relabelled by a new generating pair, chosen so that
// `target` becomes g01 and `first_source` becomes g10.
QuaternionicDecomposition reorient(const QuaternionicDecomposition& qd, PieceIndex target, PieceIndex first_source);

}  // namespace quatgrad::gradings
