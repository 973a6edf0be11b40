#pragma once

#include "quatgrad/lie/algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace quatgrad::commvar {

struct RestrictedRoot {
    Vector weight;            // values on the css basis
    std::vector<Integer> integer_weight;  // weight times the common scale
    Subspace space;           // g_gamma in algebra coordinates
    std::size_t multiplicity = 0;
    Rational length2;         // with respect to the trace form on the css
};

struct RootProfile {
    std::string type;   // "A", "B", "C", "BC", "D", "E", "F", "G", "?" or "" when empty
    std::size_t rank = 0;
    std::string label;  // "C2", or "A1xA1" for a reducible system
    std::size_t m_short = 0, m_middle = 0, m_long = 0;  // m_middle only for BC
    bool uniform_multiplicities = false;  // constant on each length class
    bool reflection_closed = false;
};

struct RestrictedRootSystem {
    std::vector<Matrix> css;
    Matrix gram;  // trace form on css
    Integer scale;
    std::vector<RestrictedRoot> roots;  // sorted by weight
    Subspace zero_space;                // g^C
    std::size_t algebra_dim = 0;
    bool complete() const;              // dim g = dim g^C + sum of multiplicities
    bool paired() const;                // -gamma is a root with the same multiplicity
    RootProfile profile() const;
    // The root with weight exactly w, or nullptr.
    const RestrictedRoot* find(const Vector& w) const;
};

// Simultaneous ad-eigenspaces of commuting semisimple matrices with rational
// spectra. Throws std::invalid_argument on an irrational or non-semisimple spectrum.
RestrictedRootSystem restricted_roots(const lie::LieAlgebra& g, const std::vector<Matrix>& css);

// Profile of an arbitrary finite set of weights, with the given inner product.
RootProfile classify_roots(const std::vector<Vector>& roots, const Matrix& inner,
                           const std::vector<std::size_t>& multiplicities);

}  // namespace quatgrad::commvar
