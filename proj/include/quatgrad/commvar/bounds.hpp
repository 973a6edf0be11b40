#pragma once

#include "quatgrad/commvar/roots.hpp"
#include "quatgrad/gradings/grading.hpp"

#include <random>
#include <string>
#include <vector>

namespace quatgrad::commvar {

struct BoundCheck {
    std::string id;
    bool pass = false;
    std::string expected, actual;
};

// Lower bound dim G00.c^ for c^ = z(c~)_10 + c~ with c~ a subspace of a little
// CSS c11. value = dim g11 + dim z(c~)_10 + dim c~ - dim c11.
struct BoundResult {
    std::string construction;  // "single-root" or "kernel"
    std::size_t value = 0;
    std::size_t dim_g11 = 0, dim_c11 = 0, dim_ctilde = 0, dim_z10 = 0;
    std::size_t orbit_dim = 0;  // rank of (a, y) -> [a, y] + c^ at a random point
    Vector mu;                  // single-root: the chosen root
    std::size_t m_mu = 0;
    std::size_t r = 0, m_short = 0;  // kernel construction
    std::vector<BoundCheck> checks;
    bool ok() const;
};

// Roots whose root space meets g00 + g11; throws when some root space is split
// between g00 + g11 and g10 + g01.
std::vector<bool> h_roots(const gradings::QuaternionicDecomposition& qd, const RestrictedRootSystem& rs);

// Picks mu with m_mu > 1 and no rational multiple among the roots of g00 + g11
// (largest m_mu first). Throws std::invalid_argument when no root qualifies.
BoundResult lower_bound_single_root(const gradings::QuaternionicDecomposition& qd, const std::vector<Matrix>& c11,
                                    std::mt19937_64& rng);

// C_r roots split as eps_i - eps_j in g00 + g11 and eps_i + eps_j, 2 eps_i in
// g10 + g01; c~ = {(eps_i + eps_(r+1-i))(x) = 0}. Throws std::invalid_argument on
// a profile mismatch.
BoundResult lower_bound_kernel_construction(const gradings::QuaternionicDecomposition& qd, const std::vector<Matrix>& c11,
                                            std::mt19937_64& rng);

}  // namespace quatgrad::commvar
