#pragma once

#include "quatgrad/linalg/matrix.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace quatgrad::jordan {

// chi_{2i+1}(B) = 0 for all i.
bool m2_membership(const Matrix& B);

// Regular in the Lie sense: Lie centralizer of dimension n.
bool is_regular(const Matrix& B);

// Companion matrix of prod (t^2 - a_i^2) (times t when n is odd) with
// distinct nonzero integers a_i.
Matrix sample_m2_regular(std::size_t n, std::mt19937_64& rng);

// Number of odd characteristic coefficients, i.e. the equations cutting out M^<2>.
std::size_t m2_constraint_count(std::size_t n);

// Rank of the Jacobian of (chi_1, chi_3, ...) with respect to the entries, at B.
std::size_t m2_jacobian_rank(const Matrix& B);

// Some invertible A with A B = -B A, searched in the solution space of that equation.
std::optional<Matrix> anti_commuting_witness(const Matrix& B, std::mt19937_64& rng);

struct FiberCheck {
    std::string id;
    bool pass;
    std::string expected;
    std::string actual;
};

struct FiberBoundReport {
    std::size_t n = 0;
    Matrix sample;
    std::size_t jordan_centralizer_dim = 0;
    std::size_t lie_centralizer_dim = 0;
    std::size_t constraint_count = 0;
    std::size_t jacobian_rank = 0;
    std::size_t bound = 0;  // dim M^<2> + n
    std::vector<FiberCheck> checks;
    bool ok() const;
};

FiberBoundReport fiber_bound_report(std::size_t n, std::mt19937_64& rng);

}  // namespace quatgrad::jordan
