#pragma once

#include "quatgrad/linalg/subspace.hpp"

#include <random>

namespace quatgrad {

// Small integer combination of the basis of s, coefficients in [-range, range].
Vector random_vector(const Subspace& s, std::mt19937_64& rng, long range = 3);

}  // namespace quatgrad
