#pragma once

#include "quatgrad/linalg/matrix.hpp"

#include <optional>

namespace quatgrad {

class Subspace;

struct RowEchelon {
    Matrix reduced;                    // rank x cols, reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each row
};

// Exact rank via fraction-free elimination on the integer-cleared rows.
std::size_t rank(const Matrix& m);

RowEchelon rref(const Matrix& m);

Subspace kernel_basis(const Matrix& m);

// Some x with m x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace quatgrad
