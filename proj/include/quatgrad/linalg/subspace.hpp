#pragma once

#include "quatgrad/linalg/matrix.hpp"

#include <vector>

namespace quatgrad {

// A linear subspace of Q^ambient, kept in reduced row echelon form so two
// equal subspaces always have identical bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient);  // the zero subspace

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    // Coefficients of v in the echelon basis; throws if v is not in the space.
    Vector coordinates(const Vector& v) const;
    Vector combine(const Vector& coefficients) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace quatgrad
