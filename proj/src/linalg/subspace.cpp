#include "quatgrad/linalg/subspace.hpp"

#include "quatgrad/linalg/elimination.hpp"

#include <stdexcept>

namespace quatgrad {

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("Subspace::span: vector length mismatch");
    RowEchelon e = rref(Matrix::from_rows(vectors));
    s.pivots_ = e.pivots;
    s.basis_.reserve(e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) s.basis_.push_back(e.reduced.row(k));
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vector v(ambient);
        v[i] = 1;
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: length mismatch");
    Vector r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Rational c = r[pivots_[k]];
        if (sgn(c) == 0) continue;
        for (std::size_t j = pivots_[k]; j < ambient_; ++j)
            if (sgn(basis_[k][j]) != 0) r[j] -= c * basis_[k][j];
    }
    return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    Vector c(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
    if (combine(c) != v) throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
    return c;
}

Vector Subspace::combine(const Vector& coefficients) const {
    if (coefficients.size() != basis_.size()) throw std::invalid_argument("Subspace::combine: length mismatch");
    Vector v(ambient_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (sgn(coefficients[k]) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(basis_[k][j]) != 0) v[j] += coefficients[k] * basis_[k][j];
    }
    return v;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient());
    // Solve sum alpha_i a_i - sum beta_j b_j = 0.
    const std::size_t n = a.ambient();
    Matrix m(n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t r = 0; r < n; ++r) m(r, i) = a.basis()[i][r];
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t r = 0; r < n; ++r) m(r, a.dim() + j) = -b.basis()[j][r];
    Subspace k = kernel_basis(m);
    std::vector<Vector> vs;
    for (const auto& sol : k.basis()) {
        Vector alpha(sol.begin(), sol.begin() + static_cast<long>(a.dim()));
        vs.push_back(a.combine(alpha));
    }
    return Subspace::span(n, vs);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: ambient mismatch");
    std::vector<Vector> vs = a.basis();
    vs.insert(vs.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), vs);
}

}  // namespace quatgrad
