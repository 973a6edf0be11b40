#pragma once

#include "quatgrad/linalg/matrix.hpp"
#include "quatgrad/linalg/subspace.hpp"

#include <memory>
#include <string>
#include <vector>

namespace quatgrad::lie {

enum class Family { gl, sl, so, sp };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// The split bilinear form of size n: antidiagonal ones for so, and for sp
// +1 above / -1 below the antidiagonal midpoint.
Matrix split_form(Family f, std::size_t n);

// A classical matrix Lie algebra inside gl_N. Coordinates are taken with
// respect to the reduced echelon basis of the algebra as a subspace of the
// N*N matrix entries, so the coordinate of x along basis[k] is simply the
// entry of x at that basis element's pivot position.
class LieAlgebra {
public:
    LieAlgebra(Family family, std::size_t size);

    Family family() const { return family_; }
    std::size_t size() const { return size_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t rank() const { return rank_; }
    bool has_form() const { return family_ == Family::so || family_ == Family::sp; }
    const Matrix& form() const { return form_; }
    std::string name() const;  // e.g. "sp4"

    const std::vector<Matrix>& basis() const { return basis_; }
    Matrix element(const Vector& coords) const;
    bool contains(const Matrix& x) const;
    // Throws std::invalid_argument when x is not in the algebra (unless check is false).
    Vector coordinates(const Matrix& x, bool check = true) const;

    Subspace whole() const { return Subspace::full(dim()); }
    Subspace span_of(const std::vector<Matrix>& xs) const;
    std::vector<Matrix> elements(const Subspace& s) const;

    Matrix bracket(const Matrix& x, const Matrix& y) const { return commutator(x, y); }
    // Matrix of ad(x) on coordinates; x may be any N x N matrix normalizing the algebra.
    Matrix ad(const Matrix& x) const;
    Rational trace_form(const Matrix& x, const Matrix& y) const;

    // {v in within : [v, x] = 0 for every x}. The x may be arbitrary N x N matrices.
    Subspace centralizer(const std::vector<Matrix>& xs, const Subspace& within) const;
    Subspace centralizer(const std::vector<Matrix>& xs) const { return centralizer(xs, whole()); }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.family_ == b.family_ && a.size_ == b.size_;
    }

private:
    Family family_;
    std::size_t size_;
    std::size_t rank_;
    Matrix form_;
    std::vector<Matrix> basis_;
    std::vector<std::size_t> pivots_;  // flattened entry index per basis element
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

AlgebraPtr build_algebra(Family family, std::size_t size);

// A matrix known to lie in a particular algebra.
class LieElement {
public:
    LieElement(AlgebraPtr algebra, Matrix m);
    static LieElement from_coordinates(AlgebraPtr algebra, const Vector& coords);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Matrix& matrix() const { return m_; }
    Vector coordinates() const { return algebra_->coordinates(m_, false); }

    friend LieElement operator+(const LieElement& a, const LieElement& b);
    friend LieElement operator-(const LieElement& a, const LieElement& b);
    friend LieElement operator*(const Rational& c, const LieElement& a);
    friend bool operator==(const LieElement& a, const LieElement& b);

private:
    AlgebraPtr algebra_;
    Matrix m_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// [x, y]; rejects elements of different algebras.
LieElement bracket(const LieElement& x, const LieElement& y);

Subspace centralizer(const AlgebraPtr& algebra, const std::vector<LieElement>& xs, const Subspace& within);

}  // namespace quatgrad::lie
