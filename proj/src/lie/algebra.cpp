#include "quatgrad/lie/algebra.hpp"

#include "quatgrad/linalg/elimination.hpp"

#include <stdexcept>

namespace quatgrad::lie {

std::string family_name(Family f) {
    switch (f) {
        case Family::gl: return "gl";
        case Family::sl: return "sl";
        case Family::so: return "so";
        case Family::sp: return "sp";
    }
    throw std::logic_error("family_name: bad family");
}

Family parse_family(const std::string& s) {
    for (Family f : {Family::gl, Family::sl, Family::so, Family::sp})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown Lie algebra family: " + s);
}

Matrix split_form(Family f, std::size_t n) {
    Matrix F(n, n);
    if (f == Family::so) {
        for (std::size_t i = 0; i < n; ++i) F(i, n - 1 - i) = 1;
    } else if (f == Family::sp) {
        if (n % 2 != 0) throw std::invalid_argument("split_form: sp needs even size");
        for (std::size_t i = 0; i < n; ++i) F(i, n - 1 - i) = (i < n / 2) ? 1 : -1;
    } else {
        throw std::invalid_argument("split_form: only so and sp carry a form");
    }
    return F;
}

namespace {

std::size_t classical_rank(Family f, std::size_t n) {
    switch (f) {
        case Family::gl: return n;
        case Family::sl: return n - 1;
        case Family::so: return n / 2;
        case Family::sp: return n / 2;
    }
    return 0;
}

// Rows of the linear system x^T F + F x = 0 in the flattened entries of x.
Matrix form_constraints(const Matrix& F) {
    const std::size_t n = F.rows();
    Matrix c(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                // (x^T F)_{ij} = sum_k x_{ki} F_{kj}
                if (sgn(F(k, j)) != 0) c(row, k * n + i) += F(k, j);
                // (F x)_{ij} = sum_k F_{ik} x_{kj}
                if (sgn(F(i, k)) != 0) c(row, k * n + j) += F(i, k);
            }
        }
    return c;
}

}  // namespace

LieAlgebra::LieAlgebra(Family family, std::size_t size) : family_(family), size_(size) {
    switch (family) {
        case Family::gl:
            if (size < 1) throw std::invalid_argument("gl needs size >= 1");
            break;
        case Family::sl:
            if (size < 2) throw std::invalid_argument("sl needs size >= 2");
            break;
        case Family::so:
            if (size < 2) throw std::invalid_argument("so needs size >= 2");
            break;
        case Family::sp:
            if (size < 2 || size % 2 != 0) throw std::invalid_argument("sp needs even size >= 2");
            break;
    }
    rank_ = classical_rank(family, size);
    const std::size_t n2 = size * size;
    Subspace space;
    if (family == Family::gl) {
        space = Subspace::full(n2);
    } else if (family == Family::sl) {
        Matrix tr(1, n2);
        for (std::size_t i = 0; i < size; ++i) tr(0, i * size + i) = 1;
        space = kernel_basis(tr);
    } else {
        form_ = split_form(family, size);
        space = kernel_basis(form_constraints(form_));
    }
    pivots_ = space.pivots();
    basis_.reserve(space.dim());
    for (const auto& v : space.basis()) basis_.push_back(Matrix::reshape(v, size, size));
}

std::string LieAlgebra::name() const { return family_name(family_) + std::to_string(size_); }

Matrix LieAlgebra::element(const Vector& coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("LieAlgebra::element: coordinate length mismatch");
    Matrix m(size_, size_);
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (sgn(coords[k]) != 0) m += basis_[k] * coords[k];
    return m;
}

Vector LieAlgebra::coordinates(const Matrix& x, bool check) const {
    if (x.rows() != size_ || x.cols() != size_) throw std::invalid_argument("LieAlgebra::coordinates: wrong matrix size");
    Vector c(dim());
    const auto& flat = x.entries();
    for (std::size_t k = 0; k < dim(); ++k) c[k] = flat[pivots_[k]];
    if (check && element(c) != x) throw std::invalid_argument("matrix does not lie in " + name());
    return c;
}

bool LieAlgebra::contains(const Matrix& x) const {
    if (x.rows() != size_ || x.cols() != size_) return false;
    Vector c(dim());
    for (std::size_t k = 0; k < dim(); ++k) c[k] = x.entries()[pivots_[k]];
    return element(c) == x;
}

Subspace LieAlgebra::span_of(const std::vector<Matrix>& xs) const {
    std::vector<Vector> vs;
    vs.reserve(xs.size());
    for (const auto& x : xs) vs.push_back(coordinates(x));
    return Subspace::span(dim(), vs);
}

std::vector<Matrix> LieAlgebra::elements(const Subspace& s) const {
    if (s.ambient() != dim()) throw std::invalid_argument("LieAlgebra::elements: subspace of wrong ambient dimension");
    std::vector<Matrix> out;
    out.reserve(s.dim());
    for (const auto& v : s.basis()) out.push_back(element(v));
    return out;
}

Matrix LieAlgebra::ad(const Matrix& x) const {
    Matrix a(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        Vector c = coordinates(commutator(x, basis_[j]));
        for (std::size_t i = 0; i < dim(); ++i) a(i, j) = c[i];
    }
    return a;
}

Rational LieAlgebra::trace_form(const Matrix& x, const Matrix& y) const { return (x * y).trace(); }

Subspace LieAlgebra::centralizer(const std::vector<Matrix>& xs, const Subspace& within) const {
    if (within.ambient() != dim()) throw std::invalid_argument("centralizer: subspace of wrong ambient dimension");
    if (within.dim() == 0) return within;
    std::vector<Matrix> ws = elements(within);
    std::vector<const Matrix*> active;
    for (const auto& x : xs)
        if (!x.is_zero()) active.push_back(&x);
    if (active.empty()) return within;
    const std::size_t n2 = size_ * size_;
    Matrix big(active.size() * n2, ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < active.size(); ++j) {
            Matrix c = commutator(ws[i], *active[j]);
            const auto& flat = c.entries();
            for (std::size_t r = 0; r < n2; ++r)
                if (sgn(flat[r]) != 0) big(j * n2 + r, i) = flat[r];
        }
    Subspace k = kernel_basis(big);
    std::vector<Vector> vs;
    vs.reserve(k.dim());
    for (const auto& coeffs : k.basis()) vs.push_back(within.combine(coeffs));
    return Subspace::span(dim(), vs);
}

AlgebraPtr build_algebra(Family family, std::size_t size) { return std::make_shared<const LieAlgebra>(family, size); }

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a && b && (a == b || *a == *b); }

LieElement::LieElement(AlgebraPtr algebra, Matrix m) : algebra_(std::move(algebra)), m_(std::move(m)) {
    if (!algebra_) throw std::invalid_argument("LieElement: null algebra");
    if (!algebra_->contains(m_)) throw std::invalid_argument("LieElement: matrix not in " + algebra_->name());
}

LieElement LieElement::from_coordinates(AlgebraPtr algebra, const Vector& coords) {
    Matrix m = algebra->element(coords);
    return LieElement(std::move(algebra), std::move(m));
}

namespace {
void require_same(const LieElement& a, const LieElement& b) {
    if (!same_algebra(a.algebra(), b.algebra()))
        throw std::invalid_argument("elements of different algebras: " + a.algebra()->name() + " and " + b.algebra()->name());
}
}  // namespace

LieElement operator+(const LieElement& a, const LieElement& b) {
    require_same(a, b);
    return LieElement(a.algebra_, a.m_ + b.m_);
}

LieElement operator-(const LieElement& a, const LieElement& b) {
    require_same(a, b);
    return LieElement(a.algebra_, a.m_ - b.m_);
}

LieElement operator*(const Rational& c, const LieElement& a) { return LieElement(a.algebra_, a.m_ * c); }

bool operator==(const LieElement& a, const LieElement& b) { return same_algebra(a.algebra_, b.algebra_) && a.m_ == b.m_; }

LieElement bracket(const LieElement& x, const LieElement& y) {
    require_same(x, y);
    return LieElement(x.algebra(), commutator(x.matrix(), y.matrix()));
}

Subspace centralizer(const AlgebraPtr& algebra, const std::vector<LieElement>& xs, const Subspace& within) {
    std::vector<Matrix> ms;
    for (const auto& x : xs) {
        if (!same_algebra(algebra, x.algebra())) throw std::invalid_argument("centralizer: element of a different algebra");
        ms.push_back(x.matrix());
    }
    return algebra->centralizer(ms, within);
}

}  // namespace quatgrad::lie
