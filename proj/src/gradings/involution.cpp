#include "quatgrad/gradings/involution.hpp"

#include <stdexcept>

namespace quatgrad::gradings {

Matrix Involution::operator_of(const lie::LieAlgebra& g, const Matrix& S, bool outer) {
    if (S.rows() != g.size() || S.cols() != g.size()) throw std::invalid_argument("involution: generator has wrong size");
    Matrix Sinv = S.inverse();
    Matrix op(g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        const Matrix& b = g.basis()[j];
        Matrix image = outer ? -(S * b.transpose() * Sinv) : S * b * Sinv;
        if (!g.contains(image)) throw std::invalid_argument("involution: generator does not preserve " + g.name());
        Vector c = g.coordinates(image, false);
        for (std::size_t i = 0; i < g.dim(); ++i) op(i, j) = c[i];
    }
    return op;
}

Involution::Involution(lie::AlgebraPtr g, Matrix op, std::optional<Matrix> generator, bool outer, std::string label)
    : algebra_(std::move(g)), op_(std::move(op)), generator_(std::move(generator)), outer_(outer), label_(std::move(label)) {
    const std::size_t d = algebra_->dim();
    if (op_.rows() != d || op_.cols() != d) throw std::invalid_argument("involution: operator has wrong size");
    const Matrix id = Matrix::identity(d);
    if (op_ == id) throw std::invalid_argument("involution: identity map does not define a grading");
    if (op_ * op_ != id) throw std::invalid_argument("involution: theta^2 != id for " + label_);
    std::vector<Matrix> images;
    images.reserve(d);
    for (std::size_t j = 0; j < d; ++j) images.push_back(algebra_->element(op_.column(j)));
    const auto& b = algebra_->basis();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vector lhs = op_ * algebra_->coordinates(commutator(b[i], b[j]), false);
            if (algebra_->element(lhs) != commutator(images[i], images[j]))
                throw std::invalid_argument("involution: not an automorphism: " + label_);
        }
}

Involution Involution::inner(lie::AlgebraPtr g, const Matrix& S, std::string label) {
    Matrix op = operator_of(*g, S, false);
    return Involution(std::move(g), std::move(op), S, false, std::move(label));
}

Involution Involution::outer(lie::AlgebraPtr g, const Matrix& S, std::string label) {
    Matrix op = operator_of(*g, S, true);
    return Involution(std::move(g), std::move(op), S, true, std::move(label));
}

Involution Involution::negative_transpose(lie::AlgebraPtr g) {
    Matrix S = g->has_form() ? g->form().inverse() : Matrix::identity(g->size());
    return outer(std::move(g), S, "-x^T");
}

Involution Involution::from_operator(lie::AlgebraPtr g, Matrix op, std::string label) {
    return Involution(std::move(g), std::move(op), std::nullopt, false, std::move(label));
}

const Matrix& Involution::generator() const {
    if (!generator_) throw std::logic_error("involution " + label_ + " has no matrix generator");
    return *generator_;
}

Matrix Involution::apply(const Matrix& x) const { return algebra_->element(op_ * algebra_->coordinates(x)); }

bool Involution::commutes_with(const Involution& other) const {
    if (!lie::same_algebra(algebra_, other.algebra_)) throw std::invalid_argument("involutions of different algebras");
    return op_ * other.op_ == other.op_ * op_;
}

Involution Involution::compose(const Involution& other) const {
    if (!lie::same_algebra(algebra_, other.algebra_)) throw std::invalid_argument("involutions of different algebras");
    std::string label = "(" + label_ + ")(" + other.label_ + ")";
    if (generator_ && other.generator_) {
        const Matrix& S1 = *generator_;
        const Matrix& S2 = *other.generator_;
        // -S1 (S2 x S2^-1)^T S1^-1 = -(S1 S2^-T) x^T (S1 S2^-T)^-1, and similarly
        // for the other three combinations.
        Matrix S = outer_ ? S1 * S2.inverse().transpose() : S1 * S2;
        const bool outer = outer_ != other.outer_;
        Matrix op = op_ * other.op_;
        Involution r(algebra_, op, S, outer, label);
        if (operator_of(*algebra_, S, outer) != r.op_) throw std::logic_error("compose: generator and operator disagree");
        return r;
    }
    return Involution(algebra_, op_ * other.op_, std::nullopt, false, label);
}

}  // namespace quatgrad::gradings
