#pragma once

#include "quatgrad/lie/algebra.hpp"

#include <optional>
#include <string>

namespace quatgrad::gradings {

// An involutive automorphism of a matrix Lie algebra. When it comes from a
// generator, theta(x) = S x S^-1 (inner form) or theta(x) = -S x^T S^-1
// (transpose form); the operator on algebra coordinates is always stored.
class Involution {
public:
    static Involution inner(lie::AlgebraPtr g, const Matrix& S, std::string label);
    static Involution outer(lie::AlgebraPtr g, const Matrix& S, std::string label);
    // x -> -F^-1 x^T F for so/sp (F the algebra's form), x -> -x^T otherwise.
    static Involution negative_transpose(lie::AlgebraPtr g);
    // A raw coordinate operator; validated like the others.
    static Involution from_operator(lie::AlgebraPtr g, Matrix op, std::string label);

    const lie::AlgebraPtr& algebra() const { return algebra_; }
    const Matrix& op() const { return op_; }
    const std::string& label() const { return label_; }
    bool has_generator() const { return generator_.has_value(); }
    const Matrix& generator() const;
    bool is_outer() const { return outer_; }

    Matrix apply(const Matrix& x) const;
    Vector apply(const Vector& coords) const { return op_ * coords; }

    bool commutes_with(const Involution& other) const;
    // this o other; must itself be an involution different from the identity.
    Involution compose(const Involution& other) const;

    friend bool operator==(const Involution& a, const Involution& b) { return a.op_ == b.op_; }

private:
    Involution(lie::AlgebraPtr g, Matrix op, std::optional<Matrix> generator, bool outer, std::string label);
    static Matrix operator_of(const lie::LieAlgebra& g, const Matrix& S, bool outer);

    lie::AlgebraPtr algebra_;
    Matrix op_;
    std::optional<Matrix> generator_;
    bool outer_ = false;
    std::string label_;
};

}  // namespace quatgrad::gradings
