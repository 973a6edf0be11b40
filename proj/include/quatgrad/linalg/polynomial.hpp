#pragma once

#include "quatgrad/linalg/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace quatgrad {

// Dense univariate polynomial over Q, coefficients in ascending degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);
    static Polynomial monomial(const Rational& c, std::size_t degree);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(std::size_t i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational leading() const;

    Polynomial derivative() const;
    Polynomial monic() const;
    Rational operator()(const Rational& x) const;
    Matrix operator()(const Matrix& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic, or zero
Polynomial squarefree_part(const Polynomial& p);           // monic

// Distinct rational roots (ascending) together with their multiplicities.
std::vector<std::pair<Rational, std::size_t>> rational_roots(const Polynomial& p);

// det(lambda I - m), via Faddeev-LeVerrier.
Polynomial char_poly(const Matrix& m);

// chi_0..chi_n with det(lambda I - m) = sum_i chi_{n-i} lambda^i, chi_0 = 1.
std::vector<Rational> char_poly_coefficients(const Matrix& m);

}  // namespace quatgrad
