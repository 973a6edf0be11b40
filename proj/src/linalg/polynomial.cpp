#include "quatgrad/linalg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quatgrad {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational l = leading();
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x /= l;
    return Polynomial(std::move(c));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

Matrix Polynomial::operator()(const Matrix& x) const {
    if (!x.square()) throw std::invalid_argument("Polynomial: evaluation at non-square matrix");
    Matrix r(x.rows(), x.cols());
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + Matrix::identity(x.rows()) * coeffs_[i];
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    std::vector<Rational> r = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational lb = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = r[static_cast<std::size_t>(k + db)] / lb;
        q[static_cast<std::size_t>(k)] = c;
        if (sgn(c) == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * b.coefficient(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p.monic();
    Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::domain_error("rational_roots: zero constant term after deflation");
    if (n > Integer("100000000000000")) throw std::domain_error("rational_roots: coefficient too large to factor");
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer m = n;
    for (Integer p = 2; p * p <= m; ++p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (m > 1) factors.emplace_back(m, 1);
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::size_t multiplicity(Polynomial p, const Rational& r) {
    std::size_t m = 0;
    Polynomial lin({-r, Rational(1)});
    while (!p.is_zero() && sgn(p(r)) == 0) {
        p = divmod(p, lin).first;
        ++m;
    }
    return m;
}

}  // namespace

std::vector<std::pair<Rational, std::size_t>> rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<std::pair<Rational, std::size_t>> out;
    Polynomial s = squarefree_part(p);
    std::vector<Rational> c = s.coefficients();
    std::size_t shift = 0;
    while (shift < c.size() && sgn(c[shift]) == 0) ++shift;
    if (shift > 0) out.emplace_back(Rational(0), multiplicity(p, Rational(0)));
    std::vector<Rational> rest(c.begin() + static_cast<long>(shift), c.end());
    if (rest.size() > 1) {
        std::vector<Integer> ic = primitive_integer_vector(rest);
        for (const Integer& num : positive_divisors(ic.front()))
            for (const Integer& den : positive_divisors(ic.back()))
                for (int sign : {1, -1}) {
                    Rational r = ratio(Integer(sign * num), den);
                    if (r.get_den() != den) continue;  // already seen in lowest terms
                    if (sgn(s(r)) == 0) out.emplace_back(r, multiplicity(p, r));
                }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Rational> char_poly_coefficients(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> chi(n + 1);
    chi[0] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += chi[k - 1];
        chi[k] = -(m * mk).trace() / static_cast<long>(k);
    }
    return chi;
}

Polynomial char_poly(const Matrix& m) {
    std::vector<Rational> chi = char_poly_coefficients(m);
    std::reverse(chi.begin(), chi.end());
    return Polynomial(std::move(chi));
}

}  // namespace quatgrad
