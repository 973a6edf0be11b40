#include "quatgrad/linalg/rational.hpp"

#include <stdexcept>

namespace quatgrad {

Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vector scaled(const Vector& v, const Rational& c) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
    return out;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector subtract(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("subtract: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Integer> primitive_integer_vector(const Vector& v) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g == 0) return out;
    int sign = 0;
    for (const auto& x : out)
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    for (auto& x : out) {
        x /= g;
        if (sign < 0) x = -x;
    }
    return out;
}

}  // namespace quatgrad
