#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace quatgrad {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// mpq_class does not reduce num/den on construction, so every
// ratio built from two integers must go through here.
Rational ratio(const Integer& num, const Integer& den);
Rational ratio(long num, long den);

std::string to_string(const Rational& q);
std::string to_string(const Vector& v);

bool is_zero(const Vector& v);
Vector scaled(const Vector& v, const Rational& c);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Rational dot(const Vector& a, const Vector& b);

// Smallest positive rational multiple of v with coprime integer entries
// (sign fixed so that the first nonzero entry is positive).
std::vector<Integer> primitive_integer_vector(const Vector& v);

}  // namespace quatgrad
