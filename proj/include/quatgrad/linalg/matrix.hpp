#pragma once

#include "quatgrad/linalg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace quatgrad {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);  // E_ij
    static Matrix diagonal(const Vector& d);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& cols);
    // Reshape a length rows*cols vector (row-major).
    static Matrix reshape(const Vector& v, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return data_; }
    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Vector flatten() const { return data_; }

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    Matrix power(unsigned k) const;
    Matrix inverse() const;  // throws std::domain_error when singular

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace quatgrad
