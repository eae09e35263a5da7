#pragma once

#include "mlcech/exact/gauss_rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mlcech::linalg {

using Vector = std::vector<GaussRational>;

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    Matrix transpose() const;
    Vector column(std::size_t c) const;
    Vector apply(const Vector& x) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const GaussRational& c) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussRational> data_;
};

/// Rank by fraction-free (Bareiss) elimination over Z[i] after clearing
/// denominators row by row.
std::size_t rank(const Matrix& a);

/// Reduced row echelon form over the field Q(i); pivots receives the pivot
/// columns. Independent of the Bareiss route.
Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank_by_rref(const Matrix& a);

/// Basis of {x : a x = 0}, one column per basis vector.
Matrix nullspace(const Matrix& a);

/// Some x with a x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Inverse of a square matrix; MathError if singular.
Matrix inverse(const Matrix& a);

} // namespace mlcech::linalg
