#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "plancheck/algebra/rational.hpp"

namespace plancheck {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    /// Matrix unit E_ij.
    static QMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static QMatrix diagonal(const std::vector<int>& entries);
    /// Rows given by `rows`; all must have equal length.
    static QMatrix from_rows(const std::vector<QVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_diagonal() const;
    /// Row-major flattening.
    const QVector& flat() const { return data_; }
    std::string to_string() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& c, QMatrix a);
    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    QVector data_;
};

QMatrix commutator(const QMatrix& x, const QMatrix& y);
/// trace(xy) without forming the product.
Rational trace_pairing(const QMatrix& x, const QMatrix& y);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(QMatrix& m);
std::size_t rank(QMatrix m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<QVector> kernel(QMatrix m);
/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Matrix whose columns are the given vectors.
QMatrix from_columns(const std::vector<QVector>& columns);
/// Σ c_i x_i.
QMatrix combine(const std::vector<QMatrix>& xs, const QVector& coefficients);

}  // namespace plancheck
