#ifndef ESS_MATRIX_HPP
#define ESS_MATRIX_HPP

#include "ess/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ess {

/// Dense matrix over exact rationals. Value type; operations return fresh
/// matrices. Row-major storage.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Build from integer rows, e.g. Matrix::from_rows({{0,1},{-1,0}}).
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static Matrix column(const std::vector<Scalar>& entries);
    /// Standard basis column vector e_i in dimension n.
    static Matrix basis_vector(std::size_t n, std::size_t i);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_skew_symmetric() const;
    bool is_symmetric() const;

    Matrix col(std::size_t j) const;
    void set_col(std::size_t j, const Matrix& v);
    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    /// Horizontal/vertical concatenation.
    static Matrix hcat(const Matrix& a, const Matrix& b);
    static Matrix vcat(const Matrix& a, const Matrix& b);
    /// Matrix from a list of column vectors (all n x 1); n x 0 if empty.
    static Matrix from_cols(std::size_t n, const std::vector<Matrix>& cols);

    /// Row-major flattening as a column vector (for treating matrices as
    /// vectors in span computations).
    Matrix flatten() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};

/// Reduced row echelon form with first-nonzero pivoting. Deterministic.
Echelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the null space {x : m x = 0} as columns; cols x k, deterministic
/// (free variables set to unit values in ascending column order).
Matrix kernel(const Matrix& m);

/// One exact solution of m x = b with free variables zero, or nullopt if the
/// system is inconsistent. b may have several columns.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

} // namespace ess

#endif
