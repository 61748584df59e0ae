#include "ess/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ess {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged row list");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

Matrix Matrix::basis_vector(std::size_t n, std::size_t i) {
    Matrix m(n, 1);
    m.at(i, 0) = 1;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("size mismatch in +");
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("size mismatch in -");
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("size mismatch in *");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (sgn(b) != 0) m.at(i, j) += a * b;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Matrix::is_skew_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix v(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v.at(i, 0) = at(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const Matrix& v) {
    if (v.rows() != rows_ || v.cols() != 1) throw std::invalid_argument("set_col shape");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw std::invalid_argument("block out of range");
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vcat column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

Matrix Matrix::from_cols(std::size_t n, const std::vector<Matrix>& cols) {
    Matrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Matrix Matrix::flatten() const {
    Matrix v(rows_ * cols_, 1);
    for (std::size_t i = 0; i < data_.size(); ++i) v.at(i, 0) = data_[i];
    return v;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string(at(i, j));
    }
    os << "]";
    return os.str();
}

Echelon row_echelon(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        // first row at or below `row` with a nonzero entry in this column
        std::size_t p = row;
        while (p < a.rows() && sgn(a.at(p, col)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(p, j));
        Scalar inv = 1 / a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || sgn(a.at(i, col)) == 0) continue;
            Scalar f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& m) {
    return row_echelon(m).pivots.size();
}

Matrix kernel(const Matrix& m) {
    Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Matrix> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Matrix v(m.cols(), 1);
        v.at(f, 0) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v.at(e.pivots[r], 0) = -e.reduced.at(r, f);
        basis.push_back(v);
    }
    return Matrix::from_cols(m.cols(), basis);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    Echelon e = row_echelon(Matrix::hcat(m, b));
    // inconsistent iff some pivot lands in the appended block
    for (std::size_t p : e.pivots)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivots[r], j) = e.reduced.at(r, m.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.rows()));
}

} // namespace ess
