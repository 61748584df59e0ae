#include "ess/subspace.hpp"

#include <stdexcept>

namespace ess {

Subspace::Subspace(std::size_t ambient_dim, const Matrix& span) : ambient_(ambient_dim) {
    if (span.cols() > 0 && span.rows() != ambient_dim)
        throw std::invalid_argument("span rows do not match ambient dimension");
    Echelon e = row_echelon(span.transpose());
    Matrix b(ambient_dim, e.pivots.size());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t i = 0; i < ambient_dim; ++i) b.at(i, r) = e.reduced.at(r, i);
    basis_ = b;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix(ambient_dim, 0));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Matrix& v) const {
    return coordinates(v).has_value();
}

std::optional<Matrix> Subspace::coordinates(const Matrix& v) const {
    if (v.rows() != ambient_ || v.cols() != 1)
        throw std::invalid_argument("vector shape mismatch");
    if (basis_.cols() == 0)
        return v.is_zero() ? std::optional<Matrix>(Matrix(0, 1)) : std::nullopt;
    return solve(basis_, v);
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_.col(j))) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("ambient mismatch");
    return Subspace(a.ambient_, Matrix::hcat(a.basis_, b.basis_));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw std::invalid_argument("ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_);
    // x in both spans iff x = A u = B w; kernel of [A | -B] yields (u; w)
    Matrix k = kernel(Matrix::hcat(a.basis_, -b.basis_));
    Matrix vecs(a.ambient_, k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Matrix u = k.block(0, j, a.dim(), 1);
        vecs.set_col(j, a.basis_ * u);
    }
    return Subspace(a.ambient_, vecs);
}

} // namespace ess
