#include "ess/lie.hpp"

#include <stdexcept>

namespace ess {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Matrix> bracket_table)
    : dim_(dim), table_(std::move(bracket_table)) {
    if (table_.size() != dim_ * dim_)
        throw std::invalid_argument("bracket table has wrong number of entries");
    for (const auto& v : table_)
        if (v.rows() != dim_ || v.cols() != 1)
            throw std::invalid_argument("bracket table entry has wrong shape");
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
    return LieAlgebra(dim, std::vector<Matrix>(dim * dim, Matrix(dim, 1)));
}

Matrix LieAlgebra::bracket(const Matrix& x, const Matrix& y) const {
    if (x.rows() != dim_ || y.rows() != dim_ || x.cols() != 1 || y.cols() != 1)
        throw std::invalid_argument("bracket operand shape mismatch");
    Matrix out(dim_, 1);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x.at(i, 0)) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y.at(j, 0)) == 0) continue;
            out = out + bracket_basis(i, j) * (x.at(i, 0) * y.at(j, 0));
        }
    }
    return out;
}

std::vector<std::array<std::size_t, 2>> LieAlgebra::antisymmetry_violations() const {
    std::vector<std::array<std::size_t, 2>> bad;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            if (!(bracket_basis(i, j) + bracket_basis(j, i)).is_zero())
                bad.push_back({i, j});
    return bad;
}

std::vector<std::array<std::size_t, 3>> LieAlgebra::jacobi_violations() const {
    std::vector<std::array<std::size_t, 3>> bad;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                Matrix s = bracket(bracket_basis(i, j), Matrix::basis_vector(dim_, k)) +
                           bracket(bracket_basis(j, k), Matrix::basis_vector(dim_, i)) +
                           bracket(bracket_basis(k, i), Matrix::basis_vector(dim_, j));
                if (!s.is_zero()) bad.push_back({i, j, k});
            }
    return bad;
}

AspElement asp_bracket(const AspElement& a, const AspElement& b) {
    if (a.linear_part.rows() != b.linear_part.rows())
        throw std::invalid_argument("asp bracket: ambient mismatch");
    return {a.linear_part * b.linear_part - b.linear_part * a.linear_part,
            a.linear_part * b.translation_part - b.linear_part * a.translation_part};
}

Matrix asp_flatten(const AspElement& a) {
    return Matrix::vcat(a.linear_part.flatten(), a.translation_part);
}

AspElement asp_unflatten(std::size_t dim_v, const Matrix& flat) {
    if (flat.rows() != dim_v * dim_v + dim_v || flat.cols() != 1)
        throw std::invalid_argument("asp unflatten shape");
    Matrix lin(dim_v, dim_v);
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_v; ++j) lin.at(i, j) = flat.at(i * dim_v + j, 0);
    Matrix tr(dim_v, 1);
    for (std::size_t i = 0; i < dim_v; ++i) tr.at(i, 0) = flat.at(dim_v * dim_v + i, 0);
    return {lin, tr};
}

Matrix closure(std::size_t ambient_dim_cap, const FlatBracket& bracket,
               const Matrix& generators) {
    Subspace span(generators.rows(), generators);
    for (std::size_t round = 0; round <= ambient_dim_cap; ++round) {
        Matrix b = span.basis();
        Matrix extra(b.rows(), 0);
        for (std::size_t i = 0; i < b.cols(); ++i)
            for (std::size_t j = i + 1; j < b.cols(); ++j) {
                Matrix br = bracket(b.col(i), b.col(j));
                if (!span.contains(br)) extra = Matrix::hcat(extra, br);
            }
        if (extra.cols() == 0) return span.basis();
        span = Subspace(b.rows(), Matrix::hcat(b, extra));
    }
    throw std::logic_error("closure did not stabilize within the dimension cap");
}

std::vector<AspElement> asp_closure(std::size_t dim_v,
                                    const std::vector<AspElement>& generators) {
    Matrix gen(dim_v * dim_v + dim_v, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
        gen.set_col(j, asp_flatten(generators[j]));
    FlatBracket br = [dim_v](const Matrix& x, const Matrix& y) {
        return asp_flatten(asp_bracket(asp_unflatten(dim_v, x), asp_unflatten(dim_v, y)));
    };
    std::size_t cap = dim_v * (dim_v + 1) / 2 + dim_v; // dim asp(V)
    Matrix basis = closure(cap, br, gen);
    std::vector<AspElement> out;
    for (std::size_t j = 0; j < basis.cols(); ++j)
        out.push_back(asp_unflatten(dim_v, basis.col(j)));
    return out;
}

bool is_homomorphism(const LinearLieMap& f, const FlatBracket& target_bracket) {
    std::size_t n = f.source.dim();
    if (f.matrix.cols() != n) throw std::invalid_argument("map shape mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix lhs = f.matrix * f.source.bracket_basis(i, j);
            Matrix rhs = target_bracket(f.matrix.col(i), f.matrix.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

} // namespace ess
