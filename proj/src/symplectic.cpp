#include "ess/symplectic.hpp"

#include <stdexcept>

namespace ess {

SymplecticSpace::SymplecticSpace(std::size_t dim, Matrix gram)
    : dim_(dim), gram_(std::move(gram)) {
    if (dim_ % 2 != 0) throw std::invalid_argument("symplectic dimension must be even");
    if (gram_.rows() != dim_ || gram_.cols() != dim_)
        throw std::invalid_argument("gram shape mismatch");
    if (!gram_.is_skew_symmetric()) throw std::invalid_argument("gram not skew-symmetric");
    if (dim_ > 0 && rank(gram_) != dim_) throw std::invalid_argument("gram degenerate");
}

SymplecticSpace SymplecticSpace::standard(std::size_t dim) {
    if (dim % 2 != 0) throw std::invalid_argument("standard form needs even dimension");
    Matrix g(dim, dim);
    for (std::size_t i = 0; i + 1 < dim; i += 2) {
        g.at(i, i + 1) = 1;
        g.at(i + 1, i) = -1;
    }
    return SymplecticSpace(dim, g);
}

Scalar SymplecticSpace::omega(const Matrix& u, const Matrix& v) const {
    Matrix r = u.transpose() * gram_ * v;
    return r.at(0, 0);
}

AffineSymplecticMap AffineSymplecticMap::compose(const AffineSymplecticMap& inner) const {
    return {linear * inner.linear, linear * inner.translation + translation};
}

AffineSymplecticMap AffineSymplecticMap::inverse() const {
    auto li = ess::inverse(linear);
    if (!li) throw std::invalid_argument("affine map not invertible");
    return {*li, -(*li * translation)};
}

Matrix QuotientPresentation::project_ambient(const Matrix& v) const {
    auto c = source.coordinates(v);
    if (!c) throw std::invalid_argument("vector not in the reduced subspace V'");
    return projection * *c;
}

Subspace omega_complement(const SymplecticSpace& V, const Subspace& W) {
    if (W.ambient() != V.dim()) throw std::invalid_argument("ambient dimension mismatch");
    // Omega(v, w_j) = 0 for all basis columns w_j: rows w_j^T G^T
    Matrix constraints = (V.gram() * W.basis()).transpose();
    return Subspace(V.dim(), kernel(constraints));
}

Matrix restricted_gram(const SymplecticSpace& V, const Subspace& W) {
    if (W.ambient() != V.dim()) throw std::invalid_argument("ambient dimension mismatch");
    return W.basis().transpose() * V.gram() * W.basis();
}

bool is_nondegenerate(const SymplecticSpace& V, const Subspace& W) {
    Matrix g = restricted_gram(V, W);
    return rank(g) == W.dim();
}

AffineSymplecticMap reflection(const SymplecticSpace& V, const Subspace& W, const Matrix& p) {
    if (!is_nondegenerate(V, W))
        throw std::invalid_argument("reflection requires Omega|_W nondegenerate");
    if (p.rows() != V.dim() || p.cols() != 1) throw std::invalid_argument("point shape");
    Subspace perp = omega_complement(V, W);
    // V = W (+) W-perp, so [basis_W | basis_perp] is invertible
    Matrix P = Matrix::hcat(W.basis(), perp.basis());
    Matrix D(V.dim(), V.dim());
    for (std::size_t i = 0; i < W.dim(); ++i) D.at(i, i) = -1;
    for (std::size_t i = W.dim(); i < V.dim(); ++i) D.at(i, i) = 1;
    Matrix lin = P * D * *inverse(P);
    return {lin, p - lin * p};
}

bool sp_membership(const SymplecticSpace& V, const Matrix& A) {
    if (A.rows() != V.dim() || A.cols() != V.dim())
        throw std::invalid_argument("sp membership: size mismatch");
    return (V.gram() * A + A.transpose() * V.gram()).is_zero();
}

Matrix circ(const SymplecticSpace& V, const Matrix& x, const Matrix& y) {
    if (x.rows() != V.dim() || y.rows() != V.dim() || x.cols() != 1 || y.cols() != 1)
        throw std::invalid_argument("circ: vector shape mismatch");
    return y * (x.transpose() * V.gram()) + x * (y.transpose() * V.gram());
}

QuotientPresentation symplectic_quotient(const SymplecticSpace& V, const Subspace& Vprime) {
    if (Vprime.ambient() != V.dim()) throw std::invalid_argument("ambient dimension mismatch");
    const Matrix& B = Vprime.basis();
    std::size_t k = Vprime.dim();
    Matrix grest = B.transpose() * V.gram() * B;
    Matrix nullc = kernel(grest); // k x m, coordinates in B
    Subspace N(V.dim(), B * nullc);
    std::size_t r = k - nullc.cols();

    // Deterministic section: keep basis columns of V' that stay independent
    // modulo N, in ascending order.
    std::vector<std::size_t> kept;
    Matrix probe = nullc;
    std::size_t cur = rank(probe);
    for (std::size_t i = 0; i < k && kept.size() < r; ++i) {
        Matrix cand = Matrix::hcat(probe, Matrix::basis_vector(k, i));
        if (rank(cand) > cur) {
            probe = cand;
            ++cur;
            kept.push_back(i);
        }
    }
    Matrix section(k, r);
    for (std::size_t j = 0; j < r; ++j) section.at(kept[j], j) = 1;

    // projection: first r rows of [section | nullc]^{-1}
    Matrix proj(r, k);
    if (k > 0) {
        Matrix M = Matrix::hcat(section, nullc);
        Matrix Minv = *inverse(M);
        proj = Minv.block(0, 0, r, k);
    }
    Matrix gram0 = section.transpose() * grest * section;
    return QuotientPresentation{Vprime, N, SymplecticSpace(r, gram0), proj, section};
}

bool is_symplectic_linear(const SymplecticSpace& V, const Matrix& L) {
    if (L.rows() != V.dim() || L.cols() != V.dim()) return false;
    return L.transpose() * V.gram() * L == V.gram();
}

} // namespace ess
