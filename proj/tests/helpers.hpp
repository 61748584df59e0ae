#ifndef ESS_TEST_HELPERS_HPP
#define ESS_TEST_HELPERS_HPP

#include "ess/catalog.hpp"
#include "ess/rng.hpp"

namespace ess::testing {

inline Matrix rand_vector(Lcg& rng, std::size_t n, long lo = -3, long hi = 3) {
    Matrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v.at(i, 0) = rng.draw(lo, hi);
    return v;
}

inline Scalar rand_scalar(Lcg& rng) {
    return scalar(rng.draw(-4, 4), rng.draw(1, 3));
}

inline Matrix rand_matrix(Lcg& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rand_scalar(rng);
    return m;
}

/// Random element of sp(V, Omega) as a combination of circ pairs.
inline Matrix rand_sp(Lcg& rng, const SymplecticSpace& V) {
    Matrix a = circ(V, rand_vector(rng, V.dim()), rand_vector(rng, V.dim()));
    Matrix b = circ(V, rand_vector(rng, V.dim()), rand_vector(rng, V.dim()));
    return a + b * rand_scalar(rng);
}

/// Product of `count` symplectic transvections x -> x + c Omega(x, v) v;
/// exactly symplectic for any gram.
inline Matrix rand_symplectic(Lcg& rng, const SymplecticSpace& V, std::size_t count = 4) {
    Matrix g = Matrix::identity(V.dim());
    for (std::size_t t = 0; t < count; ++t) {
        Matrix v = rand_vector(rng, V.dim(), -2, 2);
        if (v.is_zero()) v.at(t % V.dim(), 0) = 1;
        long c = rng.draw(-2, 2);
        if (c == 0) c = 1;
        g = (Matrix::identity(V.dim()) - v * (v.transpose() * V.gram()) * Scalar(c)) * g;
    }
    return g;
}

/// ad_k-equivariance of the curvature:
/// [ad_k, R(x,y)] = R(ad_k x, y) + R(x, ad_k y) on all basis tuples.
inline bool curvature_equivariant(const SymplecticSymmetricPair& P, const CurvatureOperator& R) {
    std::size_t dk = P.pair.dim_k, dp = P.pair.dim_p;
    for (std::size_t a = 0; a < dk; ++a) {
        Matrix ad = P.pair.ad_p(Matrix::basis_vector(dk, a));
        for (std::size_t i = 0; i < dp; ++i)
            for (std::size_t j = i + 1; j < dp; ++j) {
                Matrix lhs = ad * R.at(i, j) - R.at(i, j) * ad;
                Matrix rhs = R.eval(ad.col(i), Matrix::basis_vector(dp, j)) +
                             R.eval(Matrix::basis_vector(dp, i), ad.col(j));
                if (lhs != rhs) return false;
            }
    }
    return true;
}

/// k-equivariance of the A-map: A(Lambda(k) xi) = [ad_k, A(xi)].
inline bool a_map_equivariant(const ExtrinsicMorphism& m, const AMap& A) {
    std::size_t dk = m.pair().pair.dim_k;
    for (std::size_t a = 0; a < dk; ++a) {
        Matrix ad = m.pair().pair.ad_p(Matrix::basis_vector(dk, a));
        for (std::size_t e = 0; e < A.w2.dim(); ++e) {
            Matrix xi = A.w2.basis().col(e);
            Matrix lhs = A.apply(m.Lambda()[a] * xi);
            Matrix rhs = ad * A.values[e] - A.values[e] * ad;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// Conjugate a morphism by a linear symplectic map of its ambient space.
inline ExtrinsicMorphism conjugate(const ExtrinsicMorphism& m, const Matrix& g) {
    Matrix gi = *inverse(g);
    std::vector<Matrix> Lc;
    for (const Matrix& L : m.Lambda()) Lc.push_back(g * L * gi);
    return ExtrinsicMorphism(m.pair(), m.space(), std::move(Lc), g * m.tau());
}

} // namespace ess::testing

#endif
