#include "ess/symmetric_pair.hpp"

#include "ess/errors.hpp"

#include <sstream>

namespace ess {

std::vector<std::string> SymmetricPair::validate() const {
    std::vector<std::string> bad;
    if (dim_k + dim_p != algebra.dim()) {
        bad.push_back("dim_k + dim_p does not match the algebra dimension");
        return bad;
    }
    for (auto [i, j] : algebra.antisymmetry_violations()) {
        std::ostringstream os;
        os << "bracket antisymmetry fails at basis pair (" << i << "," << j << ")";
        bad.push_back(os.str());
    }
    // grading: brackets land in the right block
    auto block_ok = [&](std::size_t i, std::size_t j, bool into_k) {
        const Matrix& v = algebra.bracket_basis(i, j);
        for (std::size_t r = 0; r < algebra.dim(); ++r) {
            bool in_k = r < dim_k;
            if (in_k != into_k && sgn(v.at(r, 0)) != 0) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < algebra.dim(); ++i)
        for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
            bool i_k = i < dim_k, j_k = j < dim_k;
            bool into_k = (i_k == j_k); // [k,k] in k, [p,p] in k, [k,p] in p
            if (!block_ok(i, j, into_k)) {
                std::ostringstream os;
                os << "grading violated by [b_" << i << ", b_" << j << "]";
                bad.push_back(os.str());
            }
        }
    for (auto [i, j, k] : algebra.jacobi_violations()) {
        std::ostringstream os;
        os << "Jacobi fails at basis triple (" << i << "," << j << "," << k << ")";
        bad.push_back(os.str());
    }
    return bad;
}

Matrix SymmetricPair::ad_p(const Matrix& k_coords) const {
    if (k_coords.rows() != dim_k || k_coords.cols() != 1)
        throw std::invalid_argument("ad_p expects k-coordinates");
    Matrix z(algebra.dim(), 1);
    for (std::size_t i = 0; i < dim_k; ++i) z.at(i, 0) = k_coords.at(i, 0);
    Matrix m(dim_p, dim_p);
    for (std::size_t j = 0; j < dim_p; ++j) {
        Matrix br = algebra.bracket(z, Matrix::basis_vector(algebra.dim(), dim_k + j));
        for (std::size_t i = 0; i < dim_p; ++i) m.at(i, j) = br.at(dim_k + i, 0);
    }
    return m;
}

Matrix SymmetricPair::p_bracket_k_part(std::size_t i, std::size_t j) const {
    const Matrix& v = algebra.bracket_basis(dim_k + i, dim_k + j);
    return v.block(0, 0, dim_k, 1);
}

std::vector<std::string> SymplecticSymmetricPair::validate() const {
    std::vector<std::string> bad = pair.validate();
    if (pair.dim_p % 2 != 0) bad.push_back("dim_p is odd; omega cannot be nondegenerate");
    if (omega.rows() != pair.dim_p || omega.cols() != pair.dim_p) {
        bad.push_back("omega shape does not match dim_p");
        return bad;
    }
    if (!omega.is_skew_symmetric()) bad.push_back("omega not skew-symmetric");
    else if (rank(omega) != pair.dim_p) bad.push_back("omega degenerate");
    if (!bad.empty()) return bad;
    // ad_k-invariance: each ad_k|_p lies in sp(p, omega)
    for (std::size_t a = 0; a < pair.dim_k; ++a) {
        Matrix ad = pair.ad_p(Matrix::basis_vector(pair.dim_k, a));
        if (!(omega * ad + ad.transpose() * omega).is_zero()) {
            std::ostringstream os;
            os << "omega not ad-invariant for k basis vector " << a;
            bad.push_back(os.str());
        }
    }
    return bad;
}

CurvatureOperator CurvatureOperator::zero(std::size_t dim_p) {
    return {dim_p, std::vector<Matrix>(dim_p * dim_p, Matrix(dim_p, dim_p))};
}

Matrix CurvatureOperator::eval(const Matrix& x, const Matrix& y) const {
    Matrix out(dim_p, dim_p);
    for (std::size_t i = 0; i < dim_p; ++i) {
        if (sgn(x.at(i, 0)) == 0) continue;
        for (std::size_t j = 0; j < dim_p; ++j) {
            if (sgn(y.at(j, 0)) == 0) continue;
            out = out + at(i, j) * (x.at(i, 0) * y.at(j, 0));
        }
    }
    return out;
}

std::vector<Matrix> sp_basis(const SymplecticSpace& p_space) {
    std::size_t d = p_space.dim();
    std::vector<Matrix> basis;
    basis.reserve(d * (d + 1) / 2);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b)
            basis.push_back(circ(p_space, Matrix::basis_vector(d, a), Matrix::basis_vector(d, b)));
    return basis;
}

namespace {

Matrix flatten_cols(const std::vector<Matrix>& mats) {
    if (mats.empty()) return Matrix(0, 0);
    Matrix out(mats[0].rows() * mats[0].cols(), mats.size());
    for (std::size_t j = 0; j < mats.size(); ++j) out.set_col(j, mats[j].flatten());
    return out;
}

/// Deterministic skew elimination: c = sum_t (1/gamma_t)(x_t y_t^T - y_t x_t^T)
/// with (i,j) the lex-first nonzero pivot each round and x_t, y_t the pivot
/// columns. The collected columns are linearly independent.
struct SkewPiece {
    Matrix x, y;
    Scalar coef;
};

std::vector<SkewPiece> skew_eliminate(Matrix c) {
    std::vector<SkewPiece> pieces;
    std::size_t n = c.rows();
    for (;;) {
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (sgn(c.at(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) break;
        Scalar gamma = c.at(pi, pj);
        Matrix ri = c.col(pi), rj = c.col(pj);
        Scalar inv = 1 / gamma;
        c = c - (ri * rj.transpose() - rj * ri.transpose()) * inv;
        pieces.push_back({ri, rj, inv});
    }
    return pieces;
}

CurvatureBivector bivector_from_coefficient_form(const std::vector<Matrix>& basis,
                                                 const Matrix& c) {
    std::vector<SkewPiece> pieces = skew_eliminate(c);
    CurvatureBivector out;
    out.coeffs = Matrix(2 * pieces.size(), 2 * pieces.size());
    std::vector<Matrix> cols;
    for (std::size_t t = 0; t < pieces.size(); ++t) {
        auto combine = [&](const Matrix& coords) {
            Matrix m(basis.empty() ? 0 : basis[0].rows(),
                     basis.empty() ? 0 : basis[0].cols());
            for (std::size_t a = 0; a < basis.size(); ++a)
                if (sgn(coords.at(a, 0)) != 0) m = m + basis[a] * coords.at(a, 0);
            return m;
        };
        out.factors.push_back(combine(pieces[t].x));
        out.factors.push_back(combine(pieces[t].y));
        cols.push_back(pieces[t].x);
        cols.push_back(pieces[t].y);
        out.coeffs.at(2 * t, 2 * t + 1) = pieces[t].coef;
        out.coeffs.at(2 * t + 1, 2 * t) = -pieces[t].coef;
    }
    if (!cols.empty())
        internal_check(rank(Matrix::from_cols(cols[0].rows(), cols)) == cols.size(),
                       "skew elimination produced dependent factors");
    return out;
}

} // namespace

CurvatureBivector minimal_bivector(const SymplecticSpace& p_space,
                                   const std::vector<Matrix>& raw_factors,
                                   const Matrix& raw_coeffs) {
    std::vector<Matrix> basis = sp_basis(p_space);
    std::size_t m = basis.size();
    if (raw_factors.empty()) return bivector_from_coefficient_form(basis, Matrix(m, m));
    if (raw_coeffs.rows() != raw_factors.size() || raw_coeffs.cols() != raw_factors.size())
        throw std::invalid_argument("coefficient matrix shape mismatch");
    if (!raw_coeffs.is_skew_symmetric())
        throw std::invalid_argument("coefficient matrix not skew-symmetric");
    Matrix S = flatten_cols(basis);
    auto F = solve(S, flatten_cols(raw_factors));
    if (!F) throw std::invalid_argument("factor not in sp(p, omega)");
    Matrix c = *F * raw_coeffs * F->transpose();
    return bivector_from_coefficient_form(basis, c);
}

CurvatureOperator curvature(const SymplecticSymmetricPair& P) {
    std::size_t d = P.pair.dim_p;
    CurvatureOperator R = CurvatureOperator::zero(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Matrix z = P.pair.p_bracket_k_part(i, j);
            Matrix m = -P.pair.ad_p(z);
            R.at(i, j) = m;
            R.at(j, i) = -m;
        }
    return R;
}

bool bianchi_check(const CurvatureOperator& R) {
    std::size_t d = R.dim_p;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Matrix s = R.at(i, j).col(k) + R.at(j, k).col(i) + R.at(k, i).col(j);
                if (!s.is_zero()) return false;
            }
    return true;
}

CurvatureOperator bivector_expand(const SymplecticSpace& p_space, const CurvatureBivector& B) {
    std::size_t d = p_space.dim();
    for (const Matrix& A : B.factors)
        if (!sp_membership(p_space, A))
            throw std::invalid_argument("bivector factor not in sp(p, omega)");
    CurvatureOperator R = CurvatureOperator::zero(d);
    std::size_t r = B.factors.size();
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l) {
            Matrix acc(d, d);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    const Scalar& a = B.coeffs.at(i, j);
                    if (sgn(a) == 0) continue;
                    Matrix u = B.factors[i].col(k);
                    Matrix v = B.factors[j].col(l);
                    acc = acc + circ(p_space, u, v) * a;
                }
            R.at(k, l) = acc;
            R.at(l, k) = -acc;
        }
    return R;
}

CurvatureBivector bivector_solve(const SymplecticSpace& p_space, const CurvatureOperator& R) {
    std::size_t d = p_space.dim();
    if (R.dim_p != d) throw std::invalid_argument("operator dimension mismatch");
    std::vector<Matrix> basis = sp_basis(p_space);
    std::size_t m = basis.size();
    // unknowns c_ab for a < b, lex order
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) unknowns.emplace_back(a, b);
    std::size_t npairs = d * (d - 1) / 2;
    Matrix sys(npairs * d * d, unknowns.size());
    Matrix rhs(npairs * d * d, 1);
    std::size_t row0 = 0;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l) {
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto [a, b] = unknowns[u];
                // (S_a e_k) o (S_b e_l) - (S_b e_k) o (S_a e_l)
                Matrix coef = circ(p_space, basis[a].col(k), basis[b].col(l)) -
                              circ(p_space, basis[b].col(k), basis[a].col(l));
                Matrix f = coef.flatten();
                for (std::size_t r2 = 0; r2 < d * d; ++r2) sys.at(row0 + r2, u) = f.at(r2, 0);
            }
            Matrix f = R.at(k, l).flatten();
            for (std::size_t r2 = 0; r2 < d * d; ++r2) rhs.at(row0 + r2, 0) = f.at(r2, 0);
            row0 += d * d;
        }
    auto sol = solve(sys, rhs);
    if (!sol)
        throw MathFailure("NotACurvature",
                          "operator is not in the span of formal curvatures "
                          "(first Bianchi identity fails)");
    internal_check(unknowns.empty() || rank(sys) == unknowns.size(),
                   "formal curvature identification is not injective");
    Matrix c(m, m);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [a, b] = unknowns[u];
        c.at(a, b) = sol->at(u, 0);
        c.at(b, a) = -sol->at(u, 0);
    }
    return bivector_from_coefficient_form(basis, c);
}

std::size_t srk(const SymplecticSymmetricPair& P) {
    return bivector_solve(P.p_space(), curvature(P)).rank();
}

std::optional<KappaTable> kappa_solve(const std::vector<Matrix>& ad_k_on_p,
                                      const CurvatureBivector& B) {
    std::size_t nk = ad_k_on_p.size();
    std::size_t r = B.factors.size();
    KappaTable K{nk, r, std::vector<Matrix>(r * r, Matrix(1, nk))};
    if (r == 0) return K;
    // A^j = sum_l a_jl A_l
    std::vector<Matrix> Aup;
    for (std::size_t j = 0; j < r; ++j) {
        Matrix m(B.factors[0].rows(), B.factors[0].cols());
        for (std::size_t l = 0; l < r; ++l)
            if (sgn(B.coeffs.at(j, l)) != 0) m = m + B.factors[l] * B.coeffs.at(j, l);
        Aup.push_back(m);
    }
    Matrix W = Matrix(Aup[0].rows() * Aup[0].cols(), r);
    for (std::size_t j = 0; j < r; ++j) W.set_col(j, Aup[j].flatten());
    for (std::size_t b = 0; b < nk; ++b) {
        const Matrix& ad = ad_k_on_p[b];
        for (std::size_t i = 0; i < r; ++i) {
            Matrix lhs = ad * B.factors[i] - B.factors[i] * ad;
            auto mu = solve(W, lhs.flatten());
            if (!mu) return std::nullopt;
            for (std::size_t j = 0; j < r; ++j) K.rows[i * r + j].at(0, b) = mu->at(j, 0);
        }
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (K.at(i, j) != K.at(j, i)) return std::nullopt;
    return K;
}

bool admits_extrinsic(const SymplecticSymmetricPair& P, const CurvatureBivector& B,
                      const KappaTable& K) {
    std::size_t d = P.pair.dim_p;
    std::size_t r = B.factors.size();
    if (K.nfactors != r) throw std::invalid_argument("kappa table does not match bivector");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            Matrix C = B.factors[i] * B.factors[j] + B.factors[j] * B.factors[i];
            Matrix rhs = C.transpose() * P.omega; // entry (s,t) = omega(C x_s, x_t)
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t t = 0; t < d; ++t) {
                    Matrix z = -P.pair.p_bracket_k_part(s, t);
                    Matrix lhs = K.at(i, j) * z; // 1x1
                    if (lhs.at(0, 0) != rhs.at(s, t)) return false;
                }
        }
    return true;
}

SymplecticSymmetricPair change_p_basis(const SymplecticSymmetricPair& P, const Matrix& T) {
    std::size_t dk = P.pair.dim_k, dp = P.pair.dim_p, n = dk + dp;
    if (T.rows() != dp || T.cols() != dp || rank(T) != dp)
        throw std::invalid_argument("basis change must be invertible dim_p x dim_p");
    Matrix U(n, n);
    for (std::size_t i = 0; i < dk; ++i) U.at(i, i) = 1;
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < dp; ++j) U.at(dk + i, dk + j) = T.at(i, j);
    Matrix Uinv = *inverse(U);
    std::vector<Matrix> table(n * n, Matrix(n, 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = Uinv * P.pair.algebra.bracket(U.col(i), U.col(j));
    SymmetricPair sp{LieAlgebra(n, std::move(table)), dk, dp};
    return SymplecticSymmetricPair{sp, T.transpose() * P.omega * T};
}

} // namespace ess
