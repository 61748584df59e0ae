#ifndef ESS_SYMMETRIC_PAIR_HPP
#define ESS_SYMMETRIC_PAIR_HPP

#include "ess/lie.hpp"

#include <optional>

namespace ess {

/// Graded Lie algebra g = k (+) p by the basis convention: the first dim_k
/// basis vectors span k, the remaining dim_p span p.
struct SymmetricPair {
    LieAlgebra algebra;
    std::size_t dim_k;
    std::size_t dim_p;

    /// Grading ([k,k] in k, [k,p] in p, [p,p] in k) plus antisymmetry and
    /// Jacobi; one message per violation.
    std::vector<std::string> validate() const;

    /// Matrix of ad_z restricted to p, for z given in k-coordinates.
    Matrix ad_p(const Matrix& k_coords) const;
    /// k-part coordinates of [p_i, p_j] (indices into the p block).
    Matrix p_bracket_k_part(std::size_t i, std::size_t j) const;

    bool operator==(const SymmetricPair& o) const {
        return algebra == o.algebra && dim_k == o.dim_k && dim_p == o.dim_p;
    }
};

/// Symmetric pair with an ad_k-invariant symplectic form on p. dim_p = 0 is
/// legal (trivial pair); odd dim_p is rejected at validation.
struct SymplecticSymmetricPair {
    SymmetricPair pair;
    Matrix omega; // dim_p x dim_p, skew nondegenerate

    std::vector<std::string> validate() const;
    SymplecticSpace p_space() const { return SymplecticSpace(pair.dim_p, omega); }

    bool operator==(const SymplecticSymmetricPair& o) const {
        return pair == o.pair && omega == o.omega;
    }
};

/// The curvature on basis pairs of p: at(i,j) is the matrix of R(x_i, x_j),
/// antisymmetric in (i, j), each value in sp(p, omega).
struct CurvatureOperator {
    std::size_t dim_p = 0;
    std::vector<Matrix> table; // dim_p * dim_p entries

    static CurvatureOperator zero(std::size_t dim_p);
    const Matrix& at(std::size_t i, std::size_t j) const { return table[i * dim_p + j]; }
    Matrix& at(std::size_t i, std::size_t j) { return table[i * dim_p + j]; }
    /// Bilinear extension to coordinate vectors of p.
    Matrix eval(const Matrix& x, const Matrix& y) const;

    bool operator==(const CurvatureOperator& o) const {
        return dim_p == o.dim_p && table == o.table;
    }
};

/// Presentation sum_{i,j} a_ij A_i /\ A_j with independent factors A_i in
/// sp(p, omega) and skew coefficient matrix a. Minimal presentations (the
/// only kind produced here) have invertible coeffs of size srk.
struct CurvatureBivector {
    std::vector<Matrix> factors;
    Matrix coeffs;

    std::size_t rank() const { return factors.size(); }
};

/// Lex-ordered basis {circ(e_a, e_b)}_{a<=b} of sp(p, omega).
std::vector<Matrix> sp_basis(const SymplecticSpace& p_space);

/// Minimal presentation of the 2-vector sum a_ij F_i /\ F_j: coordinates over
/// the canonical sp basis, then deterministic skew elimination (first-nonzero
/// pivot) into 2x2 blocks [[0,c],[-c,0]]. Factors need not be independent on
/// input; the output's are.
CurvatureBivector minimal_bivector(const SymplecticSpace& p_space,
                                   const std::vector<Matrix>& raw_factors,
                                   const Matrix& raw_coeffs);

/// R(x_i, x_j) = matrix of -ad_{[x_i, x_j]} restricted to p.
CurvatureOperator curvature(const SymplecticSymmetricPair& P);

/// First Bianchi identity R(x,y)z + R(y,z)x + R(z,x)y = 0 on basis triples.
bool bianchi_check(const CurvatureOperator& R);

/// Evaluate the presentation as a curvature operator (the 1/2-normalized
/// identification, summed over the full skew double sum).
CurvatureOperator bivector_expand(const SymplecticSpace& p_space, const CurvatureBivector& B);

/// Inverse of bivector_expand on curvature operators: solve for the
/// coefficient 2-form over the canonical sp basis, then minimize.
/// Throws MathFailure("NotACurvature") if R is not in the image (Bianchi
/// violation).
CurvatureBivector bivector_solve(const SymplecticSpace& p_space, const CurvatureOperator& R);

/// Symplectic curvature rank: rank of the curvature's coefficient 2-form.
std::size_t srk(const SymplecticSymmetricPair& P);

/// kappa functionals on k: at(i,j) is a 1 x dim_k row with
/// [ad_k, A_i] = sum_j kappa_ij(k) A^j, A^j := sum_l a_jl A_l.
struct KappaTable {
    std::size_t dim_k = 0;
    std::size_t nfactors = 0;
    std::vector<Matrix> rows; // nfactors * nfactors entries, each 1 x dim_k
    const Matrix& at(std::size_t i, std::size_t j) const { return rows[i * nfactors + j]; }
};

/// Solve the invariance condition for kappa; nullopt when the system is
/// unsolvable or the solution is not symmetric.
std::optional<KappaTable> kappa_solve(const std::vector<Matrix>& ad_k_on_p,
                                      const CurvatureBivector& B);

/// Existence criterion for an extrinsic realization:
/// kappa_ij(R(x,y)) = omega((A_i A_j + A_j A_i) x, y) on all bases.
/// R(x,y) is read as the k-element -[x,y].
bool admits_extrinsic(const SymplecticSymmetricPair& P, const CurvatureBivector& B,
                      const KappaTable& K);

/// Pair with the p-basis replaced by the columns of T (omega and brackets
/// transformed consistently). Used for basis-invariance checks.
SymplecticSymmetricPair change_p_basis(const SymplecticSymmetricPair& P, const Matrix& T);

} // namespace ess

#endif
