#ifndef ESS_SYMPLECTIC_HPP
#define ESS_SYMPLECTIC_HPP

#include "ess/subspace.hpp"

namespace ess {

/// Even-dimensional rational vector space with a nondegenerate skew form,
/// Omega(u, v) = u^T gram v. The gram matrix is arbitrary skew invertible,
/// not forced to any standard block shape.
class SymplecticSpace {
public:
    SymplecticSpace(std::size_t dim, Matrix gram);

    /// Standard form on Q^(2n): gram has adjacent 2x2 blocks [[0,1],[-1,0]],
    /// i.e. Omega(e_1,e_2) = Omega(e_3,e_4) = ... = 1.
    static SymplecticSpace standard(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Matrix& gram() const { return gram_; }
    Scalar omega(const Matrix& u, const Matrix& v) const;

private:
    std::size_t dim_;
    Matrix gram_;
};

/// x -> linear x + translation, with `linear` symplectic.
struct AffineSymplecticMap {
    Matrix linear;
    Matrix translation;

    Matrix apply(const Matrix& v) const { return linear * v + translation; }
    AffineSymplecticMap compose(const AffineSymplecticMap& inner) const;
    AffineSymplecticMap inverse() const;
    bool operator==(const AffineSymplecticMap& o) const {
        return linear == o.linear && translation == o.translation;
    }
};

/// Presentation of the symplectic reduction of a subspace V' of V:
/// null is the radical of Omega restricted to V', reduced = V'/null with the
/// induced form, projection/section are matrices in V'-basis coordinates.
struct QuotientPresentation {
    Subspace source;          // V'
    Subspace null;            // N, radical of Omega|V'
    SymplecticSpace reduced;  // V0 = V'/N
    Matrix projection;        // dim V0 x dim V', on V'-coordinates
    Matrix section;           // dim V' x dim V0, right inverse of projection

    /// Section as an ambient map V0 -> V (columns live in V').
    Matrix section_ambient() const { return source.basis() * section; }
    /// Apply the projection to an ambient vector, which must lie in V'.
    Matrix project_ambient(const Matrix& v) const;
};

/// Omega-orthogonal complement {v : Omega(v, w) = 0 for all w in W}.
Subspace omega_complement(const SymplecticSpace& V, const Subspace& W);

/// True iff Omega restricted to W is nondegenerate (equivalently
/// W intersect W-perp = 0).
bool is_nondegenerate(const SymplecticSpace& V, const Subspace& W);

/// Gram matrix of Omega restricted to the canonical basis of W.
Matrix restricted_gram(const SymplecticSpace& V, const Subspace& W);

/// The reflection fixing p, acting as -Id on W and +Id on W-perp.
/// Requires Omega|_W nondegenerate.
AffineSymplecticMap reflection(const SymplecticSpace& V, const Subspace& W, const Matrix& p);

/// Membership in sp(V, Omega): gram*A + A^T*gram = 0.
bool sp_membership(const SymplecticSpace& V, const Matrix& A);

/// The symmetric pairing element x o y: z -> omega(x,z) y + omega(y,z) x,
/// as a matrix. Always lies in sp(V, Omega).
Matrix circ(const SymplecticSpace& V, const Matrix& x, const Matrix& y);

/// Symplectic reduction of V' inside V. Degenerate and zero cases are legal;
/// a totally isotropic V' reduces to dimension 0.
QuotientPresentation symplectic_quotient(const SymplecticSpace& V, const Subspace& Vprime);

/// L^T gram L = gram.
bool is_symplectic_linear(const SymplecticSpace& V, const Matrix& L);

} // namespace ess

#endif
