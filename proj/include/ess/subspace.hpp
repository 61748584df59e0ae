#ifndef ESS_SUBSPACE_HPP
#define ESS_SUBSPACE_HPP

#include "ess/matrix.hpp"

namespace ess {

/// Linear subspace of Q^n, stored as a canonical basis: the reduced column
/// echelon form of any spanning set, with first-nonzero pivoting. Two
/// subspaces are equal iff their stored bases are identical matrices.
class Subspace {
public:
    /// Canonicalizes the columns of `span`; dependent columns are dropped.
    Subspace(std::size_t ambient_dim, const Matrix& span);

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the stored basis; nullopt if v is outside.
    std::optional<Matrix> coordinates(const Matrix& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

private:
    std::size_t ambient_;
    Matrix basis_; // ambient_ x dim, canonical
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

} // namespace ess

#endif
