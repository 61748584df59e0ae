#ifndef ESS_LIE_HPP
#define ESS_LIE_HPP

#include "ess/symplectic.hpp"

#include <array>
#include <functional>
#include <vector>

namespace ess {

/// Lie algebra given by structure constants: bracket_table[i*dim+j] is the
/// coordinate vector of [b_i, b_j]. Antisymmetry and Jacobi are checked by
/// jacobi_violations / antisymmetry_violations, not assumed.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, std::vector<Matrix> bracket_table);
    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const Matrix& bracket_basis(std::size_t i, std::size_t j) const {
        return table_[i * dim_ + j];
    }
    /// Bilinear extension to coordinate vectors.
    Matrix bracket(const Matrix& x, const Matrix& y) const;

    std::vector<std::array<std::size_t, 2>> antisymmetry_violations() const;
    std::vector<std::array<std::size_t, 3>> jacobi_violations() const;
    bool is_valid() const {
        return antisymmetry_violations().empty() && jacobi_violations().empty();
    }

    bool operator==(const LieAlgebra& o) const {
        return dim_ == o.dim_ && table_ == o.table_;
    }

private:
    std::size_t dim_;
    std::vector<Matrix> table_;
};

/// Element of asp(V, Omega) = sp(V, Omega) (+) V.
struct AspElement {
    Matrix linear_part;      // dim V x dim V
    Matrix translation_part; // dim V x 1

    bool operator==(const AspElement& o) const {
        return linear_part == o.linear_part && translation_part == o.translation_part;
    }
};

/// [A + v, B + w] = [A, B] + (A w - B v).
AspElement asp_bracket(const AspElement& a, const AspElement& b);

Matrix asp_flatten(const AspElement& a);
AspElement asp_unflatten(std::size_t dim_v, const Matrix& flat);

/// Bracket on flattened coordinate vectors of some ambient algebra.
using FlatBracket = std::function<Matrix(const Matrix&, const Matrix&)>;

/// Basis (columns, canonical) of the smallest bracket-closed subspace
/// containing the generator columns. Iterates pairwise brackets with
/// re-echelonization; the round count is capped by ambient_dim_cap and
/// exceeding the cap throws (a logic bug, since dimension grows each round).
Matrix closure(std::size_t ambient_dim_cap, const FlatBracket& bracket,
               const Matrix& generators);

std::vector<AspElement> asp_closure(std::size_t dim_v,
                                    const std::vector<AspElement>& generators);

/// Linear map out of a structure-constant Lie algebra, into a target realized
/// by a bracket on coordinate vectors.
struct LinearLieMap {
    LieAlgebra source;
    Matrix matrix; // target_dim x source_dim
};

/// f[x,y] = [f x, f y] on all basis pairs.
bool is_homomorphism(const LinearLieMap& f, const FlatBracket& target_bracket);

} // namespace ess

#endif
