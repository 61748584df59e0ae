#ifndef ESS_EXTRINSIC_HPP
#define ESS_EXTRINSIC_HPP

#include "ess/symmetric_pair.hpp"

#include <variant>

namespace ess {

/// The data d-iota = Lambda + tau : g -> asp(V, Omega) of an extrinsic
/// symplectic morphism, with the derived splitting V = W1 (+) W2, where
/// W1 = tau(p) and W2 = W1-perp (the perp is always taken; inputs never
/// specify W2). Construction checks shapes only; validate() checks the
/// defining conditions.
class ExtrinsicMorphism {
public:
    ExtrinsicMorphism(SymplecticSymmetricPair pair, SymplecticSpace space,
                      std::vector<Matrix> Lambda, Matrix tau);

    const SymplecticSymmetricPair& pair() const { return pair_; }
    const SymplecticSpace& space() const { return space_; }
    const std::vector<Matrix>& Lambda() const { return Lambda_; }
    const Matrix& tau() const { return tau_; }
    /// tau restricted to the p block, dim V x dim_p.
    Matrix tau_p() const;
    const Subspace& w1() const { return w1_; }
    const Subspace& w2() const { return w2_; }

    /// Every defining condition, one message per violation: values in
    /// sp(V,Omega), homomorphism property, ker tau = k with tau|_p injective,
    /// W1 nondegenerate, the block conditions Lambda(k) W_i in W_i and
    /// Lambda(p) W_i in W_{i+1}, and tau^*(Omega) = omega.
    std::vector<std::string> validate() const;

    bool operator==(const ExtrinsicMorphism& o) const {
        return pair_ == o.pair_ && space_.gram() == o.space_.gram() &&
               Lambda_ == o.Lambda_ && tau_ == o.tau_;
    }

private:
    SymplecticSymmetricPair pair_;
    SymplecticSpace space_;
    std::vector<Matrix> Lambda_;
    Matrix tau_;
    Subspace w1_, w2_;
};

/// The linear map W2 -> sp(p, omega) with tau(A(xi) x) = Lambda(x) xi,
/// tabulated on the canonical basis of W2.
struct AMap {
    Subspace w2;
    std::vector<Matrix> values; // one dim_p x dim_p matrix per basis column

    /// Linear extension to an ambient vector xi in W2.
    Matrix apply(const Matrix& xi) const;
};

AMap a_map(const ExtrinsicMorphism& m);

/// Curvature presentation sum Omega^{ij} A_i /\ A_j over a basis of W2,
/// returned in minimal form. Its expansion equals curvature(m.pair()).
CurvatureBivector curvature_via_A(const ExtrinsicMorphism& m);

/// The four fullness criteria, computed independently. They provably agree;
/// disagreement raises InternalError.
struct FullnessReport {
    bool is_full;
    bool c1_minimal_stable;   // minimal d-iota(g)-stable subspace containing tau(g) is V
    bool c2_dim_matches_srk;  // dim W2 = srk
    bool c3_A_injective;      // ker A = 0
    bool c4_span_condition;   // span{Lambda(x) tau(y)} = W2
    Subspace witness;         // the minimal stable subspace W1 (+) W2'
};

FullnessReport fullness(const ExtrinsicMorphism& m);

/// Reduction of a morphism to the full one: V' = W1 (+) W2', N the radical
/// of Omega|_V', and the reduced morphism on V0 = V'/N. The inclusion
/// V' <= V is quotient.source.
struct ReductionResult {
    ExtrinsicMorphism reduced;
    QuotientPresentation quotient;
};

ReductionResult reduce_to_full(const ExtrinsicMorphism& m);

/// Witness iota = iota_1 (+) iota_2 conjugating one full morphism into
/// another: iota^T gram2 iota = gram1, Lambda_2(x) = iota Lambda_1(x)
/// iota^{-1} and tau_2 = iota tau_1.
struct EquivalenceWitness {
    Matrix iota;
};

/// Requires both morphisms valid and full, the same pair, and exactly equal
/// pulled-back forms. Throws MathFailure with kind NotFull / PairMismatch /
/// FormMismatch, or InternalError if a guaranteed identity fails.
EquivalenceWitness affine_equivalence(const ExtrinsicMorphism& m1, const ExtrinsicMorphism& m2);

/// Second-fundamental-form data: symmetric alpha : W1 x W1 -> W2 together
/// with the two symplectic blocks.
struct FundamentalFormData {
    SymplecticSpace w1space;
    SymplecticSpace w2space;
    std::vector<Matrix> alpha; // dim W1 * dim W1 entries, each dim W2 x 1

    const Matrix& at(std::size_t i, std::size_t j) const {
        return alpha[i * w1space.dim() + j];
    }
    bool is_symmetric() const;
};

/// Why the generated algebra failed to close into a symmetric pair. The
/// algebraic signal for a non-parallel second fundamental form.
struct ClosureFailure {
    enum class Kind { NonClosingK, GradingViolation, HomomorphismFailure };
    Kind kind;
    std::string detail;
};

const char* to_string(ClosureFailure::Kind k);

struct FerusResult {
    SymplecticSymmetricPair pair;
    ExtrinsicMorphism morphism;
};

/// Build the shape operators from alpha, assemble Lambda(x) in sp(V, Omega),
/// and close the generators {Lambda(x) + x} in asp(V, Omega). On success the
/// result is the symmetric pair k (+) p with omega = Omega|_W1 and its
/// inclusion morphism, which validates.
std::variant<FerusResult, ClosureFailure> ferus_construct(const FundamentalFormData& data);

} // namespace ess

#endif
