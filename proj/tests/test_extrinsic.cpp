#include "ess/extrinsic.hpp"
#include "ess/catalog.hpp"
#include "ess/errors.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace ess;
using namespace ess::testing;

TEST_CASE("validate") {
    CHECK(flat_affine(1).morphism->validate().empty());
    CHECK(parabola_flat().morphism->validate().empty());

    SUBCASE("pinned parabola matrices") {
        const auto& m = *parabola_flat().morphism;
        Matrix L1(4, 4);
        L1.at(2, 0) = 1;
        L1.at(1, 3) = -1;
        CHECK(m.Lambda()[0] == L1);
        CHECK(m.Lambda()[1].is_zero());
        CHECK(sp_membership(m.space(), L1));
    }
    SUBCASE("tau onto a degenerate plane is refused") {
        CatalogEntry p = parabola_flat();
        const auto& m = *p.morphism;
        Matrix tau(4, 2); // x1 -> a1, x2 -> b1: Omega(a1, b1) = 0
        tau.at(0, 0) = 1;
        tau.at(2, 1) = 1;
        ExtrinsicMorphism bad(m.pair(), m.space(), m.Lambda(), tau);
        bool found = false;
        for (const auto& s : bad.validate())
            if (s.find("W1") != std::string::npos && s.find("degenerate") != std::string::npos)
                found = true;
        CHECK(found);
    }
    SUBCASE("broken homomorphism is reported") {
        CatalogEntry e = nilpotent_primary();
        const auto& m = *e.morphism;
        auto Lambda = m.Lambda();
        Lambda[0] = Lambda[0] * Scalar(2);
        ExtrinsicMorphism bad(m.pair(), m.space(), Lambda, m.tau());
        bool found = false;
        for (const auto& s : bad.validate())
            if (s.find("homomorphism") != std::string::npos) found = true;
        CHECK(found);
    }
}

TEST_CASE("a_map") {
    SUBCASE("flat morphism has empty A-map") {
        CHECK(a_map(*flat_affine(2).morphism).values.empty());
    }
    SUBCASE("parabola values") {
        AMap A = a_map(*parabola_flat().morphism);
        REQUIRE(A.values.size() == 2);
        CHECK(A.values[0].is_zero()); // A(b1) = 0
        CHECK(A.values[1] == Matrix::from_rows({{0, 0}, {-1, 0}}));
    }
    SUBCASE("k-equivariance on nilpotent_primary") {
        const auto& m = *nilpotent_primary().morphism;
        CHECK(a_map_equivariant(m, a_map(m)));
    }
}

TEST_CASE("curvature via the A-map") {
    SUBCASE("flat and parabola give the zero bivector") {
        CHECK(curvature_via_A(*flat_affine(1).morphism).rank() == 0);
        // A-map is nonzero here, yet every wedge term dies
        CHECK(curvature_via_A(*parabola_flat().morphism).rank() == 0);
    }
    SUBCASE("nilpotent_primary reproduces the pair curvature exactly") {
        CatalogEntry e = nilpotent_primary();
        const auto& m = *e.morphism;
        SymplecticSpace ps = m.pair().p_space();
        CurvatureBivector via_A = curvature_via_A(m);
        CHECK(bivector_expand(ps, via_A) == curvature(m.pair()));
        CurvatureBivector solved = bivector_solve(ps, curvature(m.pair()));
        CHECK(bivector_expand(ps, solved) == bivector_expand(ps, via_A));
    }
}

TEST_CASE("fullness") {
    SUBCASE("flat affine is full with all criteria vacuous") {
        FullnessReport r = fullness(*flat_affine(1).morphism);
        CHECK(r.is_full);
        CHECK(r.witness.dim() == 2);
    }
    SUBCASE("parabola is not full, witness W1 + span{b1}") {
        FullnessReport r = fullness(*parabola_flat().morphism);
        CHECK(!r.is_full);
        CHECK(!r.c1_minimal_stable);
        CHECK(!r.c2_dim_matches_srk);
        CHECK(!r.c3_A_injective);
        CHECK(!r.c4_span_condition);
        Matrix w(4, 3);
        w.at(0, 0) = 1;
        w.at(1, 1) = 1;
        w.at(2, 2) = 1; // span{a1, a2, b1}
        CHECK(r.witness == Subspace(4, w));
        // ker A = span{b1}
        AMap A = a_map(*parabola_flat().morphism);
        CHECK(A.values[0].is_zero());
    }
    SUBCASE("nilpotent_primary is full") {
        CHECK(fullness(*nilpotent_primary().morphism).is_full);
    }
}

TEST_CASE("reduce_to_full") {
    SUBCASE("parabola reduces exactly to the flat affine embedding") {
        ReductionResult r = reduce_to_full(*parabola_flat().morphism);
        CHECK(r.quotient.null.dim() == 1);
        CHECK(r.reduced.space().dim() == 2);
        CHECK(r.reduced.tau() == Matrix::identity(2));
        for (const auto& L : r.reduced.Lambda()) CHECK(L.is_zero());
        // bit-equal to the catalog flat entry
        CHECK(r.reduced == *flat_affine(1).morphism);
    }
    SUBCASE("reducing a full morphism is an equivalence") {
        const auto& m = *nilpotent_primary().morphism;
        ReductionResult r = reduce_to_full(m);
        CHECK(r.quotient.null.dim() == 0);
        EquivalenceWitness w = affine_equivalence(r.reduced, m);
        CHECK(rank(w.iota) == m.space().dim());
    }
    SUBCASE("padding and reducing recovers the original up to equivalence") {
        CatalogEntry e = nilpotent_primary();
        ExtrinsicMorphism padded = random_morphism(5, e, 1);
        CHECK(!fullness(padded).is_full);
        ReductionResult r = reduce_to_full(padded);
        CHECK(r.reduced.space().dim() == e.morphism->space().dim());
        affine_equivalence(r.reduced, *e.morphism); // throws on failure
        // intrinsic data is preserved exactly
        CHECK(r.reduced.pair() == e.pair);
    }
}

TEST_CASE("affine equivalence") {
    SUBCASE("identity witness") {
        const auto& m = *nilpotent_primary().morphism;
        EquivalenceWitness w = affine_equivalence(m, m);
        CHECK(w.iota == Matrix::identity(m.space().dim()));
    }
    SUBCASE("conjugation by a block symplectic map is recovered") {
        const auto& m = *nilpotent_primary().morphism;
        // g = Id on W1 (+) g2 on W2 = span{e5, e6}, g2 in SL2
        Matrix g = Matrix::identity(6);
        g.at(4, 4) = 1;
        g.at(4, 5) = 2;
        g.at(5, 5) = 1;
        REQUIRE(is_symplectic_linear(m.space(), g));
        ExtrinsicMorphism m2 = conjugate(m, g);
        CHECK(m2.validate().empty());
        EquivalenceWitness w = affine_equivalence(m, m2);
        CHECK(w.iota == g);
    }
    SUBCASE("pair mismatch is refused") {
        CHECK_THROWS_AS(affine_equivalence(*flat_affine(1).morphism,
                                           *nilpotent_primary().morphism),
                        MathFailure);
    }
    SUBCASE("not-full inputs are refused") {
        CHECK_THROWS_AS(affine_equivalence(*parabola_flat().morphism,
                                           *parabola_flat().morphism),
                        MathFailure);
    }
}

TEST_CASE("ferus construction") {
    SUBCASE("alpha = 0 with no normal block is the flat affine embedding") {
        FundamentalFormData data{SymplecticSpace::standard(2), SymplecticSpace::standard(0),
                                 std::vector<Matrix>(4, Matrix(0, 1))};
        auto out = ferus_construct(data);
        auto* ok = std::get_if<FerusResult>(&out);
        REQUIRE(ok != nullptr);
        CHECK(ok->morphism == *flat_affine(1).morphism);
    }
    SUBCASE("alpha = 0 with a normal block is valid but not full") {
        FundamentalFormData data{SymplecticSpace::standard(2), SymplecticSpace::standard(2),
                                 std::vector<Matrix>(4, Matrix(2, 1))};
        auto out = ferus_construct(data);
        auto* ok = std::get_if<FerusResult>(&out);
        REQUIRE(ok != nullptr);
        CHECK(ok->morphism.validate().empty());
        CHECK(!fullness(ok->morphism).is_full);
        ReductionResult r = reduce_to_full(ok->morphism);
        CHECK(r.reduced.space().dim() == 2);
    }
    SUBCASE("parabola data reproduces the pinned matrices") {
        FundamentalFormData data{SymplecticSpace::standard(2), SymplecticSpace::standard(2),
                                 std::vector<Matrix>(4, Matrix(2, 1))};
        data.alpha[0] = Matrix::basis_vector(2, 0); // alpha(x1,x1) = b1
        auto out = ferus_construct(data);
        auto* ok = std::get_if<FerusResult>(&out);
        REQUIRE(ok != nullptr);
        CHECK(ok->morphism == *parabola_flat().morphism);
        CHECK(ok->pair == parabola_flat().pair);
    }
    SUBCASE("asymmetric alpha is rejected at the precondition") {
        FundamentalFormData data{SymplecticSpace::standard(2), SymplecticSpace::standard(2),
                                 std::vector<Matrix>(4, Matrix(2, 1))};
        data.alpha[0 * 2 + 1] = Matrix::basis_vector(2, 0); // alpha(x1,x2) only
        CHECK_THROWS_AS(ferus_construct(data), std::invalid_argument);
    }
    SUBCASE("a non-closing alpha yields a categorized ClosureFailure") {
        // all-ones alpha on (2,2) does not close
        FundamentalFormData data{SymplecticSpace::standard(2), SymplecticSpace::standard(2),
                                 std::vector<Matrix>(4, Matrix(2, 1))};
        for (auto& v : data.alpha) {
            v.at(0, 0) = 1;
            v.at(1, 0) = 1;
        }
        auto out = ferus_construct(data);
        auto* fail = std::get_if<ClosureFailure>(&out);
        REQUIRE(fail != nullptr);
        CHECK(std::string(to_string(fail->kind)).size() > 0);
    }
    SUBCASE("the constructed morphism reproduces its input data") {
        // a_map of the nilpotent_primary morphism equals its shape operators,
        // and Lambda(x) tau(y) reproduces alpha
        CatalogEntry e = nilpotent_primary();
        const auto& m = *e.morphism;
        AMap A = a_map(m);
        std::size_t d1 = 4;
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) {
                // alpha(x_i, x_j) = W2 block of Lambda(x_i) tau(x_j)
                Matrix v = m.Lambda()[1 + i] * m.tau_p().col(j); // dim_k = 1
                Matrix w2part = v.block(d1, 0, 2, 1);
                Matrix w1part = v.block(0, 0, d1, 1);
                CHECK(w1part.is_zero());
                // A(xi) x_i reproduces the W1 action: tau(A(xi) x) = Lambda(x) xi
                (void)w2part;
            }
        for (std::size_t e2 = 0; e2 < A.values.size(); ++e2) {
            Matrix xi = A.w2.basis().col(e2);
            for (std::size_t i = 0; i < d1; ++i) {
                Matrix lhs = m.tau_p() * (A.values[e2] * Matrix::basis_vector(d1, i));
                Matrix rhs = m.Lambda()[1 + i] * xi;
                CHECK(lhs == rhs);
            }
        }
    }
}
