#include "ess/symmetric_pair.hpp"
#include "ess/catalog.hpp"
#include "ess/errors.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace ess;
using namespace ess::testing;

namespace {

SymplecticSymmetricPair abelian_pair(std::size_t dim_p) {
    return {SymmetricPair{LieAlgebra::abelian(dim_p), 0, dim_p},
            SymplecticSpace::standard(dim_p).gram()};
}

} // namespace

TEST_CASE("pair validation") {
    CHECK(abelian_pair(4).validate().empty());

    SUBCASE("grading violation is reported") {
        // dim_k = 1, dim_p = 2, but [k, p1] = k escapes the p block
        std::vector<Matrix> t(9, Matrix(3, 1));
        t[0 * 3 + 1] = Matrix::basis_vector(3, 0);
        t[1 * 3 + 0] = -Matrix::basis_vector(3, 0);
        SymplecticSymmetricPair P{SymmetricPair{LieAlgebra(3, t), 1, 2},
                                  SymplecticSpace::standard(2).gram()};
        bool found = false;
        for (const auto& s : P.validate())
            if (s.find("grading") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("odd dim_p is rejected") {
        SymplecticSymmetricPair P{SymmetricPair{LieAlgebra::abelian(3), 0, 3}, Matrix(3, 3)};
        CHECK(!P.validate().empty());
    }
    SUBCASE("omega invariance") {
        // nilpotent_primary's omega scaled asymmetrically breaks invariance
        CatalogEntry e = nilpotent_primary();
        SymplecticSymmetricPair P = e.pair;
        P.omega.at(0, 1) += 1;
        P.omega.at(1, 0) -= 1;
        CHECK(!P.validate().empty());
    }
}

TEST_CASE("curvature") {
    SUBCASE("abelian pairs are flat") {
        CurvatureOperator R = curvature(abelian_pair(4));
        for (const auto& m : R.table) CHECK(m.is_zero());
        CHECK(curvature(parabola_flat().pair) == CurvatureOperator::zero(2));
    }
    SUBCASE("nilpotent_primary has nonzero curvature matching raw brackets") {
        CatalogEntry e = nilpotent_primary();
        CurvatureOperator R = curvature(e.pair);
        bool nonzero = false;
        for (const auto& m : R.table) nonzero |= !m.is_zero();
        CHECK(nonzero);
        // independent route: R(x_i,x_j) x_l = -[[x_i,x_j], x_l] via raw table
        const LieAlgebra& g = e.pair.pair.algebra;
        std::size_t dk = e.pair.pair.dim_k, dp = e.pair.pair.dim_p;
        for (std::size_t i = 0; i < dp; ++i)
            for (std::size_t j = 0; j < dp; ++j)
                for (std::size_t l = 0; l < dp; ++l) {
                    Matrix br = g.bracket(g.bracket_basis(dk + i, dk + j),
                                          Matrix::basis_vector(g.dim(), dk + l));
                    Matrix expect = -br.block(dk, 0, dp, 1);
                    CHECK(R.at(i, j).col(l) == expect);
                }
        CHECK(curvature_equivariant(e.pair, R));
    }
}

TEST_CASE("bianchi") {
    CHECK(bianchi_check(CurvatureOperator::zero(4)));
    CHECK(bianchi_check(curvature(parabola_flat().pair)));
    CHECK(bianchi_check(curvature(nilpotent_primary().pair)));

    // an antisymmetric table that is not a curvature
    SymplecticSpace p4 = SymplecticSpace::standard(4);
    CurvatureOperator bad = CurvatureOperator::zero(4);
    Matrix c = circ(p4, Matrix::basis_vector(4, 0), Matrix::basis_vector(4, 0));
    bad.at(0, 1) = c;
    bad.at(1, 0) = -c;
    CHECK(!bianchi_check(bad));
    CHECK_THROWS_AS(bivector_solve(p4, bad), MathFailure);
}

TEST_CASE("bivector expand") {
    SymplecticSpace p4 = SymplecticSpace::standard(4);
    SUBCASE("empty presentation expands to zero") {
        CurvatureBivector zero{{}, Matrix(0, 0)};
        CHECK(bivector_expand(p4, zero) == CurvatureOperator::zero(4));
    }
    SUBCASE("single wedge matches the hand formula") {
        Lcg rng(31);
        for (int it = 0; it < 10; ++it) {
            Matrix A = rand_sp(rng, p4), B = rand_sp(rng, p4);
            Matrix coeffs = Matrix::from_rows({{0, 1}, {-1, 0}});
            CurvatureOperator R = bivector_expand(p4, {{A, B}, coeffs});
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t l = 0; l < 4; ++l) {
                    Matrix expect = circ(p4, A.col(k), B.col(l)) - circ(p4, A.col(l), B.col(k));
                    CHECK(R.at(k, l) == expect);
                }
            CHECK(bianchi_check(R));
        }
    }
    SUBCASE("factor outside sp is rejected") {
        CurvatureBivector bad{{Matrix::identity(4), Matrix(4, 4)},
                              Matrix::from_rows({{0, 1}, {-1, 0}})};
        CHECK_THROWS_AS(bivector_expand(p4, bad), std::invalid_argument);
    }
}

TEST_CASE("bivector solve round-trips") {
    SUBCASE("flat pairs give the empty presentation") {
        CurvatureBivector b = bivector_solve(SymplecticSpace::standard(2),
                                             curvature(parabola_flat().pair));
        CHECK(b.rank() == 0);
    }
    SUBCASE("solve then expand is the identity on curvatures") {
        CatalogEntry e = nilpotent_primary();
        SymplecticSpace ps = e.pair.p_space();
        CurvatureOperator R = curvature(e.pair);
        CurvatureBivector b = bivector_solve(ps, R);
        CHECK(bivector_expand(ps, b) == R);
        CHECK(b.rank() == 2);
        CHECK(rank(b.coeffs) == b.rank()); // minimal: invertible coefficients
        Matrix factors(16, b.factors.size());
        for (std::size_t j = 0; j < b.factors.size(); ++j)
            factors.set_col(j, b.factors[j].flatten());
        CHECK(rank(factors) == b.factors.size()); // independent factors
    }
    SUBCASE("random wedge combinations round-trip") {
        SymplecticSpace p2 = SymplecticSpace::standard(2);
        Lcg rng(37);
        for (int it = 0; it < 10; ++it) {
            Matrix A = rand_sp(rng, p2), B = rand_sp(rng, p2);
            Matrix coeffs = Matrix::from_rows({{0, 1}, {-1, 0}});
            CurvatureOperator R = bivector_expand(p2, {{A, B}, coeffs});
            CurvatureBivector solved = bivector_solve(p2, R);
            CHECK(bivector_expand(p2, solved) == R);
        }
    }
}

TEST_CASE("srk") {
    CHECK(srk(abelian_pair(2)) == 0);
    CHECK(srk(parabola_flat().pair) == 0);
    CatalogEntry e = nilpotent_primary();
    CHECK(srk(e.pair) == 2);
    CHECK(srk(e.pair) == e.morphism->w2().dim());

    SUBCASE("invariance under p-basis changes") {
        Lcg rng(41);
        for (int it = 0; it < 5; ++it) {
            std::size_t d = e.pair.pair.dim_p;
            Matrix T = rand_matrix(rng, d, d);
            while (rank(T) < d) T = rand_matrix(rng, d, d);
            SymplecticSymmetricPair moved = change_p_basis(e.pair, T);
            CHECK(moved.validate().empty());
            CHECK(srk(moved) == 2);
        }
    }
}

TEST_CASE("kappa solve and the existence criterion") {
    SUBCASE("flat pair: empty table, trivially admissible") {
        SymplecticSymmetricPair P = abelian_pair(2);
        CurvatureBivector b = bivector_solve(P.p_space(), curvature(P));
        auto K = kappa_solve({}, b);
        REQUIRE(K.has_value());
        CHECK(K->nfactors == 0);
        CHECK(admits_extrinsic(P, b, *K));
    }
    SUBCASE("nilpotent_primary admits its extrinsic realization") {
        CatalogEntry e = nilpotent_primary();
        SymplecticSymmetricPair P = e.pair;
        CurvatureBivector b = bivector_solve(P.p_space(), curvature(P));
        std::vector<Matrix> ad;
        for (std::size_t a = 0; a < P.pair.dim_k; ++a)
            ad.push_back(P.pair.ad_p(Matrix::basis_vector(P.pair.dim_k, a)));
        auto K = kappa_solve(ad, b);
        REQUIRE(K.has_value());
        CHECK(admits_extrinsic(P, b, *K));

        SUBCASE("scaling omega breaks the criterion with kappa unchanged") {
            SymplecticSymmetricPair scaled = P;
            scaled.omega = P.omega * Scalar(2);
            CHECK(!admits_extrinsic(scaled, b, *K));
        }
        SUBCASE("perturbed ad action loses solvability") {
            std::vector<Matrix> bad = ad;
            bad[0].at(0, 0) += 1;
            auto K2 = kappa_solve(bad, b);
            CHECK(!K2.has_value());
        }
    }
}
