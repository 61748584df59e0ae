#include "ess/lie.hpp"
#include "ess/catalog.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace ess;
using namespace ess::testing;

namespace {

LieAlgebra heisenberg() {
    // [x, y] = z
    std::vector<Matrix> t(9, Matrix(3, 1));
    t[0 * 3 + 1] = Matrix::basis_vector(3, 2);
    t[1 * 3 + 0] = -Matrix::basis_vector(3, 2);
    return LieAlgebra(3, t);
}

} // namespace

TEST_CASE("jacobi check") {
    CHECK(LieAlgebra::abelian(4).jacobi_violations().empty());
    CHECK(heisenberg().jacobi_violations().empty());
    CHECK(heisenberg().is_valid());

    // perturb: additionally [x, z] = x
    std::vector<Matrix> t(9, Matrix(3, 1));
    t[0 * 3 + 1] = Matrix::basis_vector(3, 2);
    t[1 * 3 + 0] = -Matrix::basis_vector(3, 2);
    t[0 * 3 + 2] = Matrix::basis_vector(3, 0);
    t[2 * 3 + 0] = -Matrix::basis_vector(3, 0);
    LieAlgebra bad(3, t);
    auto v = bad.jacobi_violations();
    REQUIRE(!v.empty());
    CHECK(v.front() == std::array<std::size_t, 3>{0, 1, 2});
}

TEST_CASE("asp bracket") {
    Matrix z4(4, 4);
    AspElement t1{z4, Matrix::basis_vector(4, 0)}, t2{z4, Matrix::basis_vector(4, 2)};
    AspElement br = asp_bracket(t1, t2);
    CHECK(br.linear_part.is_zero());
    CHECK(br.translation_part.is_zero()); // translations commute

    SymplecticSpace V = SymplecticSpace::standard(4);
    Lcg rng(23);
    Matrix A = rand_sp(rng, V);
    Matrix w = rand_vector(rng, 4);
    AspElement lin{A, Matrix(4, 1)}, tr{z4, w};
    CHECK(asp_bracket(lin, tr).translation_part == A * w);

    for (int it = 0; it < 15; ++it) {
        AspElement a{rand_sp(rng, V), rand_vector(rng, 4)};
        AspElement b{rand_sp(rng, V), rand_vector(rng, 4)};
        AspElement c{rand_sp(rng, V), rand_vector(rng, 4)};
        AspElement ab = asp_bracket(a, b), ba = asp_bracket(b, a);
        CHECK(ab.linear_part == -ba.linear_part);
        CHECK(ab.translation_part == -ba.translation_part);
        // Jacobi
        AspElement j1 = asp_bracket(a, asp_bracket(b, c));
        AspElement j2 = asp_bracket(b, asp_bracket(c, a));
        AspElement j3 = asp_bracket(c, asp_bracket(a, b));
        CHECK((j1.linear_part + j2.linear_part + j3.linear_part).is_zero());
        CHECK((j1.translation_part + j2.translation_part + j3.translation_part).is_zero());
    }
}

TEST_CASE("asp bracket on the parabola generators vanishes") {
    CatalogEntry p = parabola_flat();
    const auto& m = *p.morphism;
    AspElement a{m.Lambda()[0], m.tau().col(0)};
    AspElement b{m.Lambda()[1], m.tau().col(1)};
    AspElement br = asp_bracket(a, b);
    CHECK(br.linear_part.is_zero());
    CHECK(br.translation_part.is_zero());
}

TEST_CASE("closure") {
    SUBCASE("sl2 from {E, F}") {
        SymplecticSpace V = SymplecticSpace::standard(2);
        AspElement E{Matrix::from_rows({{0, 1}, {0, 0}}), Matrix(2, 1)};
        AspElement F{Matrix::from_rows({{0, 0}, {1, 0}}), Matrix(2, 1)};
        auto basis = asp_closure(2, {E, F});
        CHECK(basis.size() == 3);
        for (const auto& b : basis) CHECK(sp_membership(V, b.linear_part));
    }
    SUBCASE("already closed span stays put") {
        Matrix z2(2, 2);
        AspElement t1{z2, Matrix::basis_vector(2, 0)}, t2{z2, Matrix::basis_vector(2, 1)};
        auto basis = asp_closure(2, {t1, t2});
        CHECK(basis.size() == 2);
    }
    SUBCASE("parabola generators close to a 2-dimensional abelian span") {
        CatalogEntry p = parabola_flat();
        const auto& m = *p.morphism;
        AspElement a{m.Lambda()[0], m.tau().col(0)};
        AspElement b{m.Lambda()[1], m.tau().col(1)};
        auto basis = asp_closure(4, {a, b});
        CHECK(basis.size() == 2);
    }
    SUBCASE("output independent of generator order") {
        SymplecticSpace V = SymplecticSpace::standard(4);
        Lcg rng(29);
        for (int it = 0; it < 10; ++it) {
            AspElement a{rand_sp(rng, V), rand_vector(rng, 4)};
            AspElement b{rand_sp(rng, V), rand_vector(rng, 4)};
            auto b1 = asp_closure(4, {a, b});
            auto b2 = asp_closure(4, {b, a});
            REQUIRE(b1.size() == b2.size());
            // canonical bases of the same span coincide
            for (std::size_t i = 0; i < b1.size(); ++i) CHECK(b1[i] == b2[i]);
        }
    }
}

TEST_CASE("homomorphism check") {
    LieAlgebra h = heisenberg();
    FlatBracket target = [&](const Matrix& x, const Matrix& y) { return h.bracket(x, y); };
    CHECK(is_homomorphism({h, Matrix(3, 3)}, target));
    CHECK(is_homomorphism({h, Matrix::identity(3)}, target));
    // swapping x and z is not a homomorphism
    Matrix swap(3, 3);
    swap.at(0, 2) = 1;
    swap.at(2, 0) = 1;
    swap.at(1, 1) = 1;
    CHECK(!is_homomorphism({h, swap}, target));

    // the validated d-iota of the parabola morphism, into asp(V, Omega)
    CatalogEntry p = parabola_flat();
    const auto& m = *p.morphism;
    Matrix dio(4 * 4 + 4, 2);
    for (std::size_t j = 0; j < 2; ++j)
        dio.set_col(j, asp_flatten({m.Lambda()[j], m.tau().col(j)}));
    FlatBracket asp = [](const Matrix& x, const Matrix& y) {
        return asp_flatten(asp_bracket(asp_unflatten(4, x), asp_unflatten(4, y)));
    };
    CHECK(is_homomorphism({m.pair().pair.algebra, dio}, asp));
}
