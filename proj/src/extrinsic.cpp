#include "ess/extrinsic.hpp"

#include "ess/errors.hpp"

#include <sstream>

namespace ess {

namespace {

void require_valid(const ExtrinsicMorphism& m, const char* op) {
    auto v = m.validate();
    if (!v.empty())
        throw MathFailure("InvalidMorphism", std::string(op) + ": " + v.front());
}

Matrix flatten_cols(const std::vector<Matrix>& mats, std::size_t flat_rows) {
    Matrix out(flat_rows, mats.size());
    for (std::size_t j = 0; j < mats.size(); ++j) out.set_col(j, mats[j].flatten());
    return out;
}

} // namespace

ExtrinsicMorphism::ExtrinsicMorphism(SymplecticSymmetricPair pair, SymplecticSpace space,
                                     std::vector<Matrix> Lambda, Matrix tau)
    : pair_(std::move(pair)),
      space_(std::move(space)),
      Lambda_(std::move(Lambda)),
      tau_(std::move(tau)),
      w1_(Subspace::zero(space_.dim())),
      w2_(Subspace::zero(space_.dim())) {
    std::size_t n = pair_.pair.algebra.dim();
    std::size_t D = space_.dim();
    if (Lambda_.size() != n) throw std::invalid_argument("Lambda needs one matrix per g basis vector");
    for (const Matrix& L : Lambda_)
        if (L.rows() != D || L.cols() != D) throw std::invalid_argument("Lambda entry shape mismatch");
    if (tau_.rows() != D || tau_.cols() != n) throw std::invalid_argument("tau shape mismatch");
    w1_ = Subspace(D, tau_p());
    w2_ = omega_complement(space_, w1_);
}

Matrix ExtrinsicMorphism::tau_p() const {
    return tau_.block(0, pair_.pair.dim_k, space_.dim(), pair_.pair.dim_p);
}

std::vector<std::string> ExtrinsicMorphism::validate() const {
    std::vector<std::string> bad;
    for (const std::string& s : pair_.validate()) bad.push_back("pair: " + s);
    std::size_t n = pair_.pair.algebra.dim();
    std::size_t dk = pair_.pair.dim_k, dp = pair_.pair.dim_p;

    for (std::size_t i = 0; i < n; ++i)
        if (!sp_membership(space_, Lambda_[i])) {
            std::ostringstream os;
            os << "Lambda[" << i << "] not in sp(V, Omega)";
            bad.push_back(os.str());
        }

    // d-iota = Lambda + tau is a homomorphism into asp(V, Omega)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            AspElement lhs = asp_bracket({Lambda_[i], tau_.col(i)}, {Lambda_[j], tau_.col(j)});
            Matrix c = pair_.pair.algebra.bracket_basis(i, j);
            Matrix lin(space_.dim(), space_.dim());
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(c.at(k, 0)) != 0) lin = lin + Lambda_[k] * c.at(k, 0);
            AspElement rhs{lin, tau_ * c};
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "d-iota is not a homomorphism at basis pair (" << i << "," << j << ")";
                bad.push_back(os.str());
            }
        }

    for (std::size_t a = 0; a < dk; ++a)
        if (!tau_.col(a).is_zero()) {
            std::ostringstream os;
            os << "tau does not vanish on k basis vector " << a;
            bad.push_back(os.str());
        }
    if (rank(tau_p()) != dp) bad.push_back("tau restricted to p is not injective");
    if (!is_nondegenerate(space_, w1_))
        bad.push_back("Omega restricted to W1 = tau(p) is degenerate");

    auto maps_into = [&](const Matrix& L, const Subspace& from, const Subspace& to) {
        for (std::size_t j = 0; j < from.dim(); ++j)
            if (!to.contains(L * from.basis().col(j))) return false;
        return true;
    };
    for (std::size_t a = 0; a < dk; ++a) {
        if (!maps_into(Lambda_[a], w1_, w1_)) {
            std::ostringstream os;
            os << "Lambda(k_" << a << ") does not preserve W1";
            bad.push_back(os.str());
        }
        if (!maps_into(Lambda_[a], w2_, w2_)) {
            std::ostringstream os;
            os << "Lambda(k_" << a << ") does not preserve W2";
            bad.push_back(os.str());
        }
    }
    for (std::size_t i = 0; i < dp; ++i) {
        if (!maps_into(Lambda_[dk + i], w1_, w2_)) {
            std::ostringstream os;
            os << "Lambda(p_" << i << ") does not map W1 into W2";
            bad.push_back(os.str());
        }
        if (!maps_into(Lambda_[dk + i], w2_, w1_)) {
            std::ostringstream os;
            os << "Lambda(p_" << i << ") does not map W2 into W1";
            bad.push_back(os.str());
        }
    }

    Matrix tp = tau_p();
    if (tp.transpose() * space_.gram() * tp != pair_.omega)
        bad.push_back("tau^*(Omega) differs from omega");
    return bad;
}

Matrix AMap::apply(const Matrix& xi) const {
    auto c = w2.coordinates(xi);
    if (!c) throw std::invalid_argument("A-map argument not in W2");
    std::size_t d = values.empty() ? 0 : values[0].rows();
    Matrix out(d, d);
    for (std::size_t e = 0; e < values.size(); ++e)
        if (sgn(c->at(e, 0)) != 0) out = out + values[e] * c->at(e, 0);
    return out;
}

AMap a_map(const ExtrinsicMorphism& m) {
    require_valid(m, "a_map");
    std::size_t dk = m.pair().pair.dim_k, dp = m.pair().pair.dim_p;
    Matrix tp = m.tau_p();
    AMap out{m.w2(), {}};
    for (std::size_t e = 0; e < m.w2().dim(); ++e) {
        Matrix xi = m.w2().basis().col(e);
        Matrix rhs(m.space().dim(), dp);
        for (std::size_t i = 0; i < dp; ++i) rhs.set_col(i, m.Lambda()[dk + i] * xi);
        auto X = solve(tp, rhs);
        internal_check(X.has_value(), "Lambda(p) W2 escaped W1 = im(tau|p)");
        internal_check(sp_membership(m.pair().p_space(), *X),
                       "A-map value not in sp(p, omega)");
        out.values.push_back(*X);
    }
    return out;
}

CurvatureBivector curvature_via_A(const ExtrinsicMorphism& m) {
    AMap A = a_map(m);
    Matrix gw2 = restricted_gram(m.space(), m.w2());
    auto inv = inverse(gw2);
    internal_check(inv.has_value(), "Omega restricted to W2 is degenerate");
    return minimal_bivector(m.pair().p_space(), A.values, *inv);
}

FullnessReport fullness(const ExtrinsicMorphism& m) {
    require_valid(m, "fullness");
    std::size_t dk = m.pair().pair.dim_k, dp = m.pair().pair.dim_p;
    std::size_t D = m.space().dim();

    // W2' = span{Lambda(x) tau(y) : x, y in p}
    Matrix spanw(D, dp * dp);
    Matrix tp = m.tau_p();
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < dp; ++j)
            spanw.set_col(i * dp + j, m.Lambda()[dk + i] * tp.col(j));
    Subspace w2p(D, spanw);
    internal_check(m.w2().contains(w2p), "W2' escaped W2");
    Subspace vprime = sum(m.w1(), w2p);

    // the paper's proof shows this span is d-iota(g)-stable; assert it
    for (std::size_t b = 0; b < m.Lambda().size(); ++b) {
        if (!vprime.contains(m.tau().col(b)))
            throw InternalError("tau(g) escaped the minimal stable subspace");
        for (std::size_t j = 0; j < vprime.dim(); ++j)
            if (!vprime.contains(m.Lambda()[b] * vprime.basis().col(j)))
                throw InternalError("minimal stable subspace is not Lambda-stable");
    }

    FullnessReport rep{false, false, false, false, false, vprime};
    rep.c1_minimal_stable = vprime.dim() == D;
    rep.c2_dim_matches_srk = m.w2().dim() == srk(m.pair());
    std::size_t w2d = m.w2().dim();
    if (w2d == 0) {
        rep.c3_A_injective = true;
    } else {
        AMap A = a_map(m);
        Matrix stacked = flatten_cols(A.values, dp * dp);
        rep.c3_A_injective = kernel(stacked).cols() == 0;
    }
    rep.c4_span_condition = w2p == m.w2();

    internal_check(rep.c1_minimal_stable == rep.c2_dim_matches_srk &&
                       rep.c2_dim_matches_srk == rep.c3_A_injective &&
                       rep.c3_A_injective == rep.c4_span_condition,
                   "the four fullness criteria disagree");
    rep.is_full = rep.c1_minimal_stable;
    return rep;
}

ReductionResult reduce_to_full(const ExtrinsicMorphism& m) {
    require_valid(m, "reduce_to_full");
    FullnessReport rep = fullness(m);
    const Subspace& vprime = rep.witness;
    QuotientPresentation q = symplectic_quotient(m.space(), vprime);

    // Lambda(g) N in N: needed for Lambda_0 to be well defined on the quotient
    for (const Matrix& L : m.Lambda())
        for (std::size_t j = 0; j < q.null.dim(); ++j)
            internal_check(q.null.contains(L * q.null.basis().col(j)),
                           "Lambda does not preserve the radical N");

    std::size_t n = m.pair().pair.algebra.dim();
    Matrix sec = q.section_ambient();
    std::vector<Matrix> Lambda0;
    for (std::size_t b = 0; b < n; ++b) {
        Matrix img = m.Lambda()[b] * sec; // columns in V' by stability
        auto coords = solve(vprime.basis(), img);
        internal_check(coords.has_value(), "Lambda image left V'");
        Lambda0.push_back(q.projection * *coords);
    }
    auto tau_coords = solve(vprime.basis(), m.tau());
    internal_check(tau_coords.has_value(), "tau image left V'");
    Matrix tau0 = q.projection * *tau_coords;

    ExtrinsicMorphism reduced(m.pair(), q.reduced, std::move(Lambda0), std::move(tau0));
    auto violations = reduced.validate();
    internal_check(violations.empty(),
                   "reduced morphism fails validation: " +
                       (violations.empty() ? std::string() : violations.front()));
    internal_check(fullness(reduced).is_full, "reduced morphism is not full");
    return ReductionResult{std::move(reduced), std::move(q)};
}

EquivalenceWitness affine_equivalence(const ExtrinsicMorphism& m1, const ExtrinsicMorphism& m2) {
    require_valid(m1, "affine_equivalence");
    require_valid(m2, "affine_equivalence");
    if (!(m1.pair() == m2.pair()))
        throw MathFailure("PairMismatch", "the morphisms realize different pairs");
    {
        Matrix f1 = m1.tau_p().transpose() * m1.space().gram() * m1.tau_p();
        Matrix f2 = m2.tau_p().transpose() * m2.space().gram() * m2.tau_p();
        if (f1 != f2)
            throw MathFailure("FormMismatch", "tau_1^*(Omega_1) != tau_2^*(Omega_2)");
    }
    if (!fullness(m1).is_full) throw MathFailure("NotFull", "first morphism is not full");
    if (!fullness(m2).is_full) throw MathFailure("NotFull", "second morphism is not full");

    std::size_t dp = m1.pair().pair.dim_p;
    // iota_1 = tau_2 tau_1^{-1} on W1
    Matrix w1cols(m2.space().dim(), m1.w1().dim());
    {
        auto pre = solve(m1.tau_p(), m1.w1().basis());
        internal_check(pre.has_value(), "W1 basis escaped im(tau|p)");
        w1cols = m2.tau_p() * *pre;
    }
    // iota_2 = A_2^{-1} A_1 on W2
    AMap A1 = a_map(m1), A2 = a_map(m2);
    Matrix stacked2 = flatten_cols(A2.values, dp * dp);
    Matrix w2cols(m2.space().dim(), m1.w2().dim());
    for (std::size_t e = 0; e < m1.w2().dim(); ++e) {
        auto eta = solve(stacked2, A1.values[e].flatten());
        internal_check(eta.has_value(), "A-map images do not coincide");
        w2cols.set_col(e, m2.w2().basis() * *eta);
    }
    Matrix P1 = Matrix::hcat(m1.w1().basis(), m1.w2().basis());
    Matrix images = Matrix::hcat(w1cols, w2cols);
    auto P1inv = inverse(P1);
    internal_check(P1inv.has_value(), "W1 (+) W2 is not all of V");
    Matrix iota = images * *P1inv;

    internal_check(iota.transpose() * m2.space().gram() * iota == m1.space().gram(),
                   "equivalence witness is not symplectic");
    internal_check(m2.tau() == iota * m1.tau(), "equivalence witness does not intertwine tau");
    for (std::size_t b = 0; b < m1.Lambda().size(); ++b)
        internal_check(m2.Lambda()[b] * iota == iota * m1.Lambda()[b],
                       "equivalence witness does not intertwine Lambda");
    return EquivalenceWitness{iota};
}

bool FundamentalFormData::is_symmetric() const {
    std::size_t d1 = w1space.dim();
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = i + 1; j < d1; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

const char* to_string(ClosureFailure::Kind k) {
    switch (k) {
        case ClosureFailure::Kind::NonClosingK: return "NonClosingK";
        case ClosureFailure::Kind::GradingViolation: return "GradingViolation";
        case ClosureFailure::Kind::HomomorphismFailure: return "HomomorphismFailure";
    }
    return "?";
}

std::variant<FerusResult, ClosureFailure> ferus_construct(const FundamentalFormData& data) {
    std::size_t d1 = data.w1space.dim(), d2 = data.w2space.dim();
    std::size_t D = d1 + d2;
    if (data.alpha.size() != d1 * d1) throw std::invalid_argument("alpha has wrong arity");
    for (const Matrix& v : data.alpha)
        if (v.rows() != d2 || v.cols() != 1) throw std::invalid_argument("alpha value shape");
    if (!data.is_symmetric()) throw std::invalid_argument("alpha is not symmetric");

    const Matrix& g1 = data.w1space.gram();
    const Matrix& g2 = data.w2space.gram();
    Matrix gram(D, D);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j) gram.at(i, j) = g1.at(i, j);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j) gram.at(d1 + i, d1 + j) = g2.at(i, j);
    SymplecticSpace V(D, gram);

    // shape operators: Omega(alpha(x,y), xi) = Omega(A_xi x, y) gives
    // A_e = -g1^{-1} L_e with L_e(i,j) = alpha_ij^T g2 e_e, symmetric.
    Matrix g1inv = *inverse(g1);
    std::vector<Matrix> A;
    for (std::size_t e = 0; e < d2; ++e) {
        Matrix L(d1, d1);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) {
                Matrix v = data.at(i, j).transpose() * g2;
                L.at(i, j) = v.at(0, e);
            }
        A.push_back(-(g1inv * L));
    }

    // Lambda(x_i)(y + xi) = A_xi x_i + alpha(x_i, y)
    std::vector<Matrix> Lam;
    for (std::size_t i = 0; i < d1; ++i) {
        Matrix M(D, D);
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t r = 0; r < d2; ++r) M.at(d1 + r, j) = data.at(i, j).at(r, 0);
        for (std::size_t e = 0; e < d2; ++e)
            for (std::size_t r = 0; r < d1; ++r) M.at(r, d1 + e) = A[e].at(r, i);
        Lam.push_back(M);
    }

    // k candidates: [Lambda_s + x_s, Lambda_t + x_t] = [Lambda_s, Lambda_t]
    // (translation parts cancel by the symmetry of alpha)
    std::vector<Matrix> kmats;
    for (std::size_t s = 0; s < d1; ++s)
        for (std::size_t t = s + 1; t < d1; ++t) {
            Matrix br = Lam[s] * Lam[t] - Lam[t] * Lam[s];
            Matrix tr = Lam[s] * Matrix::basis_vector(D, t) - Lam[t] * Matrix::basis_vector(D, s);
            internal_check(tr.is_zero(), "generator bracket has a translation part");
            kmats.push_back(br);
        }
    Subspace kspan(D * D, flatten_cols(kmats, D * D));
    std::size_t m = kspan.dim();
    auto kbasis_mat = [&](std::size_t a) {
        Matrix M(D, D);
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) M.at(i, j) = kspan.basis().at(i * D + j, a);
        return M;
    };

    // grading: [k, Lambda(x_i)] must equal Lambda(k x_i)
    for (std::size_t a = 0; a < m; ++a) {
        Matrix K = kbasis_mat(a);
        for (std::size_t i = 0; i < d1; ++i) {
            Matrix lhs = K * Lam[i] - Lam[i] * K;
            Matrix rhs(D, D);
            for (std::size_t j = 0; j < d1; ++j)
                if (sgn(K.at(j, i)) != 0) rhs = rhs + Lam[j] * K.at(j, i);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "[k, Lambda(x_" << i << ")] leaves span{Lambda(x) + x}";
                return ClosureFailure{ClosureFailure::Kind::GradingViolation, os.str()};
            }
        }
    }
    // k must close under brackets
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Matrix Ka = kbasis_mat(a), Kb = kbasis_mat(b);
            Matrix br = Ka * Kb - Kb * Ka;
            if (!kspan.contains(br.flatten())) {
                std::ostringstream os;
                os << "[k_" << a << ", k_" << b << "] escapes span{[p,p]}";
                return ClosureFailure{ClosureFailure::Kind::NonClosingK, os.str()};
            }
        }

    // assemble the abstract pair g = k (+) p
    std::size_t n = m + d1;
    std::vector<Matrix> table(n * n, Matrix(n, 1));
    auto set_entry = [&](std::size_t i, std::size_t j, const Matrix& v) {
        table[i * n + j] = v;
        table[j * n + i] = -v;
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Matrix br = kbasis_mat(a) * kbasis_mat(b) - kbasis_mat(b) * kbasis_mat(a);
            auto c = kspan.coordinates(br.flatten());
            internal_check(c.has_value(), "closed k bracket has no coordinates");
            Matrix v(n, 1);
            for (std::size_t r = 0; r < m; ++r) v.at(r, 0) = c->at(r, 0);
            set_entry(a, b, v);
        }
    for (std::size_t a = 0; a < m; ++a) {
        Matrix K = kbasis_mat(a);
        for (std::size_t i = 0; i < d1; ++i) {
            Matrix y = K * Matrix::basis_vector(D, i); // lies in the W1 block
            Matrix v(n, 1);
            for (std::size_t r = 0; r < d1; ++r) v.at(m + r, 0) = y.at(r, 0);
            for (std::size_t r = d1; r < D; ++r)
                internal_check(sgn(y.at(r, 0)) == 0, "k action left the W1 block");
            set_entry(a, m + i, v);
        }
    }
    {
        std::size_t idx = 0;
        for (std::size_t s = 0; s < d1; ++s)
            for (std::size_t t = s + 1; t < d1; ++t) {
                auto c = kspan.coordinates(kmats[idx++].flatten());
                internal_check(c.has_value(), "generator bracket not in k span");
                Matrix v(n, 1);
                for (std::size_t r = 0; r < m; ++r) v.at(r, 0) = c->at(r, 0);
                set_entry(m + s, m + t, v);
            }
    }

    SymplecticSymmetricPair pair{SymmetricPair{LieAlgebra(n, std::move(table)), m, d1}, g1};

    std::vector<Matrix> Lambda_full;
    for (std::size_t a = 0; a < m; ++a) Lambda_full.push_back(kbasis_mat(a));
    for (std::size_t i = 0; i < d1; ++i) Lambda_full.push_back(Lam[i]);
    Matrix tau(D, n);
    for (std::size_t i = 0; i < d1; ++i) tau.at(i, m + i) = 1;

    ExtrinsicMorphism morphism(pair, V, std::move(Lambda_full), std::move(tau));
    auto violations = morphism.validate();
    if (!violations.empty())
        return ClosureFailure{ClosureFailure::Kind::HomomorphismFailure, violations.front()};
    return FerusResult{std::move(pair), std::move(morphism)};
}

} // namespace ess
