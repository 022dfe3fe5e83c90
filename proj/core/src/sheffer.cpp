#include "umbral/sheffer.hpp"

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"
#include "umbral/evaluate.hpp"
#include "umbral/registry.hpp"

namespace umbral {

namespace {

TruncatedEGF reverted_minus_one(const Umbra& gamma) {
    if (gamma.order() >= 1 && (!gamma[1].is_constant() || gamma[1].is_zero()))
        throw NotInvertibleError("gamma must have a nonzero constant first moment");
    TruncatedEGF h = gamma.egf();
    h[0] = Poly();
    return egf_revert(h);
}

Umbra unity(unsigned order) { return builtin_umbra("u", order); }

Poly shift_x_by_y(const Poly& p) { return p.substitute(Var::X, Poly::x() + Poly::y()); }
Poly x_to_y(const Poly& p) { return p.substitute(Var::X, Poly::y()); }

} // namespace

ShefferPair::ShefferPair(Umbra a, Umbra g) : alpha(std::move(a)), gamma(std::move(g)) {
    if (alpha.order() != gamma.order())
        throw OrderMismatchError("Sheffer pair: alpha and gamma have different orders");
    if (gamma.order() >= 1 && (!gamma[1].is_constant() || gamma[1].is_zero()))
        throw NotInvertibleError("Sheffer pair: first moment of gamma is zero");
}

PolySequence power_sequence(unsigned N) {
    PolySequence s{{}, "powers"};
    for (unsigned n = 0; n <= N; ++n) s.polys.push_back(Poly::monomial(1, n, 0));
    return s;
}

PolySequence sheffer_moments(const ShefferPair& pair) {
    const TruncatedEGF r = reverted_minus_one(pair.gamma);
    const TruncatedEGF denom = egf_compose(pair.alpha.egf(), r);
    const TruncatedEGF e = egf_exp(r * Poly::x());
    return {moments_from_egf(egf_mul(egf_reciprocal(denom), e)), "sheffer"};
}

PolySequence sheffer_moments_umbral(const ShefferPair& pair) {
    const unsigned N = pair.order();
    Umbra base = umbral_sum(inverse_dot(pair.alpha), dot(Poly::x(), unity(N)));
    return {dot(base, adjoint(pair.gamma)).moments(), "sheffer"};
}

PolySequence associated_moments(const Umbra& gamma) {
    const TruncatedEGF r = reverted_minus_one(gamma);
    return {moments_from_egf(egf_exp(r * Poly::x())), "associated"};
}

PolySequence associated_moments_umbral(const Umbra& gamma) {
    return {dot(Poly::x(), adjoint(gamma)).moments(), "associated"};
}

PolySequence appell_moments(const Umbra& alpha) {
    const Umbra b = inverse_dot(alpha);
    PolySequence s{{}, "appell"};
    for (unsigned n = 0; n <= alpha.order(); ++n) {
        Poly p;
        for (unsigned k = 0; k <= n; ++k) p += binomial(n, k) * (b[n - k] * Poly::monomial(1, k, 0));
        s.polys.push_back(std::move(p));
    }
    return s;
}

PolySequence umbral_compose(const PolySequence& s, const PolySequence& r) {
    PolySequence out{{}, "composition"};
    for (const auto& sn : s.polys) {
        Poly acc;
        for (const auto& [e, c] : sn.terms()) {
            if (e.first >= r.size())
                throw OrderMismatchError("umbral_compose: inner sequence too short");
            acc += Poly::monomial(c, 0, e.second) * r[e.first];
        }
        out.polys.push_back(std::move(acc));
    }
    return out;
}

ShefferPair inverse_pair(const ShefferPair& pair) {
    return ShefferPair(inverse_dot(dot(pair.alpha, adjoint(pair.gamma))), comp_inverse(pair.gamma));
}

PolySequence inverse_sequence(const ShefferPair& pair) {
    PolySequence s = sheffer_moments(inverse_pair(pair));
    s.tag = "inverse";
    return s;
}

Matrix connection_constants_solve(const PolySequence& s, const PolySequence& r) {
    const std::size_t n_rows = s.size();
    if (r.size() < n_rows) throw OrderMismatchError("connection constants: target sequence too short");
    Matrix c(n_rows);
    for (std::size_t n = 0; n < n_rows; ++n) {
        c[n].assign(n + 1, Rational(0));
        Poly rem = s[n];
        for (std::size_t k = n + 1; k-- > 0;) {
            const Rational lead = r[k].coeff(static_cast<unsigned>(k), 0);
            if (lead.is_zero() || r[k].degree(Var::X) != k || r[k].degree(Var::Y) != 0)
                throw ArgumentError("connection constants: target sequence is not triangular at n = " +
                                    std::to_string(k));
            const Poly top = Poly(rem.coeff(static_cast<unsigned>(k), 0));
            const Rational ck = top.constant_value() / lead;
            c[n][k] = ck;
            if (!ck.is_zero()) rem -= r[k] * ck;
        }
        if (!rem.is_zero())
            throw ArgumentError("connection constants: source polynomial " + std::to_string(n) +
                                " is not in the span of the target sequence");
    }
    return c;
}

Matrix connection_constants_umbral(const ShefferPair& from, const ShefferPair& to) {
    const unsigned N = from.order();
    if (to.order() != N) throw OrderMismatchError("connection constants: pairs have different orders");
    const Umbra zeta_adj = adjoint(to.gamma);
    const Umbra shift = dot(umbral_sum(to.alpha, inverse_dot(from.alpha)), zeta_adj);
    const Umbra base = umbral_sum(shift, dot(Poly::x(), unity(N)));
    const Umbra outer = adjoint(compose_umbra(from.gamma, comp_inverse(to.gamma)));
    const Umbra eta = dot(base, outer);
    Matrix c(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        c[n].assign(n + 1, Rational(0));
        for (const auto& [e, v] : eta[n].terms()) {
            if (e.second != 0 || e.first > n)
                throw ConsistencyError("connection constants: unexpected monomial in umbral expansion");
            c[n][e.first] = v;
        }
    }
    return c;
}

ConnectionReport connection_constants_report(const ShefferPair& from, const ShefferPair& to) {
    ConnectionReport rep;
    rep.solve = connection_constants_solve(sheffer_moments(from), sheffer_moments(to));
    rep.umbral = connection_constants_umbral(from, to);
    rep.verified = rep.solve == rep.umbral;
    return rep;
}

Matrix connection_constants(const ShefferPair& from, const ShefferPair& to) {
    ConnectionReport rep = connection_constants_report(from, to);
    if (!rep.verified)
        throw ConsistencyError("connection constants: umbral formula disagrees with the triangular solve");
    return rep.solve;
}

IdentityReport compare_sequences(const std::string& identity, const std::vector<Poly>& lhs,
                                 const std::vector<Poly>& rhs) {
    IdentityReport rep;
    rep.identity = identity;
    const std::size_t n = std::min(lhs.size(), rhs.size());
    rep.checked_up_to = n == 0 ? 0 : static_cast<unsigned>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        Poly diff = lhs[i] - rhs[i];
        if (diff.is_zero()) continue;
        rep.passed = false;
        rep.failed_n = static_cast<unsigned>(i);
        const auto& [e, c] = *diff.terms().begin();
        rep.failed_monomial = monomial_key(e.first, e.second);
        return rep;
    }
    if (lhs.size() != rhs.size()) {
        rep.passed = false;
        rep.note = "sequences have different lengths";
    }
    return rep;
}

namespace {

IdentityReport convolution_identity(const std::string& name, const std::vector<Poly>& s,
                                    const std::vector<Poly>& p, unsigned N) {
    if (s.size() <= N || p.size() <= N) throw OrderMismatchError(name + ": sequence shorter than requested");
    std::vector<Poly> lhs, rhs;
    for (unsigned n = 0; n <= N; ++n) {
        lhs.push_back(shift_x_by_y(s[n]));
        Poly acc;
        for (unsigned k = 0; k <= n; ++k) acc += binomial(n, k) * (s[k] * x_to_y(p[n - k]));
        rhs.push_back(std::move(acc));
    }
    return compare_sequences(name, lhs, rhs);
}

} // namespace

IdentityReport check_sheffer_identity(const ShefferPair& pair, unsigned N) {
    return convolution_identity("sheffer identity", sheffer_moments(pair).polys,
                                associated_moments(pair.gamma).polys, N);
}

IdentityReport check_binomial_identity(const Umbra& gamma, unsigned N) {
    const auto p = associated_moments(gamma).polys;
    return convolution_identity("binomial identity", p, p, N);
}

IdentityReport check_appell_identity(const Umbra& alpha, unsigned N) {
    return convolution_identity("appell identity", appell_moments(alpha).polys, power_sequence(N).polys, N);
}

IdentityReport check_derivative_characterization(const ShefferPair& pair, unsigned N) {
    if (pair.order() < N) throw OrderMismatchError("derivative characterization: pair order below N");
    const auto s = sheffer_moments(pair).truncate_to(N);
    const Umbra shifted = umbral_sum(pair.gamma.truncate(N), dot(Poly::x(), unity(N)));
    const auto lhs = substitute(s, shifted);
    std::vector<Poly> rhs;
    for (unsigned k = 0; k <= N; ++k) rhs.push_back(k == 0 ? s[0] : s[k] + s[k - 1] * Rational(k));
    return compare_sequences("derivative characterization", lhs, rhs);
}

IdentityReport check_associated_recurrence(const Umbra& gamma, unsigned N) {
    if (gamma.order() < N + 1) throw OrderMismatchError("associated recurrence: gamma order must exceed N");
    const unsigned M = N + 1;
    const Umbra g = gamma.truncate(M);
    const auto p = associated_moments(g).polys;
    std::vector<Poly> lhs(p.begin() + 1, p.begin() + M + 1), rhs;
    const bool singleton = g == builtin_umbra("chi", M);
    if (singleton) {
        // Same-label reading: E[x chi (x + chi)^n] with one chi throughout.
        Registry registry;
        const ExprPtr x = ex::indeterminate(Var::X);
        const ExprPtr chi = ex::atom("chi");
        for (unsigned n = 0; n <= N; ++n) {
            ExprPtr e = ex::product(ex::product(x, chi), ex::power(ExprKind::Power, ex::sum(x, chi), n));
            rhs.push_back(evaluate(e, 1, registry)[1]);
        }
    } else {
        const Umbra inner = dot(umbral_sum(dot(Poly::x(), unity(M)), builtin_umbra("chi", M)), adjoint(g));
        const Poly first = comp_inverse(g)[1];
        for (unsigned n = 0; n <= N; ++n) rhs.push_back(Poly::x() * first * inner[n]);
    }
    IdentityReport rep = compare_sequences("associated recurrence", lhs, rhs);
    if (!singleton) rep.note = "informational: correlation of the factors is ambiguous for this gamma";
    return rep;
}

} // namespace umbral
