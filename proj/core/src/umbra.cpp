#include "umbral/umbra.hpp"

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"

namespace umbral {

namespace {

void require_same_order(const Umbra& a, const Umbra& b, const char* op) {
    if (a.order() != b.order())
        throw OrderMismatchError(std::string(op) + ": umbrae truncated at orders " +
                                 std::to_string(a.order()) + " and " + std::to_string(b.order()));
}

Rational first_moment_constant(const Umbra& a, const char* op) {
    if (a.order() < 1) return Rational(1);
    const Poly& a1 = a[1];
    if (a1.is_zero()) throw NotInvertibleError(std::string(op) + ": first moment is zero");
    if (!a1.is_constant())
        throw NotInvertibleError(std::string(op) + ": first moment " + a1.to_string() + " is not a constant");
    return a1.constant_value();
}

} // namespace

Umbra::Umbra(std::vector<Poly> moments, std::string name)
    : moments_(std::move(moments)), name_(std::move(name)) {
    if (moments_.empty()) throw InputError("an umbra needs at least the moment a_0");
    if (!(moments_[0] == Poly(1)))
        throw InputError("moment a_0 must be 1, got " + moments_[0].to_string());
}

Umbra Umbra::from_rationals(const std::vector<Rational>& moments, std::string name) {
    std::vector<Poly> m(moments.begin(), moments.end());
    return Umbra(std::move(m), std::move(name));
}

Umbra Umbra::from_egf(const TruncatedEGF& f, std::string name) {
    return Umbra(moments_from_egf(f), std::move(name));
}

Umbra Umbra::named(std::string name) const {
    Umbra r = *this;
    r.name_ = std::move(name);
    return r;
}

Umbra Umbra::truncate(unsigned order) const {
    if (order > this->order())
        throw OrderMismatchError("cannot extend umbra " + name_ + " from order " + std::to_string(this->order()) +
                                 " to " + std::to_string(order));
    return Umbra(std::vector<Poly>(moments_.begin(), moments_.begin() + order + 1), name_);
}

Umbra umbral_sum(const Umbra& alpha, const Umbra& gamma) {
    require_same_order(alpha, gamma, "umbral_sum");
    const unsigned N = alpha.order();
    std::vector<Poly> m(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        Poly acc;
        for (unsigned k = 0; k <= n; ++k)
            if (!alpha[k].is_zero() && !gamma[n - k].is_zero())
                acc += binomial(n, k) * (alpha[k] * gamma[n - k]);
        m[n] = std::move(acc);
    }
    return Umbra(std::move(m));
}

Umbra dot(const Rational& c, const Umbra& alpha) { return dot(Poly(c), alpha); }

Umbra dot(const Poly& p, const Umbra& alpha) {
    return Umbra::from_egf(egf_power(alpha.egf(), p));
}

Umbra dot(const Umbra& gamma, const Umbra& alpha) {
    require_same_order(gamma, alpha, "dot");
    const unsigned N = alpha.order();
    const auto g = factorial_moments(gamma);
    const auto B = bell_partial_table(N, alpha.moments());
    std::vector<Poly> m(N + 1);
    m[0] = Poly(1);
    for (unsigned i = 1; i <= N; ++i) {
        Poly acc;
        for (unsigned j = 1; j <= i; ++j)
            if (!g[j].is_zero() && !B[i][j].is_zero()) acc += g[j] * B[i][j];
        m[i] = std::move(acc);
    }
    return Umbra(std::move(m));
}

Umbra dot_via_egf(const Umbra& gamma, const Umbra& alpha) {
    require_same_order(gamma, alpha, "dot_via_egf");
    return Umbra::from_egf(egf_compose(gamma.egf(), egf_log(alpha.egf())));
}

Umbra compose_umbra(const Umbra& gamma, const Umbra& alpha) {
    require_same_order(gamma, alpha, "compose_umbra");
    const unsigned N = alpha.order();
    const auto B = bell_partial_table(N, alpha.moments());
    std::vector<Poly> m(N + 1);
    m[0] = Poly(1);
    for (unsigned i = 1; i <= N; ++i) {
        Poly acc;
        for (unsigned j = 1; j <= i; ++j)
            if (!gamma[j].is_zero() && !B[i][j].is_zero()) acc += gamma[j] * B[i][j];
        m[i] = std::move(acc);
    }
    return Umbra(std::move(m));
}

Umbra dot_power(const Umbra& alpha, unsigned n) {
    std::vector<Poly> m(alpha.order() + 1);
    for (unsigned k = 0; k <= alpha.order(); ++k) m[k] = alpha[k].pow(n);
    return Umbra(std::move(m));
}

Umbra inverse_dot(const Umbra& alpha) { return Umbra::from_egf(egf_reciprocal(alpha.egf())); }

Umbra comp_inverse(const Umbra& alpha) {
    first_moment_constant(alpha, "compositional inverse");
    TruncatedEGF h = alpha.egf();
    h[0] = Poly();
    TruncatedEGF r = egf_revert(h);
    r[0] = Poly(1);
    return Umbra::from_egf(r);
}

Umbra adjoint(const Umbra& gamma) {
    first_moment_constant(gamma, "adjoint");
    TruncatedEGF h = gamma.egf();
    h[0] = Poly();
    return Umbra::from_egf(egf_exp(egf_revert(h)));
}

Umbra derivative_umbra(const Umbra& alpha) {
    std::vector<Poly> m(alpha.order() + 1);
    m[0] = Poly(1);
    for (unsigned n = 1; n <= alpha.order(); ++n) m[n] = alpha[n - 1] * Rational(n);
    return Umbra(std::move(m));
}

Umbra disjoint_sum(const Umbra& alpha, const Umbra& gamma) {
    require_same_order(alpha, gamma, "disjoint_sum");
    std::vector<Poly> m(alpha.order() + 1);
    m[0] = Poly(1);
    for (unsigned n = 1; n <= alpha.order(); ++n) m[n] = alpha[n] + gamma[n];
    return Umbra(std::move(m));
}

Umbra disjoint_diff(const Umbra& alpha, const Umbra& gamma) {
    require_same_order(alpha, gamma, "disjoint_diff");
    std::vector<Poly> m(alpha.order() + 1);
    m[0] = Poly(1);
    for (unsigned n = 1; n <= alpha.order(); ++n) m[n] = alpha[n] - gamma[n];
    return Umbra(std::move(m));
}

std::vector<Poly> factorial_moments(const Umbra& alpha) {
    std::vector<Poly> f(alpha.order() + 1);
    for (unsigned n = 0; n <= alpha.order(); ++n) {
        Poly acc;
        for (unsigned k = 0; k <= n; ++k) {
            Rational s = stirling_first_classical(n, k);
            if (!s.is_zero() && !alpha[k].is_zero()) acc += s * alpha[k];
        }
        f[n] = std::move(acc);
    }
    return f;
}

Umbra cumulant(const Umbra& alpha) {
    std::vector<Poly> chi(alpha.order() + 1);
    chi[0] = Poly(1);
    if (alpha.order() >= 1) chi[1] = Poly(1);
    return dot(Umbra(std::move(chi)), alpha);
}

Umbra scale_moments(const Rational& w, const Umbra& alpha) {
    std::vector<Poly> m(alpha.order() + 1);
    m[0] = Poly(1);
    for (unsigned n = 1; n <= alpha.order(); ++n) m[n] = alpha[n] * w;
    return Umbra(std::move(m));
}

Umbra scalar_multiple(const Poly& c, const Umbra& alpha) {
    std::vector<Poly> m(alpha.order() + 1);
    Poly cn(1);
    for (unsigned n = 0; n <= alpha.order(); ++n) {
        m[n] = cn * alpha[n];
        cn *= c;
    }
    return Umbra(std::move(m));
}

Umbra bar(const Umbra& gamma) {
    if (gamma.order() < 1) throw OrderMismatchError("bar: need at least the first moment");
    const Rational g1 = first_moment_constant(gamma, "bar");
    std::vector<Poly> m(gamma.order());
    for (unsigned n = 0; n + 1 <= gamma.order(); ++n) m[n] = gamma[n + 1] / (g1 * Rational(n + 1));
    return Umbra(std::move(m));
}

namespace {

template <class Weight>
Poly partition_sum(const Umbra& alpha, unsigned i, Weight weight) {
    if (i < 1) throw ArgumentError("partition expansion needs i >= 1");
    if (i > alpha.order()) throw OrderMismatchError("partition expansion beyond the umbra's order");
    Poly acc;
    for (const auto& lambda : partitions_of(i)) {
        Poly w = weight(lambda.length());
        if (w.is_zero()) continue;
        Poly term = w * partition_coefficient(lambda);
        for (unsigned part : lambda.parts) term *= alpha[part];
        acc += term;
    }
    return acc;
}

} // namespace

Poly partition_expand(const Rational& c, const Umbra& alpha, unsigned i) {
    return partition_sum(alpha, i, [&](unsigned len) { return Poly(falling_factorial(c, len)); });
}

Poly partition_expand_composition(const Umbra& gamma, const Umbra& alpha, unsigned i) {
    if (i > gamma.order()) throw OrderMismatchError("partition expansion beyond the umbra's order");
    return partition_sum(alpha, i, [&](unsigned len) { return gamma[len]; });
}

Poly partition_expand_dot(const Umbra& gamma, const Umbra& alpha, unsigned i) {
    if (i > gamma.order()) throw OrderMismatchError("partition expansion beyond the umbra's order");
    const auto g = factorial_moments(gamma);
    return partition_sum(alpha, i, [&](unsigned len) { return g[len]; });
}

std::vector<Poly> substitute(const std::vector<Poly>& q, const Umbra& alpha) {
    std::vector<Poly> out;
    out.reserve(q.size());
    for (const auto& qn : q) {
        Poly acc;
        for (const auto& [e, c] : qn.terms()) {
            if (e.first > alpha.order())
                throw OrderMismatchError("substitute: needs moment " + std::to_string(e.first) +
                                         " but the umbra has order " + std::to_string(alpha.order()));
            acc += Poly::monomial(c, 0, e.second) * alpha[e.first];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace umbral
