#include "umbral/series.hpp"

#include "umbral/error.hpp"

namespace umbral {

namespace {

void require_same_order(const TruncatedEGF& f, const TruncatedEGF& g, const char* op) {
    if (f.order() != g.order())
        throw OrderMismatchError(std::string(op) + ": series truncated at orders " +
                                 std::to_string(f.order()) + " and " + std::to_string(g.order()));
}


} // namespace

TruncatedEGF::TruncatedEGF(unsigned order) : coeffs_(order + 1) {}

TruncatedEGF::TruncatedEGF(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back();
}

TruncatedEGF TruncatedEGF::one(unsigned order) {
    TruncatedEGF f(order);
    f.coeffs_[0] = Poly(1);
    return f;
}

TruncatedEGF TruncatedEGF::t(unsigned order) {
    TruncatedEGF f(order);
    if (order >= 1) f.coeffs_[1] = Poly(1);
    return f;
}

TruncatedEGF TruncatedEGF::exp_t(unsigned order) {
    TruncatedEGF f(order);
    for (unsigned n = 0; n <= order; ++n) f.coeffs_[n] = Poly(Rational(1) / factorial(n));
    return f;
}

TruncatedEGF TruncatedEGF::truncate(unsigned order) const {
    if (order > this->order()) throw OrderMismatchError("cannot extend a truncated series");
    return TruncatedEGF(std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedEGF& TruncatedEGF::operator+=(const TruncatedEGF& o) {
    require_same_order(*this, o, "add");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

TruncatedEGF& TruncatedEGF::operator-=(const TruncatedEGF& o) {
    require_same_order(*this, o, "subtract");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
}

TruncatedEGF& TruncatedEGF::operator*=(const Poly& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

TruncatedEGF egf_from_moments(const std::vector<Poly>& moments) {
    if (moments.empty()) throw ArgumentError("egf_from_moments: empty moment list");
    std::vector<Poly> c(moments.size());
    Rational fact(1);
    for (unsigned n = 0; n < moments.size(); ++n) {
        if (n > 0) fact *= Rational(n);
        c[n] = moments[n] / fact;
    }
    return TruncatedEGF(std::move(c));
}

std::vector<Poly> moments_from_egf(const TruncatedEGF& f) {
    std::vector<Poly> a(f.order() + 1);
    Rational fact(1);
    for (unsigned n = 0; n <= f.order(); ++n) {
        if (n > 0) fact *= Rational(n);
        a[n] = f[n] * fact;
    }
    return a;
}

TruncatedEGF egf_mul(const TruncatedEGF& f, const TruncatedEGF& g) {
    require_same_order(f, g, "egf_mul");
    const unsigned N = f.order();
    TruncatedEGF r(N);
    for (unsigned i = 0; i <= N; ++i) {
        if (f[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= N; ++j)
            if (!g[j].is_zero()) r[i + j] += f[i] * g[j];
    }
    return r;
}

TruncatedEGF egf_reciprocal(const TruncatedEGF& f) {
    if (!f[0].is_constant() || f[0].is_zero())
        throw SingularSeriesError("reciprocal of a series whose constant term is not a nonzero constant");
    const Rational inv0 = Rational(1) / f[0].constant_value();
    const unsigned N = f.order();
    TruncatedEGF g(N);
    g[0] = Poly(inv0);
    for (unsigned n = 1; n <= N; ++n) {
        Poly acc;
        for (unsigned k = 1; k <= n; ++k)
            if (!f[k].is_zero() && !g[n - k].is_zero()) acc += f[k] * g[n - k];
        g[n] = acc * (-inv0);
    }
    return g;
}

TruncatedEGF egf_compose(const TruncatedEGF& outer, const TruncatedEGF& inner) {
    require_same_order(outer, inner, "egf_compose");
    if (!inner[0].is_zero()) throw ArgumentError("egf_compose: inner series must have zero constant term");
    const unsigned N = outer.order();
    // Horner: (((f_N h + f_{N-1}) h + ...) h + f_0.
    TruncatedEGF r(N);
    for (unsigned k = N + 1; k-- > 0;) {
        r = egf_mul(r, inner);
        r[0] += outer[k];
    }
    return r;
}

TruncatedEGF egf_revert(const TruncatedEGF& h) {
    const unsigned N = h.order();
    if (!h[0].is_zero()) throw ArgumentError("egf_revert: series must have zero constant term");
    if (N == 0) return TruncatedEGF(0);
    if (!h[1].is_constant() || h[1].is_zero())
        throw NotInvertibleError("series is not invertible: first moment is zero");
    const Rational h1 = h[1].constant_value();

    // P[k][n] = [t^n] r^k. For k >= 2 it only involves r_1..r_{n-1}, so the
    // coefficients r_n can be solved one at a time from [t^n] h(r) = 0.
    std::vector<std::vector<Poly>> P(N + 1, std::vector<Poly>(N + 1));
    P[0][0] = Poly(1);
    TruncatedEGF r(N);
    r[1] = Poly(Rational(1) / h1);
    P[1][1] = r[1];
    for (unsigned n = 2; n <= N; ++n) {
        Poly acc;
        for (unsigned k = 2; k <= n; ++k) {
            Poly pk;
            for (unsigned j = 1; j + k - 1 <= n; ++j)
                if (!r[j].is_zero() && !P[k - 1][n - j].is_zero()) pk += r[j] * P[k - 1][n - j];
            P[k][n] = pk;
            if (!h[k].is_zero() && !pk.is_zero()) acc += h[k] * pk;
        }
        r[n] = acc * (-Rational(1) / h1);
        P[1][n] = r[n];
    }
    return r;
}

TruncatedEGF egf_log(const TruncatedEGF& f) {
    if (!(f[0] == Poly(1))) throw ArgumentError("egf_log: constant term must be 1");
    const unsigned N = f.order();
    TruncatedEGF l(N);
    // n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}
    for (unsigned n = 1; n <= N; ++n) {
        Poly acc = f[n] * Rational(n);
        for (unsigned k = 1; k < n; ++k)
            if (!l[k].is_zero() && !f[n - k].is_zero()) acc -= l[k] * f[n - k] * Rational(k);
        l[n] = acc / Rational(n);
    }
    return l;
}

TruncatedEGF egf_exp(const TruncatedEGF& h) {
    if (!h[0].is_zero()) throw ArgumentError("egf_exp: constant term must be 0");
    const unsigned N = h.order();
    TruncatedEGF g(N);
    g[0] = Poly(1);
    // n g_n = sum_{k=1}^n k h_k g_{n-k}
    for (unsigned n = 1; n <= N; ++n) {
        Poly acc;
        for (unsigned k = 1; k <= n; ++k)
            if (!h[k].is_zero() && !g[n - k].is_zero()) acc += h[k] * g[n - k] * Rational(k);
        g[n] = acc / Rational(n);
    }
    return g;
}

TruncatedEGF egf_power(const TruncatedEGF& f, const Poly& e) {
    if (!(f[0] == Poly(1))) throw ArgumentError("egf_power: constant term must be 1");
    return egf_exp(egf_log(f) * e);
}

TruncatedEGF egf_shift(const TruncatedEGF& f) {
    const unsigned N = f.order();
    TruncatedEGF r(N);
    for (unsigned n = 1; n <= N; ++n) r[n] = f[n - 1];
    return r;
}

TruncatedEGF egf_derivative(const TruncatedEGF& f) {
    const unsigned N = f.order();
    TruncatedEGF r(N);
    for (unsigned n = 0; n < N; ++n) r[n] = f[n + 1] * Rational(n + 1);
    return r;
}

} // namespace umbral
