#include "umbral/special.hpp"

#include "umbral/combinatorics.hpp"
#include "umbral/error.hpp"
#include "umbral/registry.hpp"

namespace umbral {

namespace {

void require_order(const Umbra& gamma, unsigned needed, const char* what) {
    if (gamma.order() < needed)
        throw OrderMismatchError(std::string(what) + ": umbra has order " + std::to_string(gamma.order()) +
                                 ", need " + std::to_string(needed));
}

Poly x_pow(unsigned k) { return Poly::monomial(1, k, 0); }

// y(y - k.gamma)^{k-1} expanded, in the variable v; k >= 1.
Poly abel_term(const Umbra& gamma, unsigned k, Var v) {
    const Umbra m = dot(Rational(-static_cast<std::int64_t>(k)), gamma.truncate(k - 1));
    const Poly t = Poly::var(v);
    Poly acc;
    for (unsigned j = 0; j + 1 <= k; ++j) acc += binomial(k - 1, j) * (t.pow(j) * m[k - 1 - j]);
    return t * acc;
}

} // namespace

std::vector<Rational> bernoulli_numbers(unsigned N) {
    std::vector<Rational> B(N + 1);
    B[0] = Rational(1);
    // For n >= 2, sum_{k=0}^{n-1} C(n,k) B_k = 0 fixes B_{n-1}.
    for (unsigned n = 2; n <= N + 1; ++n) {
        Rational acc;
        for (unsigned k = 0; k + 2 <= n; ++k) acc += binomial(n, k) * B[k];
        B[n - 1] = -acc / binomial(n, n - 1);
    }
    return B;
}

PolySequence abel_polynomials(const Umbra& gamma, unsigned N) {
    require_order(gamma, N, "abel_polynomials");
    PolySequence s{{Poly(1)}, "abel"};
    for (unsigned n = 1; n <= N; ++n) s.polys.push_back(abel_term(gamma, n, Var::X));
    return s;
}

DualValue lagrange_inversion(const Umbra& gamma, unsigned n) {
    if (n < 1) throw ArgumentError("lagrange_inversion: need n >= 1");
    require_order(gamma, n, "lagrange_inversion");
    const Umbra g = gamma.truncate(n);
    DualValue v;
    v.formula = dot(Rational(-static_cast<std::int64_t>(n)), g)[n - 1];
    v.reference = comp_inverse(derivative_umbra(g))[n];
    return v;
}

DualValue lagrange_inversion_general(const Umbra& gamma, unsigned n) {
    if (n < 1) throw ArgumentError("lagrange_inversion_general: need n >= 1");
    require_order(gamma, n, "lagrange_inversion_general");
    const Umbra g = gamma.truncate(n);
    const Umbra gbar = bar(g);
    DualValue v;
    v.formula = dot(Rational(-static_cast<std::int64_t>(n)), gbar)[n - 1];
    v.reference = g[1].pow(n) * comp_inverse(g)[n];
    return v;
}

Rational stirling_second_umbral(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    const Umbra iota = builtin_umbra("bern", n - k);
    const Poly e = dot(Rational(-static_cast<std::int64_t>(k)), iota)[n - k];
    return binomial(n, k) * e.constant_value();
}

Rational stirling_first_umbral(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    const unsigned m = n - k;
    const Umbra iota_chi = dot(builtin_umbra("bern", m), builtin_umbra("chi", m));
    const Poly e = dot(Rational(k), iota_chi)[m];
    return binomial(n, k) * e.constant_value();
}

Poly poisson_charlier(unsigned n, const Rational& a) {
    if (a.is_zero()) throw ArgumentError("poisson_charlier: a must be nonzero");
    Poly acc;
    for (unsigned k = 0; k <= n; ++k)
        acc += (binomial(n, k) * (-a).pow(n - k)) * falling_factorial(Poly::x(), k);
    return acc / a.pow(n);
}

PolySequence exponential_polynomials(unsigned N) {
    PolySequence s{{}, "exponential"};
    for (unsigned n = 0; n <= N; ++n) {
        Poly p;
        for (unsigned i = 0; i <= n; ++i) p += stirling_second_classical(n, i) * x_pow(i);
        s.polys.push_back(std::move(p));
    }
    return s;
}

ShefferPair power_pair(unsigned N) { return {builtin_umbra("eps", N), builtin_umbra("chi", N)}; }

ShefferPair factorial_pair(unsigned N) { return {builtin_umbra("eps", N), builtin_umbra("u", N)}; }

ShefferPair exponential_pair(unsigned N) { return {builtin_umbra("eps", N), builtin_umbra("uinv", N)}; }

ShefferPair poisson_charlier_pair(const Rational& a, unsigned N) {
    const Umbra a_bell = dot(a, builtin_umbra("bell", N));
    return {a_bell, cumulant(a_bell)};
}

ShefferPair bernoulli_pair(unsigned N) {
    return {inverse_dot(builtin_umbra("bern", N)), builtin_umbra("chi", N)};
}

IdentityReport abel_identity_check(const Umbra& gamma, unsigned N) {
    require_order(gamma, N, "abel_identity_check");
    std::vector<Poly> lhs, rhs;
    const Poly x = Poly::x();
    for (unsigned n = 0; n <= N; ++n) {
        lhs.push_back((x + Poly::y()).pow(n));
        Poly acc = x.pow(n);
        for (unsigned k = 1; k <= n; ++k) {
            const Umbra kg = dot(Rational(k), gamma.truncate(n - k));
            Poly shifted;
            for (unsigned j = 0; j <= n - k; ++j) shifted += binomial(n - k, j) * (x.pow(n - k - j) * kg[j]);
            acc += binomial(n, k) * (abel_term(gamma, k, Var::Y) * shifted);
        }
        rhs.push_back(std::move(acc));
    }
    return compare_sequences("abel identity", lhs, rhs);
}

AbelExpansion polynomial_expand_abel(const Poly& p, const Umbra& gamma) {
    if (p.degree(Var::Y) != 0) throw ArgumentError("polynomial_expand_abel: p must be a polynomial in x");
    const unsigned d = p.degree(Var::X);
    require_order(gamma, d, "polynomial_expand_abel");
    const PolySequence abel = abel_polynomials(gamma, d);
    AbelExpansion out;
    Poly deriv = p;
    for (unsigned k = 0; k <= d; ++k) {
        const Umbra kg = dot(Rational(k), gamma.truncate(d));
        const Poly value = substitute({deriv}, kg)[0];
        out.coefficients.push_back(value / factorial(k));
        out.reconstruction += out.coefficients.back() * abel[k];
        deriv = deriv.derivative(Var::X);
    }
    out.exact = out.reconstruction == p;
    return out;
}

DualValue bell_expansion(const Umbra& gamma, unsigned n) {
    require_order(gamma, n, "bell_expansion");
    const Umbra g = gamma.truncate(n);
    DualValue v;
    for (unsigned k = 0; k <= n; ++k)
        v.formula += binomial(n, k) * (dot(Rational(k), g)[n - k] * x_pow(k));
    const Umbra chain = dot(builtin_umbra("bell", n), derivative_umbra(g));
    v.reference = dot(Poly::x(), chain)[n];
    return v;
}

DualValue bell_expansion_general(const Umbra& gamma, unsigned n) {
    require_order(gamma, n + 1, "bell_expansion_general");
    const Umbra g = gamma.truncate(n + 1);
    const Umbra gbar = bar(g);
    const Poly g1 = g[1];
    DualValue v;
    for (unsigned k = 0; k <= n; ++k)
        v.formula += binomial(n, k) * (g1.pow(k) * dot(Rational(k), gbar)[n - k] * x_pow(k));
    const Umbra chain = dot(builtin_umbra("bell", n), g.truncate(n));
    v.reference = dot(Poly::x(), chain)[n];
    return v;
}

Umbra fibonacci_bar_umbra(unsigned N) {
    TruncatedEGF q = TruncatedEGF::one(N);
    if (N >= 1) q[1] = Poly(-1);
    if (N >= 2) q[2] = Poly(-1);
    return Umbra::from_egf(egf_reciprocal(q), "delta_bar");
}

Umbra fibonacci_umbra(unsigned N) {
    const Umbra db = fibonacci_bar_umbra(N);
    std::vector<Poly> m(N + 1);
    for (unsigned k = 0; k <= N; ++k) m[k] = db[k] / factorial(k);
    return Umbra(std::move(m), "delta");
}

bool RecurrenceReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

RecurrenceReport recurrence_example_bernoulli(unsigned N) {
    RecurrenceReport rep;
    rep.name = "bernoulli-diff";
    const Umbra iota = builtin_umbra("bern", N);
    const Umbra xu = dot(Poly::x(), builtin_umbra("u", N));
    // eta.chi must be ubar for the integral condition; eta = ubar.beta has g.f. 1/(2 - e^t).
    const Umbra eta = dot(builtin_umbra("ubar", N), builtin_umbra("bell", N));
    const auto fm = factorial_moments(umbral_sum(umbral_sum(iota, eta), xu));
    rep.solution.tag = "bernoulli-diff";
    for (unsigned n = 0; n <= N; ++n) rep.solution.polys.push_back(fm[n] / factorial(n));
    const auto& s = rep.solution.polys;

    // With beta in place of ubar.beta the difference equation still holds but
    // the integrals come out as 1/n!.
    const auto plain = factorial_moments(umbral_sum(umbral_sum(iota, builtin_umbra("bell", N)), xu));
    std::string integrals;
    for (unsigned n = 0; n <= N; ++n)
        integrals += (n > 0 ? ", " : "") +
                     (plain[n] / factorial(n)).definite_integral(Var::X, 0, 1).to_string();
    rep.observations.emplace_back("integral over [0,1] of E[((bern + bell + x.u).chi)^n]/n!", integrals);

    std::vector<Poly> diff, prev, integral, ones;
    for (unsigned n = 0; n <= N; ++n) {
        diff.push_back(s[n].substitute(Var::X, Poly::x() + Poly(1)) - s[n]);
        prev.push_back(n == 0 ? Poly() : s[n - 1]);
        integral.push_back(s[n].definite_integral(Var::X, 0, 1));
        ones.emplace_back(1);
    }
    rep.checks.push_back(compare_sequences("s_n(x+1) - s_n(x) = s_{n-1}(x)", diff, prev));
    rep.checks.push_back(compare_sequences("integral of s_n over [0,1] = 1", integral, ones));
    return rep;
}

RecurrenceReport recurrence_example_backward(unsigned N) {
    RecurrenceReport rep;
    rep.name = "backward-diff";
    const Poly x = Poly::x();

    // Closed form: [ubar.beta.delta_bar_D + (x+n-1).chi]^n / n!.
    const Umbra dbar = fibonacci_bar_umbra(N);
    const Umbra A = dot(builtin_umbra("ubar", N), dot(builtin_umbra("bell", N), derivative_umbra(dbar)));
    std::vector<Poly> closed;
    for (unsigned n = 0; n <= N; ++n) {
        const Poly shift = x + Poly(Rational(n) - Rational(1));
        Poly acc;
        for (unsigned k = 0; k <= n; ++k)
            acc += binomial(n, k) * (A[k] * falling_factorial(shift, n - k));
        closed.push_back(acc / factorial(n));
    }

    // Recursive route through the initial condition.
    std::vector<Poly> rec;
    std::vector<Rational> v; // v_k = s_k(1-k)
    for (unsigned n = 0; n <= N; ++n) {
        Rational vn(1);
        if (n > 0) {
            vn = Rational(0);
            for (unsigned i = 0; i < n; ++i)
                vn += rec[i].evaluate(Var::X, Rational(n) - Rational(2 * i)).constant_value();
        }
        v.push_back(vn);
        const Poly shift = x + Poly(Rational(n) - Rational(1));
        Poly acc;
        for (unsigned k = 0; k <= n; ++k) acc += v[k] * binomial(shift, n - k);
        rec.push_back(std::move(acc));
    }

    rep.solution = {closed, "backward-diff"};
    rep.checks.push_back(compare_sequences("closed form = initial-condition expansion", closed, rec));

    std::vector<Poly> diff, prev, init_l, init_r;
    for (unsigned n = 0; n <= N; ++n) {
        diff.push_back(closed[n] - closed[n].substitute(Var::X, x - Poly(1)));
        prev.push_back(n == 0 ? Poly() : closed[n - 1]);
        if (n == 0) {
            init_l.push_back(closed[0].evaluate(Var::X, -1));
            init_r.emplace_back(1);
        } else {
            init_l.push_back(closed[n].evaluate(Var::X, Rational(1) - Rational(n)));
            Poly acc;
            for (unsigned i = 0; i < n; ++i) acc += closed[i].evaluate(Var::X, Rational(n) - Rational(2 * i));
            init_r.push_back(acc);
        }
    }
    rep.checks.push_back(compare_sequences("s_n(x) - s_n(x-1) = s_{n-1}(x)", diff, prev));
    rep.checks.push_back(compare_sequences("s_n(1-n) = sum_{i<n} s_i(n-2i), s_0(-1) = 1", init_l, init_r));

    TruncatedEGF q = TruncatedEGF::one(N);
    if (N >= 1) q[1] = Poly(-1);
    if (N >= 2) q[2] = Poly(-1);
    rep.checks.push_back(compare_sequences("f(delta_bar,t) (1 - t - t^2) = 1", egf_mul(dbar.egf(), q).coeffs(),
                                           TruncatedEGF::one(N).coeffs()));
    const Umbra boolean = dot(builtin_umbra("ubar", N), dot(builtin_umbra("bell", N),
                                                            derivative_umbra(builtin_umbra("chi", N))));
    rep.checks.push_back(compare_sequences("ubar.beta.chi_D = delta_bar", boolean.moments(), dbar.moments()));
    return rep;
}

RecurrenceReport recurrence_example_fibonacci(unsigned N) {
    RecurrenceReport rep;
    rep.name = "fibonacci";
    const Poly x = Poly::x();
    std::vector<Poly> G;
    for (unsigned n = 0; n <= N; ++n) {
        Poly acc;
        for (unsigned k = 0; k <= n; ++k) acc += binomial(x + Poly(k), n - k);
        G.push_back(std::move(acc));
    }
    rep.solution = {G, "fibonacci"};

    // Same polynomials from (delta_bar + x.chi)^n / n!.
    const Umbra dbar = fibonacci_bar_umbra(N);
    std::vector<Poly> umbral;
    for (unsigned n = 0; n <= N; ++n) {
        Poly acc;
        for (unsigned k = 0; k <= n; ++k) acc += binomial(n, k) * (dbar[k] * falling_factorial(x, n - k));
        umbral.push_back(acc / factorial(n));
    }
    rep.checks.push_back(compare_sequences("sum_k C(x+k, n-k) = (delta_bar + x.chi)^n / n!", G, umbral));

    std::vector<Poly> lhs, rhs, diag, fib;
    const Umbra delta = fibonacci_umbra(N);
    for (unsigned n = 0; n <= N; ++n) {
        lhs.push_back(G[n].substitute(Var::X, x + Poly(1)));
        rhs.push_back(n == 0 ? G[0] : G[n] + G[n - 1]);
        diag.push_back(G[n].evaluate(Var::X, 0));
        fib.push_back(delta[n]);
    }
    rep.checks.push_back(compare_sequences("F_n(x+n+1) = F_n(x+n) + F_{n-1}(x+n-1)", lhs, rhs));
    rep.checks.push_back(compare_sequences("F_n(n) = Fibonacci numbers", diag, fib));

    std::string diagonal;
    for (unsigned n = 0; n <= N; ++n) diagonal += (n > 0 ? ", " : "") + diag[n].to_string();
    rep.observations.emplace_back("F_n(n), n = 0.." + std::to_string(N), diagonal);

    std::string values;
    for (unsigned n = 0; n <= N; ++n) {
        if (n > 0) values += ", ";
        values += G[n].evaluate(Var::X, -Rational(n)).to_string();
    }
    rep.observations.emplace_back("F_n(0), n = 0.." + std::to_string(N), values);
    return rep;
}

} // namespace umbral
