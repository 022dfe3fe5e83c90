#pragma once

#include <string>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

// An umbra, represented by its moments a_0 = 1, a_1, ..., a_N. Moments may be
// polynomials in x (and y), e.g. for x.beta.
class Umbra {
public:
    // Throws InputError if the list is empty or a_0 != 1.
    explicit Umbra(std::vector<Poly> moments, std::string name = {});
    static Umbra from_rationals(const std::vector<Rational>& moments, std::string name = {});
    static Umbra from_egf(const TruncatedEGF& f, std::string name = {});

    unsigned order() const noexcept { return static_cast<unsigned>(moments_.size() - 1); }
    const std::vector<Poly>& moments() const noexcept { return moments_; }
    const Poly& operator[](unsigned n) const { return moments_.at(n); }
    const std::string& name() const noexcept { return name_; }

    Umbra named(std::string name) const;
    Umbra truncate(unsigned order) const;
    TruncatedEGF egf() const { return egf_from_moments(moments_); }

    // Similarity: equal moment sequences (names are ignored).
    friend bool operator==(const Umbra& a, const Umbra& b) { return a.moments_ == b.moments_; }

private:
    std::vector<Poly> moments_;
    std::string name_;
};

// alpha + gamma for uncorrelated umbrae: binomial convolution of moments.
Umbra umbral_sum(const Umbra& alpha, const Umbra& gamma);

// c.alpha for a rational c, by f(alpha,t)^c.
Umbra dot(const Rational& c, const Umbra& alpha);
// p.alpha for a polynomial p (typically x), by f(alpha,t)^p.
Umbra dot(const Poly& p, const Umbra& alpha);
// gamma.alpha via factorial moments of gamma and partial Bell polynomials.
Umbra dot(const Umbra& gamma, const Umbra& alpha);
// gamma.alpha via the generating function f(gamma, log f(alpha,t)).
Umbra dot_via_egf(const Umbra& gamma, const Umbra& alpha);

// gamma.beta.alpha: moments sum_j g_j B_{i,j}(a_1, ...), g.f. f(gamma, f(alpha,t)-1).
Umbra compose_umbra(const Umbra& gamma, const Umbra& alpha);

// alpha^{.n}: moments a_k^n.
Umbra dot_power(const Umbra& alpha, unsigned n);
// -1.alpha.
Umbra inverse_dot(const Umbra& alpha);
// alpha^{<-1>}; needs a_1 to be a nonzero constant (NotInvertibleError otherwise).
Umbra comp_inverse(const Umbra& alpha);
// gamma* = beta.gamma^{<-1>}, g.f. exp(f^{-1}(gamma,t) - 1).
Umbra adjoint(const Umbra& gamma);
// alpha_D: moments n a_{n-1}, g.f. 1 + t f(alpha,t).
Umbra derivative_umbra(const Umbra& alpha);
Umbra disjoint_sum(const Umbra& alpha, const Umbra& gamma);
Umbra disjoint_diff(const Umbra& alpha, const Umbra& gamma);
// a_(n) = sum_k s(n,k) a_k with signed Stirling numbers of the first kind.
std::vector<Poly> factorial_moments(const Umbra& alpha);
// chi.alpha.
Umbra cumulant(const Umbra& alpha);
// chi.w.beta.alpha: moments w a_n for n >= 1.
Umbra scale_moments(const Rational& w, const Umbra& alpha);
// The umbra c*alpha (ordinary product by a scalar): moments c^n a_n.
Umbra scalar_multiple(const Poly& c, const Umbra& alpha);
// gamma-bar: moments g_{n+1} / (g_1 (n+1)); the result has order N-1.
Umbra bar(const Umbra& gamma);

// E[(c.alpha)^i] = sum over partitions of i of (c)_{len} d_lambda a_lambda.
Poly partition_expand(const Rational& c, const Umbra& alpha, unsigned i);
// E[(gamma.beta.alpha)^i] = sum over partitions of g_{len} d_lambda a_lambda.
Poly partition_expand_composition(const Umbra& gamma, const Umbra& alpha, unsigned i);
// E[(gamma.alpha)^i] with factorial moments g_(len) in place of g_{len}.
Poly partition_expand_dot(const Umbra& gamma, const Umbra& alpha, unsigned i);

// E[q_n(alpha)] for each n: every x^k y^l in q_n becomes y^l a_k.
std::vector<Poly> substitute(const std::vector<Poly>& q, const Umbra& alpha);

} // namespace umbral
