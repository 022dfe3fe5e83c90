#pragma once

#include <vector>

#include "umbral/poly.hpp"

namespace umbral {

// Formal power series sum c_n t^n truncated mod t^{order+1}. Coefficients are
// polynomials in x, y; scalar series simply have constant coefficients.
class TruncatedEGF {
public:
    explicit TruncatedEGF(unsigned order = 0);
    explicit TruncatedEGF(std::vector<Poly> coeffs);

    static TruncatedEGF one(unsigned order);
    static TruncatedEGF t(unsigned order);
    static TruncatedEGF exp_t(unsigned order); // e^t

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<Poly>& coeffs() const noexcept { return coeffs_; }
    const Poly& operator[](unsigned n) const { return coeffs_.at(n); }
    Poly& operator[](unsigned n) { return coeffs_.at(n); }

    TruncatedEGF truncate(unsigned order) const;

    TruncatedEGF& operator+=(const TruncatedEGF& o);
    TruncatedEGF& operator-=(const TruncatedEGF& o);
    TruncatedEGF& operator*=(const Poly& c);

    friend TruncatedEGF operator+(TruncatedEGF a, const TruncatedEGF& b) { return a += b; }
    friend TruncatedEGF operator-(TruncatedEGF a, const TruncatedEGF& b) { return a -= b; }
    friend TruncatedEGF operator*(TruncatedEGF a, const Poly& c) { return a *= c; }
    friend TruncatedEGF operator*(const Poly& c, TruncatedEGF a) { return a *= c; }
    friend bool operator==(const TruncatedEGF&, const TruncatedEGF&) = default;

private:
    std::vector<Poly> coeffs_;
};

// c_n = a_n / n! and back.
TruncatedEGF egf_from_moments(const std::vector<Poly>& moments);
std::vector<Poly> moments_from_egf(const TruncatedEGF& f);

// Every binary operation requires equal orders and throws OrderMismatchError
// otherwise; results carry the same order.
TruncatedEGF egf_mul(const TruncatedEGF& f, const TruncatedEGF& g);
// Requires a nonzero constant c_0 (SingularSeriesError otherwise).
TruncatedEGF egf_reciprocal(const TruncatedEGF& f);
// f(h(t)); h must have zero constant term.
TruncatedEGF egf_compose(const TruncatedEGF& outer, const TruncatedEGF& inner);
// r with h(r(t)) = t; needs h(0) = 0 and h'(0) a nonzero constant.
TruncatedEGF egf_revert(const TruncatedEGF& h);
// log f for c_0 = 1.
TruncatedEGF egf_log(const TruncatedEGF& f);
// exp h for h(0) = 0.
TruncatedEGF egf_exp(const TruncatedEGF& h);
// f^e = exp(e log f) for c_0 = 1; e may be rational or polynomial (f^x).
TruncatedEGF egf_power(const TruncatedEGF& f, const Poly& e);
// t * f(t), dropping the coefficient pushed past the order.
TruncatedEGF egf_shift(const TruncatedEGF& f);
TruncatedEGF egf_derivative(const TruncatedEGF& f);

} // namespace umbral
