#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "umbral/rational.hpp"

namespace umbral {

enum class Var { X, Y };

// Polynomial in x and y with rational coefficients. Zero coefficients are never
// stored, so a constant polynomial holds at most the (0,0) key and compares
// equal to the corresponding Rational.
class Poly {
public:
    using Exponents = std::pair<unsigned, unsigned>; // (deg_x, deg_y)
    using Terms = std::map<Exponents, Rational>;

    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(std::int64_t c) : Poly(Rational(c)) {} // NOLINT(google-explicit-constructor)

    static Poly x() { return monomial(1, 1, 0); }
    static Poly y() { return monomial(1, 0, 1); }
    static Poly var(Var v) { return v == Var::X ? x() : y(); }
    static Poly monomial(const Rational& c, unsigned dx, unsigned dy);
    // c_0 + c_1 x + ... from a coefficient list.
    static Poly from_coeffs(std::initializer_list<Rational> cs, Var v = Var::X);

    const Terms& terms() const noexcept { return terms_; }
    Rational coeff(unsigned dx, unsigned dy = 0) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // Throws ArgumentError when the polynomial is not constant.
    Rational constant_value() const;
    Rational constant_term() const { return coeff(0, 0); }

    unsigned degree(Var v) const;
    unsigned total_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned e) const;

    Poly derivative(Var v) const;
    Poly antiderivative(Var v) const;
    // Antiderivative in v evaluated between lo and hi; other variables stay symbolic.
    Poly definite_integral(Var v, const Rational& lo, const Rational& hi) const;
    // Replace every occurrence of v by q.
    Poly substitute(Var v, const Poly& q) const;
    Poly evaluate(Var v, const Rational& value) const { return substitute(v, Poly(value)); }

    // Human-readable form, descending total degree: "x^3 - 3*x^2 + 2*x".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// "x^a*y^b" serialization key used by the JSON output.
std::string monomial_key(unsigned dx, unsigned dy);

} // namespace umbral
