#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbral {

// Exact rational number, always kept in canonical form (reduced, positive
// denominator), so that equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpz_class& n);
    explicit Rational(mpq_class q);

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    // Only valid when is_integer() and the value fits.
    std::int64_t to_int64() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws ArgumentError on zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational pow(std::int64_t e) const;
    Rational abs() const;

    // "p/q", or "p" when q = 1.
    std::string to_string() const;

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(unsigned n);

} // namespace umbral
