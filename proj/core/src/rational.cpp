#include "umbral/rational.hpp"

#include <cctype>
#include <climits>
#include <ostream>

#include "umbral/error.hpp"

namespace umbral {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(std::int64_t n) {
    // mpq_class has no int64 constructor on every platform; go through the string
    // path only for values that do not fit a long.
    if (n >= LONG_MIN && n <= LONG_MAX) {
        q_ = mpq_class(static_cast<long>(n));
    } else {
        q_ = mpq_class(mpz_class(std::to_string(n)));
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    q_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n) : q_(n) {}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view s = trim(text);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = trim(s.substr(0, slash));
        den = trim(s.substr(slash + 1));
    }
    if (!all_digits(num) || !all_digits(den))
        throw InputError("not a rational number: '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    if (neg) n = -n;
    return Rational(mpq_class(n, d));
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw ArgumentError("rational " + to_string() + " is not an integer");
    const mpz_class& n = q_.get_num();
    if (!n.fits_slong_p()) throw ArgumentError("integer " + to_string() + " out of range");
    return n.get_si();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArgumentError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(std::int64_t e) const {
    if (e < 0) return Rational(1) / pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(n, d));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

} // namespace umbral
