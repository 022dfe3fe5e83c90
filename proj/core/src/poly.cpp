#include "umbral/poly.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "umbral/error.hpp"

namespace umbral {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, c);
}

Poly Poly::monomial(const Rational& c, unsigned dx, unsigned dy) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(Exponents{dx, dy}, c);
    return p;
}

Poly Poly::from_coeffs(std::initializer_list<Rational> cs, Var v) {
    Poly p;
    unsigned k = 0;
    for (const auto& c : cs) {
        p.add_term(v == Var::X ? Exponents{k, 0} : Exponents{0, k}, c);
        ++k;
    }
    return p;
}

Rational Poly::coeff(unsigned dx, unsigned dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw ArgumentError("expected a constant, got " + to_string());
    return coeff(0, 0);
}

unsigned Poly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, v == Var::X ? e.first : e.second);
    return d;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b * a.constant_value();
    if (b.is_constant()) return a * b.constant_value();
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else if (!c.is_one()) {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

Poly& Poly::operator/=(const Rational& c) {
    if (c.is_zero()) throw ArgumentError("division of polynomial by zero");
    for (auto& [e, v] : terms_) v /= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative(Var v) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        unsigned d = v == Var::X ? e.first : e.second;
        if (d == 0) continue;
        Exponents ne = v == Var::X ? Exponents{d - 1, e.second} : Exponents{e.first, d - 1};
        r.add_term(ne, c * Rational(d));
    }
    return r;
}

Poly Poly::antiderivative(Var v) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        unsigned d = v == Var::X ? e.first : e.second;
        Exponents ne = v == Var::X ? Exponents{d + 1, e.second} : Exponents{e.first, d + 1};
        r.add_term(ne, c / Rational(d + 1));
    }
    return r;
}

Poly Poly::definite_integral(Var v, const Rational& lo, const Rational& hi) const {
    Poly a = antiderivative(v);
    return a.evaluate(v, hi) - a.evaluate(v, lo);
}

Poly Poly::substitute(Var v, const Poly& q) const {
    // Group terms by the power of v so each power of q is computed once.
    std::map<unsigned, Poly> by_power;
    for (const auto& [e, c] : terms_) {
        unsigned d = v == Var::X ? e.first : e.second;
        Exponents rest = v == Var::X ? Exponents{0, e.second} : Exponents{e.first, 0};
        by_power[d].add_term(rest, c);
    }
    Poly r;
    Poly qpow(1);
    unsigned cur = 0;
    for (const auto& [d, rest] : by_power) {
        while (cur < d) {
            qpow *= q;
            ++cur;
        }
        r += rest * qpow;
    }
    return r;
}

namespace {

std::string power_text(const char* name, unsigned d) {
    if (d == 0) return "";
    if (d == 1) return name;
    return std::string(name) + "^" + std::to_string(d);
}

} // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rational>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        unsigned ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : order) {
        std::string mono = power_text("x", e.first);
        std::string ym = power_text("y", e.second);
        if (!ym.empty()) mono = mono.empty() ? ym : mono + "*" + ym;
        Rational mag = c.abs();
        std::string term;
        if (mono.empty()) {
            term = mag.to_string();
        } else if (mag.is_one()) {
            term = mono;
        } else {
            term = mag.to_string() + "*" + mono;
        }
        if (first) {
            out = c.sign() < 0 ? "-" + term : term;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += term;
        }
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::string monomial_key(unsigned dx, unsigned dy) {
    return "x^" + std::to_string(dx) + "*y^" + std::to_string(dy);
}

} // namespace umbral
