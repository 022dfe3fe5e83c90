#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

// Byte range [begin, end) of the source text a node was parsed from.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

enum class ExprKind {
    Atom,          // named umbra, possibly primed
    Number,        // rational constant
    Indeterminate, // x or y
    Sum,           // a + b
    Product,       // a * b under E
    ScalarMul,     // c * a
    Dot,           // a . b
    DotPower,      // a ^. n
    Power,         // a ^ n
    InverseDot,    // -1.a
    CompInv,       // a^{<-1>}
    Adjoint,       // a*
    Deriv,         // a_D
    DisjointSum,
    DisjointDiff,
    Bar,
    Fresh, // a copy of the operand uncorrelated with everything else
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable AST node. Only the fields relevant to `kind` are meaningful:
// Atom uses name/primes, Number and ScalarMul use value, Indeterminate uses var,
// Power and DotPower use exponent; unary nodes keep their operand in lhs.
struct Expr {
    ExprKind kind = ExprKind::Number;
    std::string name;
    unsigned primes = 0;
    Rational value;
    Var var = Var::X;
    unsigned exponent = 0;
    ExprPtr lhs;
    ExprPtr rhs;
    Span span;

    // Correlation label of an atom: its name followed by its primes.
    std::string label() const { return name + std::string(primes, '\''); }
};

// Structural equality, ignoring spans.
bool equal(const Expr& a, const Expr& b);
inline bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    return equal(*a, *b);
}

bool is_unary(ExprKind k);
bool is_binary(ExprKind k);
const char* kind_name(ExprKind k);

namespace ex {

ExprPtr atom(std::string name, unsigned primes = 0, Span span = {});
ExprPtr number(Rational value, Span span = {});
ExprPtr indeterminate(Var v, Span span = {});
ExprPtr unary(ExprKind kind, ExprPtr operand, Span span = {});
ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, Span span = {});
ExprPtr power(ExprKind kind, ExprPtr base, unsigned exponent, Span span = {});
ExprPtr scalar_mul(Rational c, ExprPtr operand, Span span = {});

inline ExprPtr sum(ExprPtr a, ExprPtr b) { return binary(ExprKind::Sum, std::move(a), std::move(b)); }
inline ExprPtr product(ExprPtr a, ExprPtr b) { return binary(ExprKind::Product, std::move(a), std::move(b)); }
inline ExprPtr dot(ExprPtr a, ExprPtr b) { return binary(ExprKind::Dot, std::move(a), std::move(b)); }
inline ExprPtr inv(ExprPtr a) { return unary(ExprKind::InverseDot, std::move(a)); }
inline ExprPtr cinv(ExprPtr a) { return unary(ExprKind::CompInv, std::move(a)); }
inline ExprPtr adj(ExprPtr a) { return unary(ExprKind::Adjoint, std::move(a)); }
inline ExprPtr deriv(ExprPtr a) { return unary(ExprKind::Deriv, std::move(a)); }

} // namespace ex

} // namespace umbral
