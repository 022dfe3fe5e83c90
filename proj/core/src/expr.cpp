#include "umbral/expr.hpp"

namespace umbral {

bool is_unary(ExprKind k) {
    switch (k) {
    case ExprKind::InverseDot:
    case ExprKind::CompInv:
    case ExprKind::Adjoint:
    case ExprKind::Deriv:
    case ExprKind::Bar:
    case ExprKind::Fresh:
    case ExprKind::ScalarMul:
    case ExprKind::Power:
    case ExprKind::DotPower:
        return true;
    default:
        return false;
    }
}

bool is_binary(ExprKind k) {
    switch (k) {
    case ExprKind::Sum:
    case ExprKind::Product:
    case ExprKind::Dot:
    case ExprKind::DisjointSum:
    case ExprKind::DisjointDiff:
        return true;
    default:
        return false;
    }
}

const char* kind_name(ExprKind k) {
    switch (k) {
    case ExprKind::Atom: return "Atom";
    case ExprKind::Number: return "Number";
    case ExprKind::Indeterminate: return "Indeterminate";
    case ExprKind::Sum: return "Sum";
    case ExprKind::Product: return "Product";
    case ExprKind::ScalarMul: return "ScalarMul";
    case ExprKind::Dot: return "Dot";
    case ExprKind::DotPower: return "DotPower";
    case ExprKind::Power: return "Power";
    case ExprKind::InverseDot: return "InverseDot";
    case ExprKind::CompInv: return "CompInv";
    case ExprKind::Adjoint: return "Adjoint";
    case ExprKind::Deriv: return "Deriv";
    case ExprKind::DisjointSum: return "DisjointSum";
    case ExprKind::DisjointDiff: return "DisjointDiff";
    case ExprKind::Bar: return "Bar";
    case ExprKind::Fresh: return "Fresh";
    }
    return "?";
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case ExprKind::Atom:
        return a.name == b.name && a.primes == b.primes;
    case ExprKind::Number:
        return a.value == b.value;
    case ExprKind::Indeterminate:
        return a.var == b.var;
    case ExprKind::ScalarMul:
        return a.value == b.value && equal(a.lhs, b.lhs);
    case ExprKind::Power:
    case ExprKind::DotPower:
        return a.exponent == b.exponent && equal(a.lhs, b.lhs);
    default:
        break;
    }
    return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

namespace ex {

namespace {

std::shared_ptr<Expr> node(ExprKind kind, Span span) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->span = span;
    return e;
}

} // namespace

ExprPtr atom(std::string name, unsigned primes, Span span) {
    auto e = node(ExprKind::Atom, span);
    e->name = std::move(name);
    e->primes = primes;
    return e;
}

ExprPtr number(Rational value, Span span) {
    auto e = node(ExprKind::Number, span);
    e->value = std::move(value);
    return e;
}

ExprPtr indeterminate(Var v, Span span) {
    auto e = node(ExprKind::Indeterminate, span);
    e->var = v;
    return e;
}

ExprPtr unary(ExprKind kind, ExprPtr operand, Span span) {
    auto e = node(kind, span);
    e->lhs = std::move(operand);
    return e;
}

ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, Span span) {
    auto e = node(kind, span);
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

ExprPtr power(ExprKind kind, ExprPtr base, unsigned exponent, Span span) {
    auto e = node(kind, span);
    e->lhs = std::move(base);
    e->exponent = exponent;
    return e;
}

ExprPtr scalar_mul(Rational c, ExprPtr operand, Span span) {
    auto e = node(ExprKind::ScalarMul, span);
    e->value = std::move(c);
    e->lhs = std::move(operand);
    return e;
}

} // namespace ex

} // namespace umbral
