#include "umbral/evaluate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "umbral/error.hpp"

namespace umbral {

namespace {

// Sorted (label, exponent) pairs.
using Monomial = std::vector<std::pair<unsigned, unsigned>>;
using UmbralPoly = std::map<Monomial, Poly>;

void add_to(UmbralPoly& p, const Monomial& m, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            r.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            r.push_back(*j++);
        } else {
            r.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

UmbralPoly mul(const UmbralPoly& a, const UmbralPoly& b) {
    UmbralPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) add_to(r, mul_monomials(ma, mb), ca * cb);
    return r;
}

UmbralPoly constant(const Poly& c) {
    UmbralPoly p;
    add_to(p, {}, c);
    return p;
}

struct Label {
    std::string name; // set for registry atoms
    ExprPtr aux;      // set for auxiliary umbrae
};

// Turns an expression into an umbral polynomial over labels.
class Builder {
public:
    explicit Builder(const Registry& registry) : registry_(registry) {}

    UmbralPoly build(const ExprPtr& e) {
        switch (e->kind) {
        case ExprKind::Atom: {
            if (!registry_.contains(e->name)) throw NameError("unknown umbra '" + e->name + "'");
            auto key = e->label();
            auto it = named_.find(key);
            unsigned id;
            if (it == named_.end()) {
                id = static_cast<unsigned>(labels_.size());
                labels_.push_back({e->name, nullptr});
                named_.emplace(key, id);
            } else {
                id = it->second;
            }
            UmbralPoly p;
            p.emplace(Monomial{{id, 1}}, Poly(1));
            return p;
        }
        case ExprKind::Number:
            return constant(Poly(e->value));
        case ExprKind::Indeterminate:
            return constant(Poly::var(e->var));
        case ExprKind::Sum: {
            UmbralPoly p = build(e->lhs);
            for (const auto& [m, c] : build(e->rhs)) add_to(p, m, c);
            return p;
        }
        case ExprKind::Product:
            return mul(build(e->lhs), build(e->rhs));
        case ExprKind::ScalarMul: {
            UmbralPoly p = build(e->lhs);
            UmbralPoly r;
            for (const auto& [m, c] : p) add_to(r, m, c * e->value);
            return r;
        }
        case ExprKind::Power: {
            UmbralPoly base = build(e->lhs);
            UmbralPoly r = constant(Poly(1));
            for (unsigned k = 0; k < e->exponent; ++k) r = mul(r, base);
            return r;
        }
        default: {
            unsigned id = static_cast<unsigned>(labels_.size());
            labels_.push_back({{}, e});
            UmbralPoly p;
            p.emplace(Monomial{{id, 1}}, Poly(1));
            return p;
        }
        }
    }

    const std::vector<Label>& labels() const { return labels_; }

private:
    const Registry& registry_;
    std::vector<Label> labels_;
    std::map<std::string, unsigned> named_;
};

// Highest exponent of each label anywhere in p.
std::vector<unsigned> max_degrees(const UmbralPoly& p, std::size_t n_labels) {
    std::vector<unsigned> d(n_labels, 0);
    for (const auto& [m, c] : p)
        for (const auto& [id, k] : m) d[id] = std::max(d[id], k);
    return d;
}

// Order at which an auxiliary node needs its operands, given the order asked of it.
unsigned operand_order(ExprKind kind, unsigned order) {
    switch (kind) {
    case ExprKind::Bar: return order + 1;
    case ExprKind::Deriv: return order == 0 ? 0 : order - 1;
    default: return order;
    }
}

Umbra eval_rec(const ExprPtr& e, unsigned order, const Registry& registry);

Umbra eval_aux(const ExprPtr& e, unsigned order, const Registry& registry) {
    const unsigned sub = operand_order(e->kind, order);
    switch (e->kind) {
    case ExprKind::Dot: {
        Umbra right = eval_rec(e->rhs, sub, registry);
        if (e->lhs->kind == ExprKind::Number) return dot(e->lhs->value, right);
        if (e->lhs->kind == ExprKind::Indeterminate) return dot(Poly::var(e->lhs->var), right);
        return dot(eval_rec(e->lhs, sub, registry), right);
    }
    case ExprKind::DotPower:
        return dot_power(eval_rec(e->lhs, sub, registry), e->exponent);
    case ExprKind::InverseDot:
        return inverse_dot(eval_rec(e->lhs, sub, registry));
    case ExprKind::CompInv:
        return comp_inverse(eval_rec(e->lhs, sub, registry));
    case ExprKind::Adjoint:
        return adjoint(eval_rec(e->lhs, sub, registry));
    case ExprKind::Deriv: {
        Umbra a = eval_rec(e->lhs, sub, registry);
        std::vector<Poly> m(order + 1);
        m[0] = Poly(1);
        for (unsigned n = 1; n <= order; ++n) m[n] = a[n - 1] * Rational(n);
        return Umbra(std::move(m));
    }
    case ExprKind::DisjointSum:
        return disjoint_sum(eval_rec(e->lhs, sub, registry), eval_rec(e->rhs, sub, registry));
    case ExprKind::DisjointDiff:
        return disjoint_diff(eval_rec(e->lhs, sub, registry), eval_rec(e->rhs, sub, registry));
    case ExprKind::Bar:
        return bar(eval_rec(e->lhs, sub, registry));
    case ExprKind::Fresh:
        return eval_rec(e->lhs, sub, registry);
    default:
        throw ArgumentError(std::string("unexpected node ") + kind_name(e->kind));
    }
}

Umbra materialize(const Label& label, unsigned order, const Registry& registry) {
    if (label.aux) return eval_aux(label.aux, order, registry);
    return registry.get(label.name, order);
}

Umbra eval_rec(const ExprPtr& e, unsigned order, const Registry& registry) {
    Builder builder(registry);
    const UmbralPoly p = builder.build(e);
    const auto& labels = builder.labels();

    // A lone label is its own moment sequence.
    if (p.size() == 1 && p.begin()->first.size() == 1 && p.begin()->first[0].second == 1 &&
        p.begin()->second == Poly(1))
        return materialize(labels[p.begin()->first[0].first], order, registry);

    const auto deg = max_degrees(p, labels.size());
    std::vector<std::optional<Umbra>> umbrae(labels.size());
    for (std::size_t id = 0; id < labels.size(); ++id)
        if (deg[id] > 0) umbrae[id] = materialize(labels[id], order * deg[id], registry);

    auto expect = [&](const UmbralPoly& q) {
        Poly acc;
        for (const auto& [m, c] : q) {
            Poly term = c;
            for (const auto& [id, k] : m) {
                term *= (*umbrae[id])[k];
                if (term.is_zero()) break;
            }
            acc += term;
        }
        return acc;
    };

    std::vector<Poly> moments(order + 1);
    moments[0] = Poly(1);
    UmbralPoly power = constant(Poly(1));
    for (unsigned n = 1; n <= order; ++n) {
        power = mul(power, p);
        moments[n] = expect(power);
    }
    return Umbra(std::move(moments));
}

// Moments each user umbra must supply for e to be evaluated at `order`.
void requirements(const ExprPtr& e, unsigned order, const Registry& registry,
                  std::map<std::string, unsigned>& need) {
    Builder builder(registry);
    const UmbralPoly p = builder.build(e);
    const auto& labels = builder.labels();
    const auto deg = max_degrees(p, labels.size());
    for (std::size_t id = 0; id < labels.size(); ++id) {
        if (deg[id] == 0) continue;
        const unsigned ord = order * deg[id];
        const Label& label = labels[id];
        if (!label.aux) {
            unsigned& n = need[label.name];
            n = std::max(n, ord);
            continue;
        }
        const unsigned sub = operand_order(label.aux->kind, ord);
        if (label.aux->lhs) requirements(label.aux->lhs, sub, registry, need);
        if (label.aux->rhs) requirements(label.aux->rhs, sub, registry, need);
    }
}

} // namespace

Umbra evaluate(const ExprPtr& e, unsigned order, const Registry& registry) {
    if (!e) throw ArgumentError("evaluate: empty expression");
    return eval_rec(e, order, registry);
}

unsigned feasible_order(const ExprPtr& e, unsigned requested, const Registry& registry) {
    for (unsigned n = requested;; --n) {
        std::map<std::string, unsigned> need;
        requirements(e, n, registry, need);
        bool ok = true;
        for (const auto& [name, k] : need) {
            auto limit = registry.max_order(name);
            if (limit && k > *limit) {
                ok = false;
                break;
            }
        }
        if (ok || n == 0) return n;
    }
}

} // namespace umbral
