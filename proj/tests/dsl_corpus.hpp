#pragma once

// Shared by the parser tests and the acceptance binary.

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "umbral/dsl.hpp"

namespace corpus {

using namespace umbral;

struct Malformed {
    std::string input;
    std::size_t line = 0;
    std::size_t column = 0;
};

inline std::vector<Malformed> load_malformed(const std::string& path) {
    std::vector<Malformed> out;
    std::ifstream in(path);
    std::string row;
    while (std::getline(in, row)) {
        if (row.empty() || row[0] == '#') continue;
        const auto t1 = row.find('\t'), t2 = row.find('\t', t1 + 1);
        Malformed m;
        m.input = row.substr(0, t1);
        for (std::size_t p; (p = m.input.find("\\n")) != std::string::npos;) m.input.replace(p, 2, "\n");
        m.line = std::stoul(row.substr(t1 + 1, t2 - t1 - 1));
        m.column = std::stoul(row.substr(t2 + 1));
        out.push_back(m);
    }
    return out;
}

// Random ASTs of depth <= max_depth covering every node kind.
class Generator {
public:
    explicit Generator(unsigned seed) : rng_(seed) {}

    ExprPtr make(unsigned depth) {
        if (depth == 0 || pick(4) == 0) return leaf();
        const unsigned d = depth - 1;
        switch (pick(14)) {
        case 0: return ex::binary(ExprKind::Sum, make(d), make(d));
        case 1: // a - b spends two levels on the right
            if (d == 0) return ex::binary(ExprKind::Sum, leaf(), leaf());
            return ex::binary(ExprKind::Sum, make(d), ex::inv(make(d - 1)));
        case 2: return ex::binary(ExprKind::Product, make(d), make(d));
        case 3: return ex::binary(ExprKind::Dot, make(d), make(d));
        case 4: return ex::binary(ExprKind::DisjointSum, make(d), make(d));
        case 5: return ex::binary(ExprKind::DisjointDiff, make(d), make(d));
        case 6: return ex::scalar_mul(pick(2) ? Rational(-1) : scalar(), make(d));
        case 7: return ex::power(ExprKind::Power, make(d), pick(6));
        case 8: return ex::power(ExprKind::DotPower, make(d), pick(6));
        case 9: return ex::inv(make(d));
        case 10: return ex::cinv(make(d));
        case 11: return ex::adj(make(d));
        case 12: return ex::deriv(make(d));
        default: return ex::unary(pick(2) ? ExprKind::Bar : ExprKind::Fresh, make(d));
        }
    }

    static unsigned depth(const ExprPtr& e) {
        if (!e) return 0;
        if (!e->lhs) return 0;
        return 1 + std::max(depth(e->lhs), depth(e->rhs));
    }

private:
    unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }

    Rational scalar() {
        const int num = static_cast<int>(pick(15)) - 7;
        return Rational(num, 1 + pick(4));
    }

    ExprPtr leaf() {
        static const char* names[] = {"u", "chi", "bell", "bern", "eps", "alpha", "g_1", "ubar"};
        switch (pick(3)) {
        case 0: return ex::atom(names[pick(8)], pick(3));
        case 1: return ex::number(scalar());
        default: return ex::indeterminate(pick(2) ? Var::X : Var::Y);
        }
    }

    std::mt19937 rng_;
};

} // namespace corpus
