#include "umbral/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

#include "umbral/error.hpp"

namespace umbral {

unsigned Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

Partition Partition::from_parts(std::vector<unsigned> parts) {
    Partition p;
    unsigned largest = 0;
    for (unsigned v : parts) {
        if (v == 0) throw ArgumentError("partition parts must be positive");
        largest = std::max(largest, v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    p.multiplicities.assign(largest + 1, 0);
    for (unsigned v : parts) ++p.multiplicities[v];
    p.parts = std::move(parts);
    return p;
}

Rational binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) throw ArgumentError("binomial: negative k");
    return falling_factorial(Rational(n), static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k));
}

Poly binomial(const Poly& p, std::int64_t k) {
    if (k < 0) throw ArgumentError("binomial: negative k");
    return falling_factorial(p, static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k));
}

Rational falling_factorial(const Rational& a, unsigned n) {
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) r *= a - Rational(i);
    return r;
}

Poly falling_factorial(const Poly& a, unsigned n) {
    Poly r(1);
    for (unsigned i = 0; i < n; ++i) r *= a - Poly(Rational(i));
    return r;
}

namespace {

void enumerate(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_parts(cur));
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(unsigned i) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    enumerate(i, i, cur, out);
    return out;
}

Rational partition_coefficient(const Partition& lambda) {
    if (lambda.parts.empty()) throw ArgumentError("partition_coefficient: empty partition");
    Rational d = factorial(lambda.total());
    for (std::size_t j = 1; j < lambda.multiplicities.size(); ++j) {
        unsigned r = lambda.multiplicities[j];
        if (r == 0) continue;
        d /= factorial(r) * factorial(static_cast<unsigned>(j)).pow(r);
    }
    return d;
}

namespace {

template <class T>
T bell_partial_impl(unsigned i, unsigned j, const std::vector<T>& a) {
    if (j < 1 || j > i) throw ArgumentError("bell_partial: need 1 <= j <= i");
    if (a.size() < i - j + 1) throw ArgumentError("bell_partial: not enough arguments");
    // B[n][k] over n <= i, k <= j via B_{n,k} = sum_m C(n-1,m-1) a_m B_{n-m,k-1}.
    std::vector<std::vector<T>> B(i + 1, std::vector<T>(j + 1, T(0)));
    B[0][0] = T(1);
    for (unsigned k = 1; k <= j; ++k)
        for (unsigned n = k; n <= i; ++n) {
            T acc(0);
            for (unsigned m = 1; m + (k - 1) <= n && m <= a.size(); ++m) {
                const T& prev = B[n - m][k - 1];
                if (prev == T(0)) continue;
                acc += binomial(n - 1, m - 1) * (a[m - 1] * prev);
            }
            B[n][k] = acc;
        }
    return B[i][j];
}

} // namespace

Rational bell_partial(unsigned i, unsigned j, const std::vector<Rational>& a) {
    return bell_partial_impl(i, j, a);
}

Poly bell_partial(unsigned i, unsigned j, const std::vector<Poly>& a) {
    return bell_partial_impl(i, j, a);
}

Rational bell_complete(unsigned i, const std::vector<Rational>& a) {
    if (i < 1) throw ArgumentError("bell_complete: need i >= 1");
    Rational y;
    for (unsigned j = 1; j <= i; ++j) y += bell_partial(i, j, a);
    return y;
}

std::vector<std::vector<Poly>> bell_partial_table(unsigned n, const std::vector<Poly>& moments) {
    if (moments.size() < n + 1 && n > 0)
        throw OrderMismatchError("bell_partial_table: not enough moments");
    std::vector<std::vector<Poly>> B(n + 1, std::vector<Poly>(n + 1));
    B[0][0] = Poly(1);
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned i = k; i <= n; ++i) {
            Poly acc;
            for (unsigned m = 1; m + (k - 1) <= i; ++m) {
                const Poly& prev = B[i - m][k - 1];
                if (prev.is_zero() || moments[m].is_zero()) continue;
                acc += binomial(i - 1, m - 1) * (moments[m] * prev);
            }
            B[i][k] = std::move(acc);
        }
    return B;
}

namespace {

// Both triangles are small and immutable once computed; they are grown lazily
// under a mutex so concurrent callers stay safe.
struct StirlingTables {
    std::mutex mu;
    std::vector<std::vector<Rational>> second{{Rational(1)}};
    std::vector<std::vector<Rational>> first{{Rational(1)}};

    Rational get(bool is_first, unsigned n, unsigned k) {
        if (k > n) return Rational(0);
        std::lock_guard lock(mu);
        auto& t = is_first ? first : second;
        while (t.size() <= n) {
            unsigned m = static_cast<unsigned>(t.size());
            const auto& prev = t.back();
            std::vector<Rational> row(m + 1);
            for (unsigned j = 1; j <= m; ++j) {
                Rational left = prev[j - 1];
                Rational right = j < m ? prev[j] : Rational(0);
                row[j] = is_first ? left - Rational(m - 1) * right : left + Rational(j) * right;
            }
            t.push_back(std::move(row));
        }
        return t[n][k];
    }
};

StirlingTables& tables() {
    static StirlingTables t;
    return t;
}

} // namespace

Rational stirling_second_classical(unsigned n, unsigned k) { return tables().get(false, n, k); }

Rational stirling_first_classical(unsigned n, unsigned k) { return tables().get(true, n, k); }

} // namespace umbral
