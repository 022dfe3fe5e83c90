#pragma once

#include <cstdint>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

// Integer partition, parts weakly decreasing. multiplicities[j] counts the parts
// equal to j (index 0 unused); length is the number of parts.
struct Partition {
    std::vector<unsigned> parts;
    std::vector<unsigned> multiplicities;

    unsigned length() const { return static_cast<unsigned>(parts.size()); }
    unsigned total() const;

    static Partition from_parts(std::vector<unsigned> parts);
    friend bool operator==(const Partition&, const Partition&) = default;
};

// C(n, k) = n(n-1)...(n-k+1)/k! for any integer n; negative k throws.
Rational binomial(std::int64_t n, std::int64_t k);
// Generalized binomial C(p, k) = (p)_k / k! for a polynomial argument.
Poly binomial(const Poly& p, std::int64_t k);

Rational falling_factorial(const Rational& a, unsigned n);
Poly falling_factorial(const Poly& a, unsigned n);

// All partitions of i in reverse-lexicographic order: (4), (3,1), (2,2), ...
std::vector<Partition> partitions_of(unsigned i);

// i! / prod_j (r_j! (j!)^{r_j}); throws on the empty partition.
Rational partition_coefficient(const Partition& lambda);

// Partial Bell polynomial B_{i,j}. a[m-1] holds a_m, so a must supply at least
// a_1..a_{i-j+1}.
Rational bell_partial(unsigned i, unsigned j, const std::vector<Rational>& a);
Poly bell_partial(unsigned i, unsigned j, const std::vector<Poly>& a);

// Complete Bell polynomial Y_i = sum_j B_{i,j}.
Rational bell_complete(unsigned i, const std::vector<Rational>& a);

// Full triangle B[i][j] for 0 <= j <= i <= n. Here `moments` is indexed by power
// (moments[m] = a_m, moments[0] ignored), which is how the umbra code stores them.
std::vector<std::vector<Poly>> bell_partial_table(unsigned n, const std::vector<Poly>& moments);

Rational stirling_second_classical(unsigned n, unsigned k);
// Signed: s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
Rational stirling_first_classical(unsigned n, unsigned k);

inline Poly poly_derivative(const Poly& p, Var v) { return p.derivative(v); }
inline Poly poly_definite_integral(const Poly& p, Var v, const Rational& lo, const Rational& hi) {
    return p.definite_integral(v, lo, hi);
}

} // namespace umbral
