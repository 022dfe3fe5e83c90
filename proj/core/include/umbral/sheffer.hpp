#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/umbra.hpp"

namespace umbral {

// (alpha, gamma) generating the Sheffer sequence (-1.alpha + x.u).gamma*.
// gamma must have a nonzero constant first moment; both umbrae share one order.
struct ShefferPair {
    ShefferPair(Umbra alpha, Umbra gamma);

    unsigned order() const { return alpha.order(); }

    Umbra alpha;
    Umbra gamma;
};

// Polynomials s_0(x), ..., s_N(x) with a description of where they came from.
struct PolySequence {
    std::vector<Poly> polys;
    std::string tag;

    std::size_t size() const { return polys.size(); }
    const Poly& operator[](std::size_t n) const { return polys.at(n); }
    std::vector<Poly> truncate_to(unsigned N) const {
        return {polys.begin(), polys.begin() + std::min<std::size_t>(N + 1, polys.size())};
    }
    friend bool operator==(const PolySequence& a, const PolySequence& b) { return a.polys == b.polys; }
};

using Matrix = std::vector<std::vector<Rational>>;

// x^n for n = 0..N.
PolySequence power_sequence(unsigned N);

// s_n(x) = n! [t^n] e^{x r(t)} / f(alpha, r(t)), r = revert(f(gamma,t) - 1).
PolySequence sheffer_moments(const ShefferPair& pair);
// Same sequence through the umbral route: (-1.alpha + x.u) . gamma*.
PolySequence sheffer_moments_umbral(const ShefferPair& pair);

// Moments of x.gamma*, by generating function.
PolySequence associated_moments(const Umbra& gamma);
PolySequence associated_moments_umbral(const Umbra& gamma);

// Moments of -1.alpha + x.u.
PolySequence appell_moments(const Umbra& alpha);

// sum_k s_{n,k} r_k(x) for every n.
PolySequence umbral_compose(const PolySequence& s, const PolySequence& r);

// Sheffer sequence for (-1.alpha.gamma*, gamma^{<-1>}).
PolySequence inverse_sequence(const ShefferPair& pair);
ShefferPair inverse_pair(const ShefferPair& pair);

// c with s_n = sum_k c_{n,k} r_k, by back substitution on triangular sequences.
Matrix connection_constants_solve(const PolySequence& s, const PolySequence& r);
// The same coefficients read off the moments of
// [(delta - 1.alpha).zeta* + x.u] . (gamma.beta.zeta^{<-1>})*,
// where `from` = (alpha, gamma) and `to` = (delta, zeta).
Matrix connection_constants_umbral(const ShefferPair& from, const ShefferPair& to);

struct ConnectionReport {
    Matrix solve;
    Matrix umbral;
    bool verified = false;
};
ConnectionReport connection_constants_report(const ShefferPair& from, const ShefferPair& to);
// Returns the matrix; throws ConsistencyError if the two routes disagree.
Matrix connection_constants(const ShefferPair& from, const ShefferPair& to);

// Outcome of an exact polynomial identity check over n = 0..N.
struct IdentityReport {
    std::string identity;
    unsigned checked_up_to = 0;
    bool passed = true;
    std::optional<unsigned> failed_n;
    std::string failed_monomial; // "x^a*y^b" of the first differing coefficient
    std::string note;
};

// s_n(x+y) = sum_k C(n,k) s_k(x) p_{n-k}(y), p associated to gamma.
IdentityReport check_sheffer_identity(const ShefferPair& pair, unsigned N);
// p_n(x+y) = sum_k C(n,k) p_k(x) p_{n-k}(y).
IdentityReport check_binomial_identity(const Umbra& gamma, unsigned N);
// p_n(x+y) = sum_k C(n,k) p_k(x) y^{n-k}.
IdentityReport check_appell_identity(const Umbra& alpha, unsigned N);
// s_k evaluated at gamma + x.u equals s_k + k s_{k-1}.
IdentityReport check_derivative_characterization(const ShefferPair& pair, unsigned N);
// (x.gamma*)^{n+1} = x gamma^{<-1>} [(x + chi).gamma*]^n. For gamma = chi both
// chi occurrences are read as the same umbra and the identity is asserted; for
// any other gamma the factors are taken uncorrelated and the outcome is only
// reported (passed reflects the comparison, note says it is informational).
IdentityReport check_associated_recurrence(const Umbra& gamma, unsigned N);

// Compare two sequences entry by entry; fills the report's failure fields.
IdentityReport compare_sequences(const std::string& identity, const std::vector<Poly>& lhs,
                                 const std::vector<Poly>& rhs);

} // namespace umbral
