#pragma once

#include <string>
#include <utility>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/sheffer.hpp"
#include "umbral/umbra.hpp"

namespace umbral {

// A quantity computed by two independent routes.
struct DualValue {
    Poly formula;   // the closed umbral formula
    Poly reference; // the route it is checked against
    bool agree() const { return formula == reference; }
};

// B_0..B_N from sum_{k<n} C(n,k) B_k = 0 (n >= 2), so B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned N);

// p_n(x) = x (x - n.gamma)^{n-1}, with -n.gamma given by f(gamma,t)^{-n}; p_0 = 1.
// gamma must have order >= N.
PolySequence abel_polynomials(const Umbra& gamma, unsigned N);

// formula: E[(-n.gamma)^{n-1}]; reference: moment n of comp_inverse(gamma_D).
DualValue lagrange_inversion(const Umbra& gamma, unsigned n);
// formula: E[(-n.gamma_bar)^{n-1}]; reference: g_1^n times moment n of gamma^{<-1>}.
DualValue lagrange_inversion_general(const Umbra& gamma, unsigned n);

// C(n,k) E[(-k.iota)^{n-k}] with iota the Bernoulli umbra.
Rational stirling_second_umbral(unsigned n, unsigned k);
// C(n,k) E[(k.(iota.chi))^{n-k}].
Rational stirling_first_umbral(unsigned n, unsigned k);

// c_n(x; a) = a^{-n} sum_k C(n,k) (-a)^{n-k} (x)_k; a = 0 throws.
Poly poisson_charlier(unsigned n, const Rational& a);

// Phi_n(x) = sum_i S(n,i) x^i, n = 0..N.
PolySequence exponential_polynomials(unsigned N);

// Named pairs used throughout the examples, all truncated at order N.
ShefferPair power_pair(unsigned N);                                  // (eps, chi): x^n
ShefferPair factorial_pair(unsigned N);                              // (eps, u): (x)_n
ShefferPair exponential_pair(unsigned N);                            // (eps, uinv): Phi_n
ShefferPair poisson_charlier_pair(const Rational& a, unsigned N);    // (a.bell, chi.a.bell)
ShefferPair bernoulli_pair(unsigned N);                              // (-1.bern, chi): Bernoulli polys

// (x+y)^n = sum_k C(n,k) y(y - k.gamma)^{k-1} (x + k.gamma)^{n-k} for n <= N, with
// the k = 0 term read as x^n.
IdentityReport abel_identity_check(const Umbra& gamma, unsigned N);

struct AbelExpansion {
    std::vector<Poly> coefficients; // E[p^{(k)}(k.gamma)] / k!
    Poly reconstruction;            // sum_k coefficient_k * x(x - k.gamma)^{k-1}
    bool exact = false;             // reconstruction == p
};
AbelExpansion polynomial_expand_abel(const Poly& p, const Umbra& gamma);

// formula: sum_k C(n,k) E[(k.gamma)^{n-k}] x^k; reference: moment n of x.beta.gamma_D.
DualValue bell_expansion(const Umbra& gamma, unsigned n);
// For g_1 != 0: formula sum_k C(n,k) g_1^k E[(k.gamma_bar)^{n-k}] x^k;
// reference: moment n of x.beta.gamma.
DualValue bell_expansion_general(const Umbra& gamma, unsigned n);

// delta_bar, with f(delta_bar, t) = 1 / (1 - t - t^2): moments k! Fib(k).
Umbra fibonacci_bar_umbra(unsigned N);
// Moments Fib(k) = 1, 1, 2, 3, 5, ...
Umbra fibonacci_umbra(unsigned N);

struct RecurrenceReport {
    std::string name;
    PolySequence solution;
    std::vector<IdentityReport> checks;
    // Values that are computed and shown but deliberately not asserted.
    std::vector<std::pair<std::string, std::string>> observations;

    bool passed() const;
};

// s_n(x+1) = s_n(x) + s_{n-1}(x) with int_0^1 s_n = 1:
// s_n(x) = E[((iota + ubar.beta + x.u).chi)^n] / n!.
RecurrenceReport recurrence_example_bernoulli(unsigned N);
// s_n(x) = s_n(x-1) + s_{n-1}(x) with s_n(1-n) = sum_{i<n} s_i(n-2i), s_0 = 1.
RecurrenceReport recurrence_example_backward(unsigned N);
// F_n(m) = F_n(m-1) + F_{n-1}(m-2): solution F_n(x+n) = sum_k C(x+k, n-k).
RecurrenceReport recurrence_example_fibonacci(unsigned N);

} // namespace umbral
