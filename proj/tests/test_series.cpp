#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbral/error.hpp"
#include "umbral/series.hpp"

using namespace umbral;

namespace {

TruncatedEGF from_ogf(const oracle::Ogf& c) {
    std::vector<Poly> p;
    for (const auto& v : c) p.emplace_back(v);
    return TruncatedEGF(p);
}

oracle::Ogf to_ogf(const TruncatedEGF& f) {
    oracle::Ogf c;
    for (const auto& p : f.coeffs()) c.push_back(p.constant_value());
    return c;
}

oracle::Ogf random_series(std::mt19937& rng, unsigned N, Rational c0, Rational c1) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    oracle::Ogf c(N + 1);
    c[0] = c0;
    c[1] = c1;
    for (unsigned n = 2; n <= N; ++n) c[n] = Rational(num(rng), den(rng));
    return c;
}

} // namespace

TEST(Series, ExpOfTIsAllOnesMoments) {
    const auto m = moments_from_egf(TruncatedEGF::exp_t(8));
    for (const auto& v : m) EXPECT_EQ(v, Poly(1));
    EXPECT_EQ(egf_from_moments(m), TruncatedEGF::exp_t(8));
}

TEST(Series, MultiplicationMatchesCauchyProduct) {
    std::mt19937 rng(7);
    const auto a = random_series(rng, 8, 2, 3), b = random_series(rng, 8, -1, 5);
    EXPECT_EQ(to_ogf(egf_mul(from_ogf(a), from_ogf(b))), oracle::ogf_mul(a, b, 8));
}

TEST(Series, ReciprocalAndSingular) {
    std::mt19937 rng(11);
    const auto a = random_series(rng, 10, Rational(3, 2), 1);
    EXPECT_EQ(egf_mul(from_ogf(a), egf_reciprocal(from_ogf(a))), TruncatedEGF::one(10));
    EXPECT_THROW(egf_reciprocal(TruncatedEGF::t(5)), SingularSeriesError);
}

TEST(Series, CompositionMatchesNaiveSubstitution) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const auto outer = random_series(rng, 9, 1, 2);
        auto inner = random_series(rng, 9, 0, -1);
        EXPECT_EQ(to_ogf(egf_compose(from_ogf(outer), from_ogf(inner))), oracle::ogf_compose(outer, inner, 9));
    }
    EXPECT_THROW(egf_compose(TruncatedEGF::exp_t(4), TruncatedEGF::exp_t(4)), ArgumentError);
}

TEST(Series, ReversionOfExpMinusOneIsLog) {
    const unsigned N = 10;
    TruncatedEGF h = TruncatedEGF::exp_t(N) - TruncatedEGF::one(N);
    const auto r = to_ogf(egf_revert(h));
    // log(1+t) = sum (-1)^{n-1} t^n / n
    EXPECT_EQ(r[0], Rational(0));
    for (unsigned n = 1; n <= N; ++n) EXPECT_EQ(r[n], Rational(n % 2 ? 1 : -1, n));
    EXPECT_THROW(egf_revert(from_ogf({0, 0, 1})), NotInvertibleError);
}

TEST(Series, RandomReversionsComposeToIdentity) {
    std::mt19937 rng(2024);
    const unsigned N = 12;
    oracle::Ogf t(N + 1);
    t[1] = Rational(1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = random_series(rng, N, 0, Rational(trial + 1, 3));
        const auto r = to_ogf(egf_revert(from_ogf(h)));
        EXPECT_EQ(oracle::ogf_compose(h, r, N), t);
        EXPECT_EQ(oracle::ogf_compose(r, h, N), t);
    }
}

TEST(Series, LogExpAndPowers) {
    std::mt19937 rng(5);
    const unsigned N = 9;
    const auto f = from_ogf(random_series(rng, N, 1, 2));
    EXPECT_EQ(egf_exp(egf_log(f)), f);
    const auto cube = egf_mul(egf_mul(f, f), f);
    EXPECT_EQ(egf_power(f, Poly(3)), cube);
    const auto half = egf_power(f, Poly(Rational(1, 2)));
    EXPECT_EQ(egf_mul(half, half), f);
    EXPECT_EQ(egf_mul(egf_power(f, Poly(-1)), f), TruncatedEGF::one(N));
    // (e^t)^x = e^{xt}: coefficient of t^n is x^n / n!.
    const auto ext = egf_power(TruncatedEGF::exp_t(6), Poly::x());
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(ext[n], Poly::x().pow(n) / oracle::fact(n));
}

TEST(Series, ShiftAndDerivative) {
    const auto f = from_ogf({1, 2, 3, 4});
    EXPECT_EQ(to_ogf(egf_derivative(f)), (oracle::Ogf{2, 6, 12, 0}));
    EXPECT_EQ(to_ogf(egf_shift(f)), (oracle::Ogf{0, 1, 2, 3}));
}

TEST(Series, MismatchedOrdersThrow) {
    EXPECT_THROW(egf_mul(TruncatedEGF::exp_t(3), TruncatedEGF::exp_t(4)), OrderMismatchError);
    EXPECT_THROW(TruncatedEGF::exp_t(3) + TruncatedEGF::exp_t(4), OrderMismatchError);
}
