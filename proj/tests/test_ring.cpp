#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "slq/ring.hpp"

using namespace slq;

namespace {

Poly random_poly(std::mt19937_64& rng, int terms = 4) {
    std::uniform_int_distribution<int> ex(-3, 3), co(-9, 9), den(1, 5), var(0, kNumVars - 1);
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Exp e{};
        e[var(rng)] = ex(rng);
        e[var(rng)] += ex(rng);
        p += Poly::monomial(e, rational(co(rng), den(rng)));
    }
    return p;
}

ParamPoint random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 7);
    ParamPoint at;
    for (int v = 0; v < kNumVars; ++v) at.set(static_cast<Var>(v), Rational(num(rng), den(rng)));
    return at;
}

} // namespace

TEST(Ring, MonomialCancellation) { EXPECT_EQ(qv(1) * qv(-1), Poly(1)); }

TEST(Ring, LambdaTimesSum) { EXPECT_EQ(lambda() * (qv(1) + qv(-1)), qv(2) - qv(-2)); }

TEST(Ring, AdditiveIdentity) {
    Poly p = qv(3) * sv(-1) + Poly(Rational(2, 3));
    EXPECT_EQ(p + Poly(), p);
}

TEST(Ring, QNumberExamples) {
    EXPECT_TRUE(qnum(0).is_zero());
    EXPECT_EQ(qnum(1), Poly(1));
    EXPECT_EQ(qnum(3), qv(2) + Poly(1) + qv(-2));
    EXPECT_EQ(qnum(-2), -(qv(1) + qv(-1)));
}

TEST(Ring, QNumberRecurrence) {
    for (int n = -5; n <= 5; ++n) EXPECT_EQ(qnum(n + 1), (qv(1) + qv(-1)) * qnum(n) - qnum(n - 1)) << "n=" << n;
}

TEST(Ring, DivideLambdaExamples) {
    EXPECT_EQ(divide_lambda_power(qv(2) - qv(-2), 1), qv(1) + qv(-1));
    EXPECT_TRUE(divide_lambda_power(Poly(), 5).is_zero());
    try {
        divide_lambda_power(qv(1), 1);
        FAIL() << "expected NotDivisible";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotDivisible);
    }
}

TEST(Ring, DivideLambdaRoundTrip) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(rng);
        unsigned k = trial % 6;
        EXPECT_EQ(divide_lambda_power(p * lambda().pow(static_cast<int>(k)), k), p);
    }
}

TEST(Ring, DivideExactQ) {
    Poly den = qnum(2) * qnum(3);
    Poly quo = qv(-4) + Poly(Rational(3, 2)) * qv(2);
    EXPECT_EQ(divide_exact_q(quo * den, den), quo);
    EXPECT_THROW(divide_exact_q(qv(1) + Poly(1), qnum(2)), Error);
    EXPECT_THROW(divide_exact_q(sv(1), qnum(2)), Error);
}

TEST(Ring, SpecializeExamples) {
    EXPECT_EQ(specialize_exact(qv(1) + qv(-1), ParamPoint::ones()), Rational(2));
    EXPECT_EQ(specialize_exact(qnum(3), ParamPoint::ones().set(Q, 2)), Rational(21, 4));
    try {
        specialize_exact(qv(-1), ParamPoint::ones().set(Q, 0));
        FAIL() << "expected ZeroToNegativePower";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroToNegativePower);
    }
    EXPECT_THROW(specialize_float(qv(-2), ParamPoint::float_point({0, 1, 1, 1, 1})), Error);
}

TEST(RingProperty, Axioms) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(RingProperty, SpecializeIsHomomorphism) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(rng), b = random_poly(rng);
        ParamPoint at = random_point(rng);
        EXPECT_EQ(specialize_exact(a * b, at), specialize_exact(a, at) * specialize_exact(b, at));
        EXPECT_EQ(specialize_exact(a + b, at), specialize_exact(a, at) + specialize_exact(b, at));
        ParamPoint fp = ParamPoint::float_point(at.fl);
        double prod = specialize_float(a * b, fp), ref = specialize_float(a, fp) * specialize_float(b, fp);
        EXPECT_LE(std::abs(prod - ref), 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST(Ring, CanonicalFormIsEquality) {
    // (q + s)^2 built two ways.
    Poly a = (qv(1) + sv(1)).pow(2);
    Poly b = qv(2) + Poly(2) * qv(1) * sv(1) + sv(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.to_string(), b.to_string());
}

TEST(Ring, PowAndSubstitute) {
    EXPECT_EQ(qv(1).pow(-3), qv(-3));
    EXPECT_EQ((qv(1) + Poly(1)).pow(0), Poly(1));
    Poly p = Poly::var(Q13) * Poly::var(Q12, -1);
    EXPECT_EQ(p.substitute(Q13, -sv(1)).substitute(Q12, sv(1)), Poly(-1));
}

TEST(Ring, ParseRational) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Ring, NonCanonicalInputIsNormalized) {
    EXPECT_EQ(Poly(Rational(6, 4)), Poly(rational(3, 2)));
    EXPECT_EQ(Poly::monomial(Exp{1, 0, 0, 0, 0}, Rational(-4, 2)), Poly(-2) * qv(1));
}
