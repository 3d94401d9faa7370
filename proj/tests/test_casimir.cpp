#include <gtest/gtest.h>

#include "slq/casimir.hpp"

using namespace slq;

namespace {

bool all_pass(const std::vector<Check>& cs, std::string* first = nullptr) {
    for (const auto& c : cs)
        if (!c.pass) {
            if (first) *first = c.name;
            return false;
        }
    return true;
}

bool is_scalar(const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i == j ? m(i, j) != m(0, 0) : !m(i, j).is_zero()) return false;
    return true;
}

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no slq::Error thrown";
    return Errc{};
}

} // namespace

TEST(Casimir, FundamentalIsScalar) {
    // The fundamental representation is irreducible, so every Casimir acts as a scalar.
    for (int p = 2; p <= 4; ++p)
        EXPECT_TRUE(is_scalar(casimir_rep(CasimirSpec::classical(p), 1, HopfVariant::ClassicalPrimitive))) << p;
    for (int p = -1; p <= 3; ++p)
        for (auto v : {HopfVariant::FermionicStandard, HopfVariant::DistinguishedNatural})
            EXPECT_TRUE(is_scalar(casimir_rep(CasimirSpec::quantum(p), 1, v))) << p;
}

TEST(Casimir, FundamentalValuesVanish) {
    // The fundamental of sl(2|1) is atypical with zero Casimir eigenvalue.
    EXPECT_TRUE(casimir_rep(CasimirSpec::classical(2), 1, HopfVariant::ClassicalPrimitive).is_zero());
    EXPECT_TRUE(frt_casimir(1, 1).is_zero());
    EXPECT_TRUE(frt_casimir(3, 1).is_zero());
}

TEST(Casimir, QuantumReducesToClassicalAtOne) {
    for (int p = 0; p <= 3; ++p) {
        EXPECT_TRUE(quantum_limit_check(p, 1).pass) << p;
        EXPECT_TRUE(quantum_limit_check(p, 2).pass) << p;
    }
}

TEST(Centrality, Examples) {
    std::string first;
    EXPECT_TRUE(all_pass(centrality_check(CasimirSpec::classical(3), 2, HopfVariant::ClassicalPrimitive), &first)) << first;
    EXPECT_TRUE(all_pass(centrality_check(CasimirSpec::quantum(1), 2, HopfVariant::FermionicStandard), &first)) << first;
    EXPECT_TRUE(all_pass(centrality_check(CasimirSpec::quantum(2), 2, HopfVariant::DistinguishedNatural), &first)) << first;
    EXPECT_TRUE(all_pass(centrality_check(CasimirSpec::quantum(0), 3, HopfVariant::FermionicStandard), &first)) << first;
    EXPECT_TRUE(all_pass(centrality_check(CasimirSpec::frt(2), 2, HopfVariant::FermionicStandard), &first)) << first;
}

TEST(Centrality, PerturbedCasimirFails) {
    EXPECT_TRUE(perturbed_casimir_counterexample(Family::ClassicalP, 2, 2).pass);
    EXPECT_TRUE(perturbed_casimir_counterexample(Family::QuantumP, 1, 2).pass);
}

TEST(Quadratic, Relations) {
    EXPECT_TRUE(quadratic_relation_check(0, 3, 1, 2, Family::QuantumP, 2, HopfVariant::FermionicStandard).pass);
    EXPECT_TRUE(quadratic_relation_check(0, 3, 1, 2, Family::QuantumP, 2, HopfVariant::DistinguishedNatural).pass);
    EXPECT_TRUE(quadratic_relation_check(2, 4, 3, 3, Family::ClassicalP, 2, HopfVariant::ClassicalPrimitive).pass);
    EXPECT_EQ(code_of([] { quadratic_relation_check(0, 3, 1, 1, Family::QuantumP, 2, HopfVariant::FermionicStandard); }),
              Errc::IndexSumMismatch);
}

TEST(Limits, ClassicalFromLambdaCombination) {
    for (int p = 2; p <= 4; ++p) {
        Check c = classical_limit_check(p, 2);
        EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    }
}

TEST(Limits, WeylWitness) {
    for (int p = 1; p <= 3; ++p) EXPECT_TRUE(weyl_witness(p).pass) << p;
}

TEST(FrtCasimir, SeedAndConstraints) {
    XkCoefficients x = xk_coefficients(1), s = xk_seed();
    EXPECT_EQ(x.a, s.a);
    EXPECT_EQ(x.f, s.f);
    for (int k = 1; k <= 6; ++k) {
        XkCoefficients y = xk_coefficients(k);
        EXPECT_TRUE(ckrel_holds(y)) << k;
        EXPECT_TRUE(fkrel_holds(y)) << k;
    }
}

TEST(FrtCasimir, AlphaValues) {
    const std::map<Var, Rational> one{{Q, Rational(1)}};
    EXPECT_EQ(partial_specialize(alpha(1), one), Poly(0));
    EXPECT_EQ(partial_specialize(alpha(2), one), Poly(2));
    EXPECT_EQ(alpha(1) * qnum(2) * qnum(3), qv(-3) * (qnum(4) - qv(3) * qnum(2) * qnum(2)));
}

TEST(FrtCasimir, ChecksUpToFour) {
    for (int k = 1; k <= 4; ++k) {
        std::string first;
        EXPECT_TRUE(all_pass(frt_casimir_checks(k), &first)) << k << " " << first;
    }
}

TEST(CasimirErrors, Codes) {
    EXPECT_EQ(code_of([] { casimir_rep(CasimirSpec::classical(2), 1, HopfVariant::FermionicStandard); }), Errc::BadVariant);
    EXPECT_EQ(code_of([] { casimir_rep(CasimirSpec::quantum(1), 1, HopfVariant::ClassicalPrimitive); }), Errc::BadVariant);
    EXPECT_EQ(code_of([] { casimir_rep(CasimirSpec::frt(1), 1, HopfVariant::DistinguishedNatural); }), Errc::BadVariant);
    EXPECT_EQ(code_of([] { classical_casimir(fundamental_rep(Deformation::Classical), 1); }), Errc::BadIndex);
    EXPECT_EQ(code_of([] { frt_casimir(0, 1); }), Errc::BadIndex);
    EXPECT_EQ(code_of([] { frt_casimir(1, 3); }), Errc::UnsupportedL);
    EXPECT_EQ(code_of([] { alpha(0); }), Errc::BadIndex);
}
