#include <gtest/gtest.h>

#include <random>

#include "slq/chain.hpp"

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

using K = HamiltonianKind;

// 1-based entry access, matching the printed matrices.
const Poly& at(const PolyMatrix& m, std::size_t i, std::size_t j) { return m(i - 1, j - 1); }

} // namespace

TEST(ClosedForm, Entries) {
    EXPECT_EQ(at(closed_form(K::Classical), 5, 5), Poly(2));
    EXPECT_EQ(at(closed_form(K::FermionicDeformed), 2, 4), sv(-1));
    EXPECT_EQ(at(closed_form(K::FermionicDeformed), 7, 3), -sv(1));
    EXPECT_EQ(at(closed_form(K::DistinguishedDeformed), 2, 2), qv(1));
    EXPECT_EQ(at(closed_form(K::FourParam), 3, 7), Poly::var(Q13, -1));
    EXPECT_TRUE(at(closed_form(K::FourParam), 1, 1).is_zero());
    EXPECT_TRUE(at(closed_form(K::FourParam), 9, 9).is_zero());
}

TEST(ClosedForm, FermionicIsFourParamAtMinusS) {
    PolyMatrix h = closed_form(K::FourParam);
    h = substitute_matrix(substitute_matrix(substitute_matrix(h, Q12, sv(1)), Q13, -sv(1)), Q23, sv(1));
    EXPECT_EQ(h, closed_form(K::FermionicDeformed));
}

TEST(ClosedForm, KindNamesRoundTrip) {
    for (auto k : {K::Classical, K::FermionicDeformed, K::DistinguishedDeformed, K::FourParam})
        EXPECT_EQ(parse_kind(kind_name(k)), k);
    EXPECT_THROW(parse_kind("xxz"), Error);
}

TEST(Chain, TraceIsSumOfBondTraces) {
    // tr H^(1..L) = (L - 1) 3^(L-2) tr h.
    for (auto k : {K::Classical, K::FermionicDeformed})
        for (unsigned L : {2u, 3u, 4u}) {
            const PolyMatrix h = closed_form(k);
            EXPECT_EQ(trace(l_site_hamiltonian(h, L)), Poly(static_cast<long>((L - 1) * ipow(3, L - 2))) * trace(h));
        }
    EXPECT_THROW(l_site_hamiltonian(closed_form(K::Classical), 1), Error);
}

TEST(Fermionic, ExpansionsReassemble) {
    EXPECT_TRUE(all_pass(realization_check()));
    for (auto k : {K::Classical, K::FermionicDeformed, K::DistinguishedDeformed, K::FourParam})
        EXPECT_TRUE(fermionic_check(k).pass) << kind_name(k);
}

TEST(Invariance, MatchedVariants) {
    for (auto k : {K::Classical, K::FermionicDeformed, K::DistinguishedDeformed})
        for (unsigned L : {2u, 3u}) {
            std::string first;
            EXPECT_TRUE(all_pass(invariance_check(k, matched_variant(k), L), &first)) << kind_name(k) << " " << first;
        }
}

TEST(Invariance, CrossVariantFails) {
    EXPECT_FALSE(all_pass(invariance_check(K::FermionicDeformed, HopfVariant::DistinguishedNatural, 2)));
    EXPECT_FALSE(all_pass(invariance_check(K::DistinguishedDeformed, HopfVariant::FermionicStandard, 2)));
}

TEST(Hecke, DeformedBothShifts) {
    for (auto k : {K::FermionicDeformed, K::DistinguishedDeformed}) {
        HeckeResult a = hecke_check(closed_form(k), HeckeShift::Q), b = hecke_check(closed_form(k), HeckeShift::QInverse);
        EXPECT_TRUE(a.pass()) << kind_name(k);
        EXPECT_TRUE(b.pass()) << kind_name(k);
        EXPECT_EQ(a.sign, -b.sign);
    }
    EXPECT_TRUE(hecke_check(closed_form(K::Classical), HeckeShift::Q, true).pass());
}

TEST(Hecke, RandomMatrixFails) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-3, 3);
    PolyMatrix m(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i; j < 9; ++j) m(i, j) = m(j, i) = Poly(d(rng));
    EXPECT_FALSE(hecke_check(m, HeckeShift::Q).pass());
}

TEST(RHat, FermionicHamiltonianIsAffineInRh) {
    auto fit = proportional_to_rhat_plus_id(closed_form(K::FermionicDeformed), r_hat_fermionic());
    ASSERT_TRUE(fit.has_value());
    EXPECT_TRUE(fit->d.is_zero());
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-3, 3);
    PolyMatrix m(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i; j < 9; ++j) m(i, j) = m(j, i) = Poly(d(rng));
    EXPECT_FALSE(proportional_to_rhat_plus_id(m, r_hat_fermionic()).has_value());
}

TEST(Normalization, LambdaFreeFormHolds) {
    const PolyMatrix Hf = closed_form(K::FermionicDeformed);
    for (int p = -1; p <= 2; ++p) {
        PolyMatrix C = two_site_hamiltonian(CasimirSpec::quantum(p), HopfVariant::FermionicStandard);
        EXPECT_EQ(C, -(qv(3 - 6 * p) * Hf)) << p;
    }
}

// The lambda^2 normalization is not what the Casimirs give; this pins the discrepancy.
TEST(Normalization, LambdaSquaredFormDoesNotHold) {
    const PolyMatrix Hf = closed_form(K::FermionicDeformed);
    PolyMatrix C = two_site_hamiltonian(CasimirSpec::quantum(1), HopfVariant::FermionicStandard);
    EXPECT_NE(C, -(qv(-3) * lambda() * lambda() * Hf));
}

TEST(Normalization, DistinguishedAndClassical) {
    for (int p = 0; p <= 2; ++p) {
        PolyMatrix C = two_site_hamiltonian(CasimirSpec::quantum(p), HopfVariant::DistinguishedNatural);
        EXPECT_EQ(C, -(qv(3 - 6 * p) * closed_form(K::DistinguishedDeformed))) << p;
    }
    for (int p = 2; p <= 4; ++p) {
        PolyMatrix C = two_site_hamiltonian(CasimirSpec::classical(p), HopfVariant::ClassicalPrimitive);
        Poly coeff(-static_cast<long>(ipow(3, p - 2)));
        EXPECT_EQ(C, coeff * closed_form(K::Classical)) << p;
    }
}

TEST(Similarity, ReducesToIsotropic) {
    for (unsigned L : {2u, 3u}) {
        EXPECT_TRUE(similarity_four_param(L).pass) << L;
        EXPECT_TRUE(similarity_fermionic(L).pass) << L;
        EXPECT_TRUE(similarity_involution(L).pass) << L;
        EXPECT_TRUE(similarity_perk_schultz(L).pass) << L;
    }
}

TEST(Similarity, OccupationExponents) {
    // |0 1 2>: one (0,1), one (1,2), one (0,2) pair.
    EXPECT_EQ(occupation_exponents(0 * 9 + 1 * 3 + 2, 3), (std::array<int, 3>{1, 1, 1}));
    EXPECT_EQ(occupation_exponents(2 * 9 + 1 * 3 + 0, 3), (std::array<int, 3>{0, 0, 0}));
}

TEST(Commutant, TwoDimensional) {
    std::mt19937_64 rng(20240611);
    for (auto v : {HopfVariant::FermionicStandard, HopfVariant::DistinguishedNatural, HopfVariant::ClassicalPrimitive}) {
        CommutantResult r = invariant_commutant(v, rng);
        EXPECT_TRUE(r.pass()) << variant_name(v) << " dim " << r.dimension;
    }
}

TEST(Spectra, FermionicVsDistinguishedSmall) {
    SpectralConfig cfg;
    for (unsigned L : {2u, 3u}) {
        SpectralReport s = spectral_equivalence(closed_form(K::FermionicDeformed), closed_form(K::DistinguishedDeformed), L, cfg);
        EXPECT_TRUE(s.pass()) << L;
        EXPECT_EQ(s.samples.size(), 6u);
        ASSERT_TRUE(s.symbolic_traces_agree.has_value());
    }
}

TEST(Spectra, ReflexiveAndReflected) {
    SpectralConfig cfg;
    const PolyMatrix h = closed_form(K::FermionicDeformed);
    EXPECT_TRUE(spectral_equivalence(h, h, 3, cfg).pass());
    EXPECT_TRUE(spectral_equivalence(h, reflected_two_site(h), 3, cfg).pass());
}

TEST(Spectra, DifferentSpectraDetected) {
    SpectralConfig cfg;
    EXPECT_FALSE(spectral_equivalence(closed_form(K::FermionicDeformed), closed_form(K::Classical), 3, cfg).pass());
}

TEST(Spectra, Deterministic) {
    SpectralConfig cfg;
    const PolyMatrix h = closed_form(K::FermionicDeformed);
    SpectralReport a = spectral_equivalence(h, h, 2, cfg), b = spectral_equivalence(h, h, 2, cfg);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        EXPECT_EQ(a.samples[i].prime, b.samples[i].prime);
        EXPECT_EQ(a.samples[i].q, b.samples[i].q);
    }
}

TEST(Spectra, LengthLimits) {
    SpectralConfig cfg;
    const PolyMatrix h = closed_form(K::FermionicDeformed);
    for (unsigned L : {7u, 9u}) {
        try {
            spectral_equivalence(h, h, L, cfg);
            FAIL() << L;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::ChainTooLong);
        }
    }
}
