#include <gtest/gtest.h>

#include "slq/algebra.hpp"

using namespace slq;

namespace {

PolyMatrix e(std::size_t i, std::size_t j, std::size_t n = 3) { return PolyMatrix::unit(n, i, j); }

std::size_t failing(const std::vector<Relation>& rels, std::string* first = nullptr) {
    std::size_t bad = 0;
    for (const auto& r : rels)
        if (!r.residual.is_zero()) {
            if (first && bad == 0) *first = r.name;
            ++bad;
        }
    return bad;
}

constexpr HopfVariant kVariants[] = {HopfVariant::ClassicalPrimitive, HopfVariant::FermionicStandard,
                                     HopfVariant::DistinguishedNatural};

} // namespace

TEST(FundamentalRep, Examples) {
    GradedOp h1 = fundamental_rep(F(Gen::H1));
    EXPECT_EQ(h1.matrix, e(1, 1) + e(2, 2));
    EXPECT_EQ(h1.degree, 0);
    GradedOp e3m = fundamental_rep(F(Gen::E3m));
    EXPECT_EQ(e3m.matrix, -e(1, 3));
    EXPECT_EQ(e3m.degree, 0);
    GradedOp e2m = fundamental_rep(F(Gen::E2m));
    EXPECT_EQ(e2m.matrix, -e(2, 3));
    EXPECT_EQ(e2m.degree, 1);
}

TEST(FundamentalRep, EveryGeneratorHomogeneous) {
    const Rep f = fundamental_rep();
    for (auto b : {Basis::Fermionic, Basis::Distinguished})
        for (Gen g : kAllGens) EXPECT_TRUE(f.graded({b, g}).homogeneous()) << gen_name({b, g});
}

TEST(Cartan, Exponentials) {
    const Rep f = fundamental_rep();
    const PolyMatrix H1 = f[Gen::H1], H2 = f[Gen::H2];
    EXPECT_EQ(cartan_exponential({1, 0, 0}, Q, H1, H2), PolyMatrix::diagonal({qv(1), qv(1), Poly(1)}));
    EXPECT_EQ(cartan_exponential({0, 1, -1}, S, H1, H2), PolyMatrix::diagonal({sv(-1), sv(-2), sv(-2)}));
    EXPECT_EQ(cartan_exponential({0, 0, 0}, Q, H1, H2), PolyMatrix::identity(3));
}

TEST(Cartan, QNumbers) {
    const Rep f = fundamental_rep();
    const PolyMatrix H1 = f[Gen::H1], H2 = f[Gen::H2];
    EXPECT_EQ(qnum_of_cartan({1, 0, 0}, H1, H2), PolyMatrix::diagonal({Poly(1), Poly(1), Poly(0)}));
    EXPECT_EQ(qnum_of_cartan({1, 1, 0}, H1, H2), PolyMatrix::diagonal({Poly(1), Poly(0), Poly(-1)}));
    EXPECT_TRUE(qnum_of_cartan({0, 0, 0}, H1, H2).is_zero());
    EXPECT_THROW(cartan_exponential({1, 0, 0}, Q, H1 + e(1, 2), H2), Error);
}

TEST(Presentation, FundamentalPasses) {
    for (auto d : {Deformation::Classical, Deformation::Quantum})
        for (auto b : {Basis::Fermionic, Basis::Distinguished}) {
            std::string first;
            EXPECT_EQ(failing(presentation_relations(d, b, fundamental_rep(d)), &first), 0u) << first;
        }
}

TEST(Presentation, PerturbedRepFails) {
    Rep f = fundamental_rep();
    f[Gen::E1p] += e(1, 3);
    bool nilpotency_broken = false;
    for (const auto& r : presentation_relations(Deformation::Quantum, Basis::Fermionic, f))
        if (r.name == "{E1p,E1p}") nilpotency_broken = !r.residual.is_zero();
    EXPECT_TRUE(nilpotency_broken);
}

TEST(PresentationProperty, CoproductsAreHomomorphisms) {
    for (auto v : kVariants)
        for (unsigned L : {2u, 3u}) {
            Rep r = coproduct_rep(v, L);
            for (auto b : {Basis::Fermionic, Basis::Distinguished}) {
                std::string first;
                EXPECT_EQ(failing(presentation_relations(deformation_of(v), b, r), &first), 0u)
                    << variant_name(v) << " L=" << L << " " << first;
            }
        }
}

TEST(PresentationProperty, DerivedGeneratorE3) {
    const Rep f = fundamental_rep();
    EXPECT_EQ(f[Gen::E3p], (qv(1) * sv(-1)) * f[Gen::E1p] * f[Gen::E2p] + f[Gen::E2p] * f[Gen::E1p]);
    const Rep c = fundamental_rep(Deformation::Classical);
    EXPECT_EQ(c[Gen::E3p], anticommutator(c[Gen::E1p], c[Gen::E2p]));
}

TEST(BasisChange, Examples) {
    TensorWord w = basis_change(Dist(Gen::E2p), Deformation::Quantum);
    ASSERT_EQ(w.size(), 1u);
    const Rep f = fundamental_rep();
    PolyMatrix expect = f[Gen::E2m] * f.cartan_exp(QS({0, -1, 0}, {0, -1, 0}));
    EXPECT_EQ(f.eval(w), expect);
    TensorWord h = basis_change(Dist(Gen::H1), Deformation::Classical);
    EXPECT_EQ(f.eval(h), -f[Gen::H1] - f[Gen::H2]);
}

TEST(BasisChange, RoundTrip) {
    for (auto d : {Deformation::Classical, Deformation::Quantum})
        for (auto b : {Basis::Fermionic, Basis::Distinguished})
            for (Gen g : kAllGens) EXPECT_TRUE(basis_round_trip({b, g}, d)) << gen_name({b, g});
}

TEST(Coproduct, CartanIsPrimitive) {
    const Rep f = fundamental_rep();
    const PolyMatrix I3 = PolyMatrix::identity(3);
    for (auto v : kVariants)
        EXPECT_EQ(coproduct_rep(v, 2)[Gen::H1], kron(f[Gen::H1], I3) + kron(I3, f[Gen::H1])) << variant_name(v);
}

TEST(Coproduct, StandardE1pOnTwoSites) {
    const Rep f = fundamental_rep();
    const PolyMatrix I3 = PolyMatrix::identity(3), Sigma = f.par.sign_matrix();
    PolyMatrix expect = kron(f[Gen::E1p], I3) + kron(f.cartan_exp(QS({1, 0, 0}, {-1, 0, 0})) * Sigma, f[Gen::E1p]);
    EXPECT_EQ(coproduct_rep(HopfVariant::FermionicStandard, 2)[Gen::E1p], expect);
}

TEST(Coproduct, NestsOnTheLeft) {
    // The three-site image equals the two-leg word evaluated on (two-site) (x) (one-site).
    const Rep f = fundamental_rep();
    const Rep two = coproduct_rep(HopfVariant::FermionicStandard, 2);
    Rep big = tensor_cartan(two, f);
    for (Gen g : {Gen::E1p, Gen::E3p, Gen::E3m})
        EXPECT_EQ(coproduct_rep(HopfVariant::FermionicStandard, 3)[g], eval_two_leg(coproduct(g, HopfVariant::FermionicStandard), two, f))
            << gen_name(F(g));
}

// The distinguished Hopf structure computed two ways: the stored fermionic table for the tilde coproduct,
// and the natural coproduct of the distinguished generators pushed through the basis change.
TEST(CoproductProperty, DistinguishedDualRoute) {
    const Rep f = fundamental_rep();
    const Rep two = coproduct_rep(HopfVariant::DistinguishedNatural, 2);
    for (Gen g : {Gen::H1, Gen::H2, Gen::E1p, Gen::E2p, Gen::E1m, Gen::E2m})
        EXPECT_EQ(eval_two_leg(distinguished_coproduct(g), f, f), two.gen(Dist(g))) << gen_name(Dist(g));
    EXPECT_THROW(distinguished_coproduct(Gen::E3p), Error);
}

TEST(HopfAxioms, AllVariants) {
    for (auto v : kVariants)
        for (Gen g : kAllGens)
            for (const auto& r : hopf_axiom_check(g, v)) EXPECT_TRUE(r.pass) << variant_name(v) << " " << r.name;
}

TEST(HopfAxioms, AntipodeOfCartan) {
    TensorWord s = antipode(Gen::H1, HopfVariant::FermionicStandard);
    EXPECT_EQ(fundamental_rep().eval(s), -fundamental_rep()[Gen::H1]);
    // No antipode is checked for the distinguished structure.
    EXPECT_EQ(hopf_axiom_check(Gen::E1p, HopfVariant::DistinguishedNatural).size(), 2u);
    EXPECT_EQ(hopf_axiom_check(Gen::E3p, HopfVariant::FermionicStandard).size(), 5u);
}

TEST(Variants, NamesRoundTrip) {
    for (auto v : kVariants) EXPECT_EQ(parse_variant(variant_name(v)), v);
    try {
        parse_variant("bogus");
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::BadVariant);
    }
}
