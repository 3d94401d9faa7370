#include <gtest/gtest.h>

#include <random>

#include "slq/algebra.hpp"
#include "slq/modular.hpp"

using namespace slq;

namespace {

const PolyMatrix I3 = PolyMatrix::identity(3);

PolyMatrix e(std::size_t i, std::size_t j, std::size_t n = 3) { return PolyMatrix::unit(n, i, j); }

// Random homogeneous word in the fundamental representation: product of 1..3 generators.
GradedOp random_word(std::mt19937_64& rng) {
    const Rep f = fundamental_rep();
    std::uniform_int_distribution<int> len(1, 3), g(0, 7);
    GradedOp w{I3, 0, f.par};
    for (int k = len(rng); k > 0; --k) {
        Gen x = kAllGens[g(rng)];
        w.matrix = w.matrix * f[x];
        w.degree = (w.degree + degree(F(x))) % 2;
    }
    w.matrix = (qv(1) + sv(-1)) * w.matrix;
    return w;
}

GradedOp mul(const GradedOp& a, const GradedOp& b) { return {a.matrix * b.matrix, (a.degree + b.degree) % 2, a.parities}; }

} // namespace

TEST(Kron, Examples) {
    EXPECT_EQ(kron(I3, I3), PolyMatrix::identity(9));
    EXPECT_EQ(kron(e(1, 2), e(2, 1)), e(2, 4, 9));
    PolyMatrix A = e(1, 3) + Poly(2) * e(2, 2), B = qv(1) * e(3, 1) + e(1, 1);
    EXPECT_TRUE(commutator(kron(A, I3), kron(I3, B)).is_zero());
}

TEST(GradedKron, Examples) {
    const Rep f = fundamental_rep();
    GradedOp x = f.graded(F(Gen::E3m)), y = f.graded(F(Gen::E3p));
    GradedOp r = graded_kron(x, y);
    EXPECT_EQ(r.matrix, -e(3, 7, 9));
    EXPECT_EQ(r.degree, 0);
    // Odd right factor: the left factor picks up Sigma = diag(-1, 1, -1).
    GradedOp o = f.graded(F(Gen::E1p));
    EXPECT_EQ(graded_kron(o, o).matrix, kron(f[Gen::E1p] * PolyMatrix::diagonal({Poly(-1), Poly(1), Poly(-1)}), f[Gen::E1p]));
    GradedOp id{I3, 0, f.par};
    EXPECT_EQ(graded_kron(id, y).matrix, kron(I3, y.matrix));
    EXPECT_EQ(graded_kron(x, id).matrix, kron(x.matrix, I3));
    EXPECT_EQ(graded_kron(x, id).parities, tensor(f.par, f.par));
}

TEST(GradedKron, RejectsInhomogeneous) {
    const Rep f = fundamental_rep();
    GradedOp mixed{f[Gen::E1p] + f[Gen::H1], 1, f.par};
    try {
        graded_kron(mixed, f.graded(F(Gen::E2p)));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::InhomogeneousOperand);
    }
}

TEST(GradedKronProperty, Homomorphism) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        GradedOp x = random_word(rng), y = random_word(rng), x2 = random_word(rng), y2 = random_word(rng);
        PolyMatrix lhs = graded_kron(x, y).matrix * graded_kron(x2, y2).matrix;
        PolyMatrix rhs = graded_kron(mul(x, x2), mul(y, y2)).matrix;
        if (y.degree * x2.degree % 2) rhs = -rhs;
        EXPECT_EQ(lhs, rhs) << "trial " << trial;
    }
}

TEST(SiteEmbed, Examples) {
    EXPECT_EQ(site_embed(PolyMatrix::identity(9), 1, 3), PolyMatrix::identity(27));
    PolyMatrix op = kron(e(1, 2), e(3, 1)) + qv(2) * PolyMatrix::identity(9);
    EXPECT_EQ(site_embed(op, 1, 2), op);
    PolyMatrix A = kron(e(1, 2), I3), B = kron(e(2, 3), I3);
    // e12 on site 1 times e23 on site 2, then e13 (x) e23 lands on one entry.
    PolyMatrix prod = site_embed(A, 1, 3) * site_embed(B, 2, 3);
    EXPECT_EQ(prod, kron(kron(e(1, 2), e(2, 3)), I3));
    EXPECT_THROW(site_embed(op, 3, 3), Error);
    EXPECT_THROW(site_embed(op, 0, 3), Error);
}

TEST(ThreeSpaceEmbed, Examples) {
    EXPECT_EQ(three_space_embed(PolyMatrix::identity(9), Pair::P13), PolyMatrix::identity(27));
    PolyMatrix m = kron(e(1, 2), e(3, 1)) + sv(1) * kron(e(2, 2), e(1, 3));
    EXPECT_EQ(three_space_embed(m, Pair::P12), kron(m, I3));
    EXPECT_EQ(three_space_embed(m, Pair::P13), three_space_embed_13_direct(m));
}

TEST(ThreeSpaceEmbedProperty, TwoRoutesAgree) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> idx(1, 9), co(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix m(9, 9), m2(9, 9);
        for (int k = 0; k < 6; ++k) {
            m(idx(rng) - 1, idx(rng) - 1) += Poly(co(rng)) * qv(co(rng));
            m2(idx(rng) - 1, idx(rng) - 1) += Poly(co(rng));
        }
        EXPECT_EQ(three_space_embed(m, Pair::P12) * three_space_embed(m2, Pair::P13),
                  three_space_embed(m, Pair::P12) * three_space_embed_13_direct(m2));
    }
}

TEST(Traces, Examples) {
    const PolyMatrix D = PolyMatrix::diagonal({Poly(-1), Poly(1), Poly(-1)});
    EXPECT_EQ(trace(PolyMatrix::identity(9)), Poly(9));
    EXPECT_EQ(supertrace(I3, ParityVector::fundamental()), Poly(-1));
    EXPECT_EQ(quantum_trace(I3, D), Poly(-1));
    PolyMatrix M = qv(1) * e(1, 2) + e(3, 3) + sv(-1) * e(2, 1);
    EXPECT_EQ(partial_quantum_trace(kron(D, M), D), Poly(3) * M);
    EXPECT_EQ(partial_quantum_trace(kron(I3, M), D), -M);
}

TEST(TracesProperty, PartialTraceLinear) {
    const PolyMatrix D = PolyMatrix::diagonal({Poly(-1), Poly(1), Poly(-1)});
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> idx(1, 9), co(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix a(9, 9), b(9, 9);
        for (int k = 0; k < 8; ++k) {
            a(idx(rng) - 1, idx(rng) - 1) += Poly(co(rng)) * qv(co(rng));
            b(idx(rng) - 1, idx(rng) - 1) += Poly(co(rng)) * sv(co(rng));
        }
        Poly c = qv(2) - Poly(3);
        EXPECT_EQ(partial_quantum_trace(a + c * b, D), partial_quantum_trace(a, D) + c * partial_quantum_trace(b, D));
    }
}

TEST(TracesProperty, SupertraceSymmetry) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        GradedOp a = random_word(rng), b = random_word(rng);
        Poly ab = supertrace(a.matrix * b.matrix, a.parities), ba = supertrace(b.matrix * a.matrix, a.parities);
        EXPECT_EQ(ab, (a.degree * b.degree % 2) ? -ba : ba);
    }
}

TEST(Commutators, Examples) {
    PolyMatrix A = qv(1) * e(1, 2) + e(2, 3);
    EXPECT_TRUE(commutator(A, A).is_zero());
    EXPECT_EQ(anticommutator(e(1, 2), e(2, 1)), e(1, 1) + e(2, 2));
    EXPECT_EQ(commutator(e(1, 1), e(1, 2)), e(1, 2));
}

TEST(ModularCharpoly, Examples) {
    const u64 p = 101;
    EXPECT_EQ(modular_charpoly(PolyMatrix::identity(2), ParamPoint::ones(), p), (std::vector<u64>{1, p - 2, 1}));
    PolyMatrix d = PolyMatrix::diagonal({Poly(2), Poly(3)});
    EXPECT_EQ(modular_charpoly(d, ParamPoint::ones().set(Q, Rational(7, 3)), p), (std::vector<u64>{1, p - 5, 6}));
    try {
        modular_charpoly(d, ParamPoint::ones(), 100);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), Errc::BadPrime);
    }
}

TEST(ModularCharpolyProperty, SimilarityInvariance) {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> co(-5, 5);
    for (int trial = 0; trial < 8; ++trial) {
        PolyMatrix M(6, 6), U = PolyMatrix::identity(6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                M(i, j) = Poly(co(rng)) * qv(co(rng) % 3);
                if (j > i) U(i, j) = Poly(Rational(co(rng), 7));
            }
        PolyMatrix conj = U * M * triangular_inverse(U);
        ParamPoint at = ParamPoint::ones().set(Q, random_rational(rng));
        u64 p = random_prime(rng);
        EXPECT_EQ(modular_charpoly(M, at, p), modular_charpoly(conj, at, p));
    }
}

TEST(NewtonTraces, Examples) {
    auto t = std::get<std::vector<Rational>>(newton_traces(I3, ParamPoint::ones(), 2));
    EXPECT_EQ(t, (std::vector<Rational>{3, 3}));
    PolyMatrix d = PolyMatrix::diagonal({Poly(1), Poly(2)});
    auto u = std::get<std::vector<Rational>>(newton_traces(d, ParamPoint::ones(), 2));
    EXPECT_EQ(u, (std::vector<Rational>{3, 5}));
    auto f = std::get<std::vector<double>>(newton_traces(d, ParamPoint::float_point({1, 1, 1, 1, 1}), 2));
    EXPECT_DOUBLE_EQ(f[1], 5.0);
}

TEST(NewtonTracesProperty, TransposeInvariance) {
    PolyMatrix M = qv(1) * e(1, 2) + e(2, 3) + sv(1) * e(3, 1) + Poly(2) * e(1, 1);
    ParamPoint at = ParamPoint::ones().set(Q, Rational(3, 2)).set(S, Rational(5, 7));
    EXPECT_EQ(std::get<std::vector<Rational>>(newton_traces(M, at, 6)),
              std::get<std::vector<Rational>>(newton_traces(M.transpose(), at, 6)));
}

// Newton identities turn exact power sums into the characteristic polynomial; reduce both mod p.
TEST(NewtonTracesProperty, AgreesWithModularCharpoly) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> co(-3, 3);
    PolyMatrix M(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) M(i, j) = Poly(co(rng)) * qv(co(rng)) + Poly(co(rng)) * sv(1);
    for (int pt = 0; pt < 2; ++pt) {
        ParamPoint at = ParamPoint::ones().set(Q, random_rational(rng)).set(S, random_rational(rng));
        auto pw = std::get<std::vector<Rational>>(newton_traces(M, at, 9));
        auto el = newton_to_elementary(pw, 9);
        for (int k = 0; k < 2; ++k) {
            u64 p = random_prime(rng);
            auto cp = modular_charpoly(M, at, p);
            for (std::size_t i = 0; i <= 9; ++i) {
                u64 ei = mod_of(el[i], p);
                EXPECT_EQ(cp[i], i % 2 ? (p - ei) % p : ei) << "coefficient " << i;
            }
        }
    }
}

TEST(Modular, PrimesAndInverses) {
    EXPECT_TRUE(is_prime(2147483647ull));
    EXPECT_FALSE(is_prime(2147483649ull));
    EXPECT_EQ(mulmod(invmod(12345, 1000003), 12345, 1000003), 1u);
    EXPECT_THROW(invmod(0, 101), Error);
    EXPECT_EQ(mod_of(Rational(1, 2), 101), 51u);
}

TEST(Modular, BlockCharpolyMatchesDense) {
    PolyMatrix M = PolyMatrix::diagonal({Poly(1), Poly(2), Poly(3), Poly(4)});
    M(0, 1) = Poly(5);
    M(2, 3) = Poly(-1);
    const u64 p = 1000003;
    ModMatrix mm = specialize_mod(M, ParamPoint::ones(), p);
    SparseMod sp{4, p, std::vector<std::vector<std::pair<std::size_t, u64>>>(4)};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (mm.a[i * 4 + j]) sp.rows[i].push_back({j, mm.a[i * 4 + j]});
    BlockCharpoly bc = charpoly_by_blocks(sp);
    EXPECT_EQ(bc.blocks, 2u);
    EXPECT_EQ(bc.coeffs, charpoly_mod(mm));
}

TEST(Modular, RationalNullspace) {
    RationalMatrix a{{1, 2, 3}, {2, 4, 6}};
    RationalMatrix ns = rational_nullspace(a, 3);
    EXPECT_EQ(ns.size(), 2u);
    for (const auto& v : ns) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
    EXPECT_EQ(rational_rank(a, 3), 1u);
}
