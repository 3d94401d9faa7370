#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/frt.hpp"

namespace slq {

enum class Family { ClassicalP, QuantumP, FrtK };

struct CasimirSpec {
    Family family = Family::QuantumP;
    int index = 1;

    static CasimirSpec classical(int p) { return {Family::ClassicalP, p}; }
    static CasimirSpec quantum(int p) { return {Family::QuantumP, p}; }
    static CasimirSpec frt(int k) { return {Family::FrtK, k}; }
};

inline std::string spec_name(const CasimirSpec& c) {
    const char* f = c.family == Family::ClassicalP ? "Ccl" : c.family == Family::QuantumP ? "C" : "c^";
    return std::string(f) + "(" + std::to_string(c.index) + ")";
}

namespace detail {

inline PolyMatrix cartan_fn(const Rep& r, const std::function<Poly(long, long)>& fn) {
    std::vector<Poly> d(r.n);
    for (std::size_t i = 0; i < r.n; ++i) d[i] = fn(r.h1[i], r.h2[i]);
    return PolyMatrix::diagonal(d);
}

// x^n with 0^0 = 1
inline Rational ipow0(long x, int n) {
    if (n == 0) return Rational(1);
    return rpow(Rational(x), n);
}

} // namespace detail

// Terms of the classical Casimir; the drop flag removes the E3 bilinear term (used as a counterexample).
inline PolyMatrix classical_casimir(const Rep& r, int p, bool drop_e3 = false) {
    if (p < 2) throw Error(Errc::BadIndex, "classical Casimir index must be >= 2");
    const int n = p - 2;
    using detail::ipow0;
    auto C = [&](const std::function<Rational(long, long)>& fn) {
        return detail::cartan_fn(r, [&](long h1, long h2) { return Poly(fn(h1, h2)); });
    };
    const PolyMatrix &E1p = r[Gen::E1p], &E2p = r[Gen::E2p], &E3p = r[Gen::E3p];
    const PolyMatrix &E1m = r[Gen::E1m], &E2m = r[Gen::E2m], &E3m = r[Gen::E3m];
    PolyMatrix out = C([&](long a, long b) -> Rational { return Rational(a * b) * ipow0(a - b, n); });
    out -= E1m * E1p * C([&](long a, long b) -> Rational { return Rational(b) * ipow0(a - b, n) + Rational(1 - b) * ipow0(a - b + 1, n); });
    out -= E2m * E2p * C([&](long a, long b) -> Rational { return Rational(a) * ipow0(a - b, n) + Rational(1 - a) * ipow0(a - b - 1, n); });
    if (!drop_e3) out -= E3m * E3p * C([&](long a, long b) -> Rational { return ipow0(a - b, n); });
    out += E3m * E2p * E1p * C([&](long a, long b) -> Rational { return ipow0(a - b, n) - ipow0(a - b + 1, n); });
    out += E2m * E1m * E3p * C([&](long a, long b) -> Rational { return ipow0(a - b, n) - ipow0(a - b - 1, n); });
    out += E2m * E1m * E2p * E1p *
           C([&](long a, long b) -> Rational { return ipow0(a - b + 1, n) + ipow0(a - b - 1, n) - 2 * ipow0(a - b, n); });
    return out;
}

inline PolyMatrix quantum_casimir(const Rep& r, int p, bool drop_e3 = false) {
    const Poly lam = lambda();
    auto cx = [&](CartanForm qf, CartanForm sf) { return r.cartan_exp(QS(qf, sf)); };
    auto qn = [&](CartanForm f) { return r.qnum_of(f); };
    const PolyMatrix &E1p = r[Gen::E1p], &E2p = r[Gen::E2p], &E3p = r[Gen::E3p];
    const PolyMatrix &E1m = r[Gen::E1m], &E2m = r[Gen::E2m], &E3m = r[Gen::E3m];
    PolyMatrix body = qn({1, 0, 0}) * qn({0, 1, 0});
    body += E1m * E1p * cx({}, {1, 0, -1}) * (qv(1 - 2 * p) * qn({0, 1, -1}) - qn({0, 1, 0}));
    body += E2m * E2p * cx({}, {0, -1, -1}) * (qv(2 * p - 1) * qn({1, 0, -1}) - qn({1, 0, 0}));
    if (!drop_e3) body -= qv(-1) * (E3m * E3p * cx({}, {1, -1, -1}));
    body -= (qv(p - 2) * lam * qnum(p)) * (E2m * E1m * E3p * cx({}, {1, -1, -2}));
    body += (qv(-p) * lam * qnum(p - 1)) * (E3m * E2p * E1p * cx({}, {1, -1, -1}));
    body += (qv(-1) * lam * lam * qnum(p) * qnum(p - 1)) * (E2m * E1m * E2p * E1p * cx({}, {1, -1, -2}));
    return cx({1 - 2 * p, 2 * p - 1, 0}, {}) * body;
}

// lambda^{-k} Tr_1(D_1^{-1} (I - Rh^2)^k) on one site, Tr_1(D_1^{-1} X_123^k) on two.
inline PolyMatrix frt_casimir(int k, unsigned L) {
    if (k < 1) throw Error(Errc::BadIndex, "FRT Casimir needs k >= 1; negative k is not implemented");
    if (L > 2) throw Error(Errc::UnsupportedL, "FRT Casimir available for L = 1, 2 only");
    const PolyMatrix Rh = r_hat(r_matrix(RKind::TwoParam));
    const PolyMatrix D = dmatrix();
    std::vector<Poly> w{D(0, 0).pow(-1), D(1, 1).pow(-1), D(2, 2).pow(-1)};
    if (L == 1) {
        PolyMatrix m = partial_trace_first((PolyMatrix::identity(9) - y_rep(1, Rh)).pow(k), 3, w);
        return m.map([k](const Poly& x) { return divide_lambda_power(x, static_cast<unsigned>(k)); });
    }
    return partial_trace_first(x123(Rh).pow(k), 3, w);
}

inline PolyMatrix casimir_rep(const CasimirSpec& spec, unsigned L, HopfVariant v) {
    switch (spec.family) {
    case Family::ClassicalP:
        if (v != HopfVariant::ClassicalPrimitive) throw Error(Errc::BadVariant, "classical Casimir needs the primitive coproduct");
        return classical_casimir(coproduct_rep(v, L), spec.index);
    case Family::QuantumP:
        if (v == HopfVariant::ClassicalPrimitive) throw Error(Errc::BadVariant, "quantum Casimir needs a deformed coproduct");
        return quantum_casimir(coproduct_rep(v, L), spec.index);
    case Family::FrtK:
        if (v != HopfVariant::FermionicStandard) throw Error(Errc::BadVariant, "FRT Casimir is built on the standard coproduct");
        return frt_casimir(spec.index, L);
    }
    throw Error(Errc::BadIndex, "unknown family");
}

inline std::vector<Check> centrality_check(const CasimirSpec& spec, unsigned L, HopfVariant v) {
    const Rep r = coproduct_rep(v, L);
    const PolyMatrix C = casimir_rep(spec, L, v);
    std::vector<Check> out;
    for (Gen g : kAllGens)
        out.push_back(check_zero("[" + spec_name(spec) + ", " + gen_name(F(g)) + "] L=" + std::to_string(L) + " " +
                                     variant_name(v),
                                 commutator(C, r[g])));
    return out;
}

// Casimir with the E3^- E3^+ term removed; must fail to commute with E3^+.
inline Check perturbed_casimir_counterexample(Family fam, int p, unsigned L) {
    HopfVariant v = fam == Family::ClassicalP ? HopfVariant::ClassicalPrimitive : HopfVariant::FermionicStandard;
    const Rep r = coproduct_rep(v, L);
    PolyMatrix C = fam == Family::ClassicalP ? classical_casimir(r, p, true) : quantum_casimir(r, p, true);
    Check c = check_zero("perturbed Casimir commutes with E3+", commutator(C, r[Gen::E3p]));
    c.pass = !c.pass;
    c.name = "perturbed Casimir fails to commute with E3+";
    return c;
}

inline Check quadratic_relation_check(int p1, int p2, int p3, int p4, Family fam, unsigned L, HopfVariant v) {
    if (p1 + p2 != p3 + p4) throw Error(Errc::IndexSumMismatch, "p1 + p2 must equal p3 + p4");
    auto C = [&](int p) { return casimir_rep({fam, p}, L, v); };
    std::string name = "C" + std::to_string(p1) + " C" + std::to_string(p2) + " = C" + std::to_string(p3) + " C" +
                       std::to_string(p4);
    return check_zero(name, C(p1) * C(p2) - C(p3) * C(p4));
}

inline PolyMatrix specialize_matrix(const PolyMatrix& m, const std::map<Var, Rational>& values) {
    return m.map([&](const Poly& x) { return partial_specialize(x, values); });
}

inline const std::map<Var, Rational>& classical_point() {
    static const std::map<Var, Rational> pt{{Q, Rational(1)}, {S, Rational(1)}};
    return pt;
}

// lim_{q,s->1} C_p = C^cl_2
inline Check quantum_limit_check(int p, unsigned L) {
    PolyMatrix lim = specialize_matrix(casimir_rep(CasimirSpec::quantum(p), L, HopfVariant::FermionicStandard), classical_point());
    PolyMatrix cl = casimir_rep(CasimirSpec::classical(2), L, HopfVariant::ClassicalPrimitive);
    return check_zero("lim C" + std::to_string(p) + " = Ccl2 at L=" + std::to_string(L), lim - cl);
}

// lambda^{-(p-2)} sum_l (-1)^l binom(p-2, l) C_l at q = s = 1 against C^cl_p.
inline Check classical_limit_check(int p, unsigned L) {
    if (p < 2) throw Error(Errc::BadIndex, "p must be >= 2");
    const Rep r = coproduct_rep(HopfVariant::FermionicStandard, L);
    PolyMatrix sum(r.n, r.n);
    Integer binom = 1;
    for (int l = 0; l <= p - 2; ++l) {
        sum += Poly(Rational(l % 2 ? -binom : binom)) * quantum_casimir(r, l);
        binom = binom * (p - 2 - l) / (l + 1);
    }
    std::string name = "lambda-combination of C_0..C_" + std::to_string(p - 2) + " -> Ccl" + std::to_string(p) +
                       " at L=" + std::to_string(L);
    PolyMatrix divided;
    try {
        divided = sum.map([p](const Poly& x) { return divide_lambda_power(x, static_cast<unsigned>(p - 2)); });
    } catch (const Error& e) {
        if (e.code() != Errc::NotDivisible) throw;
        return {name, false, sum.nonzero_count(), "combination not divisible by lambda^" + std::to_string(p - 2)};
    }
    PolyMatrix lim = specialize_matrix(divided, classical_point());
    PolyMatrix cl = casimir_rep(CasimirSpec::classical(p), L, HopfVariant::ClassicalPrimitive);
    Check c = check_zero(name, lim - cl);
    if (!c.pass) {
        // Record the limit relative to the target when they are proportional.
        for (std::size_t i = 0; i < cl.rows(); ++i)
            for (std::size_t j = 0; j < cl.cols(); ++j)
                if (i != j && !cl(i, j).is_zero()) {
                    c.detail = "limit entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                               lim(i, j).to_string() + ", target " + cl(i, j).to_string();
                    return c;
                }
    }
    return c;
}

struct XkCoefficients {
    Poly a, b, c, d, f;
};

inline XkCoefficients xk_seed() { return {qv(-1), Poly(), qv(-3), Poly(), qv(-1) + qv(-3)}; }

inline XkCoefficients xk_step(const XkCoefficients& x) {
    auto Q = [](int n) { return qv(n); };
    XkCoefficients y;
    y.a = (Q(-7) - Q(-5) + Poly(2) * Q(-3)) * x.a + (Poly(2) * Q(-5) - Poly(3) * Q(-3) + Poly(2) * Q(-1)) * x.b + (Q(-3) - Q(-1)) * x.c +
          (Q(-3) - Q(-1)) * x.d + Q(-1) * x.f;
    y.b = (Q(-7) - Q(-5) + Q(-3)) * x.a + (Poly(2) * Q(-5) - Q(-3) + Q(-1)) * x.b + Q(-3) * x.d;
    y.c = (Q(-7) - Q(-5)) * x.a + Q(-5) * x.b + (Q(-5) + Q(-1)) * x.c + Q(-3) * x.f;
    y.d = (Q(-7) - Q(-5)) * x.a + Poly(2) * Q(-5) * x.b + (Q(-3) + Q(-1)) * x.d;
    y.f = Q(-7) * x.a + Q(-5) * x.c + (Q(-3) + Q(-1)) * x.f;
    return y;
}

inline XkCoefficients xk_coefficients(int k) {
    if (k < 1) throw Error(Errc::BadIndex, "k must be >= 1");
    XkCoefficients x = xk_seed();
    for (int i = 1; i < k; ++i) x = xk_step(x);
    return x;
}

inline bool ckrel_holds(const XkCoefficients& x) { return x.c == qv(-2) * x.a + (Poly(1) - qv(-2)) * x.b; }
inline bool fkrel_holds(const XkCoefficients& x) {
    return x.f == (Poly(1) + qv(-2)) * x.a - (Poly(1) + qv(-2)) * x.b + x.d;
}

inline PolyMatrix xk_reconstruct(const XkCoefficients& x, const PolyMatrix& Rh) {
    PolyMatrix A12 = three_space_embed(Rh, Pair::P12), A23 = three_space_embed(Rh, Pair::P23);
    return x.a * (A23 * A12 * A23) + x.b * (A23 * A12 + A12 * A23) + x.c * A12 + x.d * A23 +
           x.f * PolyMatrix::identity(27);
}

// (-q^-1 lambda a + 2b - d) Rh + (q^-2 a + c - f) I
inline PolyMatrix ck23_from_coefficients(const XkCoefficients& x, const PolyMatrix& Rh) {
    return (-(qv(-1) * lambda() * x.a) + Poly(2) * x.b - x.d) * Rh + (qv(-2) * x.a + x.c - x.f) * PolyMatrix::identity(9);
}

inline Poly alpha(int k) {
    if (k < 1) throw Error(Errc::BadIndex, "k must be >= 1");
    Poly num = qv(1 - 4 * k) * (qnum(4).pow(k) - qv(3 * k) * qnum(2) * qnum(2));
    return divide_exact_q(num, qnum(2) * qnum(3));
}

// Checks for one k: recursion vs matrix power, constraints, closed form of c^(k)_23.
inline std::vector<Check> frt_casimir_checks(int k) {
    const PolyMatrix Rh = r_hat(r_matrix(RKind::TwoParam));
    const PolyMatrix I9 = PolyMatrix::identity(9);
    XkCoefficients x = xk_coefficients(k);
    std::string K = std::to_string(k);
    std::vector<Check> out;
    out.push_back(check_zero("<c^(" + K + "), A> = 0", frt_casimir(k, 1)));
    out.push_back(check_zero("X123^" + K + " from recursion", x123(Rh).pow(k) - xk_reconstruct(x, Rh)));
    out.push_back({"ckrel at k=" + K, ckrel_holds(x), 0, {}});
    out.push_back({"fkrel at k=" + K, fkrel_holds(x), 0, {}});
    PolyMatrix c23 = frt_casimir(k, 2);
    out.push_back(check_zero("c^(" + K + ")_23 = alpha_k (Rh + I)", c23 - alpha(k) * (Rh + I9)));
    out.push_back(check_zero("c^(" + K + ")_23 from coefficients", c23 - ck23_from_coefficients(x, Rh)));
    return out;
}

// Cartan part q^{(2p-1)(H2-H1)} [H1][H2] on L = 2 weights, compared with its image under H1 <-> -H2.
inline Check weyl_witness(int p) {
    const Rep r = coproduct_rep(HopfVariant::FermionicStandard, 2);
    auto f = [p](long h1, long h2) { return qv(static_cast<int>((2 * p - 1) * (h2 - h1))) * qnum(h1) * qnum(h2); };
    std::vector<std::string> direct, swapped;
    bool pointwise = true;
    for (std::size_t i = 0; i < r.n; ++i) {
        Poly a = f(r.h1[i], r.h2[i]), b = f(-r.h2[i], -r.h1[i]);
        pointwise = pointwise && a == b;
        direct.push_back(a.to_string());
        swapped.push_back(b.to_string());
    }
    std::sort(direct.begin(), direct.end());
    std::sort(swapped.begin(), swapped.end());
    return {"Weyl witness p=" + std::to_string(p), direct == swapped && pointwise, 0,
            pointwise ? std::string{} : "pointwise invariance fails"};
}

} // namespace slq
