#pragma once

#include <array>
#include <string>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/matrix.hpp"
#include "slq/ring.hpp"

namespace slq {

enum class RKind { TwoParam, FourParam };

inline PolyMatrix eta() {
    std::vector<Poly> d;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) d.push_back(Poly((i % 2 == 0 && k % 2 == 0) ? -1 : 1));
    return PolyMatrix::diagonal(d);
}

inline PolyMatrix dmatrix() { return PolyMatrix::diagonal({Poly(-1), Poly(1), Poly(-1)}); }

// R with anisotropies q12, q13, q23 (the two-parameter R has all three equal to s).
inline PolyMatrix r_matrix(const Poly& q12, const Poly& q13, const Poly& q23) {
    const Poly qi = qv(-1);
    const Poly ml = -(qi * lambda());
    return PolyMatrix::from_entries(9, {{1, 1, Poly(-1)},
                                        {2, 2, qi * q12},
                                        {3, 3, -(qi * q13)},
                                        {4, 2, ml},
                                        {4, 4, qi * q12.pow(-1)},
                                        {5, 5, qv(-2)},
                                        {6, 6, qi * q23},
                                        {7, 3, ml},
                                        {7, 7, -(qi * q13.pow(-1))},
                                        {8, 6, ml},
                                        {8, 8, qi * q23.pow(-1)},
                                        {9, 9, Poly(-1)}});
}

inline PolyMatrix r_matrix(RKind k) {
    if (k == RKind::TwoParam) return r_matrix(sv(1), sv(1), sv(1));
    return r_matrix(Poly::var(Q12), Poly::var(Q13), Poly::var(Q23));
}

// Rhat_{ik,jl} = R_{ki,jl}
inline PolyMatrix r_hat(const PolyMatrix& R) {
    PolyMatrix h(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) h(3 * i + k, 3 * j + l) = R(3 * k + i, 3 * j + l);
    return h;
}

// From the characteristic equation: Rhat^{-1} = q^2 Rhat + q lambda.
inline PolyMatrix r_hat_inverse(const PolyMatrix& Rh) {
    return qv(2) * Rh + (qv(1) * lambda()) * PolyMatrix::identity(9);
}

struct Check {
    std::string name;
    bool pass = false;
    std::size_t residual_nonzero = 0;
    std::string detail;
};

inline Check check_zero(std::string name, const PolyMatrix& residual, std::string detail = {}) {
    std::size_t nz = residual.nonzero_count();
    return {std::move(name), nz == 0, nz, std::move(detail)};
}

inline std::vector<Check> qybe_check(const PolyMatrix& R) {
    PolyMatrix R12 = three_space_embed(R, Pair::P12), R13 = three_space_embed(R, Pair::P13),
               R23 = three_space_embed(R, Pair::P23);
    PolyMatrix H = r_hat(R);
    PolyMatrix H12 = three_space_embed(H, Pair::P12), H23 = three_space_embed(H, Pair::P23);
    return {check_zero("R12 R13 R23 = R23 R13 R12", R12 * R13 * R23 - R23 * R13 * R12),
            check_zero("Rh12 Rh23 Rh12 = Rh23 Rh12 Rh23", H12 * H23 * H12 - H23 * H12 * H23)};
}

inline std::vector<Check> char_eq_check(const PolyMatrix& R) {
    PolyMatrix H = r_hat(R);
    PolyMatrix res = H * H + (qv(-1) * lambda()) * H - qv(-2) * PolyMatrix::identity(9);
    // Eigenvalue content: (Rh + 1)(Rh - q^-2) = 0 factorization of the same identity.
    PolyMatrix fac = (H + PolyMatrix::identity(9)) * (H - qv(-2) * PolyMatrix::identity(9));
    return {check_zero("Rh^2 + q^-1 lambda Rh - q^-2 = 0", res),
            check_zero("(Rh + 1)(Rh - q^-2) = 0, eigenvalues {-1, q^-2}", fac)};
}

inline PolyMatrix partial_tr2(const PolyMatrix& m, const PolyMatrix& D) {
    std::vector<Poly> w{D(0, 0), D(1, 1), D(2, 2)};
    return partial_trace_second(m, 3, w);
}
inline PolyMatrix partial_tr1_inv(const PolyMatrix& m, const PolyMatrix& D) {
    std::vector<Poly> w{D(0, 0).pow(-1), D(1, 1).pow(-1), D(2, 2).pow(-1)};
    return partial_trace_first(m, 3, w);
}

inline std::vector<Check> d_identities_check(const PolyMatrix& R, const PolyMatrix& D) {
    const PolyMatrix I3 = PolyMatrix::identity(3);
    PolyMatrix H = r_hat(R), Hi = r_hat_inverse(H);
    PolyMatrix D1 = kron(D, I3);
    PolyMatrix RT2 = partial_transpose_second(R);
    PolyMatrix lhs3 = D1 * triangular_inverse(RT2);
    PolyMatrix rhs3 = partial_transpose_second(triangular_inverse(R)) * D1;
    return {check_zero("Tr2(D2 Rh12) = I1", partial_tr2(H, D) - I3),
            check_zero("Tr1(D1^-1 Rh12^-1) = I2", partial_tr1_inv(Hi, D) - I3),
            check_zero("D1 (R^T2)^-1 = (R^-1)^T2 D1", lhs3 - rhs3),
            check_zero("Tr2(D2 Rh12^-1) = I1", partial_tr2(Hi, D) - I3),
            check_zero("Tr1(D1^-1 Rh12) = I2", partial_tr1_inv(H, D) - I3)};
}

// Images of the L matrix entries in a representation; entries outside the triangle are zero.
struct LMatrices {
    std::array<std::array<PolyMatrix, 3>, 3> plus, minus;
    std::size_t n = 0;
};

inline LMatrices lpm_rep(const Rep& r) {
    LMatrices L;
    L.n = r.n;
    const Poly lam = lambda();
    const Poly si = sv(-1);
    auto C = [&](CartanForm qf, CartanForm sf) { return r.cartan_exp(QS(qf, sf)); };
    PolyMatrix Z(r.n, r.n);
    for (auto& row : L.plus) row.fill(Z);
    for (auto& row : L.minus) row.fill(Z);
    L.plus[0][0] = C({0, 1, 0}, {0, 1, 0});
    L.plus[1][1] = C({-1, 1, 0}, {1, 1, 0});
    L.plus[2][2] = C({-1, 0, 0}, {1, 0, 0});
    L.plus[0][1] = (si * lam) * r[Gen::E1p] * C({-1, 1, 0}, {1, 1, 0});
    L.plus[1][2] = (si * lam) * r[Gen::E2p] * C({-1, 0, 0}, {1, 0, 0});
    L.plus[0][2] = (si * lam) * r[Gen::E3p] * C({-1, 0, 0}, {1, 0, 0});
    L.minus[0][0] = C({0, -1, 0}, {0, 1, 0});
    L.minus[1][1] = C({1, -1, 0}, {1, 1, 0});
    L.minus[2][2] = C({1, 0, 0}, {1, 0, 0});
    L.minus[1][0] = -(qv(-1) * lam) * r[Gen::E1m] * C({1, -1, 0}, {1, 1, 0});
    L.minus[2][1] = (qv(1) * lam) * r[Gen::E2m] * C({1, 0, 0}, {1, 0, 0});
    L.minus[2][0] = (qv(1) * lam) * r[Gen::E3m] * C({1, 0, 0}, {1, 0, 0});
    return L;
}

// g = (-1)^{H1+H2} in the representation.
inline PolyMatrix parity_element(const Rep& r) {
    std::vector<Poly> d(r.n);
    for (std::size_t i = 0; i < r.n; ++i) d[i] = Poly(((r.h1[i] + r.h2[i]) % 2 + 2) % 2 ? -1 : 1);
    return PolyMatrix::diagonal(d);
}

// L = uL G with G = diag(g, 1, g).
inline LMatrices bosonize(const LMatrices& L, const PolyMatrix& g) {
    LMatrices B = L;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; j += 2) {
            B.plus[i][j] = L.plus[i][j] * g;
            B.minus[i][j] = L.minus[i][j] * g;
        }
    return B;
}

// 3x3 block matrix with block (i,j) = D m_ij D (parity twist of the pairing convention).
inline PolyMatrix assemble_pairing(const std::array<std::array<PolyMatrix, 3>, 3>& m) {
    const PolyMatrix D = dmatrix();
    PolyMatrix out(9, 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            PolyMatrix blk = D * m[i][j] * D;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) out(3 * i + a, 3 * j + b) = blk(a, b);
        }
    return out;
}

inline std::vector<Check> pairing_check() {
    LMatrices L = lpm_rep(fundamental_rep());
    PolyMatrix R = r_matrix(RKind::TwoParam);
    PolyMatrix P = flip();
    PolyMatrix R21 = P * R * P;
    return {check_zero("<L+_1, A_2> = eta12 R21", assemble_pairing(L.plus) - eta() * R21),
            check_zero("<L-_1, A_2> = eta12 R12^-1", assemble_pairing(L.minus) - eta() * triangular_inverse(R))};
}

inline std::vector<Check> superdet_check() {
    LMatrices L = lpm_rep(fundamental_rep());
    const PolyMatrix I = PolyMatrix::identity(3);
    auto sdet = [](const std::array<std::array<PolyMatrix, 3>, 3>& m) {
        return m[0][0] * triangular_inverse(m[1][1]) * m[2][2];
    };
    std::array<std::array<PolyMatrix, 3>, 3> scaled = L.plus;
    for (auto& row : scaled)
        for (auto& x : row) x = qv(1) * x;
    Check rigid = check_zero("q-rescaled L+ superdeterminant differs from 1", sdet(scaled) - I);
    rigid.pass = !rigid.pass;
    return {check_zero("L+11 (L+22)^-1 L+33 = 1", sdet(L.plus) - I),
            check_zero("L-11 (L-22)^-1 L-33 = 1", sdet(L.minus) - I), rigid};
}

// sum_ij e_ij (x) I (x) L_ij  and  sum_ij I (x) e_ij (x) L_ij
inline PolyMatrix embed_aux(const std::array<std::array<PolyMatrix, 3>, 3>& L, int space, std::size_t n) {
    const PolyMatrix I3 = PolyMatrix::identity(3);
    PolyMatrix out(9 * n, 9 * n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (L[i][j].is_zero()) continue;
            PolyMatrix e = PolyMatrix::unit(3, i + 1, j + 1);
            PolyMatrix ab = space == 1 ? kron(e, I3) : kron(I3, e);
            out += kron(ab, L[i][j]);
        }
    return out;
}

// Graded (eta) or bosonized form of the RLL relations, as matrix identities.
inline std::vector<Check> rll_matrix_check(const Rep& r, const PolyMatrix& R, int zeta) {
    LMatrices L = lpm_rep(r);
    if (zeta < 0) L = bosonize(L, parity_element(r));
    const std::size_t n = r.n;
    const PolyMatrix In = PolyMatrix::identity(n);
    PolyMatrix RR = kron(R, In);
    PolyMatrix E = zeta > 0 ? kron(eta(), In) : PolyMatrix::identity(9 * n);
    PolyMatrix P1 = embed_aux(L.plus, 1, n), P2 = embed_aux(L.plus, 2, n);
    PolyMatrix M1 = embed_aux(L.minus, 1, n), M2 = embed_aux(L.minus, 2, n);
    std::string tag = zeta > 0 ? " (graded)" : " (bosonized)";
    return {check_zero("R L+2 L+1 = L+1 L+2 R" + tag, RR * P2 * E * P1 - P1 * E * P2 * RR),
            check_zero("R L-2 L-1 = L-1 L-2 R" + tag, RR * M2 * E * M1 - M1 * E * M2 * RR),
            check_zero("R L+2 L-1 = L-1 L+2 R" + tag, RR * P2 * E * M1 - M1 * E * P2 * RR)};
}

// Entrywise relation list among the L matrices, for zeta = +1 (graded) and -1 (bosonized).
inline std::vector<Check> rll_appendix_check(int zeta, const Rep& r) {
    LMatrices L0 = lpm_rep(r);
    const LMatrices L = zeta > 0 ? L0 : bosonize(L0, parity_element(r));
    const Poly z(zeta);
    const Poly q = qv(1), qi = qv(-1), s = sv(1), si = sv(-1), lam = lambda();
    auto P = [&](int ij) -> const PolyMatrix& { return L.plus[ij / 10 - 1][ij % 10 - 1]; };
    auto M = [&](int ij) -> const PolyMatrix& { return L.minus[ij / 10 - 1][ij % 10 - 1]; };
    std::vector<Check> out;
    auto add = [&](const std::string& name, const PolyMatrix& res) { out.push_back(check_zero(name, res)); };

    for (int sg : {+1, -1}) {
        const std::string S = sg > 0 ? "+" : "-";
        auto A = [&](int ij) -> const PolyMatrix& { return sg > 0 ? P(ij) : M(ij); };
        const Poly qe = qv(sg), qme = qv(-sg);
        add("L" + S + "11 L+12 = zeta q^-e s^-1 L+12 L" + S + "11", A(11) * P(12) - (z * qme * si) * P(12) * A(11));
        add("L" + S + "11 L-21 = zeta q^e s L-21 L" + S + "11", A(11) * M(21) - (z * qe * s) * M(21) * A(11));
        add("L" + S + "22 L+12 = q^-e s^-1 L+12 L" + S + "22", A(22) * P(12) - (qme * si) * P(12) * A(22));
        add("L" + S + "22 L-21 = q^e s L-21 L" + S + "22", A(22) * M(21) - (qe * s) * M(21) * A(22));
        add("L" + S + "33 L+12 = zeta L+12 L" + S + "33", A(33) * P(12) - z * P(12) * A(33));
        add("L" + S + "33 L-21 = zeta L-21 L" + S + "33", A(33) * M(21) - z * M(21) * A(33));
        add("L" + S + "11 L+23 = zeta L+23 L" + S + "11", A(11) * P(23) - z * P(23) * A(11));
        add("L" + S + "11 L-32 = zeta L-32 L" + S + "11", A(11) * M(32) - z * M(32) * A(11));
        add("L" + S + "22 L+23 = q^e s^-1 L+23 L" + S + "22", A(22) * P(23) - (qe * si) * P(23) * A(22));
        add("L" + S + "22 L-32 = q^-e s L-32 L" + S + "22", A(22) * M(32) - (qme * s) * M(32) * A(22));
        add("L" + S + "33 L+23 = zeta q^e s^-1 L+23 L" + S + "33", A(33) * P(23) - (z * qe * si) * P(23) * A(33));
        add("L" + S + "33 L-32 = zeta q^-e s L-32 L" + S + "33", A(33) * M(32) - (z * qme * s) * M(32) * A(33));
        add("L" + S + "11 L+13 = q^-e s^-1 L+13 L" + S + "11", A(11) * P(13) - (qme * si) * P(13) * A(11));
        add("L" + S + "11 L-31 = q^e s L-31 L" + S + "11", A(11) * M(31) - (qe * s) * M(31) * A(11));
        add("L" + S + "22 L+13 = s^-2 L+13 L" + S + "22", A(22) * P(13) - sv(-2) * P(13) * A(22));
        add("L" + S + "22 L-31 = s^2 L-31 L" + S + "22", A(22) * M(31) - sv(2) * M(31) * A(22));
        add("L" + S + "33 L+13 = q^e s^-1 L+13 L" + S + "33", A(33) * P(13) - (qe * si) * P(13) * A(33));
        add("L" + S + "33 L-31 = q^-e s L-31 L" + S + "33", A(33) * M(31) - (qme * s) * M(31) * A(33));
    }
    add("L+12 L+12 = 0", P(12) * P(12));
    add("L-21 L-21 = 0", M(21) * M(21));
    add("L+23 L+23 = 0", P(23) * P(23));
    add("L-32 L-32 = 0", M(32) * M(32));
    add("L+12 L+23 + zeta L+23 L+12 = lambda s^-1 L+13 L+22",
        P(12) * P(23) + z * P(23) * P(12) - (lam * si) * P(13) * P(22));
    add("L-32 L-21 + zeta L-21 L-32 = -lambda s L-31 L-22",
        M(32) * M(21) + z * M(21) * M(32) + (lam * s) * M(31) * M(22));
    add("L+13 L+12 = zeta q s L+12 L+13", P(13) * P(12) - (z * q * s) * P(12) * P(13));
    add("L-31 L-32 = zeta q^-1 s^-1 L-32 L-31", M(31) * M(32) - (z * qi * si) * M(32) * M(31));
    add("L+23 L+13 = zeta q s^-1 L+13 L+23", P(23) * P(13) - (z * q * si) * P(13) * P(23));
    add("L-31 L-21 = zeta q s^-1 L-21 L-31", M(31) * M(21) - (z * q * si) * M(21) * M(31));
    add("L+12 L-32 = -q^-1 s L-32 L+12", P(12) * M(32) + (qi * s) * M(32) * P(12));
    add("L+23 L-21 = -q s L-21 L+23", P(23) * M(21) + (q * s) * M(21) * P(23));
    add("s^-1 L+12 L-31 - zeta s L-31 L+12 = lambda L-32 L+11",
        si * P(12) * M(31) - (z * s) * M(31) * P(12) - lam * M(32) * P(11));
    add("s^-1 L+13 L-21 - zeta s L-21 L+13 = -zeta lambda L+23 L-11",
        si * P(13) * M(21) - (z * s) * M(21) * P(13) + (z * lam) * P(23) * M(11));
    add("s^-1 L+23 L-31 - zeta s L-31 L+23 = -lambda L-21 L+33",
        si * P(23) * M(31) - (z * s) * M(31) * P(23) + lam * M(21) * P(33));
    add("s^-1 L+13 L-32 - zeta s L-32 L+13 = zeta lambda L+12 L-33",
        si * P(13) * M(32) - (z * s) * M(32) * P(13) - (z * lam) * P(12) * M(33));
    add("s^-1 L+12 L-21 + zeta s L-21 L+12 = -lambda (L+11 L-22 - L+22 L-11)",
        si * P(12) * M(21) + (z * s) * M(21) * P(12) + lam * (P(11) * M(22) - P(22) * M(11)));
    add("s^-1 L+23 L-32 + zeta s L-32 L+23 = zeta lambda (L+22 L-33 - L+33 L-22)",
        si * P(23) * M(32) + (z * s) * M(32) * P(23) - (z * lam) * (P(22) * M(33) - P(33) * M(22)));
    add("s^-1 L+13 L-31 - s L-31 L+13 = lambda (L+11 L-33 - L+33 L-11) [no zeta]",
        si * P(13) * M(31) - s * M(31) * P(13) - lam * (P(11) * M(33) - P(33) * M(11)));
    return out;
}

inline std::vector<Check> rll_appendix_check(int zeta) { return rll_appendix_check(zeta, fundamental_rep()); }

inline std::vector<Check> bosonization_check() {
    Rep f = fundamental_rep();
    PolyMatrix g = parity_element(f);
    std::vector<Check> out;
    for (Gen x : kAllGens) {
        int d = degree(F(x));
        PolyMatrix res = g * f[x] - Poly(d ? -1 : 1) * f[x] * g;
        out.push_back(check_zero("g " + gen_name(F(x)) + " = (-1)^deg " + gen_name(F(x)) + " g", res));
    }
    out.push_back(check_zero("g^2 = 1", g * g - PolyMatrix::identity(3)));
    out.push_back(check_zero("<g, A> = D", g - dmatrix()));
    out.push_back(check_zero("D^2 = I (S^4 = id)", dmatrix() * dmatrix() - PolyMatrix::identity(3)));
    return out;
}

// (I - Rhat^2)^k = ((1 - q^-4)^k / (1 + q^-2)) (Rhat + I), with the scalar cleared of denominators.
inline Check rk_check(const PolyMatrix& Rh, unsigned k) {
    const PolyMatrix I = PolyMatrix::identity(9);
    PolyMatrix lhs = (I - Rh * Rh).pow(k);
    // (1 + q^-2) lhs = (1 - q^-4)^k (Rh + I)
    PolyMatrix res = (Poly(1) + qv(-2)) * lhs - (Poly(1) - qv(-4)).pow(static_cast<int>(k)) * (Rh + I);
    return check_zero("(I - Rh^2)^" + std::to_string(k) + " = (1-q^-4)^k/(1+q^-2) (Rh + I)", res);
}

// Y in the fundamental (L = 1) or as I - lambda X123 on two sites (L = 2).
inline PolyMatrix x123(const PolyMatrix& Rh) {
    PolyMatrix A12 = three_space_embed(Rh, Pair::P12), A23 = three_space_embed(Rh, Pair::P23);
    return qv(-1) * A23 * A12 * A23 + qv(-3) * A12 + (qv(-1) + qv(-3)) * PolyMatrix::identity(27);
}

inline PolyMatrix y_rep(unsigned L, const PolyMatrix& Rh) {
    if (L == 1) return Rh * Rh;
    if (L == 2) return PolyMatrix::identity(27) - lambda() * x123(Rh);
    throw Error(Errc::UnsupportedL, "Y representation available for L = 1, 2 only");
}

// Checks that the two-parameter R is the four-parameter one at q12 = q13 = q23 = s, entry by entry.
inline Check four_to_two_param_check() {
    PolyMatrix four = r_matrix(RKind::FourParam).map([](const Poly& p) {
        return p.substitute(Q12, sv(1)).substitute(Q13, sv(1)).substitute(Q23, sv(1));
    });
    return check_zero("R(q12=q13=q23=s) = two-parameter R", four - r_matrix(RKind::TwoParam));
}

} // namespace slq
