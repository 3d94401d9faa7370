#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slq/error.hpp"
#include "slq/matrix.hpp"
#include "slq/ring.hpp"

namespace slq {

enum class Gen { H1 = 0, H2, E1p, E2p, E3p, E1m, E2m, E3m };
inline constexpr std::array<Gen, 8> kAllGens = {Gen::H1,  Gen::H2,  Gen::E1p, Gen::E2p,
                                                Gen::E3p, Gen::E1m, Gen::E2m, Gen::E3m};

enum class Basis { Fermionic, Distinguished };
enum class HopfVariant { ClassicalPrimitive, FermionicStandard, DistinguishedNatural };
enum class Deformation { Classical, Quantum };

struct GeneratorId {
    Basis basis = Basis::Fermionic;
    Gen g = Gen::H1;
    friend bool operator==(const GeneratorId& a, const GeneratorId& b) { return a.basis == b.basis && a.g == b.g; }
    friend bool operator<(const GeneratorId& a, const GeneratorId& b) {
        return std::pair(a.basis, a.g) < std::pair(b.basis, b.g);
    }
};

inline GeneratorId F(Gen g) { return {Basis::Fermionic, g}; }
inline GeneratorId Dist(Gen g) { return {Basis::Distinguished, g}; }

inline std::string gen_name(GeneratorId id) {
    static const char* ferm[] = {"H1", "H2", "E1p", "E2p", "E3p", "E1m", "E2m", "E3m"};
    static const char* dist[] = {"h1", "h2", "e1p", "e2p", "e3p", "e1m", "e2m", "e3m"};
    return id.basis == Basis::Fermionic ? ferm[static_cast<int>(id.g)] : dist[static_cast<int>(id.g)];
}

inline std::string variant_name(HopfVariant v) {
    switch (v) {
    case HopfVariant::ClassicalPrimitive: return "classical";
    case HopfVariant::FermionicStandard: return "standard";
    case HopfVariant::DistinguishedNatural: return "natural-dist";
    }
    return "?";
}

inline HopfVariant parse_variant(const std::string& s) {
    if (s == "classical") return HopfVariant::ClassicalPrimitive;
    if (s == "standard") return HopfVariant::FermionicStandard;
    if (s == "natural-dist") return HopfVariant::DistinguishedNatural;
    throw Error(Errc::BadVariant, "unknown Hopf variant '" + s + "'");
}

inline Deformation deformation_of(HopfVariant v) {
    return v == HopfVariant::ClassicalPrimitive ? Deformation::Classical : Deformation::Quantum;
}

inline int degree(GeneratorId id) {
    switch (id.g) {
    case Gen::H1:
    case Gen::H2: return 0;
    case Gen::E1p:
    case Gen::E1m: return id.basis == Basis::Fermionic ? 1 : 0;
    case Gen::E2p:
    case Gen::E2m: return 1;
    case Gen::E3p:
    case Gen::E3m: return id.basis == Basis::Fermionic ? 0 : 1;
    }
    return 0;
}

// Eigenvalue shifts (w1, w2) with [H_i, X] = w_i X, in the fermionic Cartan basis.
inline std::array<int, 2> weight(GeneratorId id) {
    auto w = [](Gen g) -> std::array<int, 2> {
        switch (g) {
        case Gen::E1p: return {0, -1};
        case Gen::E2p: return {-1, 0};
        case Gen::E3p: return {-1, -1};
        case Gen::E1m: return {0, 1};
        case Gen::E2m: return {1, 0};
        case Gen::E3m: return {1, 1};
        default: return {0, 0};
        }
    };
    if (id.basis == Basis::Fermionic) return w(id.g);
    switch (id.g) {
    case Gen::E1p: return w(Gen::E3p);
    case Gen::E2p: return w(Gen::E2m);
    case Gen::E3p: return w(Gen::E1p);
    case Gen::E1m: return w(Gen::E3m);
    case Gen::E2m: return w(Gen::E2p);
    case Gen::E3m: return w(Gen::E1m);
    default: return {0, 0};
    }
}

// a*H1 + b*H2 + c
struct CartanForm {
    int a = 0, b = 0, c = 0;
    long at(int h1, int h2) const { return static_cast<long>(a) * h1 + static_cast<long>(b) * h2 + c; }
    CartanForm operator+(const CartanForm& o) const { return {a + o.a, b + o.b, c + o.c}; }
    CartanForm operator-() const { return {-a, -b, -c}; }
    bool zero() const { return a == 0 && b == 0 && c == 0; }
    friend bool operator==(const CartanForm& x, const CartanForm& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

// x*h1 + y*h2 + c written in the fermionic Cartan basis (h1 = -H1-H2, h2 = H2).
inline CartanForm hform(int x, int y, int c = 0) { return {-x, y - x, c}; }

// q^{qf} s^{sf}
struct CartanExp {
    CartanForm qf, sf;
    friend bool operator==(const CartanExp& x, const CartanExp& y) { return x.qf == y.qf && x.sf == y.sf; }
};

inline CartanExp QS(CartanForm qf, CartanForm sf = {}) { return {qf, sf}; }

using Factor = std::variant<GeneratorId, CartanExp>;
using Leg = std::vector<Factor>;

inline int leg_degree(const Leg& leg) {
    int d = 0;
    for (const auto& f : leg)
        if (auto g = std::get_if<GeneratorId>(&f)) d += degree(*g);
    return d % 2;
}

struct WordTerm {
    Poly coef;
    std::vector<Leg> legs;
};
using TensorWord = std::vector<WordTerm>;

// Representation: images of the eight fermionic generators plus the integer Cartan eigenvalues.
class Rep {
public:
    std::size_t n = 0;
    std::vector<int> h1, h2;
    ParityVector par;
    Deformation def = Deformation::Quantum;
    std::array<PolyMatrix, 8> gens;

    const PolyMatrix& operator[](Gen g) const { return gens[static_cast<int>(g)]; }
    PolyMatrix& operator[](Gen g) { return gens[static_cast<int>(g)]; }

    PolyMatrix cartan_diag(const CartanForm& f, const std::function<Poly(long)>& fn) const {
        std::vector<Poly> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = fn(f.at(h1[i], h2[i]));
        return PolyMatrix::diagonal(d);
    }
    PolyMatrix cartan_exp(const CartanExp& e) const {
        std::vector<Poly> d(n);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = qv(static_cast<int>(e.qf.at(h1[i], h2[i]))) * sv(static_cast<int>(e.sf.at(h1[i], h2[i])));
        return PolyMatrix::diagonal(d);
    }
    PolyMatrix qnum_of(const CartanForm& f) const {
        return cartan_diag(f, [](long v) { return qnum(v); });
    }
    PolyMatrix linear(const CartanForm& f) const {
        return cartan_diag(f, [](long v) { return Poly(v); });
    }
    PolyMatrix identity() const { return PolyMatrix::identity(n); }
    PolyMatrix sign() const { return par.sign_matrix(); }

    PolyMatrix gen(GeneratorId id) const;

    PolyMatrix eval(const Leg& leg) const {
        PolyMatrix m = identity();
        for (const auto& f : leg) {
            if (auto g = std::get_if<GeneratorId>(&f)) m = m * gen(*g);
            else m = m * cartan_exp(std::get<CartanExp>(f));
        }
        return m;
    }

    PolyMatrix eval(const TensorWord& w) const {
        PolyMatrix m(n, n);
        for (const auto& t : w) {
            if (t.legs.size() != 1) throw Error(Errc::DimensionMismatch, "single-leg word expected");
            m += t.coef * eval(t.legs[0]);
        }
        return m;
    }

    GradedOp graded(GeneratorId id) const { return {gen(id), degree(id), par}; }
};

// Fundamental representation, shared by the classical and the deformed algebra.
inline Rep fundamental_rep(Deformation def = Deformation::Quantum) {
    Rep r;
    r.n = 3;
    r.h1 = {1, 1, 0};
    r.h2 = {0, -1, -1};
    r.par = ParityVector::fundamental();
    r.def = def;
    r[Gen::H1] = PolyMatrix::unit(3, 1, 1) + PolyMatrix::unit(3, 2, 2);
    r[Gen::H2] = -(PolyMatrix::unit(3, 2, 2) + PolyMatrix::unit(3, 3, 3));
    r[Gen::E1p] = PolyMatrix::unit(3, 2, 1);
    r[Gen::E2p] = PolyMatrix::unit(3, 3, 2);
    r[Gen::E3p] = PolyMatrix::unit(3, 3, 1);
    r[Gen::E1m] = PolyMatrix::unit(3, 1, 2);
    r[Gen::E2m] = -PolyMatrix::unit(3, 2, 3);
    r[Gen::E3m] = -PolyMatrix::unit(3, 1, 3);
    return r;
}

inline GradedOp fundamental_rep(GeneratorId id) { return fundamental_rep().graded(id); }

// Diagonal matrices for H1, H2 must have constant integer diagonal entries.
inline std::vector<int> cartan_values(const PolyMatrix& h) {
    if (!h.square() || !h.is_diagonal()) throw Error(Errc::NonIntegerCartan, "Cartan matrix is not diagonal");
    std::vector<int> v(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        const Poly& p = h(i, i);
        if (!p.is_constant()) throw Error(Errc::NonIntegerCartan, "non-constant Cartan entry");
        Rational c = p.constant_value();
        if (c.get_den() != 1 || !c.get_num().fits_sint_p()) throw Error(Errc::NonIntegerCartan, "non-integer Cartan entry");
        v[i] = static_cast<int>(c.get_num().get_si());
    }
    return v;
}

// Entrywise base^{a h1 + b h2 + c} for supplied diagonal H matrices.
inline PolyMatrix cartan_exponential(const CartanForm& f, Var base, const PolyMatrix& H1, const PolyMatrix& H2) {
    auto h1 = cartan_values(H1), h2 = cartan_values(H2);
    if (h1.size() != h2.size()) throw Error(Errc::DimensionMismatch, "Cartan sizes");
    std::vector<Poly> d(h1.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = Poly::var(base, static_cast<int>(f.at(h1[i], h2[i])));
    return PolyMatrix::diagonal(d);
}

inline PolyMatrix qnum_of_cartan(const CartanForm& f, const PolyMatrix& H1, const PolyMatrix& H2) {
    auto h1 = cartan_values(H1), h2 = cartan_values(H2);
    std::vector<Poly> d(h1.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = qnum(f.at(h1[i], h2[i]));
    return PolyMatrix::diagonal(d);
}

namespace words {

inline Leg leg() { return {}; }
template <class... T>
Leg leg(T... f) { return Leg{Factor(f)...}; }

inline WordTerm term(Poly c, Leg a) { return {std::move(c), {std::move(a)}}; }
inline WordTerm term(Poly c, Leg a, Leg b) { return {std::move(c), {std::move(a), std::move(b)}}; }

} // namespace words

// Fermionic to distinguished (and back), as single-leg words in the other basis.
inline TensorWord basis_change(GeneratorId id, Deformation def) {
    using namespace words;
    const bool cl = def == Deformation::Classical;
    const Poly si = cl ? Poly(1) : sv(-1);
    if (id.basis == Basis::Distinguished) {
        // distinguished generator in terms of fermionic ones
        switch (id.g) {
        case Gen::H1: return {term(-1, leg(F(Gen::H1))), term(-1, leg(F(Gen::H2)))};
        case Gen::H2: return {term(1, leg(F(Gen::H2)))};
        case Gen::E1p: return {term(si, leg(F(Gen::E3p)))};
        case Gen::E1m: return {term(-1, leg(F(Gen::E3m)))};
        case Gen::E3p: return {term(si, leg(F(Gen::E1p)))};
        case Gen::E3m: return {term(-1, leg(F(Gen::E1m)))};
        case Gen::E2p:
            if (cl) return {term(1, leg(F(Gen::E2m)))};
            return {term(1, leg(F(Gen::E2m), QS({0, -1, 0}, {0, -1, 0})))};
        case Gen::E2m:
            if (cl) return {term(1, leg(F(Gen::E2p)))};
            return {term(si, leg(F(Gen::E2p), QS({0, 1, 0}, {0, -1, 0})))};
        }
    } else {
        // fermionic generator in terms of distinguished ones
        const Poly s1 = cl ? Poly(1) : sv(1);
        switch (id.g) {
        case Gen::H1: return {term(-1, leg(Dist(Gen::H1))), term(-1, leg(Dist(Gen::H2)))};
        case Gen::H2: return {term(1, leg(Dist(Gen::H2)))};
        case Gen::E3p: return {term(s1, leg(Dist(Gen::E1p)))};
        case Gen::E3m: return {term(-1, leg(Dist(Gen::E1m)))};
        case Gen::E1p: return {term(s1, leg(Dist(Gen::E3p)))};
        case Gen::E1m: return {term(-1, leg(Dist(Gen::E3m)))};
        case Gen::E2m:
            if (cl) return {term(1, leg(Dist(Gen::E2p)))};
            return {term(1, leg(Dist(Gen::E2p), QS(hform(0, 1), hform(0, 1))))};
        case Gen::E2p:
            if (cl) return {term(1, leg(Dist(Gen::E2m)))};
            return {term(s1, leg(Dist(Gen::E2m), QS(hform(0, -1), hform(0, 1))))};
        }
    }
    return {};
}

inline PolyMatrix Rep::gen(GeneratorId id) const {
    if (id.basis == Basis::Fermionic) return (*this)[id.g];
    return eval(basis_change(id, def));
}

// Normal form of a single-leg word: coefficient, generator sequence, one trailing Cartan exponential.
struct NormalWord {
    Poly coef;
    std::vector<GeneratorId> gens;
    CartanExp cartan;
};

inline NormalWord normalize(const Poly& coef, const Leg& leg) {
    NormalWord w{coef, {}, {}};
    // q^{aH1+bH2} X = X q^{a(H1+w1)+b(H2+w2)}: sweep left to right, carrying the exponential.
    CartanExp acc{};
    for (const auto& f : leg) {
        if (auto g = std::get_if<GeneratorId>(&f)) {
            auto wt = weight(*g);
            acc.qf.c += acc.qf.a * wt[0] + acc.qf.b * wt[1];
            acc.sf.c += acc.sf.a * wt[0] + acc.sf.b * wt[1];
            w.gens.push_back(*g);
        } else {
            const auto& e = std::get<CartanExp>(f);
            acc.qf = acc.qf + e.qf;
            acc.sf = acc.sf + e.sf;
        }
    }
    w.coef = w.coef * qv(acc.qf.c) * sv(acc.sf.c);
    acc.qf.c = 0;
    acc.sf.c = 0;
    w.cartan = acc;
    return w;
}

// Substitute the basis change into every generator of a single-leg word, one level deep.
inline TensorWord substitute_basis(const TensorWord& w, Deformation def) {
    TensorWord out;
    for (const auto& t : w) {
        std::vector<std::pair<Poly, Leg>> acc{{t.coef, {}}};
        for (const auto& f : t.legs.at(0)) {
            if (auto g = std::get_if<GeneratorId>(&f)) {
                TensorWord img = basis_change(*g, def);
                std::vector<std::pair<Poly, Leg>> next;
                for (const auto& [c, l] : acc)
                    for (const auto& it : img) {
                        Leg nl = l;
                        nl.insert(nl.end(), it.legs[0].begin(), it.legs[0].end());
                        next.push_back({c * it.coef, nl});
                    }
                acc = std::move(next);
            } else {
                for (auto& [c, l] : acc) l.push_back(f);
            }
        }
        for (auto& [c, l] : acc) out.push_back({c, {l}});
    }
    return out;
}

// Round trip check: substituting one direction into the other reproduces the generator.
inline bool basis_round_trip(GeneratorId id, Deformation def) {
    TensorWord once = basis_change(id, def);
    TensorWord twice = substitute_basis(once, def);
    // Collect normal forms by generator sequence and Cartan exponential.
    std::vector<NormalWord> nf;
    for (const auto& t : twice) {
        NormalWord w = normalize(t.coef, t.legs[0]);
        bool merged = false;
        for (auto& x : nf) {
            if (x.gens.size() == w.gens.size() && std::equal(x.gens.begin(), x.gens.end(), w.gens.begin()) &&
                x.cartan == w.cartan) {
                x.coef += w.coef;
                merged = true;
                break;
            }
        }
        if (!merged) nf.push_back(w);
    }
    nf.erase(std::remove_if(nf.begin(), nf.end(), [](const NormalWord& w) { return w.coef.is_zero(); }), nf.end());
    return nf.size() == 1 && nf[0].gens.size() == 1 && nf[0].gens[0] == id && nf[0].coef == Poly(1) &&
           nf[0].cartan == CartanExp{};
}

// Two-leg coproduct of a fermionic generator.
inline TensorWord coproduct(Gen g, HopfVariant v) {
    using namespace words;
    const Poly lam = lambda();
    auto G = [](Gen x) { return F(x); };
    const Leg one;
    if (g == Gen::H1 || g == Gen::H2 || v == HopfVariant::ClassicalPrimitive)
        return {term(1, leg(G(g)), one), term(1, one, leg(G(g)))};
    if (v == HopfVariant::FermionicStandard) {
        switch (g) {
        case Gen::E1p: return {term(1, leg(G(g)), one), term(1, leg(QS({1, 0, 0}, {-1, 0, 0})), leg(G(g)))};
        case Gen::E2p: return {term(1, leg(G(g)), one), term(1, leg(QS({0, 1, 0}, {0, 1, 0})), leg(G(g)))};
        case Gen::E1m: return {term(1, leg(G(g)), leg(QS({-1, 0, 0}, {-1, 0, 0}))), term(1, one, leg(G(g)))};
        case Gen::E2m: return {term(1, leg(G(g)), leg(QS({0, -1, 0}, {0, 1, 0}))), term(1, one, leg(G(g)))};
        case Gen::E3p:
            return {term(1, leg(G(g)), one),
                    term(lam, leg(QS({}, {0, 1, 0}), G(Gen::E1p), QS({0, 1, 0})), leg(G(Gen::E2p))),
                    term(1, leg(QS({1, 1, 0}, {-1, 1, 0})), leg(G(g)))};
        case Gen::E3m:
            return {term(1, leg(G(g)), leg(QS({-1, -1, 0}, {-1, 1, 0}))),
                    term(-lam, leg(G(Gen::E2m)), leg(QS({0, -1, 0}), G(Gen::E1m), QS({}, {0, 1, 0}))),
                    term(1, one, leg(G(g)))};
        default: break;
        }
    } else {
        switch (g) {
        case Gen::E1p:
            return {term(1, leg(G(g)), one), term(1, leg(QS({-1, 0, 0}, {-1, 0, 0})), leg(G(g))),
                    term(lam, leg(QS({0, 1, 0}), G(Gen::E3p), QS({}, {0, -1, 0})),
                         leg(QS({0, -1, 0}), G(Gen::E2m), QS({}, {0, -1, 0})))};
        case Gen::E2p: return {term(1, leg(G(g)), leg(QS({0, -2, 0}))), term(1, leg(QS({0, -1, 0}, {0, 1, 0})), leg(G(g)))};
        case Gen::E1m:
            return {term(1, leg(G(g)), leg(QS({1, 0, 0}, {-1, 0, 0}))), term(1, one, leg(G(g))),
                    term(-lam, leg(QS({}, {0, -1, 0}), G(Gen::E2p), QS({0, 1, 0})),
                         leg(QS({}, {0, -1, 0}), G(Gen::E3m), QS({0, -1, 0})))};
        case Gen::E2m: return {term(1, leg(G(g)), leg(QS({0, 1, 0}, {0, 1, 0}))), term(1, leg(QS({0, 2, 0})), leg(G(g)))};
        case Gen::E3p: return {term(1, leg(G(g)), one), term(1, leg(QS({-1, -1, 0}, {-1, 1, 0})), leg(G(g)))};
        case Gen::E3m: return {term(1, leg(G(g)), leg(QS({1, 1, 0}, {-1, 1, 0}))), term(1, one, leg(G(g)))};
        default: break;
        }
    }
    return {};
}

// Natural coproduct of the distinguished generators h_i, e1, e2.
inline TensorWord distinguished_coproduct(Gen g) {
    using namespace words;
    auto G = [](Gen x) { return Dist(x); };
    const Leg one;
    switch (g) {
    case Gen::H1:
    case Gen::H2: return {term(1, leg(G(g)), one), term(1, one, leg(G(g)))};
    case Gen::E1p: return {term(1, leg(G(g)), one), term(1, leg(QS(hform(1, 0), hform(1, 2))), leg(G(g)))};
    case Gen::E2p: return {term(1, leg(G(g)), one), term(1, leg(QS(hform(0, 1), hform(0, -1))), leg(G(g)))};
    case Gen::E1m: return {term(1, leg(G(g)), leg(QS(hform(-1, 0), hform(1, 2)))), term(1, one, leg(G(g)))};
    case Gen::E2m: return {term(1, leg(G(g)), leg(QS(hform(0, -1), hform(0, -1)))), term(1, one, leg(G(g)))};
    default: throw Error(Errc::BadIndex, "no natural coproduct listed for " + gen_name(G(g)));
    }
}

// Evaluate a two-leg word on cur (x) base.
inline PolyMatrix eval_two_leg(const TensorWord& w, const Rep& cur, const Rep& base) {
    PolyMatrix m(cur.n * base.n, cur.n * base.n);
    for (const auto& t : w) {
        PolyMatrix a = cur.eval(t.legs.at(0));
        PolyMatrix b = base.eval(t.legs.at(1));
        m += t.coef * graded_kron(a, cur.par, b, leg_degree(t.legs[1]));
    }
    return m;
}

inline Rep tensor_cartan(const Rep& cur, const Rep& base) {
    Rep r;
    r.n = cur.n * base.n;
    r.def = cur.def;
    for (std::size_t i = 0; i < cur.n; ++i)
        for (std::size_t k = 0; k < base.n; ++k) {
            r.h1.push_back(cur.h1[i] + base.h1[k]);
            r.h2.push_back(cur.h2[i] + base.h2[k]);
        }
    r.par = tensor(cur.par, base.par);
    return r;
}

// L-fold coproduct representation, nested on the left: (Delta^{(L-1)} (x) id) o Delta.
inline Rep coproduct_rep(HopfVariant v, unsigned L) {
    if (L < 1) throw Error(Errc::SiteOutOfRange, "L must be >= 1");
    const Rep base = fundamental_rep(deformation_of(v));
    Rep cur = base;
    for (unsigned site = 2; site <= L; ++site) {
        Rep next = tensor_cartan(cur, base);
        for (Gen g : kAllGens) next[g] = eval_two_leg(coproduct(g, v), cur, base);
        cur = std::move(next);
    }
    return cur;
}

inline GradedOp coproduct_rep(GeneratorId id, HopfVariant v, unsigned L) { return coproduct_rep(v, L).graded(id); }

// Same construction from an arbitrary table; used to compare coproduct routes.
inline Rep coproduct_rep_from(const std::function<TensorWord(Gen)>& table, Deformation def, unsigned L) {
    const Rep base = fundamental_rep(def);
    Rep cur = base;
    for (unsigned site = 2; site <= L; ++site) {
        Rep next = tensor_cartan(cur, base);
        for (Gen g : kAllGens) next[g] = eval_two_leg(table(g), cur, base);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Presentations

struct Relation {
    std::string name;
    PolyMatrix residual;
};

namespace detail {

inline void cartan_action(std::vector<Relation>& out, const Rep& r, Basis b, const std::array<std::array<int, 2>, 2>& a) {
    Gen hs[2] = {Gen::H1, Gen::H2};
    Gen ep[2] = {Gen::E1p, Gen::E2p};
    Gen em[2] = {Gen::E1m, Gen::E2m};
    GeneratorId h1{b, Gen::H1}, h2{b, Gen::H2};
    out.push_back({"[" + gen_name(h1) + "," + gen_name(h2) + "]", commutator(r.gen(h1), r.gen(h2))});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            GeneratorId H{b, hs[i]}, P{b, ep[j]}, M{b, em[j]};
            out.push_back({"[" + gen_name(H) + "," + gen_name(P) + "]",
                           commutator(r.gen(H), r.gen(P)) - Poly(a[i][j]) * r.gen(P)});
            out.push_back({"[" + gen_name(H) + "," + gen_name(M) + "]",
                           commutator(r.gen(H), r.gen(M)) + Poly(a[i][j]) * r.gen(M)});
        }
}

} // namespace detail

inline std::vector<Relation> presentation_relations(Deformation def, Basis basis, const Rep& r) {
    std::vector<Relation> out;
    const bool q = def == Deformation::Quantum;
    const Poly qq = qv(1), s = sv(1), qi = qv(-1), si = sv(-1);
    if (basis == Basis::Fermionic) {
        auto X = [&](Gen g) { return r[g]; };
        detail::cartan_action(out, r, basis, {{{0, -1}, {-1, 0}}});
        out.push_back({"{E1p,E1p}", anticommutator(X(Gen::E1p), X(Gen::E1p))});
        out.push_back({"{E1m,E1m}", anticommutator(X(Gen::E1m), X(Gen::E1m))});
        out.push_back({"{E2p,E2p}", anticommutator(X(Gen::E2p), X(Gen::E2p))});
        out.push_back({"{E2m,E2m}", anticommutator(X(Gen::E2m), X(Gen::E2m))});
        out.push_back({"{E1p,E2m}", anticommutator(X(Gen::E1p), X(Gen::E2m))});
        out.push_back({"{E1m,E2p}", anticommutator(X(Gen::E1m), X(Gen::E2p))});
        if (q) {
            out.push_back({"{E1p,E1m}", anticommutator(X(Gen::E1p), X(Gen::E1m)) -
                                            r.qnum_of({1, 0, 0}) * r.cartan_exp(QS({}, {-1, 0, 1}))});
            out.push_back({"{E2p,E2m}", anticommutator(X(Gen::E2p), X(Gen::E2m)) -
                                            r.qnum_of({0, 1, 0}) * r.cartan_exp(QS({}, {0, 1, 1}))});
            out.push_back({"E3p definition", X(Gen::E3p) - (qq * si) * X(Gen::E1p) * X(Gen::E2p) - X(Gen::E2p) * X(Gen::E1p)});
            out.push_back({"E3m definition", X(Gen::E3m) - X(Gen::E1m) * X(Gen::E2m) - (qi * si) * X(Gen::E2m) * X(Gen::E1m)});
            out.push_back({"Serre E1p E3p", X(Gen::E1p) * X(Gen::E3p) - (qi * s) * X(Gen::E3p) * X(Gen::E1p)});
            out.push_back({"Serre E1m E3m", X(Gen::E1m) * X(Gen::E3m) - (qi * si) * X(Gen::E3m) * X(Gen::E1m)});
            out.push_back({"Serre E2p E3p", X(Gen::E2p) * X(Gen::E3p) - (qq * si) * X(Gen::E3p) * X(Gen::E2p)});
            out.push_back({"Serre E2m E3m", X(Gen::E2m) * X(Gen::E3m) - (qq * s) * X(Gen::E3m) * X(Gen::E2m)});
            out.push_back({"[E3p,E1m]", commutator(X(Gen::E3p), X(Gen::E1m)) -
                                            (qq * s) * X(Gen::E2p) * r.cartan_exp(QS({-1, 0, 0}, {-1, 0, 0}))});
            out.push_back({"[E3p,E2m]", commutator(X(Gen::E3p), X(Gen::E2m)) -
                                            X(Gen::E1p) * r.cartan_exp(QS({0, 1, 0}, {0, 1, 0}))});
            out.push_back({"[E3m,E1p]", commutator(X(Gen::E3m), X(Gen::E1p)) +
                                            X(Gen::E2m) * r.cartan_exp(QS({1, 0, 0}, {-1, 0, 0}))});
            out.push_back({"[E3m,E2p]", commutator(X(Gen::E3m), X(Gen::E2p)) +
                                            (qi * s) * X(Gen::E1m) * r.cartan_exp(QS({0, -1, 0}, {0, 1, 0}))});
            out.push_back({"[E3p,E3m]", commutator(X(Gen::E3p), X(Gen::E3m)) -
                                            r.qnum_of({1, 1, 0}) * r.cartan_exp(QS({}, {-1, 1, 1}))});
        } else {
            out.push_back({"{E1p,E1m}", anticommutator(X(Gen::E1p), X(Gen::E1m)) - X(Gen::H1)});
            out.push_back({"{E2p,E2m}", anticommutator(X(Gen::E2p), X(Gen::E2m)) - X(Gen::H2)});
            out.push_back({"E3p definition", X(Gen::E3p) - anticommutator(X(Gen::E1p), X(Gen::E2p))});
            out.push_back({"E3m definition", X(Gen::E3m) - anticommutator(X(Gen::E1m), X(Gen::E2m))});
            out.push_back({"Serre [E1p,E3p]", commutator(X(Gen::E1p), X(Gen::E3p))});
            out.push_back({"Serre [E1m,E3m]", commutator(X(Gen::E1m), X(Gen::E3m))});
            out.push_back({"Serre [E2p,E3p]", commutator(X(Gen::E2p), X(Gen::E3p))});
            out.push_back({"Serre [E2m,E3m]", commutator(X(Gen::E2m), X(Gen::E3m))});
            out.push_back({"[E3p,E1m]", commutator(X(Gen::E3p), X(Gen::E1m)) - X(Gen::E2p)});
            out.push_back({"[E3p,E2m]", commutator(X(Gen::E3p), X(Gen::E2m)) - X(Gen::E1p)});
            out.push_back({"[E3m,E1p]", commutator(X(Gen::E3m), X(Gen::E1p)) + X(Gen::E2m)});
            out.push_back({"[E3m,E2p]", commutator(X(Gen::E3m), X(Gen::E2p)) + X(Gen::E1m)});
            out.push_back({"[E3p,E3m]", commutator(X(Gen::E3p), X(Gen::E3m)) - X(Gen::H1) - X(Gen::H2)});
        }
    } else {
        auto X = [&](Gen g) { return r.gen(Dist(g)); };
        detail::cartan_action(out, r, basis, {{{2, -1}, {-1, 0}}});
        out.push_back({"{e2p,e2p}", anticommutator(X(Gen::E2p), X(Gen::E2p))});
        out.push_back({"{e2m,e2m}", anticommutator(X(Gen::E2m), X(Gen::E2m))});
        out.push_back({"[e1p,e2m]", commutator(X(Gen::E1p), X(Gen::E2m))});
        out.push_back({"[e1m,e2p]", commutator(X(Gen::E1m), X(Gen::E2p))});
        if (q) {
            out.push_back({"[e1p,e1m]", commutator(X(Gen::E1p), X(Gen::E1m)) -
                                            r.qnum_of(hform(1, 0)) * r.cartan_exp(QS({}, hform(1, 2)))});
            out.push_back({"{e2p,e2m}", anticommutator(X(Gen::E2p), X(Gen::E2m)) -
                                            r.qnum_of(hform(0, 1)) * r.cartan_exp(QS({}, hform(0, -1)))});
        } else {
            out.push_back({"[e1p,e1m]", commutator(X(Gen::E1p), X(Gen::E1m)) - X(Gen::H1)});
            out.push_back({"{e2p,e2m}", anticommutator(X(Gen::E2p), X(Gen::E2m)) - X(Gen::H2)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Counit and antipode

inline Poly counit(const Leg& leg) {
    Poly c(1);
    for (const auto& f : leg) {
        if (std::holds_alternative<GeneratorId>(f)) return {};
        const auto& e = std::get<CartanExp>(f);
        c *= qv(e.qf.c) * sv(e.sf.c);
    }
    return c;
}

// Antipode of a single fermionic generator as a single-leg word.
inline TensorWord antipode(Gen g, HopfVariant v) {
    using namespace words;
    auto G = [](Gen x) { return F(x); };
    if (v == HopfVariant::DistinguishedNatural)
        throw Error(Errc::BadVariant, "no antipode is given for the natural distinguished structure");
    if (v == HopfVariant::ClassicalPrimitive || g == Gen::H1 || g == Gen::H2) return {term(-1, leg(G(g)))};
    const Poly lam = lambda();
    switch (g) {
    case Gen::E1p: return {term(-1, leg(QS({-1, 0, 0}, {1, 0, 0}), G(g)))};
    case Gen::E2p: return {term(-1, leg(QS({0, -1, 0}, {0, -1, 0}), G(g)))};
    case Gen::E1m: return {term(-1, leg(G(g), QS({1, 0, 0}, {1, 0, 0})))};
    case Gen::E2m: return {term(-1, leg(G(g), QS({0, 1, 0}, {0, -1, 0})))};
    case Gen::E3p:
        return {term(-1, leg(QS({-1, -1, 0}, {1, -1, 0}), G(g))),
                term(lam, leg(QS({-1, -1, 0}, {1, -1, -1}), G(Gen::E1p), G(Gen::E2p)))};
    case Gen::E3m:
        return {term(-1, leg(G(g), QS({1, 1, 0}, {1, -1, 0}))),
                term(-lam, leg(G(Gen::E2m), G(Gen::E1m), QS({1, 1, 0}, {1, -1, -1})))};
    default: break;
    }
    return {};
}

// S extended super-antimultiplicatively to a word.
inline TensorWord antipode(const Leg& leg, HopfVariant v) {
    int sign = 0, seen = 0;
    for (const auto& f : leg) {
        int d = 0;
        if (auto g = std::get_if<GeneratorId>(&f)) d = degree(*g);
        sign += d * seen;
        seen += d;
    }
    std::vector<std::pair<Poly, Leg>> acc{{Poly(sign % 2 ? -1 : 1), {}}};
    for (auto it = leg.rbegin(); it != leg.rend(); ++it) {
        TensorWord img;
        if (auto g = std::get_if<GeneratorId>(&*it)) {
            if (g->basis != Basis::Fermionic) throw Error(Errc::BadVariant, "antipode defined on fermionic generators");
            img = antipode(g->g, v);
        } else {
            CartanExp e = std::get<CartanExp>(*it);
            e.qf = {-e.qf.a, -e.qf.b, e.qf.c};
            e.sf = {-e.sf.a, -e.sf.b, e.sf.c};
            img = {words::term(1, Leg{e})};
        }
        std::vector<std::pair<Poly, Leg>> next;
        for (const auto& [c, l] : acc)
            for (const auto& t : img) {
                Leg nl = l;
                nl.insert(nl.end(), t.legs[0].begin(), t.legs[0].end());
                next.push_back({c * t.coef, nl});
            }
        acc = std::move(next);
    }
    TensorWord out;
    for (auto& [c, l] : acc) out.push_back({c, {l}});
    return out;
}

struct HopfAxiomResult {
    std::string name;
    bool pass;
};

inline std::vector<HopfAxiomResult> hopf_axiom_check(Gen g, HopfVariant v) {
    const Rep f = fundamental_rep(deformation_of(v));
    const PolyMatrix pg = f[g];
    TensorWord d = coproduct(g, v);
    std::vector<HopfAxiomResult> out;
    const std::string nm = gen_name(F(g));

    PolyMatrix left(3, 3), right(3, 3);
    for (const auto& t : d) {
        left += (t.coef * counit(t.legs[0])) * f.eval(t.legs[1]);
        right += (t.coef * counit(t.legs[1])) * f.eval(t.legs[0]);
    }
    out.push_back({nm + " (eps x id) Delta", left == pg});
    out.push_back({nm + " (id x eps) Delta", right == pg});

    if (v == HopfVariant::DistinguishedNatural) return out;

    // Every generator has zero counit, so both contractions must vanish.
    PolyMatrix sl(3, 3), sr(3, 3);
    for (const auto& t : d) {
        sl += t.coef * (f.eval(antipode(t.legs[0], v)) * f.eval(t.legs[1]));
        sr += t.coef * (f.eval(t.legs[0]) * f.eval(antipode(t.legs[1], v)));
    }
    out.push_back({nm + " m(S x id) Delta = eps", sl.is_zero()});
    out.push_back({nm + " m(id x S) Delta = eps", sr.is_zero()});

    PolyMatrix s2(3, 3);
    for (const auto& t : antipode(g, v))
        for (const auto& u : antipode(t.legs[0], v)) s2 += (t.coef * u.coef) * f.eval(u.legs[0]);
    out.push_back({nm + " S^2 = id", s2 == pg});
    return out;
}

} // namespace slq
