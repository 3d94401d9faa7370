#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "slq/algebra.hpp"
#include "slq/casimir.hpp"
#include "slq/chain.hpp"
#include "slq/frt.hpp"
#include "slq/io.hpp"

namespace slq {

struct RunConfig {
    std::uint64_t seed = 20240611;
    unsigned jobs = 1;
    std::optional<HamiltonianKind> kind;
    std::optional<unsigned> sites;
    bool long_run = false;
    unsigned points = 2, primes = 3;
    ParamPoint params = ParamPoint::ones().set(Q, Rational(3, 2)).set(S, Rational(5, 7));
};

struct Case {
    std::string name;
    bool pass = false;
    std::string detail;
    std::size_t residual_nonzero_entries = 0;
};

struct Report {
    std::string suite;
    std::vector<Case> cases;
    json params = json::object();

    explicit Report(std::string name = {}) : suite(std::move(name)) {}

    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : cases) n += !c.pass;
        return n;
    }
    void add(const Check& c) { cases.push_back({c.name, c.pass, c.detail, c.residual_nonzero}); }
    void add(const std::vector<Check>& cs) {
        for (const auto& c : cs) add(c);
    }
    // Many checks folded into one case; the detail names the failing ones.
    void add_all(std::string name, const std::vector<Check>& cs) {
        Case out{std::move(name), true, {}, 0};
        std::size_t bad = 0;
        for (const auto& c : cs) {
            out.residual_nonzero_entries += c.residual_nonzero;
            if (c.pass) continue;
            out.pass = false;
            if (++bad <= 4) out.detail += (out.detail.empty() ? "failing: " : "; ") + c.name;
        }
        if (bad > 4) out.detail += "; +" + std::to_string(bad - 4) + " more";
        if (out.pass) out.detail = std::to_string(cs.size()) + " checks";
        cases.push_back(std::move(out));
    }
};

inline json to_json(const Report& r) {
    json cases = json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"name", c.name},
                         {"pass", c.pass},
                         {"detail", c.detail},
                         {"residual_nonzero_entries", c.residual_nonzero_entries}});
    return {{"suite", r.suite}, {"pass", r.pass()}, {"cases", cases}, {"params", r.params}};
}

inline json params_json(const ParamPoint& p) {
    json out = json::object();
    for (int v = 0; v < kNumVars; ++v) out[kVarNames[v]] = to_string(p.exact[v]);
    return out;
}

namespace detail {

inline std::vector<unsigned> site_range(const RunConfig& cfg, unsigned lo, unsigned hi) {
    if (cfg.sites) return {*cfg.sites};
    std::vector<unsigned> out;
    for (unsigned L = lo; L <= hi; ++L) out.push_back(L);
    return out;
}

inline std::vector<HamiltonianKind> kind_range(const RunConfig& cfg, std::vector<HamiltonianKind> all) {
    if (cfg.kind) return {*cfg.kind};
    return all;
}

inline const char* rname(RKind k) { return k == RKind::TwoParam ? "two-parameter R" : "four-parameter R"; }

} // namespace detail

// ---------------------------------------------------------------------------
// R-matrix layer

inline Report suite_qybe(const RunConfig&) {
    Report r{"qybe"};
    for (auto k : {RKind::TwoParam, RKind::FourParam})
        for (auto c : qybe_check(r_matrix(k))) {
            c.name = std::string(detail::rname(k)) + ": " + c.name;
            r.add(c);
        }
    return r;
}

inline Report suite_chareq(const RunConfig&) {
    Report r{"chareq"};
    for (auto k : {RKind::TwoParam, RKind::FourParam})
        for (auto c : char_eq_check(r_matrix(k))) {
            c.name = std::string(detail::rname(k)) + ": " + c.name;
            r.add(c);
        }
    r.add(four_to_two_param_check());
    return r;
}

inline Report suite_dident(const RunConfig&) {
    Report r{"dident"};
    for (auto k : {RKind::TwoParam, RKind::FourParam})
        for (auto c : d_identities_check(r_matrix(k), dmatrix())) {
            c.name = std::string(detail::rname(k)) + ": " + c.name;
            r.add(c);
        }
    bool rejected = false;
    for (const auto& c : d_identities_check(r_matrix(RKind::TwoParam), PolyMatrix::identity(3))) rejected |= !c.pass;
    r.cases.push_back({"D = I is rejected by the identities", rejected, "negative control", 0});
    return r;
}

inline Report suite_rll(const RunConfig& cfg, int zeta) {
    Report r{zeta > 0 ? "rll+" : "rll-"};
    for (unsigned L : detail::site_range(cfg, 1, 3)) {
        Rep rep = coproduct_rep(HopfVariant::FermionicStandard, L);
        for (auto c : rll_matrix_check(rep, r_matrix(RKind::TwoParam), zeta)) {
            c.name += " L=" + std::to_string(L);
            r.add(c);
        }
        r.add_all("appendix relations, zeta=" + std::to_string(zeta) + ", L=" + std::to_string(L),
                  rll_appendix_check(zeta, rep));
    }
    r.params["zeta"] = zeta;
    return r;
}

inline Report suite_appendix(const RunConfig&) {
    Report r{"appendix"};
    for (int zeta : {1, -1})
        for (auto c : rll_appendix_check(zeta)) {
            c.name = "zeta=" + std::to_string(zeta) + ": " + c.name;
            r.add(c);
        }
    return r;
}

inline Report suite_sdet(const RunConfig&) {
    Report r{"sdet"};
    r.add(superdet_check());
    return r;
}

inline Report suite_dual(const RunConfig&) {
    Report r{"dual"};
    r.add(pairing_check());
    return r;
}

inline Report suite_boson(const RunConfig&) {
    Report r{"boson"};
    r.add(bosonization_check());
    return r;
}

// ---------------------------------------------------------------------------
// Algebra layer

inline Report suite_presentation(const RunConfig& cfg) {
    Report r{"presentation"};
    for (auto v : {HopfVariant::ClassicalPrimitive, HopfVariant::FermionicStandard, HopfVariant::DistinguishedNatural})
        for (unsigned L : detail::site_range(cfg, 1, 3)) {
            Rep rep = coproduct_rep(v, L);
            for (auto b : {Basis::Fermionic, Basis::Distinguished}) {
                std::vector<Check> cs;
                for (auto& rel : presentation_relations(deformation_of(v), b, rep))
                    cs.push_back(check_zero(rel.name, rel.residual));
                r.add_all(variant_name(v) + " L=" + std::to_string(L) + " " +
                              (b == Basis::Fermionic ? "fermionic" : "distinguished") + " relations",
                          cs);
            }
        }
    return r;
}

inline Report suite_hopf(const RunConfig&) {
    Report r{"hopf"};
    for (auto v : {HopfVariant::ClassicalPrimitive, HopfVariant::FermionicStandard, HopfVariant::DistinguishedNatural})
        for (Gen g : kAllGens)
            for (const auto& h : hopf_axiom_check(g, v)) r.cases.push_back({variant_name(v) + ": " + h.name, h.pass, {}, 0});
    for (auto d : {Deformation::Classical, Deformation::Quantum})
        for (auto b : {Basis::Fermionic, Basis::Distinguished})
            for (Gen g : kAllGens)
                r.cases.push_back({std::string(d == Deformation::Classical ? "classical" : "quantum") +
                                       " basis round trip " + gen_name({b, g}),
                                   basis_round_trip({b, g}, d), {}, 0});
    return r;
}

// ---------------------------------------------------------------------------
// Casimir layer

inline Report suite_centrality(const RunConfig& cfg) {
    Report r{"centrality"};
    for (unsigned L : detail::site_range(cfg, 1, 3)) {
        for (int p = 2; p <= 5; ++p)
            r.add_all("Ccl" + std::to_string(p) + " central at L=" + std::to_string(L),
                      centrality_check(CasimirSpec::classical(p), L, HopfVariant::ClassicalPrimitive));
        for (auto v : {HopfVariant::FermionicStandard, HopfVariant::DistinguishedNatural})
            for (int p = -3; p <= 5; ++p)
                r.add_all("C" + std::to_string(p) + " central at L=" + std::to_string(L) + " " + variant_name(v),
                          centrality_check(CasimirSpec::quantum(p), L, v));
    }
    Check a = perturbed_casimir_counterexample(Family::ClassicalP, 2, 2);
    a.name = "classical " + a.name;
    Check b = perturbed_casimir_counterexample(Family::QuantumP, 1, 2);
    b.name = "quantum " + b.name;
    r.add(a);
    r.add(b);
    return r;
}

inline Report suite_quadratic(const RunConfig&) {
    Report r{"quadratic"};
    auto sweep = [&r](Family fam, int lo, int hi, HopfVariant v, const std::string& tag) {
        std::vector<Check> cs;
        for (int p1 = lo; p1 <= hi; ++p1)
            for (int p2 = p1; p2 <= hi; ++p2)
                for (int p3 = lo; p3 <= hi; ++p3) {
                    int p4 = p1 + p2 - p3;
                    if (p4 < lo || p4 > hi) continue;
                    cs.push_back(quadratic_relation_check(p1, p2, p3, p4, fam, 2, v));
                }
        r.add_all(tag + " quadruples at L=2", cs);
    };
    sweep(Family::QuantumP, -2, 4, HopfVariant::FermionicStandard, "quantum " + variant_name(HopfVariant::FermionicStandard));
    sweep(Family::QuantumP, -2, 4, HopfVariant::DistinguishedNatural,
          "quantum " + variant_name(HopfVariant::DistinguishedNatural));
    sweep(Family::ClassicalP, 2, 5, HopfVariant::ClassicalPrimitive, "classical");
    return r;
}

inline Report suite_limits(const RunConfig&) {
    Report r{"limits"};
    for (int p = -2; p <= 4; ++p) r.add(quantum_limit_check(p, 2));
    for (int p = 3; p <= 5; ++p) r.add(classical_limit_check(p, 2));
    for (int p = -1; p <= 3; ++p) r.add(weyl_witness(p));
    return r;
}

inline Report suite_casimir(const RunConfig& cfg) {
    Report r{"casimir"};
    for (auto part : {suite_centrality(cfg), suite_quadratic(cfg), suite_limits(cfg)})
        for (auto& c : part.cases) {
            c.name = part.suite + ": " + c.name;
            r.cases.push_back(std::move(c));
        }
    return r;
}

inline Report suite_frt(const RunConfig&) {
    Report r{"frt"};
    for (int k = 1; k <= 8; ++k) r.add(frt_casimir_checks(k));
    for (unsigned k = 1; k <= 4; ++k) r.add(rk_check(r_hat(r_matrix(RKind::TwoParam)), k));
    return r;
}

// Two-site Casimir images against the closed-form Hamiltonians.
inline Report suite_normalization(const RunConfig&) {
    Report r{"normalization"};
    const PolyMatrix Hf = closed_form(HamiltonianKind::FermionicDeformed);
    const PolyMatrix Hd = closed_form(HamiltonianKind::DistinguishedDeformed);
    const PolyMatrix Hc = closed_form(HamiltonianKind::Classical);
    const Poly lam2 = lambda() * lambda();
    for (int p = -2; p <= 4; ++p) {
        const std::string P = std::to_string(p);
        PolyMatrix C = two_site_hamiltonian(CasimirSpec::quantum(p), HopfVariant::FermionicStandard);
        r.add(check_zero("C" + P + "(L=2) = -q^(3-6p) lambda^2 H_fermionic", C + (qv(3 - 6 * p) * lam2) * Hf,
                         "claimed normalization"));
        r.add(check_zero("C" + P + "(L=2) = -q^(3-6p) H_fermionic", C + qv(3 - 6 * p) * Hf, "lambda-free form"));
        PolyMatrix D = two_site_hamiltonian(CasimirSpec::quantum(p), HopfVariant::DistinguishedNatural);
        auto fit = fit_affine(D, Hd);
        r.cases.push_back({"C" + P + "(L=2, distinguished) = c H_distinguished + d I", fit.has_value(),
                           fit ? "c = " + fit->c.to_string() + ", d = " + fit->d.to_string() : "not affine", 0});
    }
    for (int p = 2; p <= 5; ++p) {
        PolyMatrix C = two_site_hamiltonian(CasimirSpec::classical(p), HopfVariant::ClassicalPrimitive);
        auto fit = fit_affine(C, Hc);
        r.cases.push_back({"Ccl" + std::to_string(p) + "(L=2) = alpha H_classical + beta I", fit.has_value(),
                           fit ? "alpha = " + fit->c.to_string() + ", beta = " + fit->d.to_string() : "not affine", 0});
    }
    return r;
}

// ---------------------------------------------------------------------------
// Chain layer

inline Report suite_fermionic(const RunConfig& cfg) {
    Report r{"fermionic"};
    r.add(realization_check());
    for (auto k : detail::kind_range(cfg, {HamiltonianKind::Classical, HamiltonianKind::FermionicDeformed,
                                           HamiltonianKind::DistinguishedDeformed, HamiltonianKind::FourParam}))
        r.add(fermionic_check(k));
    return r;
}

inline Report suite_invariance(const RunConfig& cfg) {
    Report r{"invariance"};
    auto kinds = detail::kind_range(cfg, {HamiltonianKind::Classical, HamiltonianKind::FermionicDeformed,
                                          HamiltonianKind::DistinguishedDeformed});
    for (unsigned L : detail::site_range(cfg, 2, 4))
        for (auto k : kinds) {
            if (k == HamiltonianKind::FourParam) throw Error(Errc::BadVariant, "fourparam has no matched Hopf variant");
            for (const auto& c : invariance_check(k, matched_variant(k), L)) r.add(c);
        }
    return r;
}

inline Report suite_hecke(const RunConfig& cfg) {
    Report r{"hecke"};
    for (auto k : detail::kind_range(cfg, {HamiltonianKind::FermionicDeformed, HamiltonianKind::DistinguishedDeformed})) {
        const PolyMatrix h = closed_form(k);
        if (k == HamiltonianKind::Classical) {
            HeckeResult res = hecke_check(h, HeckeShift::Q, true);
            r.cases.push_back({"classical: U = H - 1 squares to 1, braid at L=3, distant at L=4", res.pass(), {}, 0});
            continue;
        }
        std::vector<std::string> passing;
        for (auto sh : {HeckeShift::Q, HeckeShift::QInverse}) {
            HeckeResult res = hecke_check(h, sh);
            std::string sn = sh == HeckeShift::Q ? "q" : "q^-1";
            std::string rel = res.sign == 0 ? "no quadratic relation"
                                            : std::string("U^2 ") + (res.sign > 0 ? "+" : "-") + " lambda U - 1 = 0";
            r.cases.push_back({kind_name(k) + ", U = H - " + sn + ": quadratic, braid (L=3), distant (L=4)", res.pass(),
                               rel, 0});
            if (res.pass()) passing.push_back(sn);
        }
        r.params["passing_shifts"][kind_name(k)] = passing;
    }
    return r;
}

inline Report suite_similarity(const RunConfig& cfg) {
    Report r{"similarity"};
    for (unsigned L : detail::site_range(cfg, 2, 4)) {
        r.add(similarity_four_param(L));
        r.add(similarity_fermionic(L));
        r.add(similarity_involution(L));
    }
    for (unsigned L : detail::site_range(cfg, 2, 3)) r.add(similarity_perk_schultz(L));
    return r;
}

inline Report suite_commutant(const RunConfig& cfg) {
    Report r{"commutant"};
    std::mt19937_64 rng(cfg.seed);
    for (auto v : {HopfVariant::FermionicStandard, HopfVariant::DistinguishedNatural, HopfVariant::ClassicalPrimitive}) {
        CommutantResult res = invariant_commutant(v, rng);
        r.cases.push_back({variant_name(v) + ": commutant is span{I, Rh}", res.pass(),
                           "dimension " + std::to_string(res.dimension) + " at q=" + to_string(res.point.exact[Q]) +
                               ", s=" + to_string(res.point.exact[S]) + ", attempts " + std::to_string(res.attempts) +
                               (res.symbolic_commute ? ", symbolic commutation verified" : ", symbolic commutation fails"),
                           0});
    }
    r.params["seed"] = cfg.seed;
    return r;
}

inline json to_json(const SpectralReport& s) {
    json samples = json::array();
    for (const auto& x : s.samples)
        samples.push_back({{"q", to_string(x.q)},
                           {"prime", x.prime},
                           {"agree", x.agree},
                           {"blocks", x.blocks},
                           {"max_block", x.max_block}});
    json out = {{"L", s.L},
                {"a", s.a},
                {"b", s.b},
                {"seed", s.seed},
                {"pass", s.pass()},
                {"samples", samples},
                {"float_traces_agree", s.float_traces_agree},
                {"float_max_rel_diff", s.float_max_rel_diff},
                {"float_tolerance", kFloatTraceTolerance}};
    out["symbolic_traces_agree"] = s.symbolic_traces_agree ? json(*s.symbolic_traces_agree) : json(nullptr);
    return out;
}

inline Case spectral_case(const SpectralReport& s) {
    std::size_t agree = 0;
    for (const auto& x : s.samples) agree += x.agree;
    std::string d = std::to_string(agree) + "/" + std::to_string(s.samples.size()) + " modular samples agree";
    d += ", float traces " + std::string(s.float_traces_agree ? "agree" : "differ");
    if (s.symbolic_traces_agree) d += std::string(", symbolic traces ") + (*s.symbolic_traces_agree ? "agree" : "differ");
    return {s.a + " vs " + s.b + " at L=" + std::to_string(s.L), s.pass(), d, 0};
}

inline Report suite_spectra(const RunConfig& cfg, HamiltonianKind a = HamiltonianKind::FermionicDeformed,
                            HamiltonianKind b = HamiltonianKind::DistinguishedDeformed) {
    Report r{"spectra"};
    SpectralConfig sc;
    sc.seed = cfg.seed;
    sc.points = cfg.points;
    sc.primes = cfg.primes;
    sc.long_run = cfg.long_run;
    sc.jobs = cfg.jobs;
    std::vector<unsigned> Ls = cfg.sites ? std::vector<unsigned>{*cfg.sites} : detail::site_range(cfg, 2, cfg.long_run ? 7 : 6);
    const PolyMatrix ha = closed_form(a), hb = closed_form(b);
    json details = json::array();
    for (unsigned L : Ls) {
        SpectralReport s = spectral_equivalence(ha, hb, L, sc, kind_name(a), kind_name(b));
        r.cases.push_back(spectral_case(s));
        details.push_back(to_json(s));
    }
    if (!cfg.sites) {
        SpectralConfig guard = sc;
        guard.points = 1;
        guard.primes = 6;
        for (unsigned L : {2u, 3u, 4u}) {
            SpectralReport s = spectral_equivalence(ha, reflected_two_site(ha), L, guard, kind_name(a), kind_name(a) + " reflected");
            r.cases.push_back(spectral_case(s));
            details.push_back(to_json(s));
        }
        SpectralReport s = spectral_equivalence(ha, ha, 3, guard, kind_name(a), kind_name(a));
        r.cases.push_back(spectral_case(s));
        details.push_back(to_json(s));
    }
    r.params["seed"] = cfg.seed;
    r.params["points"] = cfg.points;
    r.params["primes"] = cfg.primes;
    r.params["long"] = cfg.long_run;
    r.params["runs"] = details;
    return r;
}

// ---------------------------------------------------------------------------
// Registry

using SuiteFn = std::function<Report(const RunConfig&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg{
        {"qybe", suite_qybe},
        {"chareq", suite_chareq},
        {"dident", suite_dident},
        {"rll+", [](const RunConfig& c) { return suite_rll(c, 1); }},
        {"rll-", [](const RunConfig& c) { return suite_rll(c, -1); }},
        {"appendix", suite_appendix},
        {"sdet", suite_sdet},
        {"dual", suite_dual},
        {"boson", suite_boson},
        {"presentation", suite_presentation},
        {"hopf", suite_hopf},
        {"centrality", suite_centrality},
        {"quadratic", suite_quadratic},
        {"limits", suite_limits},
        {"frt", suite_frt},
        {"normalization", suite_normalization},
        {"fermionic", suite_fermionic},
        {"invariance", suite_invariance},
        {"hecke", suite_hecke},
        {"similarity", suite_similarity},
        {"commutant", suite_commutant},
        {"spectra", [](const RunConfig& c) { return suite_spectra(c); }},
    };
    return reg;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [n, f] : suite_registry()) out.push_back(n);
    out.push_back("casimir");
    return out;
}

inline Report run_suite(const std::string& name, const RunConfig& cfg) {
    for (const auto& [n, f] : suite_registry())
        if (n == name || name == "casimir") {
            Report r = name == "casimir" ? suite_casimir(cfg) : f(cfg);
            r.params["seed"] = cfg.seed;
            return r;
        }
    throw Error(Errc::BadIndex, "unknown suite '" + name + "'");
}

} // namespace slq
