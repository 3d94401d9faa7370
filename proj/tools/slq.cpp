// Command-line front end: verification suites, matrix export, Casimir images and spectral reports.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "slq/suites.hpp"

namespace {

using namespace slq;

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

unsigned default_jobs() {
    if (const char* env = std::getenv("SLQ_JOBS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring SLQ_JOBS='" << env << "'\n";
    }
    return 1;
}

// JSON goes to --out when given, otherwise to stdout. The summary then goes to the other stream.
std::ostream& summary_stream(const std::string& out) { return out.empty() ? std::cerr : std::cout; }

void emit_json(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << j.dump(2) << "\n";
}

void summarize(std::ostream& os, const Report& r) {
    os << (r.pass() ? "PASS " : "FAIL ") << r.suite << " (" << r.cases.size() << " cases";
    if (!r.pass()) os << ", " << r.failures() << " failing";
    os << ")\n";
    for (const auto& c : r.cases)
        if (!c.pass) os << "  FAIL " << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Family parse_family(const std::string& s) {
    if (s == "cl") return Family::ClassicalP;
    if (s == "q") return Family::QuantumP;
    if (s == "frt") return Family::FrtK;
    throw Error(Errc::BadVariant, "unknown Casimir family '" + s + "'");
}

HopfVariant default_variant(Family f) {
    return f == Family::ClassicalP ? HopfVariant::ClassicalPrimitive : HopfVariant::FermionicStandard;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification and export tools for the deformed sl(1|2) chain"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.jobs = default_jobs();
    std::string out;
    app.add_option("--seed", cfg.seed, "seed for random points and primes")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads (default from SLQ_JOBS, else 1)")->check(CLI::PositiveNumber);
    app.add_option("--out", out, "write the JSON report or matrix here instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run named verification suites");
    std::string suites, kind, hopf;
    unsigned sites = 0;
    auto* suite_opt = verify->add_option("--suite", suites, "comma-separated suite names")->required();
    verify->add_option("--kind", kind, "restrict to one Hamiltonian kind");
    verify->add_option("--sites", sites, "restrict to one chain length");
    verify->add_option("--out", out, "report path");
    verify->add_option("--seed", cfg.seed, "seed");
    suite_opt->check([](const std::string& s) -> std::string {
        auto known = suite_names();
        for (const auto& name : split_list(s))
            if (std::find(known.begin(), known.end(), name) == known.end()) return "unknown suite '" + name + "'";
        return {};
    });

    // hamiltonian
    auto* ham = app.add_subcommand("hamiltonian", "export an L-site Hamiltonian");
    std::string params, format = "json";
    unsigned ham_sites = 2;
    ham->add_option("--kind", kind, "classical|fermionic|distinguished|fourparam")->required();
    ham->add_option("--sites", ham_sites, "chain length")->check(CLI::Range(2, 7));
    ham->add_option("--params", params, "substitutions such as q=3/2,s=1");
    ham->add_option("--format", format, "json|mtx")->check(CLI::IsMember({"json", "mtx"}));
    ham->add_option("--out", out, "output path");

    // casimir
    auto* cas = app.add_subcommand("casimir", "Casimir image on an L-site chain");
    std::string family = "q";
    int index = 2;
    unsigned cas_sites = 2;
    bool cas_verify = false;
    cas->add_option("--family", family, "cl|q|frt")->check(CLI::IsMember({"cl", "q", "frt"}));
    cas->add_option("--index", index, "p or k");
    cas->add_option("--sites", cas_sites, "chain length")->check(CLI::Range(1, 7));
    cas->add_option("--hopf", hopf, "standard|natural-dist|classical");
    cas->add_flag("--verify", cas_verify, "check centrality instead of exporting the matrix");
    cas->add_option("--out", out, "output path");

    // spectra
    auto* spec = app.add_subcommand("spectra", "compare spectra of two L-site Hamiltonians");
    std::string kind_a = "fermionic", kind_b = "distinguished";
    spec->add_option("--a", kind_a, "first kind");
    spec->add_option("--b", kind_b, "second kind");
    spec->add_option("--sites", sites, "chain length (2..7)")->required();
    spec->add_flag("--long", cfg.long_run, "allow L = 7");
    spec->add_option("--primes", cfg.primes, "primes per point")->check(CLI::PositiveNumber);
    spec->add_option("--points", cfg.points, "random q points")->check(CLI::PositiveNumber);
    spec->add_option("--out", out, "report path");
    spec->add_option("--seed", cfg.seed, "seed");

    // all
    auto* all = app.add_subcommand("all", "run every suite and write one consolidated report");
    all->add_flag("--long", cfg.long_run, "include L = 7 in the spectral suite");
    all->add_option("--out", out, "report path");
    all->add_option("--seed", cfg.seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (!kind.empty()) cfg.kind = parse_kind(kind);
        if (sites) cfg.sites = sites;

        if (*verify) {
            json reports = json::array();
            bool ok = true;
            for (const auto& name : split_list(suites)) {
                Report r = run_suite(name, cfg);
                summarize(summary_stream(out), r);
                ok = ok && r.pass();
                reports.push_back(to_json(r));
            }
            emit_json(reports.size() == 1 ? reports[0] : reports, out);
            return ok ? kExitPass : kExitFail;
        }

        if (*ham) {
            HamiltonianKind k = parse_kind(kind);
            PolyMatrix h = l_site_hamiltonian(closed_form(k), ham_sites);
            if (format == "mtx") {
                ParamPoint at = parse_params(params, cfg.params);
                if (out.empty()) {
                    write_matrix_market(std::cout, h, at);
                } else {
                    std::ofstream f(out);
                    if (!f) throw std::runtime_error("cannot write " + out);
                    write_matrix_market(f, h, at);
                }
                return kExitPass;
            }
            if (!params.empty()) {
                ParamPoint at = parse_params(params, ParamPoint::ones());
                std::map<Var, Rational> vals;
                for (const auto& item : split_list(params)) {
                    std::string name = item.substr(0, item.find('='));
                    for (int v = 0; v < kNumVars; ++v)
                        if (name == kVarNames[v]) vals[static_cast<Var>(v)] = at.exact[v];
                }
                h = specialize_matrix(h, vals);
            }
            json j = to_json(h);
            j["kind"] = kind_name(k);
            j["sites"] = ham_sites;
            emit_json(j, out);
            return kExitPass;
        }

        if (*cas) {
            CasimirSpec cs{parse_family(family), index};
            HopfVariant v = hopf.empty() ? default_variant(cs.family) : parse_variant(hopf);
            if (cas_verify) {
                Report r("casimir");
                r.add_all(spec_name(cs) + " central at L=" + std::to_string(cas_sites) + " " + variant_name(v),
                          centrality_check(cs, cas_sites, v));
                r.params["seed"] = cfg.seed;
                summarize(summary_stream(out), r);
                emit_json(to_json(r), out);
                return r.pass() ? kExitPass : kExitFail;
            }
            json j = to_json(casimir_rep(cs, cas_sites, v));
            j["casimir"] = spec_name(cs);
            j["sites"] = cas_sites;
            j["hopf"] = variant_name(v);
            emit_json(j, out);
            return kExitPass;
        }

        if (*spec) {
            Report r = suite_spectra(cfg, parse_kind(kind_a), parse_kind(kind_b));
            summarize(summary_stream(out), r);
            emit_json(to_json(r), out);
            return r.pass() ? kExitPass : kExitFail;
        }

        if (*all) {
            const auto& reg = suite_registry();
            std::vector<Report> reports(reg.size());
            parallel_for(reg.size(), cfg.jobs, [&](std::size_t i) { reports[i] = run_suite(reg[i].first, cfg); });
            Report top("all");
            json full = json::array();
            for (const auto& r : reports) {
                summarize(summary_stream(out), r);
                top.cases.push_back({r.suite, r.pass(),
                                     std::to_string(r.cases.size() - r.failures()) + "/" + std::to_string(r.cases.size()) +
                                         " cases pass",
                                     0});
                full.push_back(to_json(r));
            }
            top.params["seed"] = cfg.seed;
            top.params["long"] = cfg.long_run;
            json j = to_json(top);
            j["suites"] = full;
            emit_json(j, out);
            return top.pass() ? kExitPass : kExitFail;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
