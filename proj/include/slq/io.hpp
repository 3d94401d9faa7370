#pragma once

#include <iomanip>
#include <tuple>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slq/error.hpp"
#include "slq/matrix.hpp"
#include "slq/ring.hpp"

namespace slq {

using json = nlohmann::json;

// {"terms": [{"c": "num/den", "e": [q, s, q12, q13, q23]}, ...]}
inline json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) terms.push_back({{"c", to_string(t.c)}, {"e", t.e}});
    return {{"terms", terms}};
}

inline Poly poly_from_json(const json& j) {
    Poly out;
    for (const auto& t : j.at("terms")) {
        Exp e{};
        const auto& ev = t.at("e");
        if (ev.size() != static_cast<std::size_t>(kNumVars))
            throw Error(Errc::DimensionMismatch, "exponent vector must have 5 entries");
        for (int i = 0; i < kNumVars; ++i) e[i] = ev[i].get<int>();
        out += Poly::monomial(e, parse_rational(t.at("c").get<std::string>()));
    }
    return out;
}

// {"rows": r, "cols": c, "entries": [[i, j, poly], ...]} with 1-based indices, nonzero entries only.
inline json to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) entries.push_back(json::array({i + 1, j + 1, to_json(m(i, j))}));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline PolyMatrix matrix_from_json(const json& j) {
    PolyMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
        std::size_t i = e.at(0).get<std::size_t>(), k = e.at(1).get<std::size_t>();
        if (i < 1 || k < 1 || i > m.rows() || k > m.cols()) throw Error(Errc::BadIndex, "matrix entry out of range");
        m(i - 1, k - 1) = poly_from_json(e.at(2));
    }
    return m;
}

// Matrix Market coordinate export of a specialized matrix.
inline void write_matrix_market(std::ostream& os, const PolyMatrix& m, const ParamPoint& at) {
    std::vector<std::tuple<std::size_t, std::size_t, double>> nz;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            double v = at.mode == ParamPoint::Mode::Exact ? specialize_exact(m(i, j), at).get_d() : specialize_float(m(i, j), at);
            if (v != 0.0) nz.emplace_back(i + 1, j + 1, v);
        }
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << "% q=" << at.fl[Q] << " s=" << at.fl[S] << " q12=" << at.fl[Q12] << " q13=" << at.fl[Q13] << " q23=" << at.fl[Q23]
       << "\n";
    os << m.rows() << " " << m.cols() << " " << nz.size() << "\n";
    os << std::setprecision(17);
    for (auto& [i, j, v] : nz) os << i << " " << j << " " << v << "\n";
}

// "q=3/2,s=5/7" -> point; unnamed variables stay at 1.
inline ParamPoint parse_params(const std::string& text, ParamPoint base = ParamPoint::ones()) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(Errc::BadIndex, "parameter '" + item + "' lacks '='");
        std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        int var = -1;
        for (int i = 0; i < kNumVars; ++i)
            if (name == kVarNames[i]) var = i;
        if (var < 0) throw Error(Errc::BadIndex, "unknown parameter '" + name + "'");
        base.set(static_cast<Var>(var), parse_rational(value));
    }
    return base;
}

} // namespace slq
