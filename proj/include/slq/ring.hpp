#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slq/error.hpp"

namespace slq {

using Rational = mpq_class;
using Integer = mpz_class;

// Fixed variable set. Index order is also the exponent-vector order.
enum Var : int { Q = 0, S = 1, Q12 = 2, Q13 = 3, Q23 = 4 };
inline constexpr int kNumVars = 5;
inline constexpr const char* kVarNames[kNumVars] = {"q", "s", "q12", "q13", "q23"};

using Exp = std::array<int, kNumVars>;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n", "n/d" and finite decimals such as "-1.25" (converted exactly).
inline Rational parse_rational(const std::string& text) {
    auto bad = [&text]() { return std::invalid_argument("not a rational number: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac = text.size() - dot - 1;
        if (frac == 0 || text.find('/') != std::string::npos) throw bad();
        Integer num, den;
        if (num.set_str(digits, 10) != 0) throw bad();
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    Rational r;
    if (r.set_str(text, 10) != 0) throw bad();
    if (r.get_den() == 0) throw bad();
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.get_str();
}

// x^n for integer n; n < 0 requires x != 0.
inline Rational rpow(const Rational& x, long n) {
    if (n == 0) return Rational(1);
    if (sgn(x) == 0) {
        if (n < 0) throw Error(Errc::ZeroToNegativePower, "0^" + std::to_string(n));
        return Rational(0);
    }
    unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
    Rational r = n > 0 ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return r;
}

struct ParamPoint {
    enum class Mode { Exact, Float };
    Mode mode = Mode::Exact;
    std::array<Rational, kNumVars> exact{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
    std::array<double, kNumVars> fl{1, 1, 1, 1, 1};

    static ParamPoint ones() { return ParamPoint{}; }

    static ParamPoint exact_point(const std::array<Rational, kNumVars>& v) {
        ParamPoint p;
        p.exact = v;
        for (int i = 0; i < kNumVars; ++i) p.fl[i] = v[i].get_d();
        return p;
    }

    static ParamPoint float_point(const std::array<double, kNumVars>& v) {
        ParamPoint p;
        p.mode = Mode::Float;
        p.fl = v;
        return p;
    }

    ParamPoint& set(Var v, const Rational& x) {
        exact[v] = x;
        fl[v] = x.get_d();
        return *this;
    }
};

class LaurentPoly {
public:
    struct Term {
        Exp e;
        Rational c;
    };

    LaurentPoly() = default;
    LaurentPoly(long c) { push_const(Rational(c)); }
    LaurentPoly(int c) { push_const(Rational(c)); }
    LaurentPoly(const Rational& c) { push_const(c); }

    static LaurentPoly monomial(const Exp& e, const Rational& c = Rational(1)) {
        LaurentPoly p;
        if (sgn(c) != 0) p.terms_.push_back({e, c});
        if (!p.terms_.empty()) p.terms_[0].c.canonicalize();
        return p;
    }

    static LaurentPoly var(Var v, int power = 1) {
        Exp e{};
        e[v] = power;
        return monomial(e);
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exp{});
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw Error(Errc::BadIndex, "polynomial is not constant");
        return terms_[0].c;
    }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    // Coefficient of the monomial with exponent e (0 when absent).
    Rational coeff(const Exp& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exp& x) { return t.e < x; });
        if (it != terms_.end() && it->e == e) return it->c;
        return Rational(0);
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }

    LaurentPoly& operator+=(const LaurentPoly& b) {
        if (b.is_zero()) return *this;
        if (is_zero()) return *this = b;
        return *this = merge(*this, b, false);
    }
    LaurentPoly& operator-=(const LaurentPoly& b) {
        if (b.is_zero()) return *this;
        return *this = merge(*this, b, true);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        if (a.terms_.size() == 1 || b.terms_.size() == 1) {
            const LaurentPoly& m = a.terms_.size() == 1 ? a : b;
            const LaurentPoly& o = a.terms_.size() == 1 ? b : a;
            const Term& mt = m.terms_[0];
            r.terms_.reserve(o.terms_.size());
            // Shifting by a fixed exponent preserves lex order.
            for (const auto& t : o.terms_) r.terms_.push_back({add(t.e, mt.e), t.c * mt.c});
            return r;
        }
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) prod.push_back({add(x.e, y.e), x.c * y.c});
        std::sort(prod.begin(), prod.end(), [](const Term& u, const Term& v) { return u.e < v.e; });
        for (auto& t : prod) {
            if (!r.terms_.empty() && r.terms_.back().e == t.e) {
                r.terms_.back().c += t.c;
            } else {
                if (!r.terms_.empty() && sgn(r.terms_.back().c) == 0) r.terms_.pop_back();
                r.terms_.push_back(std::move(t));
            }
        }
        if (!r.terms_.empty() && sgn(r.terms_.back().c) == 0) r.terms_.pop_back();
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
        if (sgn(c) == 0) return {};
        LaurentPoly r = p;
        for (auto& t : r.terms_) t.c *= c;
        return r;
    }

    // Nonnegative powers for any polynomial; negative powers for monomials only.
    LaurentPoly pow(int n) const {
        if (n < 0) {
            if (!is_monomial())
                throw Error(Errc::NotDivisible, "negative power of a non-monomial");
            Exp e = terms_[0].e;
            for (auto& x : e) x *= n;
            return monomial(e, rpow(terms_[0].c, n));
        }
        LaurentPoly result(1), base = *this;
        while (n > 0) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

    // Substitute v -> image. Negative exponents of v need a monomial image.
    LaurentPoly substitute(Var v, const LaurentPoly& image) const {
        LaurentPoly out;
        std::map<int, LaurentPoly> cache;
        for (const auto& t : terms_) {
            int k = t.e[v];
            Exp rest = t.e;
            rest[v] = 0;
            auto it = cache.find(k);
            if (it == cache.end()) it = cache.emplace(k, image.pow(k)).first;
            out += monomial(rest, t.c) * it->second;
        }
        return out;
    }

    int min_exponent(Var v) const {
        int m = 0;
        bool first = true;
        for (const auto& t : terms_) {
            if (first || t.e[v] < m) m = t.e[v];
            first = false;
        }
        return m;
    }
    int max_exponent(Var v) const {
        int m = 0;
        bool first = true;
        for (const auto& t : terms_) {
            if (first || t.e[v] > m) m = t.e[v];
            first = false;
        }
        return m;
    }

    std::string to_string() const;

private:
    std::vector<Term> terms_;

    void push_const(const Rational& c) {
        if (sgn(c) != 0) terms_.push_back({Exp{}, c});
        if (!terms_.empty()) terms_[0].c.canonicalize();
    }

    static Exp add(const Exp& a, const Exp& b) {
        Exp r;
        for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
        return r;
    }

    static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
        LaurentPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].e < b.terms_[j].e)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].e < a.terms_[i].e) {
                r.terms_.push_back(b.terms_[j++]);
                if (subtract) r.terms_.back().c = -r.terms_.back().c;
            } else {
                Rational c = a.terms_[i].c;
                if (subtract) c -= b.terms_[j].c;
                else c += b.terms_[j].c;
                if (sgn(c) != 0) r.terms_.push_back({a.terms_[i].e, c});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

using Poly = LaurentPoly;

inline Poly qv(int n = 1) { return Poly::var(Q, n); }
inline Poly sv(int n = 1) { return Poly::var(S, n); }

// lambda = q - q^{-1}
inline Poly lambda() { return qv(1) - qv(-1); }

// [n]_q = (q^n - q^{-n}) / (q - q^{-1}) = q^{n-1} + q^{n-3} + ... + q^{1-n}
inline Poly qnum(long n) {
    if (n == 0) return {};
    long m = n < 0 ? -n : n;
    Poly r;
    for (long k = m - 1; k >= -(m - 1); k -= 2) r += qv(static_cast<int>(k));
    return n < 0 ? -r : r;
}

namespace detail {
// Exact division of dense coefficients (lowest exponent first) by q^2 - 1, in place.
// The quotient keeps the same lowest exponent. Returns false when the remainder is nonzero.
inline bool divide_q2_minus_1(std::vector<Rational>& f) {
    int n = static_cast<int>(f.size());
    if (n == 0) return true;
    // g_{j-2} = f_j + g_j, scanning from the top.
    std::vector<Rational> g(n + 2, Rational(0));  // g index i <-> exponent lo - 2 + i
    for (int j = n - 1; j >= 0; --j) {
        int gi = j;  // exponent lo + j - 2
        Rational above = (j + 2 < n + 2) ? g[j + 2] : Rational(0);
        g[gi] = f[j] + above;
    }
    // Exponents lo-2 and lo-1 must carry nothing.
    if (sgn(g[0]) != 0 || sgn(g[1]) != 0) return false;
    std::vector<Rational> out(g.begin() + 2, g.begin() + n);
    f = std::move(out);
    return true;
}

} // namespace detail

// r with r * lambda^k = p exactly.
inline Poly divide_lambda_power(const Poly& p, unsigned k) {
    Poly cur = p;
    for (unsigned step = 0; step < k && !cur.is_zero(); ++step) {
        // p / lambda = q p / (q^2 - 1)
        std::map<std::array<int, kNumVars - 1>, std::map<int, Rational>> groups;
        for (const auto& t : cur.terms()) {
            std::array<int, kNumVars - 1> key{t.e[1], t.e[2], t.e[3], t.e[4]};
            groups[key][t.e[0] + 1] += t.c;
        }
        Poly next;
        for (auto& [key, uni] : groups) {
            int lo = uni.begin()->first;
            int hi = uni.rbegin()->first;
            std::vector<Rational> f(hi - lo + 1, Rational(0));
            for (auto& [e, c] : uni) f[e - lo] = c;
            if (!detail::divide_q2_minus_1(f))
                throw Error(Errc::NotDivisible, "polynomial not divisible by lambda");
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (sgn(f[i]) == 0) continue;
                Exp e{static_cast<int>(lo + i), key[0], key[1], key[2], key[3]};
                next += Poly::monomial(e, f[i]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Exact quotient num / den for Laurent polynomials in q alone.
inline Poly divide_exact_q(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(Errc::NotDivisible, "division by zero polynomial");
    auto dense = [](const Poly& p, int& lo) {
        for (const auto& t : p.terms())
            for (int v = 1; v < kNumVars; ++v)
                if (t.e[v] != 0) throw Error(Errc::NotDivisible, "only univariate division in q is supported");
        lo = p.min_exponent(Q);
        std::vector<Rational> f(p.max_exponent(Q) - lo + 1, Rational(0));
        for (const auto& t : p.terms()) f[t.e[0] - lo] = t.c;
        return f;
    };
    if (num.is_zero()) return {};
    int nlo = 0, dlo = 0;
    std::vector<Rational> n = dense(num, nlo), d = dense(den, dlo);
    if (n.size() < d.size()) throw Error(Errc::NotDivisible, "degree of divisor exceeds dividend");
    std::vector<Rational> quo(n.size() - d.size() + 1, Rational(0));
    for (std::size_t i = quo.size(); i-- > 0;) {
        quo[i] = n[i + d.size() - 1] / d.back();
        for (std::size_t j = 0; j < d.size(); ++j) n[i + j] -= quo[i] * d[j];
    }
    for (const auto& r : n)
        if (sgn(r) != 0) throw Error(Errc::NotDivisible, "nonzero remainder");
    Poly out;
    for (std::size_t i = 0; i < quo.size(); ++i)
        if (sgn(quo[i]) != 0) out += Poly::monomial(Exp{static_cast<int>(nlo - dlo + i), 0, 0, 0, 0}, quo[i]);
    return out;
}

inline Rational specialize_exact(const Poly& p, const ParamPoint& at) {
    Rational sum(0);
    for (const auto& t : p.terms()) {
        Rational term = t.c;
        for (int v = 0; v < kNumVars; ++v) {
            if (t.e[v] == 0) continue;
            if (sgn(at.exact[v]) == 0 && t.e[v] < 0)
                throw Error(Errc::ZeroToNegativePower, std::string(kVarNames[v]) + " = 0");
            term *= rpow(at.exact[v], t.e[v]);
        }
        sum += term;
    }
    return sum;
}

inline double specialize_float(const Poly& p, const ParamPoint& at) {
    double sum = 0;
    for (const auto& t : p.terms()) {
        double term = t.c.get_d();
        for (int v = 0; v < kNumVars; ++v) {
            if (t.e[v] == 0) continue;
            if (at.fl[v] == 0.0 && t.e[v] < 0)
                throw Error(Errc::ZeroToNegativePower, std::string(kVarNames[v]) + " = 0");
            term *= std::pow(at.fl[v], t.e[v]);
        }
        sum += term;
    }
    return sum;
}

inline std::variant<Rational, double> specialize(const Poly& p, const ParamPoint& at) {
    if (at.mode == ParamPoint::Mode::Exact) return specialize_exact(p, at);
    return specialize_float(p, at);
}

// Substitute exact values for a subset of the variables, keeping the rest symbolic.
inline Poly partial_specialize(const Poly& p, const std::map<Var, Rational>& values) {
    Poly out;
    for (const auto& t : p.terms()) {
        Rational c = t.c;
        Exp e = t.e;
        for (const auto& [v, x] : values) {
            if (e[v] == 0) continue;
            if (sgn(x) == 0 && e[v] < 0)
                throw Error(Errc::ZeroToNegativePower, std::string(kVarNames[v]) + " = 0");
            c *= rpow(x, e[v]);
            e[v] = 0;
        }
        out += Poly::monomial(e, c);
    }
    return out;
}

inline std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = (c == 1);
        bool any_var = false;
        if (!unit) os << c.get_str();
        for (int v = 0; v < kNumVars; ++v) {
            if (t.e[v] == 0) continue;
            if (!unit || any_var) os << "*";
            os << kVarNames[v];
            if (t.e[v] != 1) os << "^" << (t.e[v] < 0 ? "(" + std::to_string(t.e[v]) + ")" : std::to_string(t.e[v]));
            any_var = true;
        }
        if (unit && !any_var) os << "1";
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

} // namespace slq
