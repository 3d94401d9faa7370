#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <variant>
#include <vector>

#include "slq/error.hpp"
#include "slq/matrix.hpp"
#include "slq/ring.hpp"

namespace slq {

using u64 = std::uint64_t;

// Runs f(0..n-1) on up to `jobs` threads. Each index writes its own output slot; the first exception wins.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw Error(Errc::BadPrime, "zero is not invertible mod " + std::to_string(p));
    return powmod(a, p - 2, p);
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

// Random prime in [2^30, 2^31).
inline u64 random_prime(std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(1ull << 30, (1ull << 31) - 1);
    for (;;) {
        u64 c = dist(rng) | 1ull;
        if (is_prime(c)) return c;
    }
}

// Random rational away from 0 and +-1 with small numerator and denominator.
inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(2, 97), den(1, 89);
    for (;;) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        if (r != 1) return r;
    }
}

inline u64 mod_of(const Rational& r, u64 p) {
    auto red = [p](const Integer& z) {
        Integer m = z % Integer(static_cast<unsigned long>(p));
        if (m < 0) m += static_cast<unsigned long>(p);
        return static_cast<u64>(m.get_ui());
    };
    u64 den = red(r.get_den());
    if (den == 0) throw Error(Errc::BadPrime, "denominator vanishes mod " + std::to_string(p));
    return mulmod(red(r.get_num()), invmod(den, p), p);
}

inline u64 specialize_mod(const Poly& x, const ParamPoint& at, u64 p) {
    if (at.mode != ParamPoint::Mode::Exact) throw Error(Errc::BadPrime, "modular specialization needs an exact point");
    std::array<u64, kNumVars> v{}, vinv{};
    std::array<bool, kNumVars> have_inv{};
    for (int i = 0; i < kNumVars; ++i) v[i] = mod_of(at.exact[i], p);
    u64 acc = 0;
    for (const auto& t : x.terms()) {
        u64 m = mod_of(t.c, p);
        for (int i = 0; i < kNumVars; ++i) {
            int e = t.e[i];
            if (e == 0) continue;
            if (e < 0 && !have_inv[i]) {
                vinv[i] = invmod(v[i], p);
                have_inv[i] = true;
            }
            m = mulmod(m, powmod(e > 0 ? v[i] : vinv[i], static_cast<u64>(e > 0 ? e : -e), p), p);
        }
        acc = (acc + m) % p;
    }
    return acc;
}

struct ModMatrix {
    std::size_t n = 0;
    u64 p = 0;
    std::vector<u64> a;

    ModMatrix() = default;
    ModMatrix(std::size_t n_, u64 p_) : n(n_), p(p_), a(n_ * n_, 0) {}
    u64& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    u64 operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

inline ModMatrix specialize_mod(const PolyMatrix& m, const ParamPoint& at, u64 p) {
    m.require_square("specialize_mod");
    ModMatrix out(m.rows(), p);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(i, j) = specialize_mod(m(i, j), at, p);
    return out;
}

// Characteristic polynomial det(xI - M) by Hessenberg reduction; coefficients from x^n down to x^0.
inline std::vector<u64> charpoly_mod(ModMatrix h) {
    const std::size_t n = h.n;
    const u64 p = h.p;
    auto sub = [p](u64 a, u64 b) { return (a + p - b) % p; };
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::size_t piv = k + 1;
        while (piv < n && h(piv, k) == 0) ++piv;
        if (piv == n) continue;
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, k + 1));
        }
        u64 inv = invmod(h(k + 1, k), p);
        for (std::size_t i = k + 2; i < n; ++i) {
            if (h(i, k) == 0) continue;
            u64 f = mulmod(h(i, k), inv, p);
            for (std::size_t j = 0; j < n; ++j) h(i, j) = sub(h(i, j), mulmod(f, h(k + 1, j), p));
            for (std::size_t r = 0; r < n; ++r) h(r, k + 1) = (h(r, k + 1) + mulmod(f, h(r, i), p)) % p;
        }
    }
    // polys[m] = charpoly of the leading m x m block, low-to-high coefficients.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<u64> cur(m + 1, 0);
        const auto& prev = polys[m - 1];
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] = (cur[i + 1] + prev[i]) % p;
            cur[i] = sub(cur[i], mulmod(h(m - 1, m - 1), prev[i], p));
        }
        u64 t = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            t = mulmod(t, h(i + 1, i), p);
            if (t == 0) break;
            u64 c = mulmod(t, h(i, m - 1), p);
            const auto& pi = polys[i];
            for (std::size_t j = 0; j < pi.size(); ++j) cur[j] = sub(cur[j], mulmod(c, pi[j], p));
        }
        polys[m] = std::move(cur);
    }
    std::vector<u64> out(polys[n].rbegin(), polys[n].rend());
    return out;
}

inline std::vector<u64> modular_charpoly(const PolyMatrix& m, const ParamPoint& at, u64 p) {
    if (!is_prime(p)) throw Error(Errc::BadPrime, std::to_string(p) + " is not prime");
    return charpoly_mod(specialize_mod(m, at, p));
}

inline std::vector<u64> poly_mul_mod(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    std::vector<u64> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    return c;
}

// Sparse matrix over F_p in coordinate form, used for chains too large for the symbolic layer.
struct SparseMod {
    std::size_t n = 0;
    u64 p = 0;
    std::vector<std::vector<std::pair<std::size_t, u64>>> rows;
};

// Connected components of the symmetric sparsity pattern.
inline std::vector<std::vector<std::size_t>> components(const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : adj[i]) {
            std::size_t a = find(i), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& g : groups)
        if (!g.empty()) out.push_back(std::move(g));
    return out;
}

inline std::vector<std::vector<std::size_t>> components(const SparseMod& m) {
    std::vector<std::vector<std::size_t>> adj(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (auto [j, v] : m.rows[i])
            if (v != 0 && j != i) adj[i].push_back(j);
    return components(adj);
}

inline std::vector<std::vector<std::size_t>> components(const PolyMatrix& m) {
    std::vector<std::vector<std::size_t>> adj(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && !m(i, j).is_zero()) adj[i].push_back(j);
    return components(adj);
}

struct BlockCharpoly {
    std::vector<u64> coeffs;  // x^n down to x^0
    std::size_t blocks = 0, max_block = 0;
};

inline BlockCharpoly charpoly_by_blocks(const SparseMod& m) {
    BlockCharpoly out;
    std::vector<u64> total{1};
    std::vector<std::size_t> pos(m.n);
    for (const auto& comp : components(m)) {
        ModMatrix blk(comp.size(), m.p);
        for (std::size_t a = 0; a < comp.size(); ++a) pos[comp[a]] = a;
        for (std::size_t a = 0; a < comp.size(); ++a)
            for (auto [j, v] : m.rows[comp[a]]) blk(a, pos[j]) = (blk(a, pos[j]) + v) % m.p;
        std::vector<u64> c = charpoly_mod(std::move(blk));
        std::vector<u64> low(c.rbegin(), c.rend());
        total = poly_mul_mod(total, low, m.p);
        ++out.blocks;
        out.max_block = std::max(out.max_block, comp.size());
    }
    out.coeffs.assign(total.rbegin(), total.rend());
    return out;
}

// Rows of the open-chain sum of a two-site operator (row-major 9x9 values) over L sites.
template <class T, class Add>
std::vector<std::vector<std::pair<std::size_t, T>>> chain_rows(const std::vector<T>& h2, unsigned L, Add add) {
    if (h2.size() != 81) throw Error(Errc::DimensionMismatch, "two-site operator must be 9x9");
    const std::size_t n = ipow(3, L);
    std::vector<std::vector<std::pair<std::size_t, T>>> rows(n);
    for (std::size_t row = 0; row < n; ++row) {
        std::vector<std::pair<std::size_t, T>> acc;
        for (unsigned j = 0; j + 1 < L; ++j) {
            std::size_t stride = ipow(3, L - j - 2);
            std::size_t a = (row / (3 * stride)) % 3, b = (row / stride) % 3;
            std::size_t base = row - (3 * a + b) * stride;
            for (std::size_t c = 0; c < 3; ++c)
                for (std::size_t d = 0; d < 3; ++d) {
                    const T& v = h2[(3 * a + b) * 9 + 3 * c + d];
                    if (v != T{}) acc.emplace_back(base + (3 * c + d) * stride, v);
                }
        }
        std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [col, v] : acc) {
            if (!rows[row].empty() && rows[row].back().first == col)
                rows[row].back().second = add(rows[row].back().second, v);
            else
                rows[row].emplace_back(col, v);
        }
    }
    return rows;
}

inline SparseMod chain_sparse(const ModMatrix& h2, unsigned L) {
    SparseMod m;
    m.p = h2.p;
    m.n = ipow(3, L);
    const u64 p = h2.p;
    m.rows = chain_rows(h2.a, L, [p](u64 x, u64 y) { return (x + y) % p; });
    return m;
}

// Tr(M^k), k = 1..kmax, of an open chain in double precision, accumulated over its blocks.
inline std::vector<double> chain_float_traces(const std::vector<double>& h2, unsigned L, unsigned kmax) {
    auto rows = chain_rows(h2, L, [](double x, double y) { return x + y; });
    std::vector<std::vector<std::size_t>> adj(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [j, v] : rows[i])
            if (j != i) adj[i].push_back(j);
    std::vector<double> out(kmax, 0.0);
    std::vector<std::size_t> pos(rows.size());
    for (const auto& comp : components(adj)) {
        const std::size_t nb = comp.size();
        for (std::size_t a = 0; a < nb; ++a) pos[comp[a]] = a;
        std::vector<double> blk(nb * nb, 0.0), cur, tmp(nb * nb);
        for (std::size_t a = 0; a < nb; ++a)
            for (auto& [j, v] : rows[comp[a]]) blk[a * nb + pos[j]] += v;
        cur = blk;
        for (unsigned k = 0; k < kmax; ++k) {
            if (k > 0) {
                std::fill(tmp.begin(), tmp.end(), 0.0);
                for (std::size_t i = 0; i < nb; ++i)
                    for (std::size_t l = 0; l < nb; ++l) {
                        double c = cur[i * nb + l];
                        if (c == 0.0) continue;
                        for (std::size_t j = 0; j < nb; ++j) tmp[i * nb + j] += c * blk[l * nb + j];
                    }
                std::swap(cur, tmp);
            }
            for (std::size_t i = 0; i < nb; ++i) out[k] += cur[i * nb + i];
        }
    }
    return out;
}

// Tr(M^k) for k = 1..kmax at a point; exact values in Exact mode, doubles in Float mode.
using TraceList = std::variant<std::vector<Rational>, std::vector<double>>;

inline TraceList newton_traces(const PolyMatrix& m, const ParamPoint& at, unsigned kmax) {
    m.require_square("newton_traces");
    const std::size_t n = m.rows();
    if (at.mode == ParamPoint::Mode::Exact) {
        std::vector<Rational> a(n * n), cur, tmp(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i * n + j] = specialize_exact(m(i, j), at);
        cur = a;
        std::vector<Rational> out;
        for (unsigned k = 1; k <= kmax; ++k) {
            if (k > 1) {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        Rational s = 0;
                        for (std::size_t l = 0; l < n; ++l)
                            if (sgn(cur[i * n + l]) != 0 && sgn(a[l * n + j]) != 0) s += cur[i * n + l] * a[l * n + j];
                        tmp[i * n + j] = s;
                    }
                std::swap(cur, tmp);
            }
            Rational t = 0;
            for (std::size_t i = 0; i < n; ++i) t += cur[i * n + i];
            out.push_back(t);
        }
        return out;
    }
    std::vector<double> a(n * n), cur, tmp(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = specialize_float(m(i, j), at);
    cur = a;
    std::vector<double> out;
    for (unsigned k = 1; k <= kmax; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    double s = 0;
                    for (std::size_t l = 0; l < n; ++l) s += cur[i * n + l] * a[l * n + j];
                    tmp[i * n + j] = s;
                }
            std::swap(cur, tmp);
        }
        double t = 0;
        for (std::size_t i = 0; i < n; ++i) t += cur[i * n + i];
        out.push_back(t);
    }
    return out;
}

// Elementary symmetric functions e_1..e_n from power sums p_1..p_n.
template <class T>
std::vector<T> newton_to_elementary(const std::vector<T>& pw, std::size_t n) {
    std::vector<T> e(n + 1);
    e[0] = T(1);
    for (std::size_t k = 1; k <= n; ++k) {
        T acc{};
        for (std::size_t i = 1; i <= k; ++i) {
            T term = e[k - i] * pw[i - 1];
            if (i % 2) acc += term;
            else acc -= term;
        }
        e[k] = rational(1, static_cast<long>(k)) * acc;
    }
    return e;
}

// Power sums Tr(M^k), k = 1..kmax, over the Laurent ring: per block, the first n_B traces by
// repeated multiplication, the rest from the Cayley-Hamilton recurrence.
inline std::vector<Poly> symbolic_newton_traces(const PolyMatrix& m, unsigned kmax) {
    m.require_square("symbolic_newton_traces");
    std::vector<Poly> total(kmax);
    for (const auto& comp : components(m)) {
        const std::size_t nb = comp.size();
        PolyMatrix blk(nb, nb);
        for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = 0; b < nb; ++b) blk(a, b) = m(comp[a], comp[b]);
        std::vector<Poly> pw;
        PolyMatrix cur = blk;
        for (std::size_t k = 1; k <= std::min<std::size_t>(nb, kmax); ++k) {
            if (k > 1) cur = cur * blk;
            Poly t;
            for (std::size_t i = 0; i < nb; ++i) t += cur(i, i);
            pw.push_back(t);
        }
        if (kmax > nb) {
            std::vector<Poly> e = newton_to_elementary(pw, nb);
            for (std::size_t k = nb + 1; k <= kmax; ++k) {
                Poly t;
                for (std::size_t i = 1; i <= nb; ++i) {
                    Poly term = e[i] * pw[k - i - 1];
                    if (i % 2) t += term;
                    else t -= term;
                }
                pw.push_back(t);
            }
        }
        for (unsigned k = 0; k < kmax; ++k) total[k] += pw[k];
    }
    return total;
}

// Exact nullspace over Q; rows of the result form a basis.
using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix rational_nullspace(RationalMatrix a, std::size_t cols) {
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (auto c : pivcol) is_piv[c] = true;
    RationalMatrix basis;
    for (std::size_t fcol = 0; fcol < cols; ++fcol) {
        if (is_piv[fcol]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fcol] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -a[i][fcol];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rational_rank(const RationalMatrix& a, std::size_t cols) {
    return cols - rational_nullspace(a, cols).size();
}

} // namespace slq
