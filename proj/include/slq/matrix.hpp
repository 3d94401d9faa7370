#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "slq/error.hpp"
#include "slq/ring.hpp"

namespace slq {

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
        return m;
    }
    static PolyMatrix diagonal(const std::vector<Poly>& d) {
        PolyMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    // e_ij in 1-based indices, as written in formulas.
    static PolyMatrix unit(std::size_t n, std::size_t i, std::size_t j, const Poly& v = Poly(1)) {
        PolyMatrix m(n, n);
        m(i - 1, j - 1) = v;
        return m;
    }
    // Build from 1-based (row, col, value) triples.
    static PolyMatrix from_entries(std::size_t n, const std::vector<std::tuple<int, int, Poly>>& e) {
        PolyMatrix m(n, n);
        for (const auto& [i, j, v] : e) m(i - 1, j - 1) = v;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
    }
    std::size_t nonzero_count() const {
        return static_cast<std::size_t>(
            std::count_if(a_.begin(), a_.end(), [](const Poly& p) { return !p.is_zero(); }));
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }

    friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const PolyMatrix& x, const PolyMatrix& y) { return !(x == y); }

    PolyMatrix& operator+=(const PolyMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    PolyMatrix& operator-=(const PolyMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend PolyMatrix operator+(PolyMatrix x, const PolyMatrix& y) { return x += y; }
    friend PolyMatrix operator-(PolyMatrix x, const PolyMatrix& y) { return x -= y; }
    PolyMatrix operator-() const {
        PolyMatrix r = *this;
        for (auto& p : r.a_) p = -p;
        return r;
    }

    friend PolyMatrix operator*(const Poly& c, const PolyMatrix& m) {
        PolyMatrix r(m.rows_, m.cols_);
        if (c.is_zero()) return r;
        for (std::size_t k = 0; k < m.a_.size(); ++k)
            if (!m.a_[k].is_zero()) r.a_[k] = c * m.a_[k];
        return r;
    }
    friend PolyMatrix operator*(const Rational& c, const PolyMatrix& m) { return Poly(c) * m; }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.cols_ != y.rows_)
            throw Error(Errc::DimensionMismatch, "matrix product " + x.shape() + " * " + y.shape());
        PolyMatrix r(x.rows_, y.cols_);
        // Row-wise sparse accumulation: most operands here are very sparse.
        std::vector<std::vector<std::size_t>> ynz(y.rows_);
        for (std::size_t k = 0; k < y.rows_; ++k)
            for (std::size_t j = 0; j < y.cols_; ++j)
                if (!y(k, j).is_zero()) ynz[k].push_back(j);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Poly& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j : ynz[k]) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    PolyMatrix& operator*=(const PolyMatrix& o) { return *this = *this * o; }

    PolyMatrix transpose() const {
        PolyMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    PolyMatrix map(const std::function<Poly(const Poly&)>& f) const {
        PolyMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            if (!a_[k].is_zero()) r.a_[k] = f(a_[k]);
        return r;
    }

    PolyMatrix pow(unsigned k) const {
        require_square("pow");
        PolyMatrix r = identity(rows_), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    void require_square(const char* what) const {
        if (!square()) throw Error(Errc::NonSquare, std::string(what) + " on " + shape());
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> a_;

    void check_same(const PolyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(Errc::DimensionMismatch, shape() + " vs " + o.shape());
    }
};

inline PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
    if (!a.square() || a.rows() != b.rows() || !b.square())
        throw Error(Errc::DimensionMismatch, "commutator " + a.shape() + ", " + b.shape());
    return a * b - b * a;
}

inline PolyMatrix anticommutator(const PolyMatrix& a, const PolyMatrix& b) {
    if (!a.square() || a.rows() != b.rows() || !b.square())
        throw Error(Errc::DimensionMismatch, "anticommutator " + a.shape() + ", " + b.shape());
    return a * b + b * a;
}

inline PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Poly& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

struct ParityVector {
    std::vector<int> p;

    static ParityVector fundamental() { return {{1, 0, 1}}; }
    std::size_t size() const noexcept { return p.size(); }

    // (-1)^{p(i)} on the diagonal.
    PolyMatrix sign_matrix() const {
        PolyMatrix m(p.size(), p.size());
        for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = Poly(p[i] % 2 ? -1 : 1);
        return m;
    }

    friend ParityVector tensor(const ParityVector& a, const ParityVector& b) {
        ParityVector r;
        r.p.reserve(a.size() * b.size());
        for (int x : a.p)
            for (int y : b.p) r.p.push_back((x + y) % 2);
        return r;
    }
    friend bool operator==(const ParityVector& a, const ParityVector& b) { return a.p == b.p; }
};

// Degree of m with respect to the grading, or -1 when m mixes degrees. Zero is even.
inline int homogeneous_degree(const PolyMatrix& m, const ParityVector& par) {
    int deg = -1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            int d = (par.p[i] + par.p[j]) % 2;
            if (deg == -1) deg = d;
            else if (deg != d) return -1;
        }
    return deg == -1 ? 0 : deg;
}

struct GradedOp {
    PolyMatrix matrix;
    int degree = 0;
    ParityVector parities;

    bool homogeneous() const {
        int d = homogeneous_degree(matrix, parities);
        return d >= 0 && (matrix.is_zero() || d == degree % 2);
    }
};

// rho(x (x) y) = (pi(x) Sigma^{deg y}) (x) pi(y)
inline PolyMatrix graded_kron(const PolyMatrix& a, const ParityVector& pa, const PolyMatrix& b, int deg_b) {
    if (deg_b % 2 == 0) return kron(a, b);
    return kron(a * pa.sign_matrix(), b);
}

inline GradedOp graded_kron(const GradedOp& a, const GradedOp& b) {
    if (!a.homogeneous() || !b.homogeneous())
        throw Error(Errc::InhomogeneousOperand, "graded_kron needs homogeneous operands");
    return {graded_kron(a.matrix, a.parities, b.matrix, b.degree), (a.degree + b.degree) % 2,
            tensor(a.parities, b.parities)};
}

inline std::size_t ipow(std::size_t base, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= base;
    return r;
}

// op acting on sites (j, j+1) of an L-site chain, 1 <= j <= L-1.
inline PolyMatrix site_embed(const PolyMatrix& op, unsigned j, unsigned L, std::size_t d = 3) {
    if (L < 2 || j < 1 || j > L - 1)
        throw Error(Errc::SiteOutOfRange, "site " + std::to_string(j) + " for L=" + std::to_string(L));
    if (op.rows() != d * d || !op.square())
        throw Error(Errc::DimensionMismatch, "site_embed expects a two-site operator");
    PolyMatrix r = kron(PolyMatrix::identity(ipow(d, j - 1)), op);
    return kron(r, PolyMatrix::identity(ipow(d, L - j - 1)));
}

// Permutation matrix swapping two tensor factors of C^d (x) C^d.
inline PolyMatrix flip(std::size_t d = 3) {
    PolyMatrix p(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) p(i * d + k, k * d + i) = Poly(1);
    return p;
}

enum class Pair { P12, P13, P23 };

inline PolyMatrix three_space_embed(const PolyMatrix& m, Pair pair, std::size_t d = 3) {
    if (m.rows() != d * d || !m.square())
        throw Error(Errc::DimensionMismatch, "three_space_embed expects a two-space operator");
    const PolyMatrix I = PolyMatrix::identity(d);
    switch (pair) {
    case Pair::P12: return kron(m, I);
    case Pair::P23: return kron(I, m);
    case Pair::P13: {
        PolyMatrix p23 = kron(I, flip(d));
        return p23 * kron(m, I) * p23;
    }
    }
    return {};
}

// Direct index formula for the 13 embedding, used to cross-check the permutation route.
inline PolyMatrix three_space_embed_13_direct(const PolyMatrix& m, std::size_t d = 3) {
    PolyMatrix r(d * d * d, d * d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t l = 0; l < d; ++l) {
                    const Poly& v = m(i * d + k, j * d + l);
                    if (v.is_zero()) continue;
                    for (std::size_t b = 0; b < d; ++b) r((i * d + b) * d + k, (j * d + b) * d + l) = v;
                }
    return r;
}

enum class TraceKind { Plain, Super, Quantum };

inline Poly trace(const PolyMatrix& m) {
    m.require_square("trace");
    Poly t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

inline Poly supertrace(const PolyMatrix& m, const ParityVector& par) {
    m.require_square("supertrace");
    if (par.size() != m.rows()) throw Error(Errc::DimensionMismatch, "parity vector length");
    Poly t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += par.p[i] % 2 ? -m(i, i) : m(i, i);
    return t;
}

// Sum of (D^{-1})_ii m_ii for a diagonal D with monomial entries.
inline Poly quantum_trace(const PolyMatrix& m, const PolyMatrix& D) {
    m.require_square("quantum_trace");
    if (D.rows() != m.rows()) throw Error(Errc::DimensionMismatch, "quantum_trace D size");
    Poly t;
    for (std::size_t i = 0; i < m.rows(); ++i) t += D(i, i).pow(-1) * m(i, i);
    return t;
}

// Tr_1 over the first factor of C^a (x) C^b, weighted by w_i.
inline PolyMatrix partial_trace_first(const PolyMatrix& m, std::size_t a, const std::vector<Poly>& w) {
    m.require_square("partial_trace_first");
    if (m.rows() % a != 0 || w.size() != a) throw Error(Errc::DimensionMismatch, "partial trace factor size");
    std::size_t b = m.rows() / a;
    PolyMatrix r(b, b);
    for (std::size_t i = 0; i < a; ++i) {
        if (w[i].is_zero()) continue;
        for (std::size_t k = 0; k < b; ++k)
            for (std::size_t l = 0; l < b; ++l) {
                const Poly& v = m(i * b + k, i * b + l);
                if (!v.is_zero()) r(k, l) += w[i] * v;
            }
    }
    return r;
}

// Tr_2 over the second factor of C^a (x) C^b, weighted by w_k.
inline PolyMatrix partial_trace_second(const PolyMatrix& m, std::size_t b, const std::vector<Poly>& w) {
    m.require_square("partial_trace_second");
    if (m.rows() % b != 0 || w.size() != b) throw Error(Errc::DimensionMismatch, "partial trace factor size");
    std::size_t a = m.rows() / b;
    PolyMatrix r(a, a);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j)
            for (std::size_t k = 0; k < b; ++k) {
                const Poly& v = m(i * b + k, j * b + k);
                if (!v.is_zero() && !w[k].is_zero()) r(i, j) += w[k] * v;
            }
    return r;
}

// Tr_1 (D_1^{-1} m) with a 3-dim auxiliary first factor.
inline PolyMatrix partial_quantum_trace(const PolyMatrix& m, const PolyMatrix& D) {
    if (D.rows() != 3 || m.rows() % 3 != 0)
        throw Error(Errc::DimensionMismatch, "partial_quantum_trace expects a 3-dim auxiliary space");
    std::vector<Poly> w;
    for (std::size_t i = 0; i < 3; ++i) w.push_back(D(i, i).pow(-1));
    return partial_trace_first(m, 3, w);
}

// Transposition in the second space: M[(i,k),(j,l)] -> M[(i,l),(j,k)].
inline PolyMatrix partial_transpose_second(const PolyMatrix& m, std::size_t d = 3) {
    PolyMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t l = 0; l < d; ++l) r(i * d + k, j * d + l) = m(i * d + l, j * d + k);
    return r;
}

// Inverse of a triangular matrix whose diagonal entries are monomials.
inline PolyMatrix triangular_inverse(const PolyMatrix& m) {
    m.require_square("triangular_inverse");
    const std::size_t n = m.rows();
    bool lower = true, upper = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j).is_zero()) continue;
            if (j > i) lower = false;
            if (j < i) upper = false;
        }
    if (!lower && !upper) throw Error(Errc::NotDivisible, "matrix is not triangular");
    if (!lower) return triangular_inverse(m.transpose()).transpose();
    std::vector<Poly> dinv(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!m(i, i).is_monomial()) throw Error(Errc::NotDivisible, "non-monomial pivot");
        dinv[i] = m(i, i).pow(-1);
    }
    // Forward substitution, column by column.
    PolyMatrix r(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        r(c, c) = dinv[c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Poly acc;
            for (std::size_t k = c; k < i; ++k)
                if (!m(i, k).is_zero() && !r(k, c).is_zero()) acc += m(i, k) * r(k, c);
            if (!acc.is_zero()) r(i, c) = -(dinv[i] * acc);
        }
    }
    return r;
}

// Nonzero entries as (i,j): value, 1-based.
inline std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
    os << m.rows() << "x" << m.cols() << " {";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) os << " (" << i + 1 << "," << j + 1 << "): " << m(i, j) << ";";
    return os << " }";
}

} // namespace slq
