#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilbound/ring.hpp"
#include "nilbound/word.hpp"

namespace nilbound {

/// Variable x_{ij}(r) of the polynomial ring A in the n^2 m generic-matrix
/// entries. Indices are 1-based, matching the usual notation.
struct VarId {
    int i, j, r;

    /// Dense position in the exponent vector: variables are grouped by
    /// matrix index r, then row-major within a matrix.
    int index(int n) const { return ((r - 1) * n + (i - 1)) * n + (j - 1); }

    static VarId from_index(int idx, int n) {
        int r = idx / (n * n), rest = idx % (n * n);
        return VarId{rest / n + 1, rest % n + 1, r + 1};
    }

    friend bool operator==(const VarId& a, const VarId& b) {
        return a.i == b.i && a.j == b.j && a.r == b.r;
    }
};

/// Commutative monomial as a dense exponent vector over the n^2 m variables.
/// Ordered by total degree then lexicographically on exponents.
struct CommMonomial {
    std::vector<uint8_t> e;
    int deg = 0; // cached total degree, maintained by every mutator

    CommMonomial() = default;
    explicit CommMonomial(size_t nvars) : e(nvars, 0) {}

    static CommMonomial variable(const VarId& v, int n, int m) {
        CommMonomial t((size_t)n * n * m);
        t.e[v.index(n)] = 1;
        t.deg = 1;
        return t;
    }

    void recompute_degree() {
        deg = 0;
        for (uint8_t x : e) deg += x;
    }
    int total() const { return deg; }
    bool is_one() const { return deg == 0; }

    friend CommMonomial operator*(const CommMonomial& a, const CommMonomial& b) {
        if (a.e.size() != b.e.size())
            throw UsageError("CommMonomial: ambient mismatch");
        CommMonomial r = a;
        for (size_t k = 0; k < r.e.size(); ++k) {
            int s = r.e[k] + b.e[k];
            if (s > 255) throw UsageError("CommMonomial: exponent overflow");
            r.e[k] = (uint8_t)s;
        }
        r.deg = a.deg + b.deg;
        return r;
    }
    friend bool operator==(const CommMonomial& a, const CommMonomial& b) {
        return a.e == b.e;
    }
    friend bool operator<(const CommMonomial& a, const CommMonomial& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.e < b.e;
    }
};

inline MultiDegree multidegree_of_term(const CommMonomial& t, int n, int m) {
    MultiDegree d(m);
    for (size_t k = 0; k < t.e.size(); ++k)
        if (t.e[k]) d.exponents[k / ((size_t)n * n)] += t.e[k];
    return d;
}

inline std::string format_monomial(const CommMonomial& t, int n) {
    if (t.is_one()) return "1";
    std::string out;
    for (size_t k = 0; k < t.e.size(); ++k) {
        if (!t.e[k]) continue;
        VarId v = VarId::from_index((int)k, n);
        if (!out.empty()) out += "*";
        out += "x[" + std::to_string(v.i) + "," + std::to_string(v.j) + "](" +
               std::to_string(v.r) + ")";
        if (t.e[k] > 1) out += "^" + std::to_string((int)t.e[k]);
    }
    return out;
}

/// Sparse exact polynomial in the n^2 m variables x_{ij}(r).
template <class R>
class CommPoly {
public:
    CommPoly(int n, int m) : n_(n), m_(m) {
        if (n < 1 || m < 1) throw UsageError("CommPoly: need n, m >= 1");
    }

    int n() const { return n_; }
    int m() const { return m_; }
    size_t nvars() const { return (size_t)n_ * n_ * m_; }
    const std::map<CommMonomial, R>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }

    void add_term(const CommMonomial& t, const R& c) {
        if (is_zero(c)) return;
        if (t.e.size() != nvars())
            throw UsageError("CommPoly: monomial ambient mismatch");
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    void add_assign(const CommPoly& other) {
        check_same(other);
        for (auto& [t, c] : other.terms_) add_term(t, c);
    }
    void sub_assign(const CommPoly& other) {
        check_same(other);
        for (auto& [t, c] : other.terms_) add_term(t, -c);
    }
    void check_same(const CommPoly& other) const {
        if (n_ != other.n_ || m_ != other.m_)
            throw UsageError("CommPoly: ambient (n, m) mismatch");
    }

    static CommPoly constant(int n, int m, const R& c) {
        CommPoly p(n, m);
        p.add_term(CommMonomial((size_t)n * n * m), c);
        return p;
    }
    static CommPoly variable(const VarId& v, int n, int m, const R& one) {
        CommPoly p(n, m);
        p.add_term(CommMonomial::variable(v, n, m), one);
        return p;
    }

    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
    }

private:
    int n_, m_;
    std::map<CommMonomial, R> terms_;
};

template <class R>
void check_ambient(const CommPoly<R>& a, const CommPoly<R>& b) {
    if (a.n() != b.n() || a.m() != b.m())
        throw UsageError("CommPoly: ambient (n, m) mismatch");
}

template <class R>
CommPoly<R> poly_add(const CommPoly<R>& a, const CommPoly<R>& b) {
    check_ambient(a, b);
    CommPoly<R> r = a;
    for (auto& [t, c] : b.terms()) r.add_term(t, c);
    return r;
}

template <class R>
CommPoly<R> poly_sub(const CommPoly<R>& a, const CommPoly<R>& b) {
    check_ambient(a, b);
    CommPoly<R> r = a;
    for (auto& [t, c] : b.terms()) r.add_term(t, -c);
    return r;
}

template <class R>
CommPoly<R> poly_mul(const CommPoly<R>& a, const CommPoly<R>& b) {
    check_ambient(a, b);
    CommPoly<R> r(a.n(), a.m());
    for (auto& [ta, ca] : a.terms())
        for (auto& [tb, cb] : b.terms()) r.add_term(ta * tb, ca * cb);
    return r;
}

template <class R>
CommPoly<R> poly_scale(const CommPoly<R>& a, const R& c) {
    CommPoly<R> r(a.n(), a.m());
    for (auto& [t, ct] : a.terms()) r.add_term(t, ct * c);
    return r;
}

template <class R>
CommPoly<R> operator+(const CommPoly<R>& a, const CommPoly<R>& b) { return poly_add(a, b); }
template <class R>
CommPoly<R> operator-(const CommPoly<R>& a, const CommPoly<R>& b) { return poly_sub(a, b); }
template <class R>
CommPoly<R> operator*(const CommPoly<R>& a, const CommPoly<R>& b) { return poly_mul(a, b); }

/// Coefficients of f in the order of the given basis. Every term of f must
/// appear in the basis; a term outside is reported with its monomial.
template <class R>
std::vector<R> coefficient_vector(const CommPoly<R>& f,
                                  const std::vector<CommMonomial>& basis) {
    std::map<CommMonomial, size_t> pos;
    for (size_t k = 0; k < basis.size(); ++k) pos.emplace(basis[k], k);
    std::vector<R> out(basis.size());
    for (auto& [t, c] : f.terms()) {
        auto it = pos.find(t);
        if (it == pos.end())
            throw UsageError("coefficient_vector: term outside basis: " +
                             format_monomial(t, f.n()));
        out[it->second] = c;
    }
    return out;
}

template <class R>
std::string format_poly(const CommPoly<R>& f) {
    if (f.is_zero_poly()) return "0";
    std::string out;
    for (auto& [t, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += ring_to_string(c) + "*" + format_monomial(t, f.n());
    }
    return out;
}

} // namespace nilbound
