#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "nilbound/commpoly.hpp"
#include "nilbound/free_element.hpp"
#include "nilbound/ring.hpp"
#include "nilbound/word.hpp"

namespace nilbound {

/// Square matrix over the polynomial ring A, row-major.
template <class R>
struct MatrixPoly {
    int n = 0, m = 0;
    std::vector<CommPoly<R>> a;

    MatrixPoly() = default;
    MatrixPoly(int n_, int m_) : n(n_), m(m_), a((size_t)n_ * n_, CommPoly<R>(n_, m_)) {}

    CommPoly<R>& at(int i, int j) { return a[(size_t)i * n + j]; }
    const CommPoly<R>& at(int i, int j) const { return a[(size_t)i * n + j]; }

    bool is_zero_matrix() const {
        for (auto& e : a)
            if (!e.is_zero_poly()) return false;
        return true;
    }
    friend bool operator==(const MatrixPoly& x, const MatrixPoly& y) {
        return x.n == y.n && x.m == y.m && x.a == y.a;
    }
};

template <class R>
MatrixPoly<R> identity_matrix(int n, int m, const R& one) {
    MatrixPoly<R> I(n, m);
    for (int i = 0; i < n; ++i) I.at(i, i) = CommPoly<R>::constant(n, m, one);
    return I;
}

/// The generic matrix X_r = (x_{ij}(r)).
template <class R>
MatrixPoly<R> generic_matrix(int r, int n, int m, const R& one) {
    if (r < 1 || r > m) throw UsageError("generic_matrix: index out of range");
    MatrixPoly<R> X(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            X.at(i, j) = CommPoly<R>::variable(VarId{i + 1, j + 1, r}, n, m, one);
    return X;
}

template <class R>
MatrixPoly<R> mat_add(const MatrixPoly<R>& x, const MatrixPoly<R>& y) {
    if (x.n != y.n || x.m != y.m) throw UsageError("mat_add: shape mismatch");
    MatrixPoly<R> r(x.n, x.m);
    for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
}

template <class R>
MatrixPoly<R> mat_sub(const MatrixPoly<R>& x, const MatrixPoly<R>& y) {
    if (x.n != y.n || x.m != y.m) throw UsageError("mat_sub: shape mismatch");
    MatrixPoly<R> r(x.n, x.m);
    for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
}

template <class R>
MatrixPoly<R> mat_mul(const MatrixPoly<R>& x, const MatrixPoly<R>& y) {
    if (x.n != y.n || x.m != y.m) throw UsageError("mat_mul: shape mismatch");
    MatrixPoly<R> r(x.n, x.m);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            for (int k = 0; k < x.n; ++k)
                r.at(i, j).add_assign(x.at(i, k) * y.at(k, j));
    return r;
}

template <class R>
MatrixPoly<R> mat_scale(const MatrixPoly<R>& x, const CommPoly<R>& f) {
    MatrixPoly<R> r(x.n, x.m);
    for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] * f;
    return r;
}

template <class R>
MatrixPoly<R> mat_pow(const MatrixPoly<R>& x, int e, const R& one) {
    MatrixPoly<R> r = identity_matrix<R>(x.n, x.m, one);
    MatrixPoly<R> base = x;
    while (e > 0) {
        if (e & 1) r = mat_mul(r, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return r;
}

/// Image of a word under x_i -> X_i.
template <class R>
MatrixPoly<R> phi1_word(const Word& w, int n, int m, const R& one) {
    MatrixPoly<R> r = identity_matrix<R>(n, m, one);
    for (uint8_t l : w.letters) r = mat_mul(r, generic_matrix<R>((int)l, n, m, one));
    return r;
}

/// The algebra homomorphism phi_1: F_m -> A^{n x n}, x_i -> X_i,
/// phi_1(1) = I.
template <class R>
MatrixPoly<R> phi1(const FreeElement<R>& f, int n) {
    int m = f.generators();
    MatrixPoly<R> out(n, m);
    for (auto& [w, c] : f.terms()) {
        MatrixPoly<R> wm = phi1_word(w, n, m, ring_one(c));
        for (size_t k = 0; k < out.a.size(); ++k)
            out.a[k].add_assign(poly_scale(wm.a[k], c));
    }
    return out;
}

namespace detail {

inline int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

/// Determinant of the principal submatrix on rows/columns idx, by the
/// Leibniz expansion (idx stays tiny at desk scale).
template <class R>
CommPoly<R> principal_minor_det(const MatrixPoly<R>& B,
                                const std::vector<int>& idx, const R& one) {
    CommPoly<R> det(B.n, B.m);
    std::vector<int> perm((int)idx.size());
    std::iota(perm.begin(), perm.end(), 0);
    R minus_one = -one;
    do {
        CommPoly<R> term = CommPoly<R>::constant(
            B.n, B.m, permutation_sign(perm) > 0 ? one : minus_one);
        for (size_t k = 0; k < idx.size(); ++k) {
            term = term * B.at(idx[k], idx[perm[k]]);
            if (term.is_zero_poly()) break;
        }
        det.add_assign(term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

inline void combinations(int n, int l,
                         const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(l);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == l) { fn(idx); return; }
        for (int v = start; v <= n - (l - depth); ++v) {
            idx[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace detail

/// sigma_l(B): the sum of all principal l x l minors of B, computed by
/// exact minor expansion. sigma_0 = 1, sigma_1 = trace, sigma_n = det.
/// No division by integers happens anywhere, so the result is valid in any
/// characteristic.
template <class R>
CommPoly<R> sigma(int l, const MatrixPoly<R>& B, const R& one) {
    if (l < 0 || l > B.n) throw UsageError("sigma: l outside [0, n]");
    if (l == 0) return CommPoly<R>::constant(B.n, B.m, one);
    CommPoly<R> out(B.n, B.m);
    detail::combinations(B.n, l, [&](const std::vector<int>& idx) {
        out.add_assign(detail::principal_minor_det(B, idx, one));
    });
    return out;
}

template <class R>
CommPoly<R> trace(const MatrixPoly<R>& B) {
    CommPoly<R> t(B.n, B.m);
    for (int i = 0; i < B.n; ++i) t.add_assign(B.at(i, i));
    return t;
}

/// Formal product of Donkin generators: prod_t sigma_{l_t}(W_t).
struct InvariantExpr {
    std::vector<std::pair<int, Word>> factors;

    MultiDegree multidegree(int m) const {
        MultiDegree d(m);
        for (auto& [l, w] : factors) {
            MultiDegree wd = nilbound::multidegree(w, m);
            for (int k = 0; k < m; ++k) d.exponents[k] += l * wd.exponents[k];
        }
        return d;
    }
    int total_degree() const {
        int t = 0;
        for (auto& [l, w] : factors) t += l * w.degree();
        return t;
    }
    std::string to_string() const {
        if (factors.empty()) return "1";
        std::string out;
        for (auto& [l, w] : factors) {
            if (!out.empty()) out += "*";
            out += "s_" + std::to_string(l) + "(" + format_word(w) + ")";
        }
        return out;
    }
};

/// phi_2 on a formal product: evaluates each sigma_l(W) through phi_1.
template <class R>
CommPoly<R> phi2(const InvariantExpr& e, int n, int m, const R& one) {
    CommPoly<R> out = CommPoly<R>::constant(n, m, one);
    for (auto& [l, w] : e.factors) {
        if (l < 1 || l > n) throw UsageError("phi2: sigma index outside [1, n]");
        if (w.empty()) throw UsageError("phi2: empty word factor");
        out = out * sigma(l, phi1_word(w, n, m, one), one);
    }
    return out;
}

/// Invariant product times a word in generic matrices; evaluates into the
/// matrix ring over A.
struct ConcomitantExpr {
    InvariantExpr invariant;
    Word z;

    MultiDegree multidegree(int m) const {
        return invariant.multidegree(m) + nilbound::multidegree(z, m);
    }
    std::string to_string() const {
        std::string inv = invariant.to_string();
        if (z.empty()) return inv + "*I";
        if (invariant.factors.empty()) return "X(" + format_word(z) + ")";
        return inv + "*X(" + format_word(z) + ")";
    }
};

template <class R>
MatrixPoly<R> evaluate_concomitant(const ConcomitantExpr& c, int n, int m,
                                   const R& one) {
    return mat_scale(phi1_word(c.z, n, m, one), phi2(c.invariant, n, m, one));
}

/// chi_n(a) evaluated: sum_{l=0}^n (-1)^l sigma_l(phi1(a)) phi1(a)^{n-l}.
/// By the Cayley-Hamilton theorem this is the zero matrix; a nonzero entry
/// in the result is a failure certificate.
template <class R>
MatrixPoly<R> chi_n_evaluate(const FreeElement<R>& a, int n) {
    if (a.has_constant_term())
        throw UsageError("chi_n_evaluate: element must have no constant term");
    int m = a.generators();
    if (a.is_zero_element()) return MatrixPoly<R>(n, m);
    R one = ring_one(a.terms().begin()->second);
    MatrixPoly<R> A = phi1(a, n);
    MatrixPoly<R> out(n, m);
    std::vector<MatrixPoly<R>> powers(n + 1, MatrixPoly<R>(n, m));
    powers[0] = identity_matrix<R>(n, m, one);
    for (int k = 1; k <= n; ++k) powers[k] = mat_mul(powers[k - 1], A);
    R minus_one = -one;
    R sign = one;
    for (int l = 0; l <= n; ++l) {
        CommPoly<R> s = poly_scale(sigma(l, A, one), sign);
        out = mat_add(out, mat_scale(powers[n - l], s));
        sign = sign * minus_one;
    }
    return out;
}

/// Recovers M from the linear form T = Tr(X_{m+1} M), where T lives in the
/// ambient (n, m+1) and M in (n, m): the (j,i) entry of M is the
/// coefficient of x_{ij}(m+1) in T.
template <class R>
MatrixPoly<R> trace_pairing_extract(const CommPoly<R>& T) {
    int n = T.n();
    int m = T.m() - 1;
    if (m < 1) throw UsageError("trace_pairing_extract: ambient must have m >= 2");
    size_t inner_vars = (size_t)n * n * m;
    MatrixPoly<R> M(n, m);
    for (auto& [t, c] : T.terms()) {
        int deg_last = 0;
        size_t var_pos = 0;
        for (size_t k = inner_vars; k < t.e.size(); ++k)
            if (t.e[k]) { deg_last += t.e[k]; var_pos = k; }
        if (deg_last != 1)
            throw UsageError("trace_pairing_extract: form is not degree 1 in "
                             "matrix " + std::to_string(m + 1));
        VarId v = VarId::from_index((int)var_pos, n);
        CommMonomial rest(inner_vars);
        for (size_t k = 0; k < inner_vars; ++k) rest.e[k] = t.e[k];
        rest.recompute_degree();
        M.at(v.j - 1, v.i - 1).add_term(rest, c);
    }
    return M;
}

/// Lexicographically-least-rotation representatives of nonempty cyclic
/// words; deduplicating Donkin generator words by cyclic rotation is valid
/// because sigma_l(phi1(uv)) = sigma_l(phi1(vu)).
inline std::vector<Word> necklace_representatives(int m, int length,
                                                  size_t budget = (size_t)1 << 22) {
    if (length < 1) throw UsageError("necklace_representatives: need length >= 1");
    if (m == 1) return {Word::power(1, length)};
    double count = 1;
    for (int i = 0; i < length; ++i) count *= m;
    if (count > (double)budget)
        throw BudgetExceeded("necklace enumeration budget exceeded");
    std::vector<Word> out;
    for (const Word& w : all_words(m, length)) {
        bool minimal = true;
        std::vector<uint8_t> rot = w.letters;
        for (int s = 1; s < length && minimal; ++s) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < w.letters) minimal = false;
        }
        if (minimal) out.push_back(w);
    }
    return out;
}

} // namespace nilbound
