#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "nilbound/exactla.hpp"
#include "nilbound/genmat.hpp"
#include "nilbound/ring.hpp"
#include "nilbound/spanning.hpp"
#include "nilbound/word.hpp"

namespace nilbound {

inline SparseVec<Word> to_word_vector(const FreeElement<Int>& f, uint64_t p) {
    SparseVec<Word> v;
    for (auto& [w, c] : f.terms()) {
        Int r = c % Int(p);
        if (r < 0) r += p;
        uint64_t cv = static_cast<uint64_t>(r);
        if (cv) v.entries.emplace_back(w, cv);
    }
    return v; // term map iterates in deglex order, so entries are sorted
}

template <class R>
SparseVec<CommMonomial> poly_vector(const CommPoly<R>& f) {
    SparseVec<CommMonomial> v;
    for (auto& [t, c] : f.terms()) v.entries.emplace_back(t, c.v);
    return v;
}

inline SparseVec<std::pair<int, CommMonomial>> matrix_vector(const MatrixPoly<Fp>& M) {
    SparseVec<std::pair<int, CommMonomial>> v;
    for (size_t k = 0; k < M.a.size(); ++k)
        for (auto& [t, c] : M.a[k].terms())
            v.entries.emplace_back(std::make_pair((int)k, t), c.v);
    return v;
}

/// Row-echelon span of the multidegree (or full-degree) block of I_{n,m}.
inline GradedSpan<Word> spanning_span(int n, int m, uint64_t p, int D,
                                      const std::optional<MultiDegree>& filter,
                                      size_t budget) {
    GradedSpan<Word> span(p);
    for_each_spanning_generator(n, m, D, filter, budget,
                                [&](const SpanningGenerator& g) {
                                    span.insert(to_word_vector(g.element, p));
                                });
    return span;
}

struct MemberResult {
    bool member = false;
    int degree = 0;
    MultiDegree block;
    size_t block_words = 0; // ambient dimension of the multidegree block
    size_t span_rank = 0;
};

/// Membership of a word in I_{n,m} over F_p, decided inside the word's own
/// multidegree block (valid because the spanning set is multihomogeneous).
inline MemberResult word_member(int n, int m, uint64_t p, const Word& w,
                                size_t budget = 50'000'000) {
    MemberResult res;
    res.degree = w.degree();
    res.block = multidegree(w, m);
    res.block_words = words_of_multidegree(res.block).size();
    GradedSpan<Word> span = spanning_span(n, m, p, w.degree(), res.block, budget);
    res.span_rank = span.rank();
    SparseVec<Word> v;
    v.entries.emplace_back(w, 1);
    res.member = span.member(v);
    return res;
}

struct DegreeScanRow {
    int D = 0;
    size_t words = 0;
    size_t members = 0;
};

struct IndexReport {
    int n = 0, m = 0;
    uint64_t p = 0;
    int cap = 0;
    std::vector<DegreeScanRow> degrees;
    std::optional<int> d;
    bool monotone_verified = false;
};

namespace detail {

inline bool degree_fully_member(int n, int m, uint64_t p, int D, size_t budget,
                                DegreeScanRow& row) {
    row = DegreeScanRow{D, 0, 0};
    bool all = true;
    compositions_nonneg(D, m, [&](const std::vector<int>& comp) {
        MultiDegree md;
        md.exponents = comp;
        GradedSpan<Word> span = spanning_span(n, m, p, D, md, budget);
        for (const Word& w : words_of_multidegree(md)) {
            ++row.words;
            SparseVec<Word> v;
            v.entries.emplace_back(w, 1);
            if (span.member(v))
                ++row.members;
            else
                all = false;
        }
    });
    return all;
}

} // namespace detail

/// Degree scan for the nilpotency index d(n, m) over F_p: the first degree
/// at which every word lies in I_{n,m}. Monotone completeness is verified
/// at d+1, never assumed.
inline IndexReport compute_d(int n, int m, uint64_t p, int cap,
                             size_t budget = 50'000'000) {
    if (cap < n) throw UsageError("compute_d: cap must be >= n");
    IndexReport rep;
    rep.n = n;
    rep.m = m;
    rep.p = p;
    rep.cap = cap;
    for (int D = n; D <= cap; ++D) {
        if (std::pow((double)m, D) > (double)budget)
            throw BudgetExceeded("compute_d: word enumeration budget exceeded");
        DegreeScanRow row;
        bool all = detail::degree_fully_member(n, m, p, D, budget, row);
        rep.degrees.push_back(row);
        if (all) {
            rep.d = D;
            DegreeScanRow next;
            rep.monotone_verified =
                detail::degree_fully_member(n, m, p, D + 1, budget, next);
            rep.degrees.push_back(next);
            break;
        }
    }
    return rep;
}

struct BetaDegreeRow {
    int D = 0;
    size_t candidates = 0;
    size_t new_generators = 0;
};

struct BetaReport {
    int n = 0, m = 0;
    uint64_t p = 0;
    int cap = 0;
    std::vector<BetaDegreeRow> degrees;
    int beta_estimate = 0;
    bool exact = false;    // cap reached the proven sufficient bound (m+1) n^4
    int stable_tail = 0;   // trailing degrees without a new generator
};

/// Generator-degree scan for beta(n, m) over F_p. For each degree the span
/// of decomposables (products of lower-degree pieces) is built first; the
/// Donkin candidates sigma_l(W) that enlarge it are counted as new minimal
/// generators. When the cap is below the proven bound (m+1) n^4 the result
/// is a lower-bound estimate, qualified by the stability tail.
inline BetaReport compute_beta(int n, int m, uint64_t p, int cap,
                               size_t budget = 50'000'000) {
    if (cap < 1) throw UsageError("compute_beta: cap must be >= 1");
    BetaReport rep;
    rep.n = n;
    rep.m = m;
    rep.p = p;
    rep.cap = cap;
    Fp one(1, p);
    size_t nvars = (size_t)n * n * m;
    std::vector<std::vector<CommPoly<Fp>>> basis(cap + 1,
                                                 std::vector<CommPoly<Fp>>());
    std::vector<std::pair<int, CommPoly<Fp>>> generators;
    for (int D = 1; D <= cap; ++D) {
        // ambient dimension guard: monomials of degree D in nvars variables
        double dim = 1;
        for (size_t i = 1; i <= nvars - 1; ++i) dim *= (double)(D + i) / (double)i;
        if (dim > (double)budget)
            throw BudgetExceeded("compute_beta: ambient dimension budget exceeded");
        GradedSpan<CommMonomial> span(p);
        BetaDegreeRow row;
        row.D = D;
        for (auto& [gd, g] : generators) {
            int rest = D - gd;
            if (rest < 1) continue;
            for (auto& b : basis[rest]) {
                CommPoly<Fp> prod = g * b;
                if (span.insert(poly_vector(prod))) basis[D].push_back(prod);
            }
        }
        for (int l = 1; l <= n; ++l) {
            if (D % l) continue;
            int L = D / l;
            for (const Word& W : necklace_representatives(m, L, budget)) {
                CommPoly<Fp> cand = sigma(l, phi1_word<Fp>(W, n, m, one), one);
                ++row.candidates;
                if (span.insert(poly_vector(cand))) {
                    ++row.new_generators;
                    basis[D].push_back(cand);
                    generators.emplace_back(D, cand);
                }
            }
        }
        rep.degrees.push_back(row);
        if (row.new_generators) rep.beta_estimate = D;
    }
    long long sufficient = (long long)(m + 1) * n * n * n * n;
    rep.exact = cap >= sufficient;
    rep.stable_tail = cap - rep.beta_estimate;
    return rep;
}

struct ExpressionTerm {
    uint64_t coeff = 0;
    ConcomitantExpr expr;
};

struct ExpressResult {
    bool found = false;
    bool verified = false;
    size_t candidates = 0;
    std::vector<ExpressionTerm> terms;
};

/// Solves for the word matrix X_{i_1}...X_{i_d} as an F_p-combination of
/// concomitants (invariant product of positive degree) * (word matrix) in
/// the word's multidegree block, then re-verifies the identity by full
/// symbolic expansion. Infeasibility is reported with the no-expression
/// marker; it occurs exactly when the word is outside I_{n,m}.
inline ExpressResult express_monomial(int n, int m, uint64_t p, const Word& w,
                                      size_t budget = 1'000'000) {
    ExpressResult res;
    MultiDegree mu = multidegree(w, m);
    int D = w.degree();
    Fp one(1, p);

    std::vector<std::pair<int, Word>> pool;
    for (int l = 1; l <= n; ++l) {
        for (int L = 1; l * L <= D; ++L) {
            for (const Word& W : necklace_representatives(m, L, budget)) {
                MultiDegree wd = multidegree(W, m);
                bool fits = true;
                for (int g = 0; g < m; ++g)
                    if (l * wd.exponents[g] > mu.exponents[g]) fits = false;
                if (fits) pool.emplace_back(l, W);
            }
        }
    }

    std::vector<ConcomitantExpr> cands;
    std::vector<size_t> chosen;
    MultiDegree acc(m);
    std::function<void(size_t)> rec = [&](size_t start) {
        if (!chosen.empty()) {
            MultiDegree rho(m);
            for (int g = 0; g < m; ++g)
                rho.exponents[g] = mu.exponents[g] - acc.exponents[g];
            for (const Word& z : words_of_multidegree(rho)) {
                ConcomitantExpr c;
                for (size_t idx : chosen) c.invariant.factors.push_back(pool[idx]);
                c.z = z;
                if (cands.size() >= budget)
                    throw BudgetExceeded("express_monomial: candidate budget exceeded");
                cands.push_back(std::move(c));
            }
        }
        for (size_t idx = start; idx < pool.size(); ++idx) {
            auto& [l, W] = pool[idx];
            MultiDegree wd = multidegree(W, m);
            bool fits = true;
            for (int g = 0; g < m; ++g)
                if (acc.exponents[g] + l * wd.exponents[g] > mu.exponents[g])
                    fits = false;
            if (!fits) continue;
            for (int g = 0; g < m; ++g) acc.exponents[g] += l * wd.exponents[g];
            chosen.push_back(idx);
            rec(idx);
            chosen.pop_back();
            for (int g = 0; g < m; ++g) acc.exponents[g] -= l * wd.exponents[g];
        }
    };
    rec(0);
    res.candidates = cands.size();

    LinearSolver<std::pair<int, CommMonomial>> solver(p);
    std::vector<MatrixPoly<Fp>> evals;
    evals.reserve(cands.size());
    for (auto& c : cands) {
        evals.push_back(evaluate_concomitant(c, n, m, one));
        solver.insert(matrix_vector(evals.back()));
    }
    MatrixPoly<Fp> target = phi1_word<Fp>(w, n, m, one);
    auto sol = solver.solve(matrix_vector(target));
    if (!sol) return res;
    res.found = true;
    MatrixPoly<Fp> sum(n, m);
    for (size_t i = 0; i < cands.size(); ++i) {
        uint64_t c = i < sol->size() ? (*sol)[i] : 0;
        if (!c) continue;
        res.terms.push_back(ExpressionTerm{c, cands[i]});
        sum = mat_add(sum, mat_scale(evals[i], CommPoly<Fp>::constant(n, m, Fp(c, p))));
    }
    res.verified = (sum == target);
    return res;
}

struct CheckItem {
    std::string name;
    std::string status; // pass | fail | inconclusive
    std::string detail;
};

struct CrosscheckReport {
    IndexReport d_report;
    BetaReport beta_report;
    std::vector<CheckItem> checks;
    bool any_fail = false;
    bool any_inconclusive = false;
};

/// Desk-scale cross-check of the main inequality d(n,m) <= beta(n,m+1),
/// together with the proven polynomial upper bound (m+2) n^4 and, in small
/// characteristic, the lower bound max(m+1, n(n+1)/2).
inline CrosscheckReport crosscheck_main_inequality(int n, int m, uint64_t p,
                                                   int cap_d, int cap_beta,
                                                   size_t budget = 50'000'000) {
    CrosscheckReport rep;
    rep.d_report = compute_d(n, m, p, cap_d, budget);
    rep.beta_report = compute_beta(n, m + 1, p, cap_beta, budget);
    auto add = [&](const std::string& name, const std::string& status,
                   const std::string& detail) {
        rep.checks.push_back(CheckItem{name, status, detail});
        if (status == "fail") rep.any_fail = true;
        if (status == "inconclusive") rep.any_inconclusive = true;
    };
    if (!rep.d_report.d) {
        add("main_inequality", "inconclusive", "d(n,m) exceeds cap");
        return rep;
    }
    int d = *rep.d_report.d;
    int beta = rep.beta_report.beta_estimate;
    if (d <= beta)
        add("main_inequality", "pass",
            "d=" + std::to_string(d) + " <= beta(n,m+1) >= " + std::to_string(beta));
    else if (rep.beta_report.exact)
        add("main_inequality", "fail",
            "d=" + std::to_string(d) + " > beta(n,m+1)=" + std::to_string(beta));
    else
        add("main_inequality", "inconclusive",
            "beta scan is a lower-bound estimate below d");
    long long poly_bound = (long long)(m + 2) * n * n * n * n;
    add("polynomial_upper_bound", d <= poly_bound ? "pass" : "fail",
        "d <= (m+2) n^4 = " + std::to_string(poly_bound));
    if (p <= (uint64_t)n && m >= 2) {
        int lower = std::max(m + 1, n * (n + 1) / 2);
        add("small_char_lower_bound", d >= lower ? "pass" : "fail",
            "d >= max(m+1, n(n+1)/2) = " + std::to_string(lower));
    }
    if (!rep.d_report.monotone_verified)
        add("monotone_completeness", "fail", "degree d+1 not fully member");
    else
        add("monotone_completeness", "pass", "degree d+1 fully member");
    return rep;
}

} // namespace nilbound
