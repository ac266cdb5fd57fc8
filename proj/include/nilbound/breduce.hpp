#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilbound/free_element.hpp"
#include "nilbound/ring.hpp"
#include "nilbound/spanning.hpp"
#include "nilbound/word.hpp"

namespace nilbound {

/// Exponent tuple (a_1,...,a_k) encoding the two-letter word
/// x^{a_1} y x^{a_2} y ... y x^{a_k}.
using ExponentWord = std::vector<int>;

/// Unique exponent decomposition of a nonempty word in {x, y}.
inline ExponentWord decompose(const Word& w) {
    if (w.empty()) throw UsageError("decompose: word must be nonempty");
    if (w.max_letter() > 2) throw UsageError("decompose: word must be in {x, y}");
    ExponentWord e{0};
    for (uint8_t l : w.letters) {
        if (l == 1)
            e.back()++;
        else
            e.push_back(0);
    }
    return e;
}

inline Word word_from_exponents(const ExponentWord& e) {
    if (e.empty()) throw UsageError("word_from_exponents: need k >= 1");
    Word w;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) w.letters.push_back(2);
        w.letters.insert(w.letters.end(), e[i], (uint8_t)1);
    }
    return w;
}

inline std::string format_exponents(const ExponentWord& e) {
    std::string out = "[";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + "]";
}

struct ExpWordLess {
    bool operator()(const ExponentWord& a, const ExponentWord& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Image of a single exponent word in Z<x,y>/B: zero when an exponent
/// reaches n or repeats, otherwise the sorted tuple with the sign of the
/// sorting permutation.
inline std::optional<std::pair<ExponentWord, int>> reduce_exponent_word(
    const ExponentWord& e, int n) {
    for (int a : e)
        if (a >= n) return std::nullopt;
    ExponentWord sorted = e;
    // sort by adjacent transpositions, tracking parity
    int sign = 1;
    for (size_t i = 1; i < sorted.size(); ++i) {
        size_t j = i;
        while (j > 0 && sorted[j - 1] > sorted[j]) {
            std::swap(sorted[j - 1], sorted[j]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return std::nullopt;
    return std::make_pair(sorted, sign);
}

/// Sparse combination of strictly increasing exponent tuples below n: the
/// coordinates of an element of Z<x,y> in the free basis of Z<x,y>/B.
template <class R>
struct NormalForm {
    int n = 0;
    std::map<ExponentWord, R, ExpWordLess> terms;

    bool is_zero_form() const { return terms.empty(); }

    void add_term(const ExponentWord& e, const R& c) {
        if (is_zero(c)) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.n == b.n && a.terms == b.terms;
    }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string out;
        for (auto& [e, c] : terms) {
            std::string cs = ring_to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            out += neg ? "-" : "+";
            if (mag != "1") out += mag;
            out += format_exponents(e);
        }
        return out;
    }
};

/// Normal form modulo B: linear extension of the sort-with-sign word rule.
/// The result is zero exactly when the element lies in the span of B.
template <class R>
NormalForm<R> normal_form(const FreeElement<R>& f, int n) {
    if (f.generators() != 2)
        throw UsageError("normal_form: element must live in <x, y>");
    if (n < 1) throw UsageError("normal_form: need n >= 1");
    NormalForm<R> nf;
    nf.n = n;
    for (auto& [w, c] : f.terms()) {
        if (w.empty()) throw UsageError("normal_form: constant term not in Z+");
        auto red = reduce_exponent_word(decompose(w), n);
        if (!red) continue;
        if (red->second > 0)
            nf.add_term(red->first, c);
        else
            nf.add_term(red->first, -c);
    }
    return nf;
}

inline NormalForm<Int> normal_form_word(const Word& w, int n) {
    return normal_form(word_element(w, Int(1), 2), n);
}

/// The double sum of Eq-style shifted tuples:
///   sum_{c_1+...+c_k = r} sum_{pi in S_k} [a_1 + c_{pi(1)}, ..., a_k + c_{pi(k)}].
template <class R = Int>
NormalForm<Int> shifted_symmetrized_sum(const ExponentWord& a, int r, int n) {
    int k = (int)a.size();
    NormalForm<Int> acc;
    acc.n = n;
    detail::compositions_nonneg(r, k, [&](const std::vector<int>& c) {
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            ExponentWord e(k);
            for (int i = 0; i < k; ++i) e[i] = a[i] + c[perm[i]];
            auto red = reduce_exponent_word(e, n);
            if (!red) continue;
            acc.add_term(red->first, Int(red->second));
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return acc;
}

/// Checks the weakly-increasing-tuple vanishing statement: under
/// a_1 <= ... <= a_k and a_1 + k + r > n the symmetrized shifted sum
/// reduces to zero.
inline bool check_lemma_a1(int n, int k, const ExponentWord& a, int r) {
    if ((int)a.size() != k) throw UsageError("check_lemma_a1: tuple size != k");
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] > a[i])
            throw UsageError("check_lemma_a1: tuple must be weakly increasing");
    if (a.empty() || a[0] + k + r <= n)
        throw UsageError("check_lemma_a1: requires a_1 + k + r > n");
    return shifted_symmetrized_sum(a, r, n).is_zero_form();
}

/// Same sum without the sortedness hypothesis, under r + k > n.
inline bool check_cor_rk(int n, int k, const ExponentWord& a, int r) {
    if ((int)a.size() != k) throw UsageError("check_cor_rk: tuple size != k");
    if (r + k <= n) throw UsageError("check_cor_rk: requires r + k > n");
    return shifted_symmetrized_sum(a, r, n).is_zero_form();
}

/// Checks that one spanning generator w0 * P_lambda(w...) * w_{s+1} of the
/// nil ideal reduces to zero (the containment I_{n,2} in F (x) B).
inline bool check_prop_b(int n, const Word& w0, const std::vector<int>& lambda,
                         const std::vector<Word>& ws, const Word& wend) {
    int total = 0;
    for (int l : lambda) {
        if (l < 1) throw UsageError("check_prop_b: lambda entries must be >= 1");
        total += l;
    }
    if (total != n) throw UsageError("check_prop_b: lambda must sum to n");
    for (auto& w : ws) {
        if (w.empty()) throw UsageError("check_prop_b: inner words must be nonempty");
        if (w.max_letter() > 2) throw UsageError("check_prop_b: words must be in {x, y}");
    }
    FreeElement<Int> core = p_lambda_words(lambda, ws, 2);
    FreeElement<Int> f(2);
    for (auto& [w, c] : core.terms()) f.add_term(w0 * w * wend, c);
    return normal_form(f, n).is_zero_form();
}

/// x^a P_n(w_1,...,w_{k-1}, x,...,x) x^b with the w_i of positive y-degree.
inline bool check_lemma_xxx(int n, const std::vector<Word>& ws, int a, int b) {
    int k = (int)ws.size() + 1;
    if (k < 1 || k > n + 1) throw UsageError("check_lemma_xxx: need 1 <= k <= n+1");
    std::vector<Word> args = ws;
    for (int i = 0; i < n - k + 1; ++i) args.push_back(Word::generator(1));
    FreeElement<Int> core = p_n_words(args, 2);
    FreeElement<Int> f(2);
    Word xa = Word::power(1, a), xb = Word::power(1, b);
    for (auto& [w, c] : core.terms()) f.add_term(xa * w * xb, c);
    return normal_form(f, n).is_zero_form();
}

/// w0 P_n(w_1,...,w_n) w_{n+1} for arbitrary nonempty words w_i.
inline bool check_lemma_w(int n, const std::vector<Word>& ws, const Word& w0,
                          const Word& wend) {
    if ((int)ws.size() != n) throw UsageError("check_lemma_w: need n inner words");
    FreeElement<Int> core = p_n_words(ws, 2);
    FreeElement<Int> f(2);
    for (auto& [w, c] : core.terms()) f.add_term(w0 * w * wend, c);
    return normal_form(f, n).is_zero_form();
}

/// One explicit generator of the submodule B, kept both as exponent-tuple
/// data (all terms share the same y-degree) and as the expanded element.
struct BGenerator {
    std::string kind; // big_exponent | repeated_entry | transposition_pair
    std::vector<std::pair<ExponentWord, Int>> bracket_terms;
    FreeElement<Int> element{2};
};

/// Deterministic sample from the explicit B-generating set: a word with an
/// exponent >= n, a word with a repeated exponent, or a symmetrized pair
/// [a] + [a]^{(ij)}.
template <class Rng>
BGenerator random_b_generator(Rng& rng, int n, int max_k, int max_entry) {
    if (max_k < 1) throw UsageError("random_b_generator: need max_k >= 1");
    BGenerator g;
    int kind = (int)(rng() % 3);
    int k = 1 + (int)(rng() % (uint64_t)max_k);
    auto rand_entry = [&](int hi) { return (int)(rng() % (uint64_t)(hi + 1)); };
    ExponentWord a(k);
    if (kind == 0) {
        g.kind = "big_exponent";
        for (int i = 0; i < k; ++i) a[i] = rand_entry(max_entry);
        a[(size_t)(rng() % (uint64_t)k)] = n + rand_entry(2);
        g.bracket_terms.emplace_back(a, Int(1));
    } else if (kind == 1 && k >= 2) {
        g.kind = "repeated_entry";
        for (int i = 0; i < k; ++i) a[i] = rand_entry(max_entry);
        size_t i = rng() % (uint64_t)k, j = rng() % (uint64_t)k;
        if (i == j) j = (j + 1) % k;
        a[j] = a[i];
        g.bracket_terms.emplace_back(a, Int(1));
    } else {
        g.kind = "transposition_pair";
        if (k < 2) k = 2;
        a.assign(k, 0);
        for (int i = 0; i < k; ++i) a[i] = rand_entry(max_entry);
        size_t i = rng() % (uint64_t)k, j = rng() % (uint64_t)k;
        if (i == j) j = (j + 1) % k;
        ExponentWord b = a;
        std::swap(b[i], b[j]);
        g.bracket_terms.emplace_back(a, Int(1));
        g.bracket_terms.emplace_back(b, Int(1));
    }
    for (auto& [e, c] : g.bracket_terms)
        g.element.add_term(word_from_exponents(e), c);
    return g;
}

/// Machine certificate for the lower bound d(n, m) >= n(n+1)/2: the Kuzmin
/// word has nonzero normal form while every spanning generator of I_{n,2}
/// up to the spot-check degree cap reduces to zero.
struct KuzminCertificate {
    int n = 0;
    Word word;
    int degree = 0;
    NormalForm<Int> nf;
    bool nf_as_expected = false;
    int bound = 0;
    int spot_check_degree_cap = 0;
    size_t spot_checks = 0;
    bool spot_all_zero = false;
};

inline KuzminCertificate kuzmin_certificate(int n, int spot_degree_cap = -1,
                                            size_t budget = 2'000'000) {
    if (n < 2) throw UsageError("kuzmin_certificate: need n >= 2");
    KuzminCertificate cert;
    cert.n = n;
    ExponentWord e(n);
    std::iota(e.begin(), e.end(), 0);
    cert.word = word_from_exponents(e);
    cert.degree = cert.word.degree();
    cert.nf = normal_form_word(cert.word, n);
    NormalForm<Int> expected;
    expected.n = n;
    expected.add_term(e, Int(1));
    cert.nf_as_expected = (cert.nf == expected);
    cert.bound = n * (n + 1) / 2;
    if (spot_degree_cap < 0) spot_degree_cap = std::min(cert.degree, n + 2);
    cert.spot_check_degree_cap = spot_degree_cap;
    cert.spot_all_zero = true;
    for (int D = n; D <= spot_degree_cap; ++D) {
        for_each_spanning_generator(
            n, 2, D, std::nullopt, budget, [&](const SpanningGenerator& g) {
                ++cert.spot_checks;
                if (!normal_form(g.element, n).is_zero_form())
                    cert.spot_all_zero = false;
            });
    }
    return cert;
}

} // namespace nilbound
