#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "nilbound/free_element.hpp"
#include "nilbound/ring.hpp"
#include "nilbound/word.hpp"

namespace nilbound {

/// One spanning element u * P_lambda(w_1,...,w_s) * v of a graded piece of
/// the nil ideal I_{n,m}.
struct SpanningGenerator {
    Word u;
    std::vector<int> lambda;   // positive entries summing to n
    std::vector<Word> words;   // distinct nonempty, strictly increasing deglex
    Word v;
    FreeElement<Int> element;  // the expanded integer element

    SpanningGenerator() : element(1) {}
};

namespace detail {

inline void compositions_positive(int n, int parts,
                                  const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> c(parts);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == parts - 1) {
            if (rem >= 1) { c[pos] = rem; fn(c); }
            return;
        }
        for (int v = 1; v <= rem - (parts - 1 - pos); ++v) {
            c[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    if (parts >= 1 && n >= parts) rec(0, n);
}

inline void compositions_nonneg(int total, int parts,
                                const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> c(parts);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == parts - 1) { c[pos] = rem; fn(c); return; }
        for (int v = 0; v <= rem; ++v) {
            c[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    if (parts >= 1) rec(0, total);
}

} // namespace detail

/// Enumerates, without duplicates, the spanning set of the degree-D piece of
/// I_{n,m}: every u * P_lambda(w_1,...,w_s) * v with 1 <= s <= n, distinct
/// nonempty words w_i, positive lambda summing to n, and total degree D.
/// Tuples (lambda, words) are deduplicated under simultaneous permutation by
/// keeping the words strictly deglex-increasing. When a multidegree filter is
/// given, only generators of that multidegree are expanded and emitted.
/// Throws BudgetExceeded when more than `budget` generators would be emitted.
inline size_t for_each_spanning_generator(
    int n, int m, int D, const std::optional<MultiDegree>& filter, size_t budget,
    const std::function<void(const SpanningGenerator&)>& fn) {
    if (n < 1 || m < 1) throw UsageError("spanning_generators: need n, m >= 1");
    size_t emitted = 0;
    if (D < n) return 0;

    // words of each length 1..D, deglex order within a length
    std::vector<std::vector<Word>> words_by_len(D + 1);
    for (int len = 1; len <= D; ++len) words_by_len[len] = all_words(m, len);

    auto word_less = [](const Word& a, const Word& b) { return a < b; };

    for (int s = 1; s <= n; ++s) {
        detail::compositions_positive(n, s, [&](const std::vector<int>& lambda) {
            // choose strictly increasing word tuples with total weight <= D
            std::vector<Word> chosen(s);
            std::function<void(int, int, const Word*)> rec =
                [&](int pos, int weight_left, const Word* prev) {
                int min_tail = 0;
                for (int j = pos + 1; j < s; ++j) min_tail += lambda[j];
                for (int len = 1; len * lambda[pos] <= weight_left - min_tail; ++len) {
                    for (const Word& w : words_by_len[len]) {
                        if (prev && !word_less(*prev, w)) continue;
                        chosen[pos] = w;
                        if (pos + 1 < s) {
                            rec(pos + 1, weight_left - lambda[pos] * len, &chosen[pos]);
                        } else {
                            int t = 0;
                            MultiDegree core_deg(m);
                            for (int i = 0; i < s; ++i) {
                                t += lambda[i] * chosen[i].degree();
                                MultiDegree wd = multidegree(chosen[i], m);
                                for (int g = 0; g < m; ++g)
                                    core_deg.exponents[g] += lambda[i] * wd.exponents[g];
                            }
                            int outer = D - t;
                            if (outer < 0) continue;
                            FreeElement<Int> core(m);
                            bool core_built = false;
                            for (int lu = 0; lu <= outer; ++lu) {
                                int lv = outer - lu;
                                std::vector<Word> us =
                                    lu ? words_by_len[lu] : std::vector<Word>{Word()};
                                std::vector<Word> vs =
                                    lv ? words_by_len[lv] : std::vector<Word>{Word()};
                                for (const Word& u : us) {
                                    for (const Word& v : vs) {
                                        if (filter) {
                                            MultiDegree total = multidegree(u, m) + core_deg +
                                                                multidegree(v, m);
                                            if (!(total == *filter)) continue;
                                        }
                                        if (!core_built) {
                                            core = p_lambda_words(lambda, chosen, m);
                                            core_built = true;
                                        }
                                        SpanningGenerator g;
                                        g.u = u;
                                        g.lambda = lambda;
                                        g.words = chosen;
                                        g.v = v;
                                        g.element = FreeElement<Int>(m);
                                        for (auto& [w, c] : core.terms())
                                            g.element.add_term(u * w * v, c);
                                        if (++emitted > budget)
                                            throw BudgetExceeded(
                                                "spanning generator budget exceeded");
                                        fn(g);
                                    }
                                }
                            }
                        }
                    }
                }
            };
            rec(0, D, nullptr);
        });
    }
    return emitted;
}

} // namespace nilbound
