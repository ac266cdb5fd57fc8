#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "nilbound/ring.hpp"
#include "nilbound/word.hpp"

namespace nilbound {

/// Sparse R-linear combination of Words in a fixed ambient generator count.
/// Always in canonical form: no zero coefficients, terms ordered deglex.
template <class R>
class FreeElement {
public:
    explicit FreeElement(int m) : m_(m) {
        if (m < 1) throw UsageError("FreeElement: need m >= 1");
    }

    int generators() const { return m_; }
    const std::map<Word, R>& terms() const { return terms_; }
    bool is_zero_element() const { return terms_.empty(); }

    void add_term(const Word& w, const R& c) {
        if (is_zero(c)) return;
        if (w.max_letter() > m_)
            throw UsageError("FreeElement: letter outside ambient alphabet");
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    R coefficient(const Word& w) const {
        auto it = terms_.find(w);
        if (it == terms_.end()) return R{};
        return it->second;
    }

    bool has_constant_term() const { return terms_.count(Word()) > 0; }

    /// Maximum total degree among terms (0 for the zero element).
    int degree() const {
        int d = 0;
        for (auto& [w, c] : terms_) d = std::max(d, w.degree());
        return d;
    }

    friend bool operator==(const FreeElement& a, const FreeElement& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

private:
    int m_;
    std::map<Word, R> terms_;
};

template <class R>
FreeElement<R> word_element(const Word& w, const R& c, int m) {
    FreeElement<R> f(m);
    f.add_term(w, c);
    return f;
}

template <class R>
FreeElement<R> operator+(const FreeElement<R>& a, const FreeElement<R>& b) {
    if (a.generators() != b.generators())
        throw UsageError("FreeElement add: ambient mismatch");
    FreeElement<R> r = a;
    for (auto& [w, c] : b.terms()) r.add_term(w, c);
    return r;
}

template <class R>
FreeElement<R> operator-(const FreeElement<R>& a, const FreeElement<R>& b) {
    if (a.generators() != b.generators())
        throw UsageError("FreeElement sub: ambient mismatch");
    FreeElement<R> r = a;
    for (auto& [w, c] : b.terms()) r.add_term(w, -c);
    return r;
}

template <class R>
FreeElement<R> scale(const FreeElement<R>& a, const R& c) {
    FreeElement<R> r(a.generators());
    for (auto& [w, cw] : a.terms()) r.add_term(w, cw * c);
    return r;
}

/// Bilinear extension of word concatenation.
template <class R>
FreeElement<R> multiply(const FreeElement<R>& a, const FreeElement<R>& b) {
    if (a.generators() != b.generators())
        throw UsageError("FreeElement multiply: ambient mismatch");
    FreeElement<R> r(a.generators());
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) r.add_term(wa * wb, ca * cb);
    return r;
}

template <class R>
FreeElement<R> operator*(const FreeElement<R>& a, const FreeElement<R>& b) {
    return multiply(a, b);
}

/// Complete linearization P_n(x_1,...,x_n): the sum of all n! permutation
/// words. Refused for n >= 8 unless allow_large is set.
inline FreeElement<Int> complete_linearization(int n, bool allow_large = false) {
    if (n < 1) throw UsageError("complete_linearization: need n >= 1");
    if (n >= 8 && !allow_large)
        throw UsageError("complete_linearization: n >= 8 refused without override");
    FreeElement<Int> f(n);
    std::vector<uint8_t> perm(n);
    std::iota(perm.begin(), perm.end(), (uint8_t)1);
    do {
        f.add_term(Word(perm), Int(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

/// Multihomogeneous component P_lambda of (x_1+...+x_m)^n: the sum of all
/// words with letter-count vector lambda, each with coefficient 1.
inline FreeElement<Int> multihomogeneous_component(int n, const MultiDegree& lambda) {
    if (lambda.total() != n)
        throw UsageError("multihomogeneous_component: entries must sum to n");
    for (int a : lambda.exponents)
        if (a < 0) throw UsageError("multihomogeneous_component: negative entry");
    int m = lambda.size();
    FreeElement<Int> f(m);
    for (const Word& w : words_of_multidegree(lambda)) f.add_term(w, Int(1));
    return f;
}

/// The algebra-homomorphism image x_i -> args[i] applied to f.
template <class R>
FreeElement<R> substitute(const FreeElement<R>& f,
                          const std::vector<FreeElement<R>>& args) {
    if ((int)args.size() != f.generators())
        throw UsageError("substitute: arity mismatch");
    int m = args.empty() ? 1 : args[0].generators();
    for (auto& a : args)
        if (a.generators() != m) throw UsageError("substitute: mixed ambients");
    FreeElement<R> out(m);
    for (auto& [w, c] : f.terms()) {
        FreeElement<R> prod = word_element(Word(), ring_one(c), m);
        for (uint8_t l : w.letters) prod = multiply(prod, args[l - 1]);
        for (auto& [pw, pc] : prod.terms()) out.add_term(pw, pc * c);
    }
    return out;
}

/// Substitution of plain words for the generators: x_i -> words[i].
/// Cheaper than the general form; used by the spanning-set enumerators.
template <class R>
FreeElement<R> substitute_words(const FreeElement<Int>& f,
                                const std::vector<Word>& args, int m,
                                const R& one) {
    if ((int)args.size() != f.generators())
        throw UsageError("substitute_words: arity mismatch");
    FreeElement<R> out(m);
    for (auto& [w, c] : f.terms()) {
        Word img;
        for (uint8_t l : w.letters) img = img * args[l - 1];
        out.add_term(img, ring_from_int(one, (long long)c));
    }
    return out;
}

/// P_lambda(w_1,...,w_s): the multihomogeneous component with the words
/// substituted in, built directly as the sum over all distinct arrangements
/// of the multiset {w_1^(lambda_1), ..., w_s^(lambda_s)}.
inline FreeElement<Int> p_lambda_words(const std::vector<int>& lambda,
                                       const std::vector<Word>& ws, int m) {
    if (lambda.size() != ws.size())
        throw UsageError("p_lambda_words: arity mismatch");
    std::vector<uint8_t> slots;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw UsageError("p_lambda_words: negative multiplicity");
        slots.insert(slots.end(), lambda[i], (uint8_t)i);
    }
    FreeElement<Int> out(m);
    std::sort(slots.begin(), slots.end());
    if (slots.empty()) return out;
    do {
        Word w;
        for (uint8_t s : slots) w = w * ws[s];
        out.add_term(w, Int(1));
    } while (std::next_permutation(slots.begin(), slots.end()));
    return out;
}

/// P_n(w_1,...,w_n): the complete linearization with words substituted in,
/// i.e. the sum over all n! permutations (repeated words give multiplicities).
inline FreeElement<Int> p_n_words(const std::vector<Word>& ws, int m) {
    int n = (int)ws.size();
    if (n < 1) throw UsageError("p_n_words: need at least one word");
    if (n >= 8) throw UsageError("p_n_words: n >= 8 refused");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    FreeElement<Int> out(m);
    do {
        Word w;
        for (int s : perm) w = w * ws[s];
        out.add_term(w, Int(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Leibniz extension of the derivation delta_a with delta_a(x) = x^a and
/// delta_a(y) = 0, on elements in the two-letter alphabet {x, y}.
template <class R>
FreeElement<R> derivation_delta(int a, const FreeElement<R>& f) {
    if (f.generators() != 2)
        throw UsageError("derivation_delta: element must live in <x, y>");
    if (a < 1) throw UsageError("derivation_delta: need a >= 1");
    FreeElement<R> out(2);
    for (auto& [w, c] : f.terms()) {
        for (size_t pos = 0; pos < w.letters.size(); ++pos) {
            if (w.letters[pos] != 1) continue;
            Word img;
            img.letters.reserve(w.letters.size() + a - 1);
            img.letters.insert(img.letters.end(), w.letters.begin(),
                               w.letters.begin() + pos);
            img.letters.insert(img.letters.end(), a, (uint8_t)1);
            img.letters.insert(img.letters.end(), w.letters.begin() + pos + 1,
                               w.letters.end());
            out.add_term(img, c);
        }
    }
    return out;
}

/// Renders as a deterministic list of (word, coefficient) pairs.
template <class R>
std::vector<std::pair<std::string, std::string>> serialize(const FreeElement<R>& f) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& [w, c] : f.terms())
        out.emplace_back(format_word(w), ring_to_string(c));
    return out;
}

} // namespace nilbound
