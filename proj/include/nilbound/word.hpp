#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "nilbound/ring.hpp"

namespace nilbound {

/// Per-generator degree vector (alpha_1, ..., alpha_m).
struct MultiDegree {
    std::vector<int> exponents;

    MultiDegree() = default;
    explicit MultiDegree(int m) : exponents(m, 0) {}
    MultiDegree(std::initializer_list<int> e) : exponents(e) {}

    int total() const {
        int t = 0;
        for (int a : exponents) t += a;
        return t;
    }
    int size() const { return (int)exponents.size(); }

    friend MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
        if (a.exponents.size() != b.exponents.size())
            throw UsageError("MultiDegree: size mismatch");
        MultiDegree r = a;
        for (size_t i = 0; i < r.exponents.size(); ++i)
            r.exponents[i] += b.exponents[i];
        return r;
    }
    friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
        return a.exponents == b.exponents;
    }
    friend bool operator<(const MultiDegree& a, const MultiDegree& b) {
        return a.exponents < b.exponents;
    }
};

/// Monomial of the free algebra: a sequence of 1-based generator indices.
/// The empty sequence is the identity monomial. Comparison is
/// degree-lexicographic, the canonical order used everywhere for output.
struct Word {
    std::vector<uint8_t> letters;

    Word() = default;
    explicit Word(std::vector<uint8_t> ls) : letters(std::move(ls)) {}

    static Word generator(int i) { return Word({(uint8_t)i}); }
    static Word power(int i, int e) {
        return Word(std::vector<uint8_t>(e, (uint8_t)i));
    }

    int degree() const { return (int)letters.size(); }
    bool empty() const { return letters.empty(); }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
        return r;
    }
    friend bool operator==(const Word& a, const Word& b) {
        return a.letters == b.letters;
    }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }

    int max_letter() const {
        int mx = 0;
        for (uint8_t l : letters) mx = std::max(mx, (int)l);
        return mx;
    }
};

inline MultiDegree multidegree(const Word& w, int m) {
    MultiDegree d(m);
    for (uint8_t l : w.letters) {
        if (l < 1 || l > m) throw UsageError("multidegree: letter out of range");
        d.exponents[l - 1]++;
    }
    return d;
}

struct ParseError : UsageError {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : UsageError(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Parses the word syntax accepted everywhere: whitespace-separated
/// generators `x1 x2 x1`, compact two-letter strings `yxyxx` (x = x1,
/// y = x2), and exponent sugar `x^3`, `x2^4`. An empty string is the
/// identity monomial.
inline Word parse_word(const std::string& s, int m) {
    Word w;
    size_t i = 0;
    auto read_number = [&](const char* what) {
        size_t start = i;
        long v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw ParseError(std::string(what) + " too large", start);
            ++i;
        }
        if (i == start) throw ParseError(std::string("expected ") + what, start);
        return v;
    };
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n') { ++i; continue; }
        int gen;
        if (c == 'x') {
            ++i;
            if (i < s.size() && s[i] >= '0' && s[i] <= '9')
                gen = (int)read_number("generator index");
            else
                gen = 1;
        } else if (c == 'y') {
            ++i;
            gen = 2;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
        }
        if (gen < 1 || gen > m)
            throw ParseError("generator index " + std::to_string(gen) +
                                 " outside [1," + std::to_string(m) + "]",
                             i);
        long exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            exp = read_number("exponent");
        }
        for (long e = 0; e < exp; ++e) w.letters.push_back((uint8_t)gen);
    }
    return w;
}

/// Canonical rendering: `x1 x2 x1`; the identity monomial renders as `1`.
inline std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += 'x';
        out += std::to_string((int)w.letters[i]);
    }
    return out;
}

/// Compact rendering for the two-letter alphabet: `yxyxx`.
inline std::string format_word_xy(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (uint8_t l : w.letters) out += (l == 1 ? 'x' : 'y');
    return out;
}

/// All words of the given length over m letters, in deglex order.
inline std::vector<Word> all_words(int m, int length) {
    std::vector<Word> out;
    Word w;
    w.letters.assign(length, 1);
    while (true) {
        out.push_back(w);
        int i = length - 1;
        while (i >= 0 && w.letters[i] == m) { w.letters[i] = 1; --i; }
        if (i < 0) break;
        w.letters[i]++;
    }
    return out;
}

/// All words with the given letter-count vector, in deglex order.
inline std::vector<Word> words_of_multidegree(const MultiDegree& d) {
    std::vector<uint8_t> letters;
    for (int g = 0; g < d.size(); ++g)
        letters.insert(letters.end(), d.exponents[g], (uint8_t)(g + 1));
    std::vector<Word> out;
    std::sort(letters.begin(), letters.end());
    do {
        out.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

} // namespace nilbound
