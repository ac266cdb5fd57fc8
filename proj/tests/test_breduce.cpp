#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilbound/breduce.hpp"
#include "nilbound/spanning.hpp"

using namespace nilbound;

namespace {

Word xy(const std::string& s) { return parse_word(s, 2); }

} // namespace

TEST_CASE("exponent decomposition round-trips") {
    CHECK(decompose(xy("yxyxx")) == ExponentWord{0, 1, 2});
    CHECK(decompose(xy("xx")) == ExponentWord{2});
    CHECK(decompose(xy("y")) == ExponentWord{0, 0});
    CHECK(word_from_exponents({0, 1, 2}) == xy("yxyxx"));
    CHECK(word_from_exponents(decompose(xy("xyxxyx"))) == xy("xyxxyx"));
    CHECK_THROWS_AS(decompose(Word()), UsageError);
    CHECK_THROWS_AS(decompose(Word::generator(3)), UsageError);
}

TEST_CASE("single word reduction: big exponents, repeats, sorting sign") {
    // exponent >= n dies
    CHECK_FALSE(reduce_exponent_word({2}, 2).has_value());
    CHECK_FALSE(reduce_exponent_word({0, 3, 1}, 3).has_value());
    // repeated exponent dies
    CHECK_FALSE(reduce_exponent_word({1, 0, 1}, 3).has_value());
    // strictly increasing survives with sign +1
    auto r = reduce_exponent_word({0, 1, 2}, 3);
    REQUIRE(r);
    CHECK(r->first == ExponentWord{0, 1, 2});
    CHECK(r->second == 1);
    // one transposition flips the sign
    r = reduce_exponent_word({1, 0}, 2);
    REQUIRE(r);
    CHECK(r->first == ExponentWord{0, 1});
    CHECK(r->second == -1);
    // sign equals the parity of the sorting permutation
    r = reduce_exponent_word({2, 0, 1}, 3);
    REQUIRE(r);
    CHECK(r->first == ExponentWord{0, 1, 2});
    CHECK(r->second == 1);
}

TEST_CASE("normal form of the anchor words") {
    CHECK(normal_form_word(xy("yxyxx"), 3).to_string() == "+[0,1,2]");
    CHECK(normal_form_word(xy("xx"), 2).to_string() == "0");
    CHECK(normal_form_word(xy("xy"), 2).to_string() == "-[0,1]");
}

TEST_CASE("normal form is linear and kills exactly the span of B") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + (int)(rng() % 3);
        BGenerator g = random_b_generator(rng, n, 4, n + 1);
        CHECK(normal_form(g.element, n).is_zero_form());
    }
    // basis words are fixed points of the reduction
    for (int n : {2, 3, 4}) {
        std::function<void(ExponentWord&, int)> rec = [&](ExponentWord& e,
                                                          int lo) {
            // [0] alone is the empty word, which is not a monomial
            if (!e.empty() && !(e.size() == 1 && e[0] == 0)) {
                NormalForm<Int> nf = normal_form_word(word_from_exponents(e), n);
                REQUIRE(nf.terms.size() == 1);
                CHECK(nf.terms.begin()->first == e);
                CHECK(nf.terms.begin()->second == 1);
            }
            if ((int)e.size() >= n) return;
            for (int a = lo; a < n; ++a) {
                e.push_back(a);
                rec(e, a + 1);
                e.pop_back();
            }
        };
        ExponentWord e;
        rec(e, 0);
    }
}

TEST_CASE("B is stable under the derivations delta_a") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + (int)(rng() % 3);
        BGenerator g = random_b_generator(rng, n, 4, n + 1);
        int a = 1 + (int)(rng() % 3);
        CHECK(normal_form(derivation_delta(a, g.element), n).is_zero_form());
    }
}

TEST_CASE("B is stable under y-buffered multiplication") {
    std::mt19937_64 rng(73);
    Word y = Word::generator(2);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + (int)(rng() % 3);
        BGenerator g = random_b_generator(rng, n, 4, n + 1);
        Word u, v;
        for (int i = 0, du = (int)(rng() % 3); i < du; ++i)
            u.letters.push_back((uint8_t)(1 + rng() % 2));
        for (int i = 0, dv = (int)(rng() % 3); i < dv; ++i)
            v.letters.push_back((uint8_t)(1 + rng() % 2));
        FreeElement<Int> left(2), right(2);
        for (auto& [w, c] : g.element.terms()) {
            left.add_term(u * y * w, c);
            right.add_term(w * y * v, c);
        }
        CHECK(normal_form(left, n).is_zero_form());
        CHECK(normal_form(right, n).is_zero_form());
    }
}

TEST_CASE("B is stable under interleaving substitution") {
    // [a_1,...,a_k] -> x^{a_1} u_1 x^{a_2} ... u_{k-1} x^{a_k} maps B into B
    // when every u_i is y or starts and ends with y
    std::mt19937_64 rng(79);
    std::vector<Word> pool{xy("y"), xy("yy"), xy("yxy"), xy("yxxy")};
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + (int)(rng() % 3);
        BGenerator g = random_b_generator(rng, n, 4, n + 1);
        size_t k = g.bracket_terms.front().first.size();
        std::vector<Word> us;
        for (size_t i = 0; i + 1 < k; ++i)
            us.push_back(pool[rng() % pool.size()]);
        FreeElement<Int> image(2);
        for (auto& [e, c] : g.bracket_terms) {
            Word w = Word::power(1, e[0]);
            for (size_t i = 1; i < e.size(); ++i)
                w = w * us[i - 1] * Word::power(1, e[i]);
            image.add_term(w, c);
        }
        CHECK(normal_form(image, n).is_zero_form());
    }
}

TEST_CASE("shifted symmetrized sums vanish under the degree hypotheses") {
    // weakly increasing tuples with a_1 + k + r > n
    CHECK(check_lemma_a1(2, 1, {2}, 0));
    CHECK(check_lemma_a1(3, 2, {0, 1}, 2));
    CHECK(check_lemma_a1(4, 3, {0, 1, 2}, 2));
    CHECK_THROWS_AS(check_lemma_a1(4, 2, {0, 1}, 1), UsageError); // 0+2+1 <= 4
    CHECK_THROWS_AS(check_lemma_a1(3, 2, {1, 0}, 4), UsageError); // not sorted

    // arbitrary tuples with r + k > n
    CHECK(check_cor_rk(2, 2, {1, 0}, 1));
    CHECK(check_cor_rk(3, 1, {2}, 3));
    CHECK(check_cor_rk(3, 3, {2, 0, 1}, 1));
    CHECK_THROWS_AS(check_cor_rk(3, 2, {0, 1}, 1), UsageError); // 1+2 <= 3
}

TEST_CASE("spanning generators of the nil ideal reduce to zero") {
    CHECK(check_prop_b(2, Word(), {2}, {xy("xy")}, Word()));
    CHECK(check_prop_b(2, xy("x"), {1, 1}, {xy("x"), xy("y")}, xy("y")));
    CHECK(check_prop_b(3, Word(), {2, 1}, {xy("x"), xy("yx")}, xy("x")));
    CHECK_THROWS_AS(check_prop_b(2, Word(), {3}, {xy("x")}, Word()), UsageError);

    std::mt19937_64 rng(83);
    for (int n : {2, 3}) {
        size_t checked = 0;
        for (int D = n; D <= n + 3; ++D)
            for_each_spanning_generator(
                n, 2, D, std::nullopt, 1'000'000,
                [&](const SpanningGenerator& g) {
                    ++checked;
                    if (rng() % 4) return; // sample a quarter of them
                    CHECK(check_prop_b(n, g.u, g.lambda, g.words, g.v));
                });
        CHECK(checked > 0);
    }
}

TEST_CASE("padded and full linearizations reduce to zero") {
    CHECK(check_lemma_xxx(2, {xy("y")}, 0, 0));
    CHECK(check_lemma_xxx(3, {xy("y"), xy("xy")}, 1, 2));
    CHECK(check_lemma_xxx(3, {}, 2, 0)); // pure x arguments
    CHECK_THROWS_AS(check_lemma_xxx(2, {xy("y"), xy("y"), xy("y")}, 0, 0),
                    UsageError);

    CHECK(check_lemma_w(2, {xy("x"), xy("y")}, Word(), Word()));
    CHECK(check_lemma_w(2, {xy("xy"), xy("yx")}, xy("x"), xy("y")));
    CHECK(check_lemma_w(3, {xy("x"), xy("y"), xy("xx")}, xy("y"), Word()));
    CHECK_THROWS_AS(check_lemma_w(2, {xy("x")}, Word(), Word()), UsageError);
}

TEST_CASE("Kuzmin certificates pin the witness and the bound") {
    for (int n = 2; n <= 5; ++n) {
        KuzminCertificate cert = kuzmin_certificate(n);
        ExponentWord expected(n);
        std::iota(expected.begin(), expected.end(), 0);
        CHECK(cert.word == word_from_exponents(expected));
        CHECK(cert.degree == n * (n + 1) / 2 - 1);
        CHECK(cert.nf_as_expected);
        CHECK(cert.bound == n * (n + 1) / 2);
        CHECK(cert.spot_all_zero);
        CHECK(cert.spot_checks > 0);
    }
    CHECK(kuzmin_certificate(2).nf.to_string() == "+[0,1]");
    CHECK(kuzmin_certificate(3).nf.to_string() == "+[0,1,2]");
    CHECK_THROWS_AS(kuzmin_certificate(1), UsageError);
}
