// nilbound: exact computations around nil ideals, matrix invariants and the
// two-letter rewriting system. Every subcommand prints a deterministic
// report in text or JSON and uses the exit-code discipline
//   0 = all asserted contracts hold
//   1 = contract failure (a failure certificate is printed)
//   2 = inconclusive (cap or budget exhausted before a verdict)
//   3 = usage error

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilbound/breduce.hpp"
#include "nilbound/nilideal.hpp"

using json = nlohmann::ordered_json;
using namespace nilbound;

namespace {

constexpr int SCHEMA_VERSION = 1;
constexpr int EXIT_PASS = 0;
constexpr int EXIT_FAIL = 1;
constexpr int EXIT_INCONCLUSIVE = 2;
constexpr int EXIT_USAGE = 3;

struct Output {
    bool as_json = false;
    json j;

    explicit Output(const std::string& command) {
        j["schema_version"] = SCHEMA_VERSION;
        j["command"] = command;
    }
    void emit() const {
        if (as_json) std::cout << j.dump(2) << "\n";
    }
};

void require_prime(uint64_t p) {
    if (!is_prime(p))
        throw UsageError("--p must be a prime, got " + std::to_string(p));
}

int read_thread_cap() {
    const char* env = std::getenv("NILBOUND_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end || v < 1) throw UsageError("NILBOUND_THREADS must be a positive integer");
    return (int)v; // computations run on a single worker; the cap is honored
}

json nf_json(const NormalForm<Int>& nf) {
    json terms = json::array();
    for (auto& [e, c] : nf.terms) {
        json t;
        t["exponents"] = e;
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    return terms;
}

json index_report_json(const IndexReport& rep) {
    json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["p"] = rep.p;
    j["cap"] = rep.cap;
    json rows = json::array();
    for (auto& r : rep.degrees)
        rows.push_back({{"degree", r.D}, {"words", r.words}, {"members", r.members}});
    j["degrees"] = rows;
    if (rep.d) {
        j["d"] = *rep.d;
        j["monotone_verified"] = rep.monotone_verified;
        j["status"] = "resolved";
    } else {
        j["d"] = nullptr;
        j["status"] = "inconclusive";
    }
    return j;
}

json beta_report_json(const BetaReport& rep) {
    json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["p"] = rep.p;
    j["cap"] = rep.cap;
    json rows = json::array();
    for (auto& r : rep.degrees)
        rows.push_back({{"degree", r.D},
                        {"candidates", r.candidates},
                        {"new_generators", r.new_generators}});
    j["degrees"] = rows;
    j["beta_estimate"] = rep.beta_estimate;
    j["exact"] = rep.exact;
    j["stable_tail"] = rep.stable_tail;
    return j;
}

void print_index_report(const IndexReport& rep) {
    std::cout << "d(" << rep.n << "," << rep.m << ") over F_" << rep.p
              << ", cap " << rep.cap << "\n";
    for (auto& r : rep.degrees)
        std::cout << "  degree " << r.D << ": " << r.members << "/" << r.words
                  << " words in the ideal\n";
    if (rep.d)
        std::cout << "d = " << *rep.d
                  << (rep.monotone_verified ? " (next degree verified)" : "")
                  << "\n";
    else
        std::cout << "inconclusive: d exceeds cap " << rep.cap << "\n";
}

void print_beta_report(const BetaReport& rep) {
    std::cout << "beta(" << rep.n << "," << rep.m << ") over F_" << rep.p
              << ", cap " << rep.cap << "\n";
    for (auto& r : rep.degrees)
        if (r.new_generators)
            std::cout << "  degree " << r.D << ": " << r.new_generators
                      << " new minimal generators (" << r.candidates
                      << " candidates)\n";
    std::cout << "beta " << (rep.exact ? "= " : ">= ") << rep.beta_estimate
              << (rep.exact ? " (cap is provably sufficient)"
                            : " (estimate, stable tail " +
                                  std::to_string(rep.stable_tail) + ")")
              << "\n";
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const std::string& word_str, int n, Output& out) {
    Word w = parse_word(word_str, 2);
    if (w.empty()) throw UsageError("reduce: word must be nonempty");
    ExponentWord e = decompose(w);
    NormalForm<Int> nf = normal_form_word(w, n);
    out.j["n"] = n;
    out.j["word"] = format_word(w);
    out.j["exponents"] = e;
    out.j["normal_form"] = nf_json(nf);
    out.j["normal_form_str"] = nf.to_string();
    out.j["in_span_B"] = nf.is_zero_form();
    if (out.as_json) {
        out.emit();
    } else {
        std::cout << "word: " << format_word_xy(w) << "\n"
                  << "exponents: " << format_exponents(e) << "\n"
                  << "normal form: " << nf.to_string() << "\n";
    }
    return EXIT_PASS;
}

// ---------------------------------------------------------------- member

int cmd_member(const std::string& word_str, int n, int m, uint64_t p,
               size_t budget, Output& out) {
    Word w = parse_word(word_str, m);
    if (w.empty()) throw UsageError("member: word must be nonempty");
    out.j["n"] = n;
    out.j["m"] = m;
    out.j["p"] = p;
    out.j["word"] = format_word(w);
    MemberResult res;
    try {
        res = word_member(n, m, p, w, budget);
    } catch (const BudgetExceeded& ex) {
        out.j["status"] = "inconclusive";
        out.j["reason"] = ex.what();
        if (out.as_json)
            out.emit();
        else
            std::cout << "inconclusive: budget (" << ex.what() << ")\n";
        return EXIT_INCONCLUSIVE;
    }
    out.j["status"] = "resolved";
    out.j["member"] = res.member;
    out.j["degree"] = res.degree;
    out.j["multidegree"] = res.block.exponents;
    out.j["block_words"] = res.block_words;
    out.j["span_rank"] = res.span_rank;
    if (out.as_json) {
        out.emit();
    } else {
        std::cout << format_word(w) << ": "
                  << (res.member ? "member" : "non-member") << "\n"
                  << "degree " << res.degree << ", block of " << res.block_words
                  << " words, span rank " << res.span_rank << "\n";
    }
    return EXIT_PASS;
}

// ---------------------------------------------------------------- dnm

int default_d_cap(int m) { return m == 1 ? 16 : m == 2 ? 12 : 8; }

int cmd_dnm(int n, int m, uint64_t p, int cap, size_t budget, bool allow_large,
            Output& out) {
    if (cap == 0) cap = default_d_cap(m);
    if (cap > default_d_cap(m) && !allow_large)
        throw UsageError("dnm: cap above the default for m=" + std::to_string(m) +
                         " requires --allow-large");
    IndexReport rep = compute_d(n, m, p, cap, budget);
    out.j["report"] = index_report_json(rep);
    if (out.as_json)
        out.emit();
    else
        print_index_report(rep);
    return rep.d ? EXIT_PASS : EXIT_INCONCLUSIVE;
}

// ---------------------------------------------------------------- beta

int cmd_beta(int n, int m, uint64_t p, int cap, size_t budget, Output& out) {
    if (cap == 0) cap = 6;
    BetaReport rep = compute_beta(n, m, p, cap, budget);
    out.j["report"] = beta_report_json(rep);
    if (out.as_json)
        out.emit();
    else
        print_beta_report(rep);
    return EXIT_PASS;
}

// ---------------------------------------------------------------- crosscheck

int cmd_crosscheck(int n, int m, uint64_t p, int cap_d, int cap_beta,
                   size_t budget, Output& out) {
    if (cap_d == 0) cap_d = default_d_cap(m);
    if (cap_beta == 0) cap_beta = 6;
    CrosscheckReport rep = crosscheck_main_inequality(n, m, p, cap_d, cap_beta, budget);
    out.j["d_report"] = index_report_json(rep.d_report);
    out.j["beta_report"] = beta_report_json(rep.beta_report);
    json checks = json::array();
    for (auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    out.j["checks"] = checks;
    std::string verdict = rep.any_fail          ? "fail"
                          : rep.any_inconclusive ? "inconclusive"
                                                 : "pass";
    out.j["verdict"] = verdict;
    if (out.as_json) {
        out.emit();
    } else {
        print_index_report(rep.d_report);
        print_beta_report(rep.beta_report);
        for (auto& c : rep.checks)
            std::cout << c.name << ": " << c.status << " (" << c.detail << ")\n";
        std::cout << "verdict: " << verdict << "\n";
    }
    return rep.any_fail ? EXIT_FAIL : rep.any_inconclusive ? EXIT_INCONCLUSIVE : EXIT_PASS;
}

// ---------------------------------------------------------------- chi

FreeElement<Int> random_element(std::mt19937_64& rng, int m, int max_degree,
                                int max_terms, long long coeff_range) {
    FreeElement<Int> a(m);
    int nterms = 1 + (int)(rng() % (uint64_t)max_terms);
    for (int t = 0; t < nterms; ++t) {
        int d = 1 + (int)(rng() % (uint64_t)max_degree);
        Word w;
        for (int i = 0; i < d; ++i)
            w.letters.push_back((uint8_t)(1 + rng() % (uint64_t)m));
        long long c = 1 + (long long)(rng() % (uint64_t)coeff_range);
        if (rng() & 1) c = -c;
        a.add_term(w, Int(c));
    }
    return a;
}

int cmd_chi(int n, int m, uint64_t p, int degree, int samples, uint64_t seed,
            Output& out) {
    std::mt19937_64 rng(seed);
    out.j["n"] = n;
    out.j["m"] = m;
    out.j["ring"] = p ? "F_" + std::to_string(p) : "Z";
    out.j["degree"] = degree;
    out.j["samples"] = samples;
    out.j["seed"] = seed;
    long long range = p ? (long long)(p - 1) : 3;
    json failures = json::array();
    int zero_count = 0;
    for (int s = 0; s < samples; ++s) {
        FreeElement<Int> a = random_element(rng, m, degree, 3, range);
        if (a.is_zero_element()) { ++zero_count; continue; }
        bool zero;
        if (p) {
            FreeElement<Fp> ap(m);
            for (auto& [w, c] : a.terms()) ap.add_term(w, Fp::from_int(c, p));
            zero = chi_n_evaluate(ap, n).is_zero_matrix();
        } else {
            zero = chi_n_evaluate(a, n).is_zero_matrix();
        }
        if (zero) {
            ++zero_count;
        } else {
            json f;
            f["sample"] = s;
            f["element"] = json::array();
            for (auto& [w, c] : serialize(a))
                f["element"].push_back({{"word", w}, {"coeff", c}});
            failures.push_back(f);
        }
    }
    out.j["all_zero"] = failures.empty();
    out.j["zero_count"] = zero_count;
    out.j["failures"] = failures;
    if (out.as_json)
        out.emit();
    else
        std::cout << "chi_" << n << " over " << (p ? "F_" + std::to_string(p) : "Z")
                  << ": " << zero_count << "/" << samples << " samples vanish"
                  << (failures.empty() ? " (all-zero verdict)" : " (FAILURES)")
                  << "\n";
    return failures.empty() ? EXIT_PASS : EXIT_FAIL;
}

// ---------------------------------------------------------------- express

int cmd_express(const std::string& word_str, int n, int m, uint64_t p,
                size_t budget, Output& out) {
    Word w = parse_word(word_str, m);
    if (w.empty()) throw UsageError("express: word must be nonempty");
    out.j["n"] = n;
    out.j["m"] = m;
    out.j["p"] = p;
    out.j["word"] = format_word(w);
    ExpressResult res;
    try {
        res = express_monomial(n, m, p, w, budget);
    } catch (const BudgetExceeded& ex) {
        out.j["status"] = "inconclusive";
        out.j["reason"] = ex.what();
        if (out.as_json)
            out.emit();
        else
            std::cout << "inconclusive: budget (" << ex.what() << ")\n";
        return EXIT_INCONCLUSIVE;
    }
    out.j["candidates"] = res.candidates;
    out.j["found"] = res.found;
    if (res.found) {
        out.j["verified"] = res.verified;
        json terms = json::array();
        for (auto& t : res.terms)
            terms.push_back({{"coeff", t.coeff}, {"expr", t.expr.to_string()}});
        out.j["terms"] = terms;
    }
    if (out.as_json) {
        out.emit();
    } else if (!res.found) {
        std::cout << format_word(w) << ": no expression (word is outside the ideal)\n";
    } else {
        std::cout << "X(" << format_word(w) << ") =";
        for (auto& t : res.terms)
            std::cout << " + " << t.coeff << "*" << t.expr.to_string();
        std::cout << "\n"
                  << (res.verified ? "verified by full symbolic expansion"
                                   : "VERIFICATION FAILED")
                  << "\n";
    }
    if (res.found && !res.verified) return EXIT_FAIL;
    return EXIT_PASS;
}

// ---------------------------------------------------------------- certify

int cmd_certify(int n, int spot_cap, size_t budget, Output& out) {
    KuzminCertificate cert = kuzmin_certificate(n, spot_cap, budget);
    out.j["n"] = n;
    out.j["word"] = format_word_xy(cert.word);
    out.j["degree"] = cert.degree;
    out.j["normal_form"] = nf_json(cert.nf);
    out.j["normal_form_str"] = cert.nf.to_string();
    out.j["nf_as_expected"] = cert.nf_as_expected;
    out.j["bound"] = cert.bound;
    out.j["spot_check_degree_cap"] = cert.spot_check_degree_cap;
    out.j["spot_checks"] = cert.spot_checks;
    out.j["spot_all_zero"] = cert.spot_all_zero;
    bool ok = cert.nf_as_expected && cert.spot_all_zero;
    out.j["verdict"] = ok ? "pass" : "fail";
    if (out.as_json) {
        out.emit();
    } else {
        std::cout << "witness word: " << format_word_xy(cert.word) << " (degree "
                  << cert.degree << ")\n"
                  << "normal form: " << cert.nf.to_string() << "\n"
                  << "bound: d >= " << cert.bound << "\n"
                  << "spot checks: " << cert.spot_checks
                  << " spanning generators up to degree "
                  << cert.spot_check_degree_cap
                  << (cert.spot_all_zero ? ", all reduce to 0" : ", NONZERO FOUND")
                  << "\n"
                  << "verdict: " << (ok ? "pass" : "fail") << "\n";
    }
    return ok ? EXIT_PASS : EXIT_FAIL;
}

// ---------------------------------------------------------------- lemmas

struct Battery {
    json suites = json::array();
    size_t total = 0, failed = 0;

    void add(const std::string& name, size_t cases, size_t failures) {
        suites.push_back({{"suite", name}, {"cases", cases}, {"failures", failures}});
        total += cases;
        failed += failures;
    }
};

void battery_sorted_tuples(Battery& bat, int n_max) {
    size_t cases = 0, failures = 0;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int r = 0; r <= 4; ++r) {
                std::vector<int> a(k, 0);
                while (true) {
                    bool sorted = true;
                    for (int i = 1; i < k; ++i)
                        if (a[i - 1] > a[i]) sorted = false;
                    if (sorted && a[0] + k + r > n) {
                        ++cases;
                        if (!check_lemma_a1(n, k, a, r)) ++failures;
                    }
                    int i = k - 1;
                    while (i >= 0 && a[i] == 3) a[i--] = 0;
                    if (i < 0) break;
                    a[i]++;
                }
            }
    bat.add("sorted_tuple_vanishing", cases, failures);
}

void battery_unsorted_tuples(Battery& bat, int n_max) {
    size_t cases = 0, failures = 0;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int r = 0; r <= 4; ++r) {
                if (r + k <= n) continue;
                std::vector<int> a(k, 0);
                while (true) {
                    ++cases;
                    if (!check_cor_rk(n, k, a, r)) ++failures;
                    int i = k - 1;
                    while (i >= 0 && a[i] == 3) a[i--] = 0;
                    if (i < 0) break;
                    a[i]++;
                }
            }
    bat.add("unsorted_tuple_vanishing", cases, failures);
}

std::vector<Word> positive_y_words(int max_degree) {
    std::vector<Word> out;
    for (int d = 1; d <= max_degree; ++d)
        for (const Word& w : all_words(2, d))
            if (multidegree(w, 2).exponents[1] > 0) out.push_back(w);
    return out;
}

void battery_padded_linearization(Battery& bat, int n_max) {
    std::vector<Word> pool = positive_y_words(3);
    size_t cases = 0, failures = 0;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k <= n + 1; ++k) {
            std::vector<size_t> pick((size_t)k - 1, 0);
            while (true) {
                std::vector<Word> ws;
                for (size_t idx : pick) ws.push_back(pool[idx]);
                for (int a = 0; a <= 2; ++a)
                    for (int b = 0; b <= 2; ++b) {
                        ++cases;
                        if (!check_lemma_xxx(n, ws, a, b)) ++failures;
                    }
                int i = (int)pick.size() - 1;
                while (i >= 0 && pick[i] + 1 == pool.size()) pick[i--] = 0;
                if (i < 0) break;
                pick[i]++;
            }
        }
    bat.add("padded_linearization_vanishing", cases, failures);
}

void battery_full_linearization(Battery& bat, int n_max) {
    std::vector<Word> pool;
    for (int d = 1; d <= 2; ++d)
        for (const Word& w : all_words(2, d)) pool.push_back(w);
    size_t cases = 0, failures = 0;
    Word empty;
    for (int n = 2; n <= std::min(n_max, 3); ++n) {
        std::vector<size_t> pick((size_t)n, 0);
        while (true) {
            std::vector<Word> ws;
            for (size_t idx : pick) ws.push_back(pool[idx]);
            ++cases;
            if (!check_lemma_w(n, ws, empty, empty)) ++failures;
            if (!check_lemma_w(n, ws, Word::generator(1), Word::generator(2)))
                ++failures;
            int i = (int)pick.size() - 1;
            while (i >= 0 && pick[i] + 1 == pool.size()) pick[i--] = 0;
            if (i < 0) break;
            pick[i]++;
        }
    }
    bat.add("full_linearization_vanishing", cases, failures);
}

void battery_delta_stability(Battery& bat, uint64_t seed, int cases_per) {
    std::mt19937_64 rng(seed);
    size_t cases = 0, failures = 0;
    for (int c = 0; c < cases_per; ++c) {
        int n = 2 + (int)(rng() % 3);
        BGenerator g = random_b_generator(rng, n, 4, n + 1);
        int a = 1 + (int)(rng() % 3);
        ++cases;
        if (!normal_form(derivation_delta(a, g.element), n).is_zero_form())
            ++failures;
    }
    bat.add("delta_stability", cases, failures);
}

void battery_ideal_stability(Battery& bat, uint64_t seed, int cases_per) {
    std::mt19937_64 rng(seed);
    size_t cases = 0, failures = 0;
    for (int c = 0; c < cases_per; ++c) {
        int n = 2 + (int)(rng() % 3);
        BGenerator g = random_b_generator(rng, n, 4, n + 1);
        int du = (int)(rng() % 3), dv = (int)(rng() % 3);
        Word u, v;
        for (int i = 0; i < du; ++i)
            u.letters.push_back((uint8_t)(1 + rng() % 2));
        for (int i = 0; i < dv; ++i)
            v.letters.push_back((uint8_t)(1 + rng() % 2));
        Word y = Word::generator(2);
        FreeElement<Int> lhs(2), rhs(2);
        for (auto& [w, coef] : g.element.terms()) {
            lhs.add_term(u * y * w, coef);
            rhs.add_term(w * y * v, coef);
        }
        ++cases;
        if (!normal_form(lhs, n).is_zero_form() ||
            !normal_form(rhs, n).is_zero_form())
            ++failures;
    }
    bat.add("ideal_stability", cases, failures);
}

int cmd_lemmas(int n_max, uint64_t seed, int cases_per, Output& out) {
    Battery bat;
    battery_sorted_tuples(bat, n_max);
    battery_unsorted_tuples(bat, n_max);
    battery_padded_linearization(bat, n_max);
    battery_full_linearization(bat, n_max);
    battery_delta_stability(bat, seed, cases_per);
    battery_ideal_stability(bat, seed + 1, cases_per);
    out.j["n_max"] = n_max;
    out.j["seed"] = seed;
    out.j["suites"] = bat.suites;
    out.j["total_cases"] = bat.total;
    out.j["total_failures"] = bat.failed;
    out.j["verdict"] = bat.failed ? "fail" : "pass";
    if (out.as_json) {
        out.emit();
    } else {
        for (auto& s : bat.suites)
            std::cout << s["suite"].get<std::string>() << ": "
                      << s["failures"].get<size_t>() << " failures in "
                      << s["cases"].get<size_t>() << " cases\n";
        std::cout << "verdict: " << (bat.failed ? "fail" : "pass") << "\n";
    }
    return bat.failed ? EXIT_FAIL : EXIT_PASS;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nil-ideal, invariant-degree and rewriting computations"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    int n = 2, m = 2, cap = 0, cap_d = 0, cap_beta = 0;
    uint64_t p = 2, seed = 20240901;
    size_t budget = 50'000'000;
    int degree = 3, samples = 20, n_max = 4, cases_per = 1000, spot_cap = -1;
    bool allow_large = false;
    std::string word_str;

    // --format is a top-level option; let every subcommand pass it through
    app.fallthrough();

    auto* reduce = app.add_subcommand("reduce", "normal form of a two-letter word");
    reduce->fallthrough();
    reduce->add_option("word", word_str, "word, e.g. yxyxx or 'x1 x2'")->required();
    reduce->add_option("--n", n, "nil index")->check(CLI::PositiveNumber);

    auto* member = app.add_subcommand("member", "ideal membership of a word");
    member->fallthrough();
    member->add_option("word", word_str)->required();
    member->add_option("--n", n)->check(CLI::PositiveNumber);
    member->add_option("--m", m)->check(CLI::PositiveNumber);
    member->add_option("--p", p);
    member->add_option("--budget", budget);

    auto* dnm = app.add_subcommand("dnm", "degree scan for the nilpotency index");
    dnm->fallthrough();
    dnm->add_option("--n", n)->check(CLI::PositiveNumber);
    dnm->add_option("--m", m)->check(CLI::PositiveNumber);
    dnm->add_option("--p", p);
    dnm->add_option("--cap", cap);
    dnm->add_option("--budget", budget);
    dnm->add_flag("--allow-large", allow_large, "allow caps above the default");

    auto* beta = app.add_subcommand("beta", "generator-degree scan for the invariant ring");
    beta->fallthrough();
    beta->add_option("--n", n)->check(CLI::PositiveNumber);
    beta->add_option("--m", m)->check(CLI::PositiveNumber);
    beta->add_option("--p", p);
    beta->add_option("--cap", cap);
    beta->add_option("--budget", budget);

    auto* crosscheck = app.add_subcommand("crosscheck", "d(n,m) vs beta(n,m+1) desk check");
    crosscheck->fallthrough();
    crosscheck->add_option("--n", n)->check(CLI::PositiveNumber);
    crosscheck->add_option("--m", m)->check(CLI::PositiveNumber);
    crosscheck->add_option("--p", p);
    crosscheck->add_option("--cap", cap_d, "cap for the d scan");
    crosscheck->add_option("--cap-beta", cap_beta, "cap for the beta scan");
    crosscheck->add_option("--budget", budget);

    auto* chi = app.add_subcommand("chi", "Cayley-Hamilton identity on random elements");
    chi->fallthrough();
    chi->add_option("--n", n)->check(CLI::PositiveNumber);
    chi->add_option("--m", m)->check(CLI::PositiveNumber);
    chi->add_option("--p", p, "prime, or 0 for the integers")->capture_default_str();
    chi->add_option("--degree", degree)->check(CLI::PositiveNumber);
    chi->add_option("--samples", samples)->check(CLI::PositiveNumber);
    chi->add_option("--seed", seed);

    auto* express = app.add_subcommand("express", "word as invariant-times-word combination");
    express->fallthrough();
    express->add_option("word", word_str)->required();
    express->add_option("--n", n)->check(CLI::PositiveNumber);
    express->add_option("--m", m)->check(CLI::PositiveNumber);
    express->add_option("--p", p);
    express->add_option("--budget", budget);

    auto* certify = app.add_subcommand("certify", "lower-bound witness certificate");
    certify->fallthrough();
    certify->add_option("--n", n)->check(CLI::PositiveNumber);
    certify->add_option("--cap", spot_cap, "spot-check degree cap (-1 = default)");
    certify->add_option("--budget", budget);

    auto* lemmas = app.add_subcommand("lemmas", "rewriting-system lemma batteries");
    lemmas->fallthrough();
    lemmas->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    lemmas->add_option("--seed", seed);
    lemmas->add_option("--cases", cases_per, "cases per randomized suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_PASS : EXIT_USAGE;
    }

    try {
        read_thread_cap();
        CLI::App* sub = app.get_subcommands().front();
        Output out(sub->get_name());
        out.as_json = (format == "json");
        if (sub == reduce) return cmd_reduce(word_str, n, out);
        if (sub == member) {
            require_prime(p);
            return cmd_member(word_str, n, m, p, budget, out);
        }
        if (sub == dnm) {
            require_prime(p);
            return cmd_dnm(n, m, p, cap, budget, allow_large, out);
        }
        if (sub == beta) {
            require_prime(p);
            return cmd_beta(n, m, p, cap, budget, out);
        }
        if (sub == crosscheck) {
            require_prime(p);
            return cmd_crosscheck(n, m, p, cap_d, cap_beta, budget, out);
        }
        if (sub == chi) {
            if (p) require_prime(p);
            return cmd_chi(n, m, p, degree, samples, seed, out);
        }
        if (sub == express) {
            require_prime(p);
            return cmd_express(word_str, n, m, p, budget, out);
        }
        if (sub == certify) return cmd_certify(n, spot_cap, budget, out);
        if (sub == lemmas) return cmd_lemmas(n_max, seed, cases_per, out);
        throw UsageError("unknown subcommand");
    } catch (const UsageError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return EXIT_USAGE;
    } catch (const BudgetExceeded& ex) {
        std::cerr << "inconclusive: " << ex.what() << "\n";
        return EXIT_INCONCLUSIVE;
    }
}
