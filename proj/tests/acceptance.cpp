// Acceptance gate: one check per release criterion, each printed as a single
// pass/fail line with its runtime against the stated limit. The binary exits
// nonzero when any criterion fails. argv[1] must be the path to the CLI.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nilbound/breduce.hpp"
#include "nilbound/nilideal.hpp"

using namespace nilbound;

namespace {

struct Harness {
    int failures = 0;

    template <class Fn>
    void criterion(int id, const std::string& what, double limit_s, Fn&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = fn(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        if (secs > limit_s) {
            ok = false;
            note += (note.empty() ? "" : "; ") + std::string("over time limit");
        }
        std::printf("%s  criterion %2d  %-38s  %7.2fs / %gs%s%s\n",
                    ok ? "PASS" : "FAIL", id, what.c_str(), secs, limit_s,
                    note.empty() ? "" : "  -- ", note.c_str());
        if (!ok) ++failures;
    }
};

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    CliResult res;
    std::string cmd = "'" + cli + "' " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) res.output.append(buf, got);
    int status = pclose(f);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

FreeElement<Int> seeded_element(std::mt19937_64& rng, int m, int max_degree,
                                long long coeff_range) {
    FreeElement<Int> a(m);
    int nterms = 1 + (int)(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        Word w;
        int d = 1 + (int)(rng() % (uint64_t)max_degree);
        for (int i = 0; i < d; ++i)
            w.letters.push_back((uint8_t)(1 + rng() % (uint64_t)m));
        long long c = 1 + (long long)(rng() % (uint64_t)coeff_range);
        if (rng() & 1) c = -c;
        a.add_term(w, Int(c));
    }
    return a;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];
    Harness h;

    h.criterion(1, "lower-bound certificates n=2..6", 5.0, [&](std::string& note) {
        for (int n = 2; n <= 6; ++n) {
            KuzminCertificate cert = kuzmin_certificate(n);
            ExponentWord expected(n);
            std::iota(expected.begin(), expected.end(), 0);
            if (!cert.nf_as_expected || cert.bound != n * (n + 1) / 2 ||
                !cert.spot_all_zero ||
                cert.word != word_from_exponents(expected)) {
                note = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    h.criterion(2, "spanning generators reduce to zero", 120.0,
                [&](std::string& note) {
        size_t checked = 0, nonzero = 0;
        auto sweep = [&](int n, int dmax) {
            for (int D = n; D <= dmax; ++D)
                for_each_spanning_generator(
                    n, 2, D, std::nullopt, 50'000'000,
                    [&](const SpanningGenerator& g) {
                        ++checked;
                        if (!normal_form(g.element, n).is_zero_form()) ++nonzero;
                    });
        };
        sweep(2, 8);
        sweep(3, 9);
        note = std::to_string(checked) + " generators";
        return nonzero == 0 && checked > 0;
    });

    h.criterion(3, "d(2,2)=3 and d(2,3)=4 over F_2", 60.0,
                [&](std::string& note) {
        IndexReport a = compute_d(2, 2, 2, 8);
        IndexReport b = compute_d(2, 3, 2, 8);
        note = "d(2,2)=" + (a.d ? std::to_string(*a.d) : "?") +
               " d(2,3)=" + (b.d ? std::to_string(*b.d) : "?");
        return a.d && *a.d == 3 && a.monotone_verified && b.d && *b.d == 4 &&
               b.monotone_verified;
    });

    h.criterion(4, "n=3 witness: both pipelines agree", 60.0,
                [&](std::string& note) {
        Word w = parse_word("x2 x1 x2 x1 x1", 2);
        MemberResult res = word_member(3, 2, 3, w);
        NormalForm<Int> nf = normal_form_word(w, 3);
        note = std::string(res.member ? "member" : "non-member") + ", nf " +
               nf.to_string();
        return !res.member && !nf.is_zero_form();
    });

    h.criterion(5, "chi identity, 200 seeded cases", 120.0,
                [&](std::string& note) {
        size_t cases = 0;
        for (int n : {2, 3}) {
            std::mt19937_64 rng(1000 + n);
            for (int s = 0; s < 50; ++s) {
                FreeElement<Int> a = seeded_element(rng, 2, 3, 3);
                if (!chi_n_evaluate(a, n).is_zero_matrix()) return false;
                ++cases;
                FreeElement<Fp> ap(2);
                for (auto& [w, c] : a.terms()) ap.add_term(w, Fp::from_int(c, 5));
                if (!ap.is_zero_element() &&
                    !chi_n_evaluate(ap, n).is_zero_matrix())
                    return false;
                ++cases;
            }
        }
        note = std::to_string(cases) + " cases";
        return cases == 200;
    });

    h.criterion(6, "rewriting lemma batteries (CLI)", 120.0,
                [&](std::string& note) {
        CliResult r = run_cli(cli, "lemmas");
        std::istringstream in(r.output);
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("verdict:", 0) == 0) note = line;
        return r.exit_code == 0;
    });

    h.criterion(7, "members reduce to zero, all words deg<=6", 120.0,
                [&](std::string& note) {
        size_t members = 0;
        for (int n : {2, 3})
            for (uint64_t p : {2ull, 3ull})
                for (int D = 1; D <= 6; ++D)
                    for (const Word& w : all_words(2, D))
                        if (word_member(n, 2, p, w).member) {
                            ++members;
                            if (!normal_form_word(w, n).is_zero_form())
                                return false;
                        }
        note = std::to_string(members) + " members";
        return members > 0;
    });

    h.criterion(8, "d vs beta desk check", 120.0, [&](std::string& note) {
        IndexReport d21 = compute_d(2, 1, 2, 8);
        IndexReport d22 = compute_d(2, 2, 2, 8);
        IndexReport d23 = compute_d(2, 3, 2, 8);
        BetaReport b21 = compute_beta(2, 1, 2, 32);
        BetaReport b22 = compute_beta(2, 2, 2, 6);
        BetaReport b23 = compute_beta(2, 3, 2, 6);
        if (!d21.d || !d22.d || !d23.d) return false;
        // main inequality on the resolved pairs
        if (!(*d21.d <= b22.beta_estimate && *d22.d <= b23.beta_estimate))
            return false;
        // the m=1 scan is exact under the provably sufficient cap
        if (!(b21.exact && b21.beta_estimate == 2)) return false;
        // polynomial upper bound (m+2) n^4 on every resolved d
        const int n = 2;
        int ds[] = {*d21.d, *d22.d, *d23.d};
        for (int m = 1; m <= 3; ++m)
            if (ds[m - 1] > (m + 2) * n * n * n * n) return false;
        // beta estimates stay below floor(n/2) * d at the same m
        int bs[] = {b21.beta_estimate, b22.beta_estimate, b23.beta_estimate};
        for (int m = 1; m <= 3; ++m)
            if (bs[m - 1] > (n / 2) * ds[m - 1]) return false;
        note = "d=2,3,4; beta(2,1)=2 exact";
        return true;
    });

    h.criterion(9, "express re-verifies all deg 3,4 words", 120.0,
                [&](std::string& note) {
        size_t found = 0;
        for (int D : {3, 4})
            for (const Word& w : all_words(2, D)) {
                bool member = word_member(2, 2, 2, w).member;
                ExpressResult res = express_monomial(2, 2, 2, w);
                if (res.found != member) return false;
                if (res.found) {
                    ++found;
                    if (!res.verified) return false;
                }
            }
        note = std::to_string(found) + " expressions";
        return found > 0;
    });

    h.criterion(10, "byte-identical JSON on repeat runs", 120.0,
                [&](std::string& note) {
        std::vector<std::string> cmds = {
            "certify --n 4 --format json",
            "dnm --n 2 --m 2 --p 2 --format json",
            "dnm --n 2 --m 3 --p 2 --format json",
            "beta --n 2 --m 3 --p 2 --format json",
            "beta --n 2 --m 1 --p 2 --cap 32 --format json",
            "crosscheck --n 2 --m 2 --p 2 --format json",
            "chi --n 2 --m 2 --p 5 --samples 20 --seed 42 --format json",
            "chi --n 3 --m 2 --p 0 --samples 3 --seed 7 --format json",
            "member 'x1 x2 x1' --n 2 --m 2 --p 2 --format json",
            "member 'x2 x1 x2 x1 x1' --n 3 --m 2 --p 3 --format json",
            "express 'x1 x2 x1' --n 2 --m 2 --p 2 --format json",
            "reduce yxyxx --n 3 --format json",
            "lemmas --cases 200 --format json",
        };
        for (auto& c : cmds) {
            CliResult a = run_cli(cli, c);
            CliResult b = run_cli(cli, c);
            if (a.exit_code != b.exit_code || a.output != b.output ||
                a.output.empty()) {
                note = "differs: " + c;
                return false;
            }
        }
        note = std::to_string(cmds.size()) + " commands";
        return true;
    });

    if (h.failures) {
        std::printf("%d criterion(s) failed\n", h.failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
