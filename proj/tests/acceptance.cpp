// Acceptance suite: runs every verification criterion end to end and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "pcx/atoms.hpp"
#include "pcx/bounds.hpp"
#include "pcx/constructions.hpp"
#include "pcx/convexity.hpp"
#include "pcx/transform.hpp"
#include "pcx/verify.hpp"
#include "pcx/witnesses.hpp"

using namespace pcx;
using F = WitnessFamily;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    bool ok = true;
    std::vector<std::string> notes;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }

    template <typename A, typename B>
    void expect_eq(const A& got, const B& want, const std::string& what) {
        if (!((BoundInt)got == (BoundInt)want)) {
            ok = false;
            notes.push_back(what + ": got " + to_string((BoundInt)got) + ", want " +
                            to_string((BoundInt)want));
        }
    }

    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", name.c_str(), secs);
        for (const auto& n : notes) std::printf("       %s\n", n.c_str());
        if (!ok) ++failures;
        std::fflush(stdout);
    }
};

std::vector<Transformation> generators(const Dfa& d) {
    std::vector<Transformation> gens;
    for (const auto& [name, t] : letter_transformations(d)) gens.push_back(t);
    return gens;
}

std::string cell_tag(F f, Measure m, int mm, int n, int j, int k) {
    std::string s = to_string(f) + "/" + to_string(m) + " n=" + std::to_string(n);
    if (mm) s += " m=" + std::to_string(mm);
    if (j) s += " j=" + std::to_string(j);
    if (k) s += " k=" + std::to_string(k);
    return s;
}

void check_cell(Criterion& c, F f, Measure meas, int m, int n, int j = 0, int k = 0) {
    auto b = bound({f, meas, m, n, j, k});
    if (!b) return;  // excluded cell
    auto [lhs, rhs] = theorem_operands(f, meas, m, n, j, k);
    c.expect_eq(measure(lhs, rhs, meas), *b, cell_tag(f, meas, m, n, j, k));
}

Dfa random_dfa(std::mt19937& rng, int max_n, int letters) {
    Dfa d;
    d.state_count = 2 + (int)(rng() % (max_n - 1));
    for (int l = 0; l < letters; ++l) d.alphabet.push_back(std::string(1, (char)('a' + l)));
    d.transitions.assign(letters, std::vector<int>(d.state_count));
    for (auto& row : d.transitions)
        for (auto& t : row) t = (int)(rng() % d.state_count);
    d.finals.resize(d.state_count);
    for (int q = 0; q < d.state_count; ++q) d.finals[q] = rng() % 2 == 0;
    return d;
}

bool convex_by_words(const Dfa& d, int max_len) {
    std::vector<int> word;
    bool ok = true;
    auto walk = [&](auto&& self, int state, bool seen_final, bool seen_gap) -> void {
        if (!ok) return;
        bool final_ = d.is_final(state);
        if (final_ && seen_gap) {
            ok = false;
            return;
        }
        if ((int)word.size() == max_len) return;
        for (int l = 0; l < (int)d.alphabet.size() && ok; ++l) {
            word.push_back(l);
            self(self, d.step(state, l), seen_final || final_,
                 seen_gap || (seen_final && !final_));
            word.pop_back();
        }
    };
    walk(walk, d.initial, false, false);
    return ok;
}

void criterion_semigroups() {
    Criterion c("1. semigroup sizes match the class formulas for n up to 7");
    for (int n = 3; n <= 7; ++n) check_cell(c, F::Regular, Measure::Semigroup, 0, n);
    for (int n = 4; n <= 7; ++n) {
        check_cell(c, F::RightIdeal, Measure::Semigroup, 0, n);
        check_cell(c, F::PrefixClosed, Measure::Semigroup, 0, n);
        check_cell(c, F::PrefixFree, Measure::Semigroup, 0, n);
    }
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= n - 2; ++k)
            check_cell(c, F::Proper, Measure::Semigroup, 0, n, 0, k);
}

void criterion_reverse_atoms() {
    Criterion c("2. reversal complexity and atom count for n up to 7");
    for (auto meas : {Measure::Reverse, Measure::AtomsCount}) {
        for (int n = 3; n <= 7; ++n) check_cell(c, F::Regular, meas, 0, n);
        for (int n = 4; n <= 7; ++n) {
            check_cell(c, F::RightIdeal, meas, 0, n);
            check_cell(c, F::PrefixClosed, meas, 0, n);
            check_cell(c, F::PrefixFree, meas, 0, n);
            check_cell(c, F::PrefixFreeSmall, meas, 0, n);
        }
        for (int n = 3; n <= 7; ++n)
            for (int k = 1; k <= n - 2; ++k) check_cell(c, F::Proper, meas, 0, n, 0, k);
    }
}

void criterion_atom_complexities() {
    Criterion c("3. atom complexities match the formulas (exhaustive n<=6, sampled n=7)");
    struct Cell { F f; int n; int k; };
    std::vector<Cell> cells;
    for (int n = 3; n <= 6; ++n) cells.push_back({F::Regular, n, 0});
    for (int n = 4; n <= 6; ++n) {
        cells.push_back({F::RightIdeal, n, 0});
        cells.push_back({F::PrefixClosed, n, 0});
        cells.push_back({F::PrefixFree, n, 0});
    }
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k <= n - 2; ++k) cells.push_back({F::Proper, n, k});

    for (const auto& cell : cells) {
        const Dfa d = theorem_operands(cell.f, Measure::AtomOfS, 0, cell.n, 0, cell.k).first;
        const AtomReport rep = atoms_report(d);
        for (const auto& e : rep.entries) {
            const bool allowed = atom_index_allowed(cell.f, cell.n, cell.k, e.subset);
            c.expect(allowed == e.is_atom,
                     cell_tag(cell.f, Measure::AtomOfS, 0, cell.n, 0, cell.k) + " S=" +
                         std::to_string(e.subset) + " atom/formula domain mismatch");
            if (allowed && e.is_atom)
                c.expect_eq(e.complexity, atom_bound(cell.f, cell.n, cell.k, e.subset),
                            cell_tag(cell.f, Measure::AtomOfS, 0, cell.n, 0, cell.k) +
                                " S=" + std::to_string(e.subset));
        }
    }

    // n = 7: 32 sampled subsets per class.
    std::vector<Cell> sampled;
    sampled.push_back({F::Regular, 7, 0});
    sampled.push_back({F::RightIdeal, 7, 0});
    sampled.push_back({F::PrefixClosed, 7, 0});
    sampled.push_back({F::PrefixFree, 7, 0});
    for (int k = 1; k <= 5; ++k) sampled.push_back({F::Proper, 7, k});
    std::mt19937 rng(0);
    for (const auto& cell : sampled) {
        const Dfa d = theorem_operands(cell.f, Measure::AtomOfS, 0, cell.n, 0, cell.k).first;
        std::uniform_int_distribution<std::uint64_t> pick(0, (1ULL << cell.n) - 1);
        for (int i = 0; i < 32; ++i) {
            const std::uint64_t s = pick(rng);
            const bool allowed = atom_index_allowed(cell.f, cell.n, cell.k, s);
            const auto got = atom_complexity(d, {s, cell.n});
            c.expect(allowed == got.has_value(),
                     cell_tag(cell.f, Measure::AtomOfS, 0, 7, 0, cell.k) + " S=" +
                         std::to_string(s) + " atom/formula domain mismatch");
            if (allowed && got)
                c.expect_eq(*got, atom_bound(cell.f, cell.n, cell.k, s),
                            cell_tag(cell.f, Measure::AtomOfS, 0, 7, 0, cell.k) +
                                " S=" + std::to_string(s));
        }
    }
}

void criterion_star() {
    Criterion c("4. star complexities for n up to 7");
    for (int n = 3; n <= 7; ++n) check_cell(c, F::Regular, Measure::Star, 0, n);
    for (int n = 4; n <= 7; ++n) {
        check_cell(c, F::RightIdeal, Measure::Star, 0, n);
        check_cell(c, F::PrefixClosed, Measure::Star, 0, n);
        check_cell(c, F::PrefixFree, Measure::Star, 0, n);
        check_cell(c, F::PrefixFreeSmall, Measure::Star, 0, n);
    }
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= n - 2; ++k) check_cell(c, F::Proper, Measure::Star, 0, n, 0, k);
}

void criterion_product() {
    Criterion c("5. product complexities for m,n up to 6");
    for (auto meas : {Measure::ProductR, Measure::ProductU}) {
        for (int m = 3; m <= 6; ++m)
            for (int n = 3; n <= 6; ++n) check_cell(c, F::Regular, meas, m, n);
        for (int m = 4; m <= 6; ++m)
            for (int n = 4; n <= 6; ++n) {
                check_cell(c, F::RightIdeal, meas, m, n);
                check_cell(c, F::PrefixClosed, meas, m, n);
                check_cell(c, F::PrefixFree, meas, m, n);
                check_cell(c, F::PrefixFreeSmall, meas, m, n);
            }
        for (int m = 3; m <= 6; ++m)
            for (int n = 3; n <= 6; ++n)
                for (int j = 1; j <= m - 2; ++j)
                    for (int k = 1; k <= n - 2; ++k)
                        check_cell(c, F::Proper, meas, m, n, j, k);
    }
}

void criterion_boolean() {
    Criterion c("6. boolean operation complexities for m,n up to 6");
    const std::vector<Measure> ops = {Measure::UnionR,     Measure::UnionU, Measure::XorR,
                                      Measure::XorU,       Measure::DiffR,  Measure::DiffU,
                                      Measure::IntersectR, Measure::IntersectU};
    for (auto meas : ops) {
        for (int m = 3; m <= 6; ++m)
            for (int n = 3; n <= 6; ++n) check_cell(c, F::Regular, meas, m, n);
        for (int m = 4; m <= 6; ++m)
            for (int n = 4; n <= 6; ++n) {
                check_cell(c, F::RightIdeal, meas, m, n);
                check_cell(c, F::PrefixClosed, meas, m, n);
                check_cell(c, F::PrefixFree, meas, m, n);  // (4,4) auto-skips
                check_cell(c, F::PrefixFreeSmall, meas, m, n);
            }
        for (int m = 3; m <= 6; ++m)
            for (int n = 3; n <= 6; ++n)
                for (int j = 1; j <= m - 2; ++j)
                    for (int k = 1; k <= n - 2; ++k)
                        check_cell(c, F::Proper, meas, m, n, j, k);
    }
}

void criterion_classifier() {
    Criterion c("7. classifier matches families and the brute-force convexity oracle");
    for (int n = 3; n <= 6; ++n)
        c.expect(classify(minimize(witness({F::Regular, n}))) == LanguageClass::NotPrefixConvex,
                 "regular witness misclassified at n=" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) {
        c.expect(classify(witness({F::RightIdeal, n})) == LanguageClass::RightIdeal,
                 "right-ideal witness misclassified at n=" + std::to_string(n));
        c.expect(classify(witness({F::PrefixClosed, n})) == LanguageClass::PrefixClosed,
                 "prefix-closed witness misclassified at n=" + std::to_string(n));
        c.expect(classify(witness({F::PrefixFree, n})) == LanguageClass::PrefixFree,
                 "prefix-free witness misclassified at n=" + std::to_string(n));
        c.expect(classify(witness({F::PrefixFreeSmall, n})) == LanguageClass::PrefixFree,
                 "small prefix-free witness misclassified at n=" + std::to_string(n));
    }
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            const Dfa d = witness({F::Proper, n, k});
            c.expect(classify(d) == LanguageClass::ProperPrefixConvex && final_quotients(d) == k,
                     "proper witness misclassified at n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
        }

    std::mt19937 rng(0);
    for (int trial = 0; trial < 200; ++trial) {
        Dfa d = random_dfa(rng, 6, 2 + (int)(rng() % 2));
        d = minimize(d);
        c.expect(is_prefix_convex(d) == convex_by_words(d, 8),
                 "random DFA trial " + std::to_string(trial) +
                     ": structural convexity disagrees with the word oracle");
    }
}

void criterion_structural() {
    Criterion c("8. structural properties (idempotence, atom counts, dichotomy, permutations)");
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        Dfa d = random_dfa(rng, 6, 2);
        const Dfa m = minimize(d);
        c.expect(minimize(m) == m, "minimize not idempotent on trial " + std::to_string(trial));
        const Dfa norm = minimize(restrict_alphabet(m, effective_alphabet(m)));
        c.expect(atom_count(norm) == complexity(reverse(norm)),
                 "atom count != reverse complexity on trial " + std::to_string(trial));
        if (is_prefix_convex(m))
            c.expect(check_ideal_or_empty(m),
                     "convex random DFA violates the ideal-or-empty dichotomy, trial " +
                         std::to_string(trial));
    }
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= n - 2; ++k)
            c.expect(check_proper_permutation_lemma(n, k),
                     "permutation lemma fails at n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
}

void criterion_table() {
    Criterion c("9. full default sweep exits 0 and emits the summary table");
#ifdef PCX_CLI_PATH
    const std::string cli = PCX_CLI_PATH;
    const std::string md_path = "acceptance_table.md";
    const std::string cmd = cli + " --format md --out " + md_path + " verify";
    const int rc = std::system(cmd.c_str());
    c.expect(rc == 0, "verify sweep exited with status " + std::to_string(rc));

    std::ifstream f(md_path);
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string md = buf.str();
    c.expect(md.find("| Measure | Ideal | Closed | Free | Proper |") != std::string::npos,
             "summary table header missing");
    for (const char* formula :
         {"n^(n-1)", "n^(n-2)", "2^(n-1)", "2^(n-2)+1", "(m+1)2^(n-2)", "m+n-2",
          "n^(n-1-k)(k+1)^k", "m-1-j+j2^(n-2)+2^(n-1)", "mn-(m+n-2)"})
        c.expect(md.find(formula) != std::string::npos,
                 std::string("formula missing from table: ") + formula);
    c.expect(md.find("✗") == std::string::npos, "summary table contains failing cells");
    c.expect(md.find("✓") != std::string::npos, "summary table contains no pass marks");
    std::remove(md_path.c_str());

    // Exit-code contract: usage errors exit 2.
    const int rc_usage = std::system((cli + " measure --op no-such-op --family regular --n 4"
                                      " >/dev/null 2>&1").c_str());
    c.expect(WIFEXITED(rc_usage) && WEXITSTATUS(rc_usage) == 2,
             "usage error did not exit with status 2");
#else
    c.expect(false, "CLI path not configured");
#endif
}

}  // namespace

int main() {
    criterion_semigroups();
    criterion_reverse_atoms();
    criterion_atom_complexities();
    criterion_star();
    criterion_product();
    criterion_boolean();
    criterion_classifier();
    criterion_structural();
    criterion_table();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
