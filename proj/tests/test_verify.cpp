#include <doctest.h>

#include <sstream>

#include "pcx/verify.hpp"

using namespace pcx;

namespace {

// Strip the elapsed_ms column for determinism comparisons.
std::string without_elapsed(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        auto cut = line.rfind(',');
        out += line.substr(0, cut);
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("a small sweep passes and reports deterministically") {
    VerifyOptions opts;
    opts.families = {WitnessFamily::Regular, WitnessFamily::RightIdeal};
    opts.measures = {Measure::Star, Measure::UnionR, Measure::UnionU};
    opts.m_range = {{3, 4}};
    opts.n_range = {{3, 4}};
    opts.jobs = 2;
    const VerifyReport a = run_sweep(opts);
    CHECK(a.all_passed());
    CHECK_FALSE(a.rows.empty());

    opts.jobs = 1;
    const VerifyReport b = run_sweep(opts);
    CHECK(without_elapsed(emit_csv(a)) == without_elapsed(emit_csv(b)));
}

TEST_CASE("undefined cells are skipped, not failed") {
    VerifyOptions opts;
    opts.families = {WitnessFamily::PrefixFree};
    opts.measures = {Measure::UnionR};
    opts.m_range = {{4, 4}};
    opts.n_range = {{4, 4}};
    const VerifyReport r = run_sweep(opts);
    CHECK(r.rows.empty());
    CHECK(r.all_passed());
}

TEST_CASE("proper cells expand over legal j and k") {
    VerifyOptions opts;
    opts.families = {WitnessFamily::Proper};
    opts.measures = {Measure::IntersectR};
    opts.m_range = {{4, 4}};
    opts.n_range = {{5, 5}};
    const VerifyReport r = run_sweep(opts);
    CHECK(r.rows.size() == 2 * 3);  // j in [1,2], k in [1,3]
    CHECK(r.all_passed());
}

TEST_CASE("markdown summary carries formulas and pass marks") {
    VerifyOptions opts;
    opts.families = {WitnessFamily::RightIdeal};
    opts.measures = {Measure::Star};
    opts.n_range = {{4, 5}};
    const std::string md = emit_markdown(run_sweep(opts));
    CHECK(md.find("| Star | `n+1` ✓") != std::string::npos);
    CHECK(md.find("| Measure | Ideal | Closed | Free | Proper |") != std::string::npos);
}

TEST_CASE("csv columns are fixed") {
    VerifyOptions opts;
    opts.families = {WitnessFamily::Regular};
    opts.measures = {Measure::Reverse};
    opts.n_range = {{3, 3}};
    const std::string csv = emit_csv(run_sweep(opts));
    CHECK(csv.rfind("family,measure,m,n,j,k,measured,bound,pass,elapsed_ms\n", 0) == 0);
    CHECK(csv.find("regular,reverse,,3,,,8,8,true,") != std::string::npos);
}
