#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcx/bounds.hpp"
#include "pcx/measures.hpp"
#include "pcx/witnesses.hpp"

namespace pcx {

/// One row of a verification sweep: a (family, measure, size) cell, the
/// value measured on the witness pair, and the closed-form bound.
struct ReportRow {
    WitnessFamily family;
    Measure measure;
    int m = 0;  // 0 marks "not applicable" in output
    int n = 0;
    int j = 0;
    int k = 0;
    std::int64_t measured = 0;
    BoundInt bound = 0;
    bool pass = false;
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::vector<ReportRow> rows;
    bool all_passed() const;
};

struct VerifyOptions {
    std::vector<WitnessFamily> families;      // empty = all six
    std::vector<Measure> measures;            // empty = all sweep measures
    std::optional<std::pair<int, int>> m_range;
    std::optional<std::pair<int, int>> n_range;
    int jobs = 0;                             // 0 = logical CPUs
    unsigned seed = 0;                        // word sampling for sanity checks
    int sanity_words = 8;                     // random words per binary cell
};

/// Runs every in-range (family, measure, size) cell against the bound
/// oracle. Cells whose bound is undefined (excluded parameters) are
/// skipped. Rows come back sorted by (family, measure, m, n, j, k)
/// regardless of worker scheduling.
VerifyReport run_sweep(const VerifyOptions& opts);

std::string emit_csv(const VerifyReport& report);
std::string emit_json(const VerifyReport& report);
/// Summary table in the layout of the complexity table for the four
/// prefix-convex classes: one formula and one pass mark per cell.
std::string emit_markdown(const VerifyReport& report);

/// Formula string displayed for a (family, measure) cell of the summary.
std::string bound_formula(WitnessFamily f, Measure m);

}  // namespace pcx
