// Lossless analysis snapshots: structure summary, per-series factor labels,
// crown records per linkage class, primitive type, and the complemented-count
// variation data, with canonical JSON and plain-text renderings.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecrown/chief.hpp"
#include "liecrown/classify.hpp"
#include "liecrown/crowns.hpp"

namespace liecrown {

struct FactorReport {
    IdealSection section;
    u32 dim = 0;
    bool abelian = false;
    Verdict c, m, frattini;

    bool operator==(const FactorReport&) const = default;
};

struct SeriesReport {
    std::vector<Subspace> chain;
    std::vector<FactorReport> factors;
    u32 c_count = 0, m_count = 0, frattini_count = 0;
    bool exact = true;

    bool operator==(const SeriesReport&) const = default;
};

struct CrownReport {
    IdealSection representative;  // first member of the linkage class
    u32 members = 0;
    bool abelian = false;
    Subspace I, C, D, E_raw, E_core, J;
    bool d_exact = true, e_exact = true, j_exact = true;

    bool operator==(const CrownReport&) const = default;
};

struct PrimitiveSummary {
    std::string kind;  // to_string(PrimitiveKind)
    Subspace socle;
    std::optional<Subspace> witness;  // core-free maximal subalgebra
    bool exhaustive = true;

    bool operator==(const PrimitiveSummary&) const = default;
};

struct VariationSummary {
    u32 v_lower = 0, v_upper = 0;
    bool v_exact = true;
    std::vector<u32> c_counts;  // per chief series
    bool c_counts_exact = true;
    u32 spread = 0;  // max - min over c_counts
    bool spread_ok = true;

    bool operator==(const VariationSummary&) const = default;
};

struct AnalysisReport {
    u32 dim = 0;
    u32 p = 0;
    bool solvable = false;
    Subspace center, derived;
    std::optional<Subspace> socle;     // absent when the sweep was budget-limited
    std::optional<Subspace> frattini;  // the Frattini ideal, same caveat
    std::vector<SeriesReport> series;  // the first chief series, or all of them
    std::vector<CrownReport> crowns;   // one per linkage class of the first series
    std::optional<PrimitiveSummary> primitive;
    VariationSummary variation;
    bool exact = true;  // every component decided exhaustively
    std::string note;   // first budget limitation encountered, if any

    bool operator==(const AnalysisReport&) const = default;
};

// Runs the full pipeline. Budget exhaustion in any component degrades that
// component (absent optional, inexact flag, note) instead of throwing.
AnalysisReport analyze(const LieAlgebra& L, bool all_series, const Budget& budget = {});

// Canonical JSON: alphabetically sorted keys, two-space indentation,
// subspaces as {"ambient": n, "rows": [[row-reduced basis rows]]}. The text
// parses back into an equal AnalysisReport.
std::string report_to_json(const AnalysisReport& r);
// Throws std::runtime_error on malformed or schema-violating input.
AnalysisReport report_from_json(const std::string& text);

// Human-readable rendering; deterministic for equal reports.
std::string report_to_text(const AnalysisReport& r);

}  // namespace liecrown
