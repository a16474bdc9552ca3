// Complement-status labels for chief series, the covering relation between
// ideal sections, crossing patterns, m-relatedness of chief factors, perfect
// matchings between the factors of two chief series, the descent
// configuration linking a non-complemented cover to a complemented factor,
// and the cc'-type variation bound on complemented-factor counts.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecrown/chief.hpp"
#include "liecrown/crowns.hpp"

namespace liecrown {

// Covering arithmetic between ideal sections: upper covers lower when
// upper.top = upper.bottom + lower.top and upper.bottom ∩ lower.top =
// lower.bottom. Pure subspace arithmetic; the sections need not be chief.
bool covers(const LieAlgebra& L, const IdealSection& upper, const IdealSection& lower);

struct FactorLabel {
    IdealSection section;
    bool abelian = false;
    bool frattini = false;      // decided: the factor lies under every maximal subalgebra
    bool supplemented = false;  // decided: some maximal subalgebra supplements it
    Verdict c;                  // complemented by a subalgebra
    Verdict m;                  // complemented by a maximal subalgebra
    Verdict frattini_verdict;   // the verdict behind the two booleans
};

struct SeriesLabels {
    std::vector<FactorLabel> labels;
    u32 c_count = 0;  // decided-yes counts
    u32 m_count = 0;
    u32 frattini_count = 0;
    bool exact = true;  // every verdict decided
};

SeriesLabels label_series(const LieAlgebra& L, const ChiefSeries& s, const Budget& budget = {});

// A crossing: a Frattini chief factor covering a chief factor that is
// supplemented by a maximal subalgebra.
struct MCrossing {
    IdealSection upper;  // Frattini chief factor U/V
    IdealSection lower;  // supplemented chief factor W/X; U = V + W, V ∩ W = X
};

std::vector<MCrossing> m_crossings(const LieAlgebra& L, const Budget& budget = {});

// Two chief factors are m-related when one of four covering patterns links
// them: (1) a supplemented chief factor covers both; (2) a crossing
// [U/V over W/X] with V/X covering the first and W/X covering the second;
// (3) both cover a common Frattini chief factor; (4) a crossing with the
// first covering U/V and the second covered by U/W. The scan runs the cases
// in that order and returns the first witness.
struct MRelatedReport {
    Verdict related;
    int case_tag = 0;                   // 1..4: the pattern that produced the witness
    std::optional<IdealSection> cover;  // cases 1 and 3: the linking chief factor
    std::optional<MCrossing> crossing;  // cases 2 and 4
};

MRelatedReport m_related(const LieAlgebra& L, const IdealSection& f1, const IdealSection& f2,
                         const Budget& budget = {});

struct MatchedPair {
    u32 i = 0, j = 0;  // positions in the first and second series (0-based)
    int case_tag = 0;
    Verdict equivalent;            // matched factors are equivalent
    Verdict status_agree;          // both Frattini or both supplemented
    bool m_literal_agree = false;  // diagnostic: both m-factors or both m'-factors
    // For pairs of m-factors: a maximal subalgebra complementing both.
    Verdict max_complement_found;
    std::optional<Subspace> max_complement;
    // For pairs of m'-factors: 1 = neither complemented, 2 = both complemented
    // (and nonabelian), 3 = mixed. 0 = not a pair of m'-factors.
    int mprime_case = 0;
    Verdict mixed_config;  // case 3 only: the descent configuration exists
};

struct SeriesMatch {
    std::vector<u32> pi;  // factor i of the first series matches factor pi[i] of the second
    std::vector<MatchedPair> pairs;
    u64 matching_count = 0;  // perfect matchings of the m-related graph
    bool exact = true;       // every edge and label decided
    bool violation = false;  // decided edges admit no perfect matching
    std::string note;
};

// Builds the m-related graph between the factors of the two series,
// enumerates every perfect matching (series length at most 8), and reports
// the first matching with its per-pair checks. Budget exhaustion degrades to
// exact = false with a note instead of throwing; series of different lengths
// are rejected with invalid_argument.
SeriesMatch series_permutation(const LieAlgebra& L, const ChiefSeries& s1, const ChiefSeries& s2,
                               const Budget& budget = {});

// The ideal configuration that links a non-complemented cover (upper) to a
// complemented nonabelian factor (lower): with I and C the inner-action
// idealizer and centralizer of the lower factor, an ideal X ⊆ I with
// N = X ∩ C interpolates: I/C covers the upper factor and X/N, X/N covers
// the lower factor, I/C has no complement while X/N has one, and L/C is
// primitive of type 2 with socle I/C.
struct DescentConfig {
    Subspace I, C, X, N;
    Verdict hypotheses;              // upper covers lower; both nonabelian; X an ideal inside I
    Verdict covers_upper;            // I/C covers the upper factor
    Verdict upper_not_complemented;  // I/C has no complement
    Verdict lower_covered;           // X/N covers the lower factor
    Verdict chain;                   // I/C covers X/N
    Verdict lower_complemented;      // X/N has a complement
    Verdict primitive_type2;         // L/C primitive of type 2 with socle I/C
    std::string note;
};

DescentConfig descent_configuration(const LieAlgebra& L, const IdealSection& upper,
                                    const IdealSection& lower, const Subspace& X,
                                    const std::optional<Subspace>& lower_complement = {},
                                    const Budget& budget = {});

// Search form: scans the ideals of L for an X completing the configuration.
VerdictWith<DescentConfig> find_descent_configuration(const LieAlgebra& L,
                                                      const IdealSection& upper,
                                                      const IdealSection& lower,
                                                      const Budget& budget = {});

struct CcClassReport {
    FactorClass cls;
    Verdict cc;                      // the class is of cc'-type
    bool strict_chain = false;       // E_core ⊂ D ⊂ I with both inclusions proper
    Verdict socle_not_complemented;  // Soc(P) is a non-complemented factor of P = L/C
};

struct MixedPairCheck {
    u32 series_a = 0, series_b = 0;  // indices into the chief-series list
    u32 i = 0, j = 0;                // matched factor positions
    int mprime_case = 0;
    Verdict config_ok;
};

struct CcTypeReport {
    std::vector<CcClassReport> classes;
    u32 v_lower = 0, v_upper = 0;  // bounds on the number of cc'-type classes
    bool v_exact = true;
    std::vector<u32> c_counts;  // decided-yes complemented-factor count per chief series
    bool c_counts_exact = true;
    bool spread_ok = false;  // max - min over c_counts ≤ the v bound
    std::vector<MixedPairCheck> mixed_pairs;  // every matched pair of m'-factors
    std::string note;
};

// Evaluates cc'-type for every factor class (strict chain E_core ⊂ D ⊂ I and
// a non-complemented socle in the primitive image L/C), counts complemented
// factors on every chief series, checks the spread against the cc'-class
// count, and verifies the descent configuration on every matched pair of
// m'-factors with mixed complement status. Budget exhaustion degrades to
// inexact flags and notes; it never throws.
CcTypeReport cc_type_and_variation(const LieAlgebra& L, const Budget& budget = {});

}  // namespace liecrown
