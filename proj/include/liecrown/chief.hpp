// Chief structure of a finite-dimensional Lie algebra over GF(p): minimal
// ideals, chief series, the full ideal lattice, maximal subalgebras and the
// Frattini ideal, complement/supplement search for chief factors, socle,
// cores, and primitive-type classification.
//
// Search-space conventions: vector sweeps charge p^dim against
// Budget::vectors(); full subspace sweeps charge entry cost against
// Budget::subspaces(); series/ideal enumeration charges Budget::series().
// Lists of subspaces are returned in canonical order (dimension ascending,
// then flattened RREF basis lexicographic) unless stated otherwise.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecrown/budget.hpp"
#include "liecrown/lie.hpp"

namespace liecrown {

// Strict weak order underlying the canonical subspace order.
bool subspace_less(const Subspace& a, const Subspace& b);

// Ascending chain 0 = chain[0] < ... < chain.back() = L in which every step
// is a minimal ideal of the quotient by its predecessor.
struct ChiefSeries {
    std::vector<Subspace> chain;
    u32 length() const { return chain.empty() ? 0 : u32(chain.size() - 1); }
};

// All minimal ideals. Every minimal ideal is the ideal closure of any of its
// nonzero vectors, so the sweep closes each vector and keeps the minimal
// results. Charges p^dim vectors.
std::vector<Subspace> minimal_ideals(const LieAlgebra& L, const Budget& budget = {});

// Sum of all minimal ideals.
Subspace socle_of(const LieAlgebra& L, const Budget& budget = {});

// Every maximal chain of ideals of L from h to k (h ⊆ k, both ideals of L);
// each step is a minimal ideal of L/X_i inside k/X_i. The number of chains
// produced is charged against the series budget.
std::vector<ChiefSeries> chief_series_between(const LieAlgebra& L, const Subspace& h,
                                              const Subspace& k, const Budget& budget = {});
std::vector<ChiefSeries> all_chief_series(const LieAlgebra& L, const Budget& budget = {});

// The full ideal lattice (every ideal lies on some chief series, so the
// memoized chief-series DFS visits all of them). Charged against the series
// budget by distinct ideal count.
std::vector<Subspace> all_ideals(const LieAlgebra& L, const Budget& budget = {});

// Ideal pairs (top, bottom) with bottom < top and no ideal strictly between:
// the chief factors of L presented as sections.
struct IdealSection {
    Subspace top, bottom;

    bool operator==(const IdealSection&) const = default;
};
std::vector<IdealSection> chief_factor_sections(const LieAlgebra& L, const Budget& budget = {});

// True when s is a proper subalgebra and every vector outside s grows its
// subalgebra closure to all of L. Charges p^dim vectors.
bool is_maximal_subalgebra(const LieAlgebra& L, const Subspace& s, const Budget& budget = {});

// Grows a proper subalgebra along canonical vectors until maximal; identity
// on subalgebras that are already maximal.
Subspace grow_to_maximal(const LieAlgebra& L, Subspace s, const Budget& budget = {});

struct MaximalsReport {
    std::vector<Subspace> maximals;  // every maximal proper subalgebra
    Subspace frattini;               // largest ideal inside their intersection
    SearchMode mode = SearchMode::Exhaustive;
};
// Exhaustive sweep over all proper subspaces, dimension descending, so each
// subalgebra is maximal iff it lies in no previously collected maximal.
// Total entry cost is charged upfront against the subspace budget.
MaximalsReport maximal_subalgebras_and_frattini(const LieAlgebra& L, const Budget& budget = {});

// M complements a/b when M is a subalgebra with a + M = L and a ∩ M = b;
// M supplements a/b when M is a subalgebra with a + M = L and b ⊆ M.
bool is_complement_of(const LieAlgebra& L, const Subspace& a, const Subspace& b,
                      const Subspace& m);
bool is_supplement_of(const LieAlgebra& L, const Subspace& a, const Subspace& b,
                      const Subspace& m);

// Independent route: fixed-dimension subspace sweep in L/b for complements of
// a/b. Complete when it returns; throws BudgetError when infeasible.
std::vector<Subspace> complement_subspace_scan(const LieAlgebra& L, const Subspace& a,
                                               const Subspace& b, const Budget& budget = {});

struct FactorComplements {
    std::vector<Subspace> complements;  // in L, each contains b
    std::vector<Subspace> supplements;  // witnesses found (complements included)
    bool complements_exhaustive = false;
    Verdict is_c;      // complemented by some subalgebra
    Verdict is_m;      // complemented by some maximal subalgebra
    Verdict frattini;  // a/b lies inside the Frattini ideal of L/b
};
// Complement search for the chief factor a/b. Nonabelian factors are settled
// exhaustively through the cocycle sweep (every complement is the kernel of a
// carrier-valued map whose twist is centralized by a); abelian factors use
// the subspace scan. On budget exhaustion, hints and cheap candidate pools
// are verified as witnesses and undecided verdicts stay Unknown. The Frattini
// verdict is settled by a complement witness or by the maximal-subalgebra
// sweep of L/b, never by classification theorems.
FactorComplements factor_complements(const LieAlgebra& L, const Subspace& a, const Subspace& b,
                                     const Budget& budget = {},
                                     const std::vector<Subspace>& hints = {});

enum class PrimitiveKind : std::uint8_t { NotPrimitive, Type1, Type2, Type3, Undecided };
const char* to_string(PrimitiveKind k);

struct PrimitiveReport {
    Subspace socle;
    std::optional<Subspace> core;     // core of the supplied candidate or the witness
    PrimitiveKind kind = PrimitiveKind::Undecided;
    std::optional<Subspace> witness;  // core-free maximal subalgebra
    SearchMode mode = SearchMode::Exhaustive;
    std::string note;  // structural cross-check failures; empty when all pass
};
// Primitive ⟺ some maximal subalgebra has zero core. A supplied candidate u
// that verifies as a core-free maximal settles primitivity in witness mode;
// otherwise an exhaustive maximal sweep decides (BudgetError ⇒ Undecided).
// The type is read off the minimal-ideal structure and cross-checked: one
// abelian minimal ideal (self-centralizing, complemented by the witness);
// one nonabelian (trivial centralizer); two nonabelian (each the centralizer
// of the other, both projections of (A+B) ∩ witness bijective).
PrimitiveReport socle_core_primitive(const LieAlgebra& L, std::optional<Subspace> u = {},
                                     const Budget& budget = {});

}  // namespace liecrown
