// Crowns of irreducible L-algebras: the distinguished ideals I, C, D, E, J,
// the crown quotient I/D, the connectedness relation on chief factors, and
// the resulting equivalence classes along a chief series.
//
// Conventions: an empty intersection family leaves D (respectively J) at the
// lattice top I. The unbounded quantifier "all L-algebras equivalent to the
// carrier" is realized as the twist family {A_α : α ∈ Z¹(L, A)}, which covers
// every equivalence witness for irreducible carriers.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecrown/chief.hpp"
#include "liecrown/cohomology.hpp"

namespace liecrown {

struct CrownRecord {
    LAlgebraModule module;  // the reference irreducible L-algebra A
    Subspace I;             // elements acting as some inner derivation of A
    Subspace C;             // kernel of the action
    Subspace D;       // ∩ ideals R ⊆ I with I/R equivalent to A and non-Frattini
    Subspace E_raw;   // ∩ { ker α : α ∈ Z¹(L, A) }
    Subspace E_core;  // largest ideal of A⋊L inside E_raw, in L coordinates
    Subspace J;       // ∩ C_L(A_α) over twists isomorphic to no chief factor
    QuotientMap crown;  // the crown algebra I/D (parent = I with induced table)
    // Exactness per intersection: false when a budget cut or an undecided
    // membership test may have dropped a family member, making the stored
    // value an upper bound in the ideal lattice.
    bool d_exact = true;
    bool e_exact = true;
    bool j_exact = true;
    std::string note;
};

// The crown data of an irreducible L-algebra. The acting algebra of m must
// be L itself (std::invalid_argument otherwise, likewise for carriers that
// are decidably reducible).
CrownRecord crown_data(const LieAlgebra& L, const LAlgebraModule& m, const Budget& budget = {});

// The four equivalent characterizations of connectedness for two chief
// factors, each evaluated by its own search so their agreement is a testable
// property rather than an assumption:
//   equivalent             — some twist of one section module is isomorphic
//                            to the other (the equivalence relation itself);
//   connected              — the factors are isomorphic, or some quotient
//                            L/K is primitive with two nonabelian minimal
//                            ideals isomorphic to the two factors;
//   common_max_complement  — isomorphic, or isomorphic chief-factor copies
//                            of the two share a maximal complement;
//   common_complement      — isomorphic, or such copies share a complement.
struct ConnectedReport {
    Verdict equivalent;
    Verdict connected;
    Verdict common_max_complement;
    Verdict common_complement;
    std::optional<Subspace> complement_witness;  // for the two complement forms
    std::optional<Subspace> type3_kernel;        // K with L/K primitive type 3
};

ConnectedReport l_connected(const LieAlgebra& L, const IdealSection& f1, const IdealSection& f2,
                            const Budget& budget = {});

struct FactorClass {
    std::vector<u32> indices;           // 0-based factor positions in the series
    std::vector<IdealSection> members;  // same order; members[0] is the representative
    u32 dim = 0;                        // common factor dimension
    bool abelian = false;               // common abelian flag
};

struct FactorClassification {
    std::vector<FactorClass> classes;  // ordered by first member position
    // False when an undecided pair forced a conservative refinement: the true
    // partition can only merge the reported classes, never split them.
    bool exact = true;
};

// Partition of the series' factors under connectedness.
FactorClassification factor_classes(const LieAlgebra& L, const ChiefSeries& s,
                                    const Budget& budget = {});

}  // namespace liecrown
