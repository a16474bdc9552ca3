// 1-cocycles of L-algebras: Z¹ spaces, twisted actions, common cocycle
// kernels, L-equivalence with explicit witnesses, complement construction for
// nonabelian chief factors, and descent of cocycles through trivially-acting
// ideals.
//
// A 1-cocycle is a linear map β : L → A with
//   β([x,y]) = x.β(y) − y.β(x) + [β(x), β(y)]_A
// stored as a matrix whose row i is β(x_i) (same row convention as lie.hpp).
#pragma once

#include <optional>

#include "liecrown/lmodule.hpp"

namespace liecrown {

using Cocycle = Mat;  // ldim × adim; row i = β(x_i)

// Re-validates the defining identity on every basis pair, independently of
// how the candidate was produced.
bool is_cocycle(const LAlgebraModule& m, const Cocycle& beta);

struct CocycleSet {
    // True: Z¹ is a linear space and `basis` is an F-basis of it (abelian
    // carriers). False: `elements` lists every member in a deterministic
    // order whose first entry is the zero cocycle.
    bool basis_form = false;
    std::vector<Cocycle> basis;
    std::vector<Cocycle> elements;
    bool complete = true;

    u32 p = 0;           // field size, for counting
    u32 z1_dim() const;  // basis form only
    u64 size() const;    // element count (saturates at u64 max)
};

// Z¹(L, A). Abelian carriers reduce to one linear solve (no budget).
// Nonabelian carriers are enumerated through assignments on a minimized
// generating set of L: p^(g·dim A) candidates are extended along bracket
// words and every survivor is re-validated on all basis pairs. Throws
// BudgetError naming the generator count when the candidate count exceeds
// the cocycle budget.
CocycleSet cocycle_space(const LAlgebraModule& m, const Budget& budget = {});

// The generator-assignment enumeration unconditionally, also for abelian
// carriers. Cross-check entry: must agree with cocycle_space elementwise.
CocycleSet cocycle_space_enumerated(const LAlgebraModule& m, const Budget& budget = {});

// Expands an abelian-form set into the explicit element list (p^dim entries;
// guarded by the vector budget). Nonabelian sets pass through unchanged.
std::vector<Cocycle> explicit_cocycles(const LAlgebraModule& m, const CocycleSet& zs,
                                       const Budget& budget = {});

// The twisted module A_β: same carrier algebra, action θ_β(x) = ad_A(β(x)) + θ(x).
// The module identities are re-validated from scratch; a non-cocycle β fails.
LAlgebraModule twist(const LAlgebraModule& m, const Cocycle& beta);

struct ELResult {
    // ∩ { ker α : α ∈ Z¹(L,A) } as a subspace of L.
    Subspace raw;
    // Largest ideal of A⋊L contained in `raw`, written in L coordinates.
    Subspace core;
    // False when the cocycle enumeration hit its budget; `raw` is then the
    // trivial upper bound L and `core` its core.
    bool exact = true;
};
ELResult e_l(const LAlgebraModule& m, const Budget& budget = {});

// dim B¹(L,A) = rank { x ↦ x.a : a ∈ A }. Abelian carriers only.
u32 coboundary_dim(const LAlgebraModule& m);
// dim H¹ = dim Z¹ − dim B¹. Abelian carriers only.
u32 h1_dim(const LAlgebraModule& m);

struct EquivalenceWitness {
    Cocycle beta;  // ∈ Z¹(L, carrier of m2)
    Mat phi;       // L-isomorphism carrier(m1) → carrier(m2)_β, rows = images
};

// A ∼ B: some twist B_β of B is L-isomorphic to A. Abelian carriers twist
// trivially, so the test collapses to plain L-isomorphism there; nonabelian
// carriers sweep Z¹(L, B) in canonical order and return the first witness.
VerdictWith<EquivalenceWitness> l_equivalent(const LAlgebraModule& m1,
                                             const LAlgebraModule& m2,
                                             const Budget& budget = {});

struct TwistComplementResult {
    Verdict complemented;
    std::optional<LAlgebraModule> witness_module;  // the centralized twist
    std::optional<Cocycle> witness_cocycle;
    std::optional<Subspace> complement;            // M: L = M + a and M ∩ a = b
};

// Decides complementation of a nonabelian chief factor a/b by searching for
// a twist (a/b)_α whose centralizer contains a; the kernel of such an α is a
// complement, and the sweep over Z¹(L, a/b) is complete for this purpose.
// Preconditions (std::invalid_argument): a, b ideals, b ⊂ a, section
// nonabelian and irreducible.
TwistComplementResult complement_by_twist(const LieAlgebra& L, const Subspace& a,
                                          const Subspace& b, const Budget& budget = {});

struct DescentReport {
    bool ideal_inside_common_kernel = false;  // n ⊆ ∩ ker α
    u32 z1_dim_full = 0, z1_dim_quotient = 0;
    u32 h1_dim_full = 0, h1_dim_quotient = 0;
    bool z1_equal = false;
    bool h1_equal = false;
    // The three conditions above are provably equivalent; false here would
    // expose a defect in one of the computations.
    bool consistent = false;
};

// For an abelian irreducible module and an ideal n acting trivially on it:
// evaluates (1) n ⊆ ∩ ker α, (2) dim Z¹(L,A) = dim Z¹(L/n,A), and
// (3) dim H¹(L,A) = dim H¹(L/n,A), and checks they agree.
// Preconditions (std::invalid_argument): carrier abelian and irreducible,
// n an ideal of the acting algebra with n ⊆ C_L(A).
DescentReport cocycle_descent(const LAlgebraModule& m, const Subspace& n,
                              const Budget& budget = {});

}  // namespace liecrown
