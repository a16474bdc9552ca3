// L-algebras: a Lie algebra A acted on by L through derivations compatible
// with A's own product. Semidirect sums, irreducibility, L-homomorphisms.
//
// Row convention: the action of x_i is the matrix T_i with x_i.a = a·T_i, so
// operator composition θ(x)θ(y) is the matrix product T_y·T_x and the
// homomorphism law reads T_[xi,xj] = T_j·T_i − T_i·T_j.
#pragma once

#include <optional>

#include "liecrown/budget.hpp"
#include "liecrown/lie.hpp"

namespace liecrown {

struct SectionOrigin {
    Subspace a, b;      // the section a/b inside the acting algebra's ambient
    Mat rep_basis;      // rows: coset representatives of the carrier basis
};

struct LAlgebraModule {
    LieAlgebra acting;         // L
    LieAlgebra carrier;        // A (possibly abelian)
    std::vector<Mat> action;   // T_i per basis x_i of L
    std::optional<SectionOrigin> origin;

    u32 ldim() const { return acting.dim(); }
    u32 adim() const { return carrier.dim(); }

    // x.a for arbitrary x in L, a in A.
    Vec act(const Vec& x, const Vec& a) const;
    // The matrix of a ↦ x.a.
    Mat action_of(const Vec& x) const;
    bool abelian_carrier() const;

    std::size_t content_hash() const;
    bool operator==(const LAlgebraModule& o) const {
        return acting == o.acting && carrier == o.carrier && action == o.action;
    }
};

// Validates both module identities on all basis pairs; throws
// std::invalid_argument naming the first failing pair.
LAlgebraModule make_module(LieAlgebra L, LieAlgebra A, std::vector<Mat> action);

// The chief-factor (or general ideal-section) module: carrier = a/b with the
// induced bracket, action = adjoint through the section. b ⊆ a, both ideals.
LAlgebraModule chief_factor_module(const LieAlgebra& L, const Subspace& a, const Subspace& b);

// Ambient vector (inside a) -> carrier coordinates, and back.
Vec section_project(const LAlgebraModule& m, const PrimeField& F, const Vec& ambient);
Vec section_lift(const LAlgebraModule& m, const PrimeField& F, const Vec& carrier_coords);

// Same carrier, action pulled through a quotient of the acting algebra;
// requires the kernel to act trivially.
LAlgebraModule inflate_through_quotient(const LAlgebraModule& m, const QuotientMap& qm);

struct SemidirectSum {
    LieAlgebra algebra;   // dim A + dim L, carrier coordinates first
    Mat embed_carrier;    // dim A x (dim A + dim L)
    Mat embed_acting;     // dim L x (dim A + dim L)
    Subspace carrier_image;
    Subspace acting_image;
};
// (a1,x1)(a2,x2) = (x1.a2 − x2.a1 + a1a2, [x1,x2]); Jacobi re-validated.
SemidirectSum semidirect_sum(const LAlgebraModule& m);

// Exhaustive cyclic-submodule test over nonzero carrier vectors (scalar
// classes), budget-guarded by p^dim(A) ≤ limit.
bool is_irreducible(const LAlgebraModule& m, const Budget& budget = {});

// Basis of {φ : carrier1 → carrier2 linear, φ(x.a) = x.φ(a)}.
std::vector<Mat> hom_space(const LAlgebraModule& m1, const LAlgebraModule& m2);

// First bijective multiplicative intertwiner in canonical order, if any.
// Searches all p^h combinations when p^h fits the vector budget, otherwise
// single basis elements only (Unknown on failure in that mode).
VerdictWith<Mat> l_isomorphism(const LAlgebraModule& m1, const LAlgebraModule& m2,
                               const Budget& budget = {});

struct ICResult {
    Subspace c_l;  // kernel of the action
    Subspace i_l;  // preimage of ad_A(A) under the action
};
ICResult i_and_c(const LAlgebraModule& m);

// 1-dim trivial module over L.
LAlgebraModule trivial_module(const LieAlgebra& L);

}  // namespace liecrown
