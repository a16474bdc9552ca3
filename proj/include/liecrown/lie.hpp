// Lie algebras over GF(p) as antisymmetric structure-constant tables with
// mandatory Jacobi validation; ideals, centralizers, quotients, solvability.
//
// Vector convention: elements are row vectors; a linear map f is the matrix M
// whose row r is f(e_r), applied as v ↦ v·M.
#pragma once

#include <string>
#include <vector>

#include "liecrown/subspace.hpp"

namespace liecrown {

class LieAlgebra;

// Incremental table builder: set [e_i, e_j] for i < j, then build() validates
// antisymmetry-by-construction plus the Jacobi identity on all basis triples.
class LieAlgebraBuilder {
public:
    LieAlgebraBuilder(PrimeField F, u32 dim);
    // Accepts any i != j; stores antisymmetrically. Coefficients reduced mod p.
    void set(u32 i, u32 j, Vec value);
    void add_term(u32 i, u32 j, u32 coeff, u32 k);  // [e_i,e_j] += coeff * e_k
    LieAlgebra build(std::vector<std::string> names = {}) const;

private:
    PrimeField F_;
    u32 n_;
    std::vector<Vec> upper_;  // index pair_index(i,j), i < j
    friend class LieAlgebra;
};

class LieAlgebra {
public:
    const PrimeField& field() const { return F_; }
    u32 dim() const { return n_; }
    const std::vector<std::string>& names() const { return names_; }

    // [e_i, e_j] for any i, j (antisymmetry synthesized).
    Vec basis_bracket(u32 i, u32 j) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    // Matrix of v ↦ [x, v] (row convention).
    Mat ad(const Vec& x) const;

    bool is_subalgebra(const Subspace& s) const;
    bool is_ideal(const Subspace& s) const;
    // Smallest subalgebra (or ideal) containing the generators.
    Subspace closure(const std::vector<Vec>& gens, bool ideal_mode) const;

    // C_L(a/b) = {x : [x, a] ⊆ b}; requires b ⊆ a, both ideals.
    Subspace centralizer_of_section(const Subspace& a, const Subspace& b) const;
    Subspace center() const;
    // span{[u, v] : u, v ∈ s}.
    Subspace derived_subalgebra_of(const Subspace& s) const;
    std::vector<Subspace> derived_series() const;
    bool is_solvable() const;
    bool is_abelian_section(const Subspace& a, const Subspace& b) const;
    // Largest ideal of L contained in u (the core of u).
    Subspace core_of(const Subspace& u) const;

    bool operator==(const LieAlgebra& o) const {
        return F_ == o.F_ && n_ == o.n_ && upper_ == o.upper_;
    }
    std::size_t content_hash() const;

private:
    friend class LieAlgebraBuilder;
    LieAlgebra(PrimeField F, u32 n, std::vector<Vec> upper, std::vector<std::string> names);
    std::size_t pair_index(u32 i, u32 j) const {  // requires i < j
        return std::size_t(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
    }

    PrimeField F_;
    u32 n_;
    std::vector<Vec> upper_;
    std::vector<std::string> names_;
};

struct SubInfo {
    Subspace space;
    bool is_subalgebra = false;
    bool is_ideal = false;
};
SubInfo classify_subspace(const LieAlgebra& L, const Subspace& s);

struct QuotientMap {
    LieAlgebra parent;
    Subspace kernel;
    LieAlgebra quotient;
    Mat section;     // rows = coset representatives of the quotient basis
    Mat projection;  // row r = image of parent e_r in quotient coordinates

    Vec project(const Vec& v) const;
    Vec lift(const Vec& w) const;
    // Preimage of a subspace of the quotient (always contains the kernel).
    Subspace pull_back(const Subspace& s) const;
    // Image of a subspace of the parent.
    Subspace push_forward(const Subspace& s) const;
};

// Quotient by an ideal; representatives are the non-pivot coordinates of the
// ideal's RREF basis, so tables are reproducible across runs.
QuotientMap quotient(const LieAlgebra& L, const Subspace& ideal);

struct StructurePredicates {
    Subspace center;
    std::vector<Subspace> derived_series;
    bool is_solvable = false;
    bool jacobi_ok = true;  // constructor-enforced
};
StructurePredicates structure_predicates(const LieAlgebra& L);

}  // namespace liecrown
