// Canonical subspaces of F_p^n (RREF basis; equality = matrix equality),
// lattice operations, and deterministic lexicographic enumeration.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liecrown/budget.hpp"
#include "liecrown/matrix.hpp"

namespace liecrown {

struct Subspace {
    u32 n = 0;   // ambient dimension
    Mat basis;   // RREF, one row per dimension, pivots strictly increasing

    std::size_t dim() const { return basis.rows; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    static Subspace zero(u32 n);
    static Subspace full(u32 n);
    static Subspace span(const PrimeField& F, const Mat& rows, u32 n);
    static Subspace span_vectors(const PrimeField& F, const std::vector<Vec>& vs, u32 n);
    // Adopts a matrix already known to be in RREF (validated).
    static Subspace from_rref(Mat m, u32 n);

    bool operator==(const Subspace& o) const { return n == o.n && basis == o.basis; }

    // Residue of v after reduction against the basis; zero iff v ∈ U.
    Vec reduce(const PrimeField& F, Vec v) const;
    bool contains(const PrimeField& F, const Vec& v) const;
    bool contains(const PrimeField& F, const Subspace& o) const;
    bool proper_subspace_of(const PrimeField& F, const Subspace& o) const;
    // Coordinates of v in the basis rows (v must lie in the subspace).
    Vec coords(const Vec& v) const;

    std::size_t hash() const;

private:
    std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace sum(const PrimeField& F, const Subspace& u, const Subspace& v);
Subspace intersect(const PrimeField& F, const Subspace& u, const Subspace& v);

// Gaussian binomial [n, k]_p and the total subspace count, saturating at
// UINT64_MAX on overflow.
u64 gaussian_binomial(u32 n, u32 k, u32 p);
u64 galois_number(u32 n, u32 p);

// Streams the subspaces of F_p^n exactly once each, in lexicographic order of
// flattened RREF basis matrices (dimension ascending when no filter is given).
// The public entry charges count × (k·n) entry-cost against the budget;
// internal searches (charge_entry_cost = false) charge raw candidate count.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(const PrimeField& F, u32 ambient, std::optional<u32> dim_filter,
                       u64 budget_limit, bool charge_entry_cost = true);
    ~SubspaceEnumerator();

    std::optional<Subspace> next();
    u64 total_count() const { return total_count_; }

private:
    struct Gen;  // one pivot-column combination's odometer
    void open_dim(u32 k);
    const PrimeField& F_;
    u32 n_;
    std::optional<u32> filter_;
    u32 current_dim_ = 0;
    bool dims_done_ = false;
    u64 total_count_ = 0;
    std::vector<Gen> gens_;
    std::vector<std::size_t> heap_;  // indices into gens_, min-heap by matrix
    bool heap_less(std::size_t a, std::size_t b) const;
    void heap_sift();
};

}  // namespace liecrown
