// Built-in corpus of small Lie algebras, structure-constant file I/O, and a
// seeded random solvable generator for property fuzzing.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecrown/lie.hpp"

namespace liecrown {

struct AlgebraSpec {
    std::string name;
    std::string description;
    u32 dim = 0;
    u32 min_p = 2;                 // characteristic constraint: p >= min_p
    std::optional<u32> exact_p;    // fixed characteristic when present
    bool permits(u32 p) const { return exact_p ? p == *exact_p : p >= min_p; }
};

// Corpus entries: ab(1..3), r2, h3, h3ab, sl2 (p >= 3), sl2sl2 (p >= 3),
// ex1 (p = 7, dim 36).
std::vector<AlgebraSpec> catalog_entries();

class UnsupportedCharacteristic : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Accepts "ab(N)"/"abN", "r2", "h3", "h3ab", "sl2", "sl2sl2", "ex1".
LieAlgebra builtin(const std::string& name, u32 p);

// Dim-36 algebra L = X0 ⋊ U0 over GF(7) with its named subspaces and the
// verified identity witnesses; see ex1_bundle() in catalog.cpp for the
// construction and checks.
struct Example1Bundle {
    LieAlgebra L;        // dim 36
    Subspace X, U, B, W, C, I;
    // witness algebra-isomorphism data for W -> B and W -> C (U-equivariant)
    Mat w_to_b;          // dim(W) x dim(B) in section coordinates
    Mat w_to_c;
};
Example1Bundle ex1_bundle();

// Structure-constant text format:
//   field: p
//   dim: n
//   [i,j] = k1*c1 + k2*c2 ...        (i < j, 0-indexed; omitted pairs = 0)
// serialize() is canonical: sorted keys, coefficients in [1,p), single spaces.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line(line),
          col(col) {}
    std::size_t line, col;
};

LieAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const LieAlgebra& L);

// Deterministic solvable fuzz sample: bracket-closure of seeded strictly
// upper-triangular matrices under commutator. Requires p in {2,3}, bound <= 6.
LieAlgebra random_solvable(u32 dim_bound, u32 p, u64 seed);

}  // namespace liecrown
