#include "liecrown/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "liecrown/lmodule.hpp"

namespace liecrown {

namespace {

LieAlgebra make_abelian(const PrimeField& F, u32 n) {
    return LieAlgebraBuilder(F, n).build();
}

LieAlgebra make_r2(const PrimeField& F) {
    LieAlgebraBuilder b(F, 2);
    b.add_term(0, 1, 1, 1);  // [e1,e2] = e2
    return b.build();
}

LieAlgebra make_h3(const PrimeField& F) {
    LieAlgebraBuilder b(F, 3);
    b.add_term(0, 1, 1, 2);  // [e1,e2] = e3
    return b.build();
}

LieAlgebra make_h3ab(const PrimeField& F) {
    LieAlgebraBuilder b(F, 4);
    b.add_term(0, 1, 1, 2);  // Heisenberg block plus a central line
    return b.build();
}

// Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra make_sl2(const PrimeField& F) {
    LieAlgebraBuilder b(F, 3);
    b.add_term(0, 1, 1, 2);
    b.add_term(2, 0, 2, 0);
    b.add_term(2, 1, F.neg(2), 1);
    return b.build({"e", "f", "h"});
}

LieAlgebra make_sl2sl2(const PrimeField& F) {
    LieAlgebraBuilder b(F, 6);
    for (u32 off : {0u, 3u}) {
        b.add_term(off + 0, off + 1, 1, off + 2);
        b.add_term(off + 2, off + 0, 2, off + 0);
        b.add_term(off + 2, off + 1, F.neg(2), off + 1);
    }
    return b.build({"e", "f", "h", "e'", "f'", "h'"});
}

std::optional<u32> parse_ab_dim(const std::string& name) {
    std::string digits;
    if (name.rfind("ab(", 0) == 0 && name.back() == ')')
        digits = name.substr(3, name.size() - 4);
    else if (name.rfind("ab", 0) == 0)
        digits = name.substr(2);
    else
        return std::nullopt;
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
        return std::nullopt;
    unsigned long v = std::stoul(digits);
    if (v == 0 || v > 64) throw std::invalid_argument("abelian dimension out of range: " + name);
    return u32(v);
}

}  // namespace

std::vector<AlgebraSpec> catalog_entries() {
    return {
        {"ab(1)", "abelian, dim 1", 1, 2, std::nullopt},
        {"ab(2)", "abelian, dim 2", 2, 2, std::nullopt},
        {"ab(3)", "abelian, dim 3", 3, 2, std::nullopt},
        {"r2", "non-abelian solvable, dim 2: [e1,e2] = e2", 2, 2, std::nullopt},
        {"h3", "Heisenberg, dim 3: [e1,e2] = e3", 3, 2, std::nullopt},
        {"h3ab", "Heisenberg plus a central line, dim 4", 4, 2, std::nullopt},
        {"sl2", "simple rank 1, dim 3 (p >= 3)", 3, 3, std::nullopt},
        {"sl2sl2", "direct sum of two copies of sl2, dim 6 (p >= 3)", 6, 3, std::nullopt},
        {"ex1", "current-algebra semidirect sum over GF(7), dim 36", 36, 7, 7},
    };
}

LieAlgebra builtin(const std::string& name, u32 p) {
    PrimeField F(p);
    if (auto n = parse_ab_dim(name)) return make_abelian(F, *n);
    if (name == "r2") return make_r2(F);
    if (name == "h3") return make_h3(F);
    if (name == "h3ab") return make_h3ab(F);
    if (name == "sl2" || name == "sl2sl2") {
        if (p < 3)
            throw UnsupportedCharacteristic(name + " requires characteristic >= 3, got " +
                                            std::to_string(p));
        return name == "sl2" ? make_sl2(F) : make_sl2sl2(F);
    }
    if (name == "ex1") {
        if (p != 7)
            throw UnsupportedCharacteristic("ex1 is defined at characteristic 7, got " +
                                            std::to_string(p));
        return ex1_bundle().L;
    }
    throw std::invalid_argument("unknown catalog entry: " + name);
}

// L = X0 ⋊ U0 over GF(7), built from the truncated current algebra
// L0 = sl2 ⊗ O + 1 ⊗ D with O = F7[t]/(t^7) and D = span{d/dt}:
//   X0 = sl2 ⊗ O (dim 21, basis s_i ⊗ t^k, s = (e,f,h), index 7i + k),
//   U0 = (Fe + Fh) ⊗ O + 1 ⊗ D (dim 15: e⊗t^k at 0..6, h⊗t^k at 7..13, d at 14),
// with U0 acting on X0 by the L0-bracket. The semidirect sum places the X0
// coordinates first (0..20) and the U0 coordinates after (21..35).
namespace {

Example1Bundle build_ex1() {
    PrimeField F(7);
    constexpr u32 T = 7;  // truncation order: t^7 = 0

    // --- X0: sl2 ⊗ O with basis s_i ⊗ t^k at index 7i + k, s = (e, f, h).
    LieAlgebra sl2 = make_sl2(F);
    auto xidx = [&](u32 i, u32 k) { return 7 * i + k; };
    LieAlgebraBuilder xb(F, 21);
    std::vector<std::string> xnames(21);
    const char* sname[3] = {"e", "f", "h"};
    for (u32 i = 0; i < 3; ++i)
        for (u32 k = 0; k < T; ++k) xnames[xidx(i, k)] = std::string(sname[i]) + "t" + std::to_string(k);
    for (u32 i = 0; i < 3; ++i)
        for (u32 k = 0; k < T; ++k)
            for (u32 j = 0; j < 3; ++j)
                for (u32 l = 0; l < T; ++l) {
                    u32 a = xidx(i, k), b = xidx(j, l);
                    if (a >= b || k + l >= T) continue;
                    Vec sb = sl2.basis_bracket(i, j);
                    Vec v(21, 0);
                    for (u32 m = 0; m < 3; ++m) v[xidx(m, k + l)] = sb[m];
                    xb.set(a, b, v);
                }
    LieAlgebra X0 = xb.build(xnames);

    // --- U0: (Fe + Fh) ⊗ O + 1 ⊗ D. e⊗t^k ↦ 0..6, h⊗t^k ↦ 7..13, d ↦ 14.
    LieAlgebraBuilder ub(F, 15);
    std::vector<std::string> unames(15);
    for (u32 k = 0; k < T; ++k) unames[k] = "et" + std::to_string(k);
    for (u32 k = 0; k < T; ++k) unames[7 + k] = "ht" + std::to_string(k);
    unames[14] = "d";
    for (u32 k = 0; k < T; ++k)
        for (u32 l = 0; l < T; ++l)
            if (k + l < T) {
                // [h⊗t^k, e⊗t^l] = 2 e⊗t^{k+l}
                Vec v(15, 0);
                v[k + l] = 2;
                ub.set(7 + k, l, v);
            }
    for (u32 k = 1; k < T; ++k) {
        Vec ve(15, 0), vh(15, 0);
        ve[k - 1] = k % 7;  // [d, e⊗t^k] = k e⊗t^{k-1}
        vh[7 + k - 1] = k % 7;
        ub.set(14, k, ve);
        ub.set(14, 7 + k, vh);
    }
    LieAlgebra U0 = ub.build(unames);

    // --- Action of U0 on X0 through the L0-bracket.
    std::vector<Mat> action(15, Mat(21, 21));
    auto add_tensor_action = [&](Mat& t, u32 su, u32 k) {
        // s_u ⊗ t^k acting on s_j ⊗ t^l: [s_u, s_j] ⊗ t^{k+l}
        for (u32 j = 0; j < 3; ++j) {
            Vec sb = sl2.basis_bracket(su, j);
            for (u32 l = 0; k + l < T; ++l)
                for (u32 m = 0; m < 3; ++m)
                    t.at(xidx(j, l), xidx(m, k + l)) = F.add(t.at(xidx(j, l), xidx(m, k + l)), sb[m]);
        }
    };
    for (u32 k = 0; k < T; ++k) add_tensor_action(action[k], 0, k);       // e⊗t^k
    for (u32 k = 0; k < T; ++k) add_tensor_action(action[7 + k], 2, k);   // h⊗t^k
    for (u32 j = 0; j < 3; ++j)
        for (u32 l = 1; l < T; ++l) action[14].at(xidx(j, l), xidx(j, l - 1)) = l % 7;

    LAlgebraModule mod = make_module(U0, X0, std::move(action));
    SemidirectSum sd = semidirect_sum(mod);

    const u32 n = 36;
    auto unit = [&](u32 i) {
        Vec v(n, 0);
        v[i] = 1;
        return v;
    };

    // Y0 = U0 ∩ X0 = (Fe + Fh) ⊗ O, listed as (X-coordinate, U-coordinate) pairs.
    std::vector<std::pair<u32, u32>> ypairs;
    for (u32 k = 0; k < T; ++k) ypairs.emplace_back(xidx(0, k), k);       // e⊗t^k
    for (u32 k = 0; k < T; ++k) ypairs.emplace_back(xidx(2, k), 7 + k);   // h⊗t^k

    std::vector<Vec> brows, wrows, crows;
    for (auto [xc, uc] : ypairs) {
        brows.push_back(unit(21 + uc));
        wrows.push_back(unit(xc));
        crows.push_back(vec_sub(F, unit(xc), unit(21 + uc)));  // (y, -y)
    }
    Subspace X = sd.carrier_image;
    Subspace U = sd.acting_image;
    Subspace B = Subspace::span_vectors(F, brows, n);
    Subspace W = Subspace::span_vectors(F, wrows, n);
    Subspace C = Subspace::span_vectors(F, crows, n);
    Subspace I = sum(F, X, C);

    // Witness maps in section coordinates (rows of W's RREF basis).
    // (y,0) ↦ (0,y) sends W's r-th basis vector to B's r-th; (y,0) ↦ (-y,y)
    // sends it to -1 times C's r-th basis vector.
    const u32 q = u32(W.dim());
    Mat w_to_b = Mat::identity(q);
    Mat w_to_c(q, q);
    for (u32 r = 0; r < q; ++r) w_to_c.at(r, r) = F.neg(1);

    return Example1Bundle{std::move(sd.algebra), std::move(X), std::move(U), std::move(B),
                          std::move(W),          std::move(C), std::move(I), std::move(w_to_b),
                          std::move(w_to_c)};
}

}  // namespace

Example1Bundle ex1_bundle() {
    static const Example1Bundle cached = build_ex1();
    return cached;
}

// --------------------------------------------------------------------------
// Structure-constant text format.

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0, line = 1, col = 1;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void advance() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_spaces() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }
    u64 number() {
        skip_spaces();
        if (eof() || !std::isdigit(u8())) fail("expected a number");
        u64 v = 0;
        while (!eof() && std::isdigit(u8())) {
            v = v * 10 + u64(peek() - '0');
            if (v > (u64(1) << 40)) fail("number too large");
            advance();
        }
        return v;
    }
    unsigned char u8() const { return static_cast<unsigned char>(peek()); }
    void end_of_line(const char* what) {
        skip_spaces();
        if (!eof() && peek() == '#')
            while (!eof() && peek() != '\n') advance();
        if (!eof()) {
            if (peek() != '\n') fail(std::string("unexpected trailing text after ") + what);
            advance();
        }
    }
    // Consumes one blank or comment line; false at EOF or on content.
    bool blank_or_comment_line() {
        skip_spaces();
        if (eof()) return false;
        if (peek() == '\n') {
            advance();
            return true;
        }
        if (peek() == '#') {
            while (!eof() && peek() != '\n') advance();
            if (!eof()) advance();
            return true;
        }
        return false;
    }
    void keyword(const std::string& kw) {
        for (char c : kw) {
            if (eof() || peek() != c) fail("expected '" + kw + "'");
            advance();
        }
    }
};

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
    Cursor c{text};

    auto header = [&](const std::string& key) -> u64 {
        while (c.blank_or_comment_line()) {
        }
        if (c.eof()) c.fail("missing '" + key + ":' header");
        c.skip_spaces();
        c.keyword(key);
        c.skip_spaces();
        c.expect(':');
        u64 v = c.number();
        c.end_of_line(("'" + key + "' header").c_str());
        return v;
    };

    u64 p = header("field");
    if (p < 2 || p > (1u << 20)) c.fail("field characteristic out of range");
    PrimeField F{u32(p)};  // throws std::invalid_argument if p is not prime
    u64 nd = header("dim");
    if (nd == 0 || nd > 512) c.fail("dimension out of range");
    const u32 n = u32(nd);

    LieAlgebraBuilder bld(F, n);
    std::map<std::pair<u32, u32>, bool> seen;
    for (;;) {
        while (c.blank_or_comment_line()) {
        }
        if (c.eof()) break;
        c.skip_spaces();
        std::size_t key_line = c.line, key_col = c.col;
        c.expect('[');
        u64 i = c.number();
        c.skip_spaces();
        c.expect(',');
        u64 j = c.number();
        c.skip_spaces();
        c.expect(']');
        if (i >= n || j >= n) throw ParseError("bracket index out of range", key_line, key_col);
        if (i > j) throw ParseError("bracket keys must satisfy i < j", key_line, key_col);
        if (seen.count({u32(i), u32(j)}))
            throw ParseError("duplicate bracket key", key_line, key_col);
        seen[{u32(i), u32(j)}] = true;
        c.skip_spaces();
        c.expect('=');

        Vec value(n, 0);
        for (;;) {
            u64 first = c.number();
            c.skip_spaces();
            u64 coeff = 1, basis = first;
            if (!c.eof() && c.peek() == '*') {
                c.advance();
                coeff = first;
                basis = c.number();
                c.skip_spaces();
            }
            if (basis >= n) c.fail("basis index out of range");
            value[std::size_t(basis)] = F.add(value[std::size_t(basis)], F.reduce(coeff));
            if (!c.eof() && c.peek() == '+') {
                c.advance();
                continue;
            }
            break;
        }
        // i == j flows to the builder so diagonal entries surface as
        // antisymmetry violations rather than syntax errors.
        bld.set(u32(i), u32(j), value);
        c.end_of_line("bracket line");
    }
    return bld.build();
}

std::string serialize_algebra(const LieAlgebra& L) {
    const PrimeField& F = L.field();
    std::ostringstream os;
    os << "field: " << F.p() << "\n";
    os << "dim: " << L.dim() << "\n";
    for (u32 i = 0; i < L.dim(); ++i) {
        for (u32 j = i + 1; j < L.dim(); ++j) {
            Vec v = L.basis_bracket(i, j);
            if (is_zero(v)) continue;
            os << "[" << i << "," << j << "] =";
            bool first = true;
            for (u32 k = 0; k < L.dim(); ++k) {
                if (v[k] == 0) continue;
                os << (first ? " " : " + ") << v[k] << "*" << k;
                first = false;
            }
            os << "\n";
        }
    }
    return os.str();
}

// --------------------------------------------------------------------------
// Random solvable generator: seeded strictly upper-triangular matrices closed
// under commutator, re-expressed in structure constants over the RREF basis of
// the vectorized matrix space.

LieAlgebra random_solvable(u32 dim_bound, u32 p, u64 seed) {
    if (p != 2 && p != 3) throw std::invalid_argument("random_solvable: p must be 2 or 3");
    if (dim_bound == 0 || dim_bound > 6)
        throw std::invalid_argument("random_solvable: dim_bound must be in 1..6");
    PrimeField F(p);

    // Largest matrix size whose strictly-upper space fits the bound.
    u32 m = 2;
    while ((m + 1) * m / 2 <= dim_bound) ++m;
    const std::size_t mm = std::size_t(m) * m;

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    auto random_upper = [&]() {
        Vec flat(mm, 0);
        bool nonzero = false;
        while (!nonzero)
            for (u32 r = 0; r < m; ++r)
                for (u32 c = r + 1; c < m; ++c) {
                    u32 e = u32(rng() % p);
                    flat[r * m + c] = e;
                    nonzero = nonzero || e != 0;
                }
        return flat;
    };

    const u32 count = 2 + u32(rng() % 2);
    std::vector<Vec> gens;
    for (u32 g = 0; g < count; ++g) gens.push_back(random_upper());

    auto commutator = [&](const Vec& x, const Vec& y) {
        Vec z(mm, 0);
        for (u32 r = 0; r < m; ++r)
            for (u32 c = 0; c < m; ++c) {
                u32 acc = 0;
                for (u32 k = 0; k < m; ++k) {
                    acc = F.add(acc, F.mul(x[r * m + k], y[k * m + c]));
                    acc = F.sub(acc, F.mul(y[r * m + k], x[k * m + c]));
                }
                z[r * m + c] = acc;
            }
        return z;
    };

    Subspace span = Subspace::span_vectors(F, gens, u32(mm));
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 0; a < span.dim() && !grew; ++a)
            for (std::size_t b = a + 1; b < span.dim() && !grew; ++b) {
                Vec z = commutator(span.basis.row_vec(a), span.basis.row_vec(b));
                if (!span.contains(F, z)) {
                    span = sum(F, span, Subspace::span_vectors(F, {z}, u32(mm)));
                    grew = true;
                }
            }
    }

    const u32 q = u32(span.dim());
    LieAlgebraBuilder bld(F, q);
    for (u32 a = 0; a < q; ++a)
        for (u32 b = a + 1; b < q; ++b)
            bld.set(a, b, span.coords(commutator(span.basis.row_vec(a), span.basis.row_vec(b))));
    std::vector<std::string> names;
    for (u32 i = 0; i < q; ++i) names.push_back("n" + std::to_string(i));
    return bld.build(names);
}

}  // namespace liecrown
