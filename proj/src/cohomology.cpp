#include "liecrown/cohomology.hpp"

#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace liecrown {

namespace {

u64 sat_pow(u64 base, u64 exp) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<u64>::max() / base)
            return std::numeric_limits<u64>::max();
        r *= base;
    }
    return r;
}

Vec unit(u32 n, u32 i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

std::vector<std::pair<u32, u32>> basis_pairs(u32 n) {
    std::vector<std::pair<u32, u32>> ps;
    for (u32 i = 0; i < n; ++i)
        for (u32 j = i + 1; j < n; ++j) ps.push_back({i, j});
    return ps;
}

// β([x_i,x_j]) − x_i.β(x_j) + x_j.β(x_i) − [β(x_i), β(x_j)]; zero iff the
// defining identity holds on the pair.
Vec pair_residual(const LAlgebraModule& m, const Cocycle& beta, u32 i, u32 j) {
    const PrimeField& F = m.acting.field();
    Vec r = vec_mat(F, m.acting.basis_bracket(i, j), beta);
    r = vec_sub(F, r, vec_mat(F, beta.row_vec(j), m.action[i]));
    r = vec_add(F, r, vec_mat(F, beta.row_vec(i), m.action[j]));
    r = vec_sub(F, r, m.carrier.bracket(beta.row_vec(i), beta.row_vec(j)));
    return r;
}

// Smallest generating set reachable by greedy collection over the basis
// followed by removal and pairwise-merge passes; the result is linearly
// independent and deterministic.
std::vector<Vec> minimized_generating_set(const LieAlgebra& L) {
    const u32 n = L.dim();
    std::vector<Vec> gens;
    std::size_t have = 0;
    for (u32 i = 0; i < n && have < n; ++i) {
        std::vector<Vec> trial = gens;
        trial.push_back(unit(n, i));
        std::size_t got = L.closure(trial, false).dim();
        if (got > have) {
            gens = std::move(trial);
            have = got;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < gens.size() && gens.size() > 1;) {
            std::vector<Vec> trial = gens;
            trial.erase(trial.begin() + t);
            if (L.closure(trial, false).dim() == n) {
                gens = std::move(trial);
                changed = true;
            } else {
                ++t;
            }
        }
        bool merged = true;
        while (merged && gens.size() > 1) {
            merged = false;
            for (std::size_t u = 0; u < gens.size() && !merged; ++u) {
                for (std::size_t v = u + 1; v < gens.size() && !merged; ++v) {
                    std::vector<Vec> trial;
                    for (std::size_t t = 0; t < gens.size(); ++t)
                        if (t != u && t != v) trial.push_back(gens[t]);
                    trial.push_back(vec_add(L.field(), gens[u], gens[v]));
                    if (L.closure(trial, false).dim() == n) {
                        gens = std::move(trial);
                        merged = changed = true;
                    }
                }
            }
        }
    }
    return gens;
}

// Bracket words over the generators spanning L: words[t] for t < g are the
// generators, every later word is [words[a], words[b]] for recorded a, b < t,
// and each word extends the span by exactly one dimension.
struct Words {
    std::vector<Vec> vec;
    std::vector<std::pair<std::size_t, std::size_t>> parent;  // generators: (npos, npos)
};

Words bracket_words(const LieAlgebra& L, const std::vector<Vec>& gens) {
    const PrimeField& F = L.field();
    const u32 n = L.dim();
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    Words w;
    Subspace span = Subspace::zero(n);
    for (const Vec& g : gens) {
        if (span.contains(F, g)) throw std::logic_error("dependent generating set");
        w.vec.push_back(g);
        w.parent.push_back({npos, npos});
        span = sum(F, span, Subspace::span_vectors(F, {g}, n));
    }
    bool grew = true;
    while (span.dim() < n && grew) {
        grew = false;
        for (std::size_t a = 0; a < w.vec.size() && span.dim() < n; ++a) {
            for (std::size_t b = 0; b < w.vec.size() && span.dim() < n; ++b) {
                Vec br = L.bracket(w.vec[a], w.vec[b]);
                if (!span.contains(F, br)) {
                    w.vec.push_back(br);
                    w.parent.push_back({a, b});
                    span = sum(F, span, Subspace::span_vectors(F, {br}, n));
                    grew = true;
                }
            }
        }
    }
    if (span.dim() != n) throw std::logic_error("bracket words do not span the algebra");
    return w;
}

CocycleSet abelian_cocycle_space(const LAlgebraModule& m) {
    const PrimeField& F = m.acting.field();
    const u32 n = m.ldim(), d = m.adim();
    CocycleSet out;
    out.basis_form = true;
    out.p = F.p();
    auto pairs = basis_pairs(n);
    if (pairs.empty()) {
        for (u32 k = 0; k < n; ++k)
            for (u32 c = 0; c < d; ++c) {
                Cocycle b(n, d);
                b.at(k, c) = 1;
                out.basis.push_back(std::move(b));
            }
        return out;
    }
    // Unknowns β[k][c'] as rows, one column per (pair, output coordinate).
    Mat sys(std::size_t(n) * d, pairs.size() * d);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        auto [i, j] = pairs[t];
        Vec cij = m.acting.basis_bracket(i, j);
        for (u32 c = 0; c < d; ++c) {
            const std::size_t col = t * d + c;
            for (u32 k = 0; k < n; ++k) {
                u32& e = sys.at(std::size_t(k) * d + c, col);
                e = F.add(e, cij[k]);
            }
            for (u32 cc = 0; cc < d; ++cc) {
                u32& ej = sys.at(std::size_t(j) * d + cc, col);
                ej = F.sub(ej, m.action[i].at(cc, c));
                u32& ei = sys.at(std::size_t(i) * d + cc, col);
                ei = F.add(ei, m.action[j].at(cc, c));
            }
        }
    }
    Mat null = left_nullspace(F, sys);
    for (std::size_t r = 0; r < null.rows; ++r) {
        Cocycle b(n, d);
        b.a = null.row_vec(r);
        out.basis.push_back(std::move(b));
    }
    return out;
}

// Enumerated spaces are memoized by exact module equality. The budget check
// runs before the lookup so budget semantics are unchanged by a cache hit;
// the cache only removes repeated work. A mutex guards the map so property
// sweeps may enumerate from worker threads.
struct CocycleCacheEntry {
    LAlgebraModule module;
    CocycleSet set;
};
std::mutex& cocycle_cache_mutex() {
    static std::mutex m;
    return m;
}
std::unordered_map<std::size_t, std::vector<CocycleCacheEntry>>& cocycle_cache_map() {
    static std::unordered_map<std::size_t, std::vector<CocycleCacheEntry>> cache;
    return cache;
}
std::optional<CocycleSet> cocycle_cache_find(const LAlgebraModule& m) {
    std::lock_guard<std::mutex> lock(cocycle_cache_mutex());
    auto it = cocycle_cache_map().find(m.content_hash());
    if (it == cocycle_cache_map().end()) return std::nullopt;
    for (const CocycleCacheEntry& e : it->second)
        if (e.module == m) return e.set;
    return std::nullopt;
}
void cocycle_cache_store(const LAlgebraModule& m, const CocycleSet& set) {
    std::lock_guard<std::mutex> lock(cocycle_cache_mutex());
    auto& bucket = cocycle_cache_map()[m.content_hash()];
    for (const CocycleCacheEntry& e : bucket)
        if (e.module == m) return;
    bucket.push_back(CocycleCacheEntry{m, set});
}

CocycleSet enumerated_cocycle_space(const LAlgebraModule& m, const Budget& budget) {
    const PrimeField& F = m.acting.field();
    const u32 n = m.ldim(), d = m.adim(), p = F.p();
    auto gens = minimized_generating_set(m.acting);
    const std::size_t g = gens.size();
    const u64 candidates = sat_pow(p, u64(g) * d);
    if (candidates > budget.cocycles())
        throw BudgetError("cocycle enumeration over " + std::to_string(g) +
                              " generators needs " + std::to_string(candidates) +
                              " assignments",
                          candidates, budget.cocycles());
    if (std::optional<CocycleSet> hit = cocycle_cache_find(m)) return *hit;
    Words w = bracket_words(m.acting, gens);
    std::vector<Mat> word_action;
    word_action.reserve(n);
    for (const Vec& v : w.vec) word_action.push_back(m.action_of(v));
    Mat W = Mat::from_rows(w.vec, n);
    Mat Winv = *inverse(F, W);
    auto pairs = basis_pairs(n);

    CocycleSet out;
    out.basis_form = false;
    out.p = p;
    std::vector<u32> digits(g * d, 0);
    Mat V(n, d);
    for (u64 count = 0; count < candidates; ++count) {
        for (std::size_t t = 0; t < g; ++t)
            for (u32 c = 0; c < d; ++c) V.at(t, c) = digits[t * d + c];
        for (std::size_t t = g; t < n; ++t) {
            auto [a, b] = w.parent[t];
            Vec val = vec_mat(F, V.row_vec(b), word_action[a]);
            val = vec_sub(F, val, vec_mat(F, V.row_vec(a), word_action[b]));
            val = vec_add(F, val, m.carrier.bracket(V.row_vec(a), V.row_vec(b)));
            V.set_row(t, val);
        }
        Cocycle beta = mat_mul(F, Winv, V);
        bool ok = true;
        for (auto [i, j] : pairs)
            if (!is_zero(pair_residual(m, beta, i, j))) {
                ok = false;
                break;
            }
        if (ok) out.elements.push_back(std::move(beta));
        for (std::size_t k = digits.size(); k-- > 0;) {
            if (++digits[k] == p)
                digits[k] = 0;
            else
                break;
        }
    }
    cocycle_cache_store(m, out);
    return out;
}

}  // namespace

u32 CocycleSet::z1_dim() const {
    if (!basis_form) throw std::logic_error("z1_dim: set is not in basis form");
    return static_cast<u32>(basis.size());
}

u64 CocycleSet::size() const {
    if (!basis_form) return elements.size();
    return sat_pow(p, basis.size());
}

bool is_cocycle(const LAlgebraModule& m, const Cocycle& beta) {
    if (beta.rows != m.ldim() || beta.cols != m.adim())
        throw std::invalid_argument("is_cocycle: matrix shape does not match the module");
    const u32 n = m.ldim();
    for (u32 i = 0; i < n; ++i)
        for (u32 j = i + 1; j < n; ++j)
            if (!is_zero(pair_residual(m, beta, i, j))) return false;
    return true;
}

CocycleSet cocycle_space(const LAlgebraModule& m, const Budget& budget) {
    if (m.abelian_carrier()) return abelian_cocycle_space(m);
    return enumerated_cocycle_space(m, budget);
}

CocycleSet cocycle_space_enumerated(const LAlgebraModule& m, const Budget& budget) {
    return enumerated_cocycle_space(m, budget);
}

std::vector<Cocycle> explicit_cocycles(const LAlgebraModule& m, const CocycleSet& zs,
                                       const Budget& budget) {
    if (!zs.basis_form) return zs.elements;
    const PrimeField& F = m.acting.field();
    const u32 p = F.p();
    const std::size_t h = zs.basis.size();
    const u64 count = sat_pow(p, h);
    if (count > budget.cocycles())
        throw BudgetError("explicit cocycle expansion needs " + std::to_string(count) +
                              " combinations",
                          count, budget.cocycles());
    std::vector<Cocycle> out;
    out.reserve(count);
    std::vector<u32> digits(h, 0);
    const std::size_t flat = std::size_t(m.ldim()) * m.adim();
    for (u64 c = 0; c < count; ++c) {
        Cocycle b(m.ldim(), m.adim());
        for (std::size_t t = 0; t < h; ++t)
            if (digits[t] != 0)
                row_axpy(F, b.a.data(), zs.basis[t].a.data(), digits[t], flat);
        out.push_back(std::move(b));
        for (std::size_t k = h; k-- > 0;) {
            if (++digits[k] == p)
                digits[k] = 0;
            else
                break;
        }
    }
    return out;
}

LAlgebraModule twist(const LAlgebraModule& m, const Cocycle& beta) {
    if (beta.rows != m.ldim() || beta.cols != m.adim())
        throw std::invalid_argument("twist: matrix shape does not match the module");
    const PrimeField& F = m.acting.field();
    std::vector<Mat> action;
    action.reserve(m.ldim());
    for (u32 i = 0; i < m.ldim(); ++i)
        action.push_back(mat_add(F, m.carrier.ad(beta.row_vec(i)), m.action[i]));
    return make_module(m.acting, m.carrier, std::move(action));
}

ELResult e_l(const LAlgebraModule& m, const Budget& budget) {
    const PrimeField& F = m.acting.field();
    const u32 n = m.ldim(), d = m.adim();
    ELResult out;
    try {
        CocycleSet zs = cocycle_space(m, budget);
        if (zs.basis_form) {
            if (zs.basis.empty()) {
                out.raw = Subspace::full(n);
            } else {
                Mat big(n, zs.basis.size() * d);
                for (std::size_t t = 0; t < zs.basis.size(); ++t)
                    for (u32 r = 0; r < n; ++r)
                        for (u32 c = 0; c < d; ++c)
                            big.at(r, t * d + c) = zs.basis[t].at(r, c);
                out.raw = Subspace::span(F, left_nullspace(F, big), n);
            }
        } else {
            out.raw = Subspace::full(n);
            for (const Cocycle& b : zs.elements)
                out.raw = intersect(F, out.raw, Subspace::span(F, left_nullspace(F, b), n));
        }
        out.exact = true;
    } catch (const BudgetError&) {
        out.raw = Subspace::full(n);
        out.exact = false;
    }
    SemidirectSum S = semidirect_sum(m);
    std::vector<Vec> embedded;
    for (std::size_t r = 0; r < out.raw.basis.rows; ++r)
        embedded.push_back(vec_mat(F, out.raw.basis.row_vec(r), S.embed_acting));
    Subspace core_ambient = S.algebra.core_of(Subspace::span_vectors(F, embedded, n + d));
    std::vector<Vec> back;
    for (std::size_t r = 0; r < core_ambient.basis.rows; ++r) {
        Vec row = core_ambient.basis.row_vec(r);
        for (u32 c = 0; c < d; ++c)
            if (row[c] != 0) throw std::logic_error("cocycle-kernel core touches the carrier");
        back.emplace_back(row.begin() + d, row.end());
    }
    out.core = Subspace::span_vectors(F, back, n);
    return out;
}

u32 coboundary_dim(const LAlgebraModule& m) {
    if (!m.abelian_carrier())
        throw std::invalid_argument("coboundary_dim: carrier must be abelian");
    const PrimeField& F = m.acting.field();
    const u32 n = m.ldim(), d = m.adim();
    Mat stack(d, std::size_t(n) * d);
    for (u32 a = 0; a < d; ++a)
        for (u32 r = 0; r < n; ++r)
            for (u32 c = 0; c < d; ++c) stack.at(a, std::size_t(r) * d + c) = m.action[r].at(a, c);
    return static_cast<u32>(rank_of(F, stack));
}

u32 h1_dim(const LAlgebraModule& m) {
    u32 b1 = coboundary_dim(m);  // validates the carrier is abelian
    return cocycle_space(m).z1_dim() - b1;
}

VerdictWith<EquivalenceWitness> l_equivalent(const LAlgebraModule& m1,
                                             const LAlgebraModule& m2, const Budget& budget) {
    if (!(m1.acting == m2.acting))
        throw std::invalid_argument("l_equivalent: modules must share the acting algebra");
    VerdictWith<EquivalenceWitness> out;
    if (m1.adim() != m2.adim()) {
        out.verdict = Verdict::no_exhaustive("carrier dimensions differ");
        return out;
    }
    if (m1.abelian_carrier() != m2.abelian_carrier()) {
        out.verdict = Verdict::no_exhaustive("one carrier is abelian, the other is not");
        return out;
    }
    if (m1.abelian_carrier()) {
        // Twisting never changes the action on an abelian carrier, so
        // equivalence collapses to plain L-isomorphism with β = 0.
        auto r = l_isomorphism(m1, m2, budget);
        out.verdict = r.verdict;
        if (r.yes()) out.witness = EquivalenceWitness{Mat(m1.ldim(), m2.adim()), *r.witness};
        return out;
    }
    CocycleSet zs;
    try {
        zs = cocycle_space(m2, budget);
    } catch (const BudgetError& e) {
        out.verdict = Verdict::unknown(e.what());
        return out;
    }
    bool all_exhaustive = true;
    for (const Cocycle& b : zs.elements) {
        auto r = l_isomorphism(m1, twist(m2, b), budget);
        if (r.yes()) {
            out.verdict = r.verdict;
            out.witness = EquivalenceWitness{b, *r.witness};
            return out;
        }
        if (!(r.verdict.no() && r.verdict.exhaustive())) all_exhaustive = false;
    }
    out.verdict = all_exhaustive
                      ? Verdict::no_exhaustive("no twist is L-isomorphic to the first carrier")
                      : Verdict::unknown("isomorphism search was not exhaustive on some twist");
    return out;
}

TwistComplementResult complement_by_twist(const LieAlgebra& L, const Subspace& a,
                                          const Subspace& b, const Budget& budget) {
    const PrimeField& F = L.field();
    if (!L.is_ideal(a) || !L.is_ideal(b))
        throw std::invalid_argument("complement_by_twist: both subspaces must be ideals");
    if (!(b.proper_subspace_of(F, a)))
        throw std::invalid_argument("complement_by_twist: require b properly inside a");
    if (L.is_abelian_section(a, b))
        throw std::invalid_argument("complement_by_twist: the section is abelian");
    LAlgebraModule m = chief_factor_module(L, a, b);
    TwistComplementResult out;
    try {
        if (!is_irreducible(m, budget))
            throw std::invalid_argument("complement_by_twist: the section is not a chief factor");
        CocycleSet zs = cocycle_space(m, budget);
        for (const Cocycle& alpha : zs.elements) {
            LAlgebraModule twisted = twist(m, alpha);
            if (!i_and_c(twisted).c_l.contains(F, a)) continue;
            Subspace ker = Subspace::span(F, left_nullspace(F, alpha), L.dim());
            if (!(sum(F, ker, a) == Subspace::full(L.dim()))) continue;
            if (!(intersect(F, ker, a) == b)) continue;
            out.complemented = Verdict::yes_exhaustive();
            out.witness_module = std::move(twisted);
            out.witness_cocycle = alpha;
            out.complement = ker;
            return out;
        }
        out.complemented =
            Verdict::no_exhaustive("no twist of the factor is centralized by its top ideal");
    } catch (const BudgetError& e) {
        out.complemented = Verdict::unknown(e.what());
    }
    return out;
}

DescentReport cocycle_descent(const LAlgebraModule& m, const Subspace& n, const Budget& budget) {
    const PrimeField& F = m.acting.field();
    if (!m.abelian_carrier())
        throw std::invalid_argument("cocycle_descent: carrier must be abelian");
    if (!is_irreducible(m, budget))
        throw std::invalid_argument("cocycle_descent: carrier must be irreducible");
    if (!m.acting.is_ideal(n))
        throw std::invalid_argument("cocycle_descent: n must be an ideal of the acting algebra");
    if (!i_and_c(m).c_l.contains(F, n))
        throw std::invalid_argument("cocycle_descent: n must act trivially on the carrier");

    DescentReport rep;
    ELResult e = e_l(m, budget);
    rep.ideal_inside_common_kernel = e.raw.contains(F, n);

    QuotientMap qm = quotient(m.acting, n);
    LAlgebraModule mq = inflate_through_quotient(m, qm);

    rep.z1_dim_full = cocycle_space(m, budget).z1_dim();
    rep.z1_dim_quotient = cocycle_space(mq, budget).z1_dim();
    rep.z1_equal = rep.z1_dim_full == rep.z1_dim_quotient;

    rep.h1_dim_full = rep.z1_dim_full - coboundary_dim(m);
    rep.h1_dim_quotient = rep.z1_dim_quotient - coboundary_dim(mq);
    rep.h1_equal = rep.h1_dim_full == rep.h1_dim_quotient;

    rep.consistent = (rep.ideal_inside_common_kernel == rep.z1_equal) &&
                     (rep.z1_equal == rep.h1_equal);
    return rep;
}

}  // namespace liecrown
