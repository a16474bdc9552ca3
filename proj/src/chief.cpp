#include "liecrown/chief.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "liecrown/cohomology.hpp"
#include "liecrown/lmodule.hpp"

namespace liecrown {

namespace {

u64 sat_pow(u64 base, u64 exp) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

// Calls fn(v) for every vector of F_p^n whose leading nonzero entry is 1 (one
// representative per projective class); stops early when fn returns false.
template <class Fn>
void for_each_monic_vector(u32 p, u32 n, Fn&& fn) {
    Vec v(n, 0);
    while (true) {
        u32 i = n;
        while (i > 0 && v[i - 1] + 1 == p) v[--i] = 0;
        if (i == 0) return;
        ++v[i - 1];
        u32 lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (lead < n && v[lead] == 1)
            if (!fn(v)) return;
    }
}

void check_vector_budget(u32 p, u32 n, const Budget& budget, const char* what) {
    u64 est = sat_pow(p, n);
    if (est > budget.vectors()) throw BudgetError(what, est, budget.vectors());
}

std::vector<Vec> basis_rows(const Subspace& s) {
    std::vector<Vec> rows;
    rows.reserve(s.dim());
    for (std::size_t r = 0; r < s.basis.rows; ++r) rows.push_back(s.basis.row_vec(r));
    return rows;
}

void sort_canonical(std::vector<Subspace>& v) { std::sort(v.begin(), v.end(), subspace_less); }

bool push_unique(std::vector<Subspace>& v, const Subspace& s) {
    for (const Subspace& t : v)
        if (t == s) return false;
    v.push_back(s);
    return true;
}

void require_ideal_pair(const LieAlgebra& L, const Subspace& a, const Subspace& b,
                        const char* who) {
    if (!L.is_ideal(a) || !L.is_ideal(b))
        throw std::invalid_argument(std::string(who) + ": section bounds must be ideals");
    if (!a.contains(L.field(), b) || a == b)
        throw std::invalid_argument(std::string(who) +
                                    ": lower bound must be a proper subspace of the upper");
}

}  // namespace

bool subspace_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis.a < b.basis.a;
}

std::vector<Subspace> minimal_ideals(const LieAlgebra& L, const Budget& budget) {
    const u32 n = L.dim();
    if (n == 0) return {};
    check_vector_budget(L.field().p(), n, budget, "minimal ideal sweep over all vectors");
    std::vector<Subspace> closures;
    for_each_monic_vector(L.field().p(), n, [&](const Vec& v) {
        push_unique(closures, L.closure({v}, /*ideal_mode=*/true));
        return true;
    });
    std::vector<Subspace> mins;
    for (const Subspace& c : closures) {
        bool minimal = true;
        for (const Subspace& d : closures)
            if (!(d == c) && d.proper_subspace_of(L.field(), c)) {
                minimal = false;
                break;
            }
        if (minimal) mins.push_back(c);
    }
    sort_canonical(mins);
    return mins;
}

Subspace socle_of(const LieAlgebra& L, const Budget& budget) {
    Subspace s = Subspace::zero(L.dim());
    for (const Subspace& m : minimal_ideals(L, budget)) s = sum(L.field(), s, m);
    return s;
}

namespace {

void series_dfs(const LieAlgebra& L, const Subspace& target, std::vector<Subspace>& chain,
                std::vector<ChiefSeries>& out, const Budget& budget) {
    if (chain.back() == target) {
        if (out.size() >= budget.series())
            throw BudgetError("chief series enumeration exceeded the series budget",
                              out.size() + 1, budget.series());
        out.push_back(ChiefSeries{chain});
        return;
    }
    QuotientMap qm = quotient(L, chain.back());
    Subspace tbar = qm.push_forward(target);
    for (const Subspace& m : minimal_ideals(qm.quotient, budget)) {
        if (!tbar.contains(L.field(), m)) continue;
        chain.push_back(qm.pull_back(m));
        series_dfs(L, target, chain, out, budget);
        chain.pop_back();
    }
}

}  // namespace

std::vector<ChiefSeries> chief_series_between(const LieAlgebra& L, const Subspace& h,
                                              const Subspace& k, const Budget& budget) {
    if (!L.is_ideal(h) || !L.is_ideal(k))
        throw std::invalid_argument("chief_series_between: bounds must be ideals");
    if (!k.contains(L.field(), h))
        throw std::invalid_argument("chief_series_between: lower bound not inside upper bound");
    std::vector<ChiefSeries> out;
    std::vector<Subspace> chain{h};
    series_dfs(L, k, chain, out, budget);
    return out;
}

std::vector<ChiefSeries> all_chief_series(const LieAlgebra& L, const Budget& budget) {
    return chief_series_between(L, Subspace::zero(L.dim()), Subspace::full(L.dim()), budget);
}

std::vector<Subspace> all_ideals(const LieAlgebra& L, const Budget& budget) {
    // Upward closure from 0: every ideal lies on a maximal chain of ideals, so
    // expanding each known ideal by the minimal ideals of its quotient visits
    // the whole lattice. Each ideal is expanded once.
    std::unordered_set<Subspace, SubspaceHash> seen;
    std::vector<Subspace> work{Subspace::zero(L.dim())};
    seen.insert(work.front());
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (seen.size() > budget.series())
            throw BudgetError("ideal lattice enumeration exceeded the series budget",
                              seen.size(), budget.series());
        QuotientMap qm = quotient(L, work[i]);
        for (const Subspace& m : minimal_ideals(qm.quotient, budget)) {
            Subspace lifted = qm.pull_back(m);
            if (seen.insert(lifted).second) work.push_back(lifted);
        }
    }
    sort_canonical(work);
    return work;
}

std::vector<IdealSection> chief_factor_sections(const LieAlgebra& L, const Budget& budget) {
    std::vector<Subspace> ideals = all_ideals(L, budget);
    std::vector<IdealSection> out;
    for (const Subspace& bottom : ideals)
        for (const Subspace& top : ideals) {
            if (bottom.dim() >= top.dim() || !top.contains(L.field(), bottom)) continue;
            bool intermediate = false;
            for (const Subspace& t : ideals) {
                if (t.dim() <= bottom.dim() || t.dim() >= top.dim()) continue;
                if (t.contains(L.field(), bottom) && top.contains(L.field(), t) &&
                    !(t == bottom) && !(t == top)) {
                    intermediate = true;
                    break;
                }
            }
            if (!intermediate) out.push_back(IdealSection{top, bottom});
        }
    std::sort(out.begin(), out.end(), [](const IdealSection& x, const IdealSection& y) {
        if (!(x.bottom == y.bottom)) return subspace_less(x.bottom, y.bottom);
        return subspace_less(x.top, y.top);
    });
    return out;
}

bool is_maximal_subalgebra(const LieAlgebra& L, const Subspace& s, const Budget& budget) {
    if (!L.is_subalgebra(s)) throw std::invalid_argument("is_maximal_subalgebra: not a subalgebra");
    const u32 n = L.dim();
    if (s.dim() >= n) return false;
    if (s.dim() + 1 == n) return true;  // a codimension-1 subalgebra is always maximal
    check_vector_budget(L.field().p(), n, budget, "maximality sweep over all vectors");
    bool maximal = true;
    std::vector<Vec> gens = basis_rows(s);
    for_each_monic_vector(L.field().p(), n, [&](const Vec& v) {
        if (s.contains(L.field(), v)) return true;
        gens.push_back(v);
        Subspace c = L.closure(gens, /*ideal_mode=*/false);
        gens.pop_back();
        if (c.dim() < n) {
            maximal = false;
            return false;
        }
        return true;
    });
    return maximal;
}

Subspace grow_to_maximal(const LieAlgebra& L, Subspace s, const Budget& budget) {
    if (!L.is_subalgebra(s)) throw std::invalid_argument("grow_to_maximal: not a subalgebra");
    const u32 n = L.dim();
    if (s.dim() >= n) throw std::invalid_argument("grow_to_maximal: already the full algebra");
    while (s.dim() + 1 < n) {
        check_vector_budget(L.field().p(), n, budget, "maximality sweep over all vectors");
        std::optional<Subspace> grown;
        std::vector<Vec> gens = basis_rows(s);
        for_each_monic_vector(L.field().p(), n, [&](const Vec& v) {
            if (s.contains(L.field(), v)) return true;
            gens.push_back(v);
            Subspace c = L.closure(gens, /*ideal_mode=*/false);
            gens.pop_back();
            if (c.dim() < n) {
                grown = std::move(c);
                return false;
            }
            return true;
        });
        if (!grown) return s;  // every extension closes to L
        s = *grown;
    }
    return s;
}

MaximalsReport maximal_subalgebras_and_frattini(const LieAlgebra& L, const Budget& budget) {
    const u32 n = L.dim();
    const PrimeField& F = L.field();
    MaximalsReport rep;
    rep.frattini = Subspace::full(n);
    if (n == 0) {
        rep.frattini = Subspace::zero(0);
        return rep;
    }
    if (n == 1) {
        rep.maximals = {Subspace::zero(1)};
        rep.frattini = Subspace::zero(1);
        return rep;
    }
    u64 total = 0;
    for (u32 k = 1; k < n; ++k) {
        u64 cnt = gaussian_binomial(n, k, F.p());
        u64 per = u64(k) * n;
        u64 add = (cnt == UINT64_MAX || cnt > UINT64_MAX / per) ? UINT64_MAX : cnt * per;
        total = (total > UINT64_MAX - add) ? UINT64_MAX : total + add;
    }
    if (total > budget.subspaces())
        throw BudgetError("maximal subalgebra sweep over all proper subspaces", total,
                          budget.subspaces());
    // Dimension descending: a subalgebra is maximal iff it lies in no
    // previously collected maximal.
    for (u32 k = n - 1; k >= 1; --k) {
        SubspaceEnumerator en(F, n, k, UINT64_MAX, false);
        while (std::optional<Subspace> s = en.next()) {
            if (!L.is_subalgebra(*s)) continue;
            bool covered = false;
            for (const Subspace& m : rep.maximals)
                if (m.contains(F, *s)) {
                    covered = true;
                    break;
                }
            if (!covered) rep.maximals.push_back(*s);
        }
    }
    Subspace inter = Subspace::full(n);
    for (const Subspace& m : rep.maximals) inter = intersect(F, inter, m);
    rep.frattini = L.core_of(inter);
    sort_canonical(rep.maximals);
    return rep;
}

bool is_complement_of(const LieAlgebra& L, const Subspace& a, const Subspace& b,
                      const Subspace& m) {
    const PrimeField& F = L.field();
    return L.is_subalgebra(m) && sum(F, a, m).dim() == L.dim() && intersect(F, a, m) == b;
}

bool is_supplement_of(const LieAlgebra& L, const Subspace& a, const Subspace& b,
                      const Subspace& m) {
    const PrimeField& F = L.field();
    return L.is_subalgebra(m) && m.contains(F, b) && sum(F, a, m).dim() == L.dim();
}

std::vector<Subspace> complement_subspace_scan(const LieAlgebra& L, const Subspace& a,
                                               const Subspace& b, const Budget& budget) {
    require_ideal_pair(L, a, b, "complement_subspace_scan");
    const PrimeField& F = L.field();
    QuotientMap qb = quotient(L, b);
    Subspace abar = qb.push_forward(a);
    const u32 nb = qb.quotient.dim();
    const u32 dm = u32(nb - abar.dim());
    SubspaceEnumerator en(F, nb, dm, budget.subspaces(), true);
    std::vector<Subspace> out;
    while (std::optional<Subspace> s = en.next()) {
        if (!qb.quotient.is_subalgebra(*s)) continue;
        if (sum(F, abar, *s).dim() != nb) continue;
        if (intersect(F, abar, *s).dim() != 0) continue;
        out.push_back(qb.pull_back(*s));
    }
    sort_canonical(out);
    return out;
}

FactorComplements factor_complements(const LieAlgebra& L, const Subspace& a, const Subspace& b,
                                     const Budget& budget, const std::vector<Subspace>& hints) {
    require_ideal_pair(L, a, b, "factor_complements");
    const PrimeField& F = L.field();
    LAlgebraModule m = chief_factor_module(L, a, b);
    try {
        if (!is_irreducible(m, budget))
            throw std::invalid_argument("factor_complements: not a chief factor");
    } catch (const BudgetError&) {
        // Minimality unverifiable at this budget; trust the caller.
    }

    FactorComplements out;
    // Only proper supplements witness non-Frattini-ness (L itself always
    // supplements trivially).
    for (const Subspace& h : hints) {
        if (!L.is_subalgebra(h)) continue;
        if (is_complement_of(L, a, b, h))
            push_unique(out.complements, h);
        else if (h.dim() < L.dim() && is_supplement_of(L, a, b, h))
            push_unique(out.supplements, h);
    }

    bool exhaustive = false;
    if (!L.is_abelian_section(a, b)) {
        // Every complement of a nonabelian chief factor is the kernel of a
        // carrier-valued cocycle whose twisted module is centralized by a, so
        // the cocycle sweep is a complete complement search.
        try {
            CocycleSet zs = cocycle_space(m, budget);
            std::vector<Cocycle> elems =
                zs.basis_form ? explicit_cocycles(m, zs, budget) : zs.elements;
            for (const Cocycle& beta : elems) {
                LAlgebraModule tw = twist(m, beta);
                if (!i_and_c(tw).c_l.contains(F, a)) continue;
                Subspace ker = Subspace::span(F, left_nullspace(F, beta), L.dim());
                if (is_complement_of(L, a, b, ker)) push_unique(out.complements, ker);
            }
            exhaustive = true;
        } catch (const BudgetError&) {
        }
    }
    if (!exhaustive) {
        try {
            for (const Subspace& c : complement_subspace_scan(L, a, b, budget))
                push_unique(out.complements, c);
            exhaustive = true;
        } catch (const BudgetError&) {
        }
    }
    if (!exhaustive && out.complements.empty()) {
        std::vector<Subspace> pool;
        try {
            pool = all_ideals(L, budget);
        } catch (const BudgetError&) {
        }
        pool.push_back(L.centralizer_of_section(a, b));
        pool.push_back(L.center());
        for (const Subspace& cand : pool) {
            if (!L.is_subalgebra(cand)) continue;
            if (is_complement_of(L, a, b, cand))
                push_unique(out.complements, cand);
            else if (cand.dim() < L.dim() && is_supplement_of(L, a, b, cand))
                push_unique(out.supplements, cand);
        }
    }
    sort_canonical(out.complements);
    out.complements_exhaustive = exhaustive;

    if (!out.complements.empty())
        out.is_c = exhaustive ? Verdict::yes_exhaustive() : Verdict::yes_witness();
    else if (exhaustive)
        out.is_c = Verdict::no_exhaustive();
    else
        out.is_c = Verdict::unknown("complement search budget-limited");

    if (out.complements.empty()) {
        out.is_m = out.is_c;
    } else {
        bool found = false, all_decided = true;
        for (const Subspace& c : out.complements) {
            try {
                if (is_maximal_subalgebra(L, c, budget)) {
                    found = true;
                    break;
                }
            } catch (const BudgetError&) {
                all_decided = false;
            }
        }
        if (found)
            out.is_m = exhaustive ? Verdict::yes_exhaustive() : Verdict::yes_witness();
        else if (exhaustive && all_decided)
            out.is_m = Verdict::no_exhaustive("no complement is maximal");
        else
            out.is_m = Verdict::unknown(all_decided ? "complement list incomplete"
                                                    : "maximality sweeps budget-limited");
    }

    for (const Subspace& c : out.complements) push_unique(out.supplements, c);
    if (out.is_c.yes()) {
        out.frattini = Verdict::no_exhaustive("complement witness supplements the factor");
    } else if (!out.supplements.empty()) {
        out.frattini = Verdict::no_exhaustive("proper supplement witness");
    } else {
        try {
            QuotientMap qb = quotient(L, b);
            MaximalsReport mr = maximal_subalgebras_and_frattini(qb.quotient, budget);
            Subspace abar = qb.push_forward(a);
            if (mr.frattini.contains(F, abar)) {
                out.frattini = Verdict::yes_exhaustive();
            } else {
                out.frattini = Verdict::no_exhaustive();
                for (const Subspace& mx : mr.maximals)
                    if (sum(F, abar, mx).dim() == qb.quotient.dim()) {
                        push_unique(out.supplements, qb.pull_back(mx));
                        break;
                    }
            }
        } catch (const BudgetError&) {
            out.frattini = Verdict::unknown("maximal sweep of the quotient budget-limited");
        }
    }
    sort_canonical(out.supplements);
    return out;
}

const char* to_string(PrimitiveKind k) {
    switch (k) {
        case PrimitiveKind::NotPrimitive: return "not primitive";
        case PrimitiveKind::Type1: return "primitive type 1";
        case PrimitiveKind::Type2: return "primitive type 2";
        case PrimitiveKind::Type3: return "primitive type 3";
        default: return "undecided";
    }
}

PrimitiveReport socle_core_primitive(const LieAlgebra& L, std::optional<Subspace> u,
                                     const Budget& budget) {
    const PrimeField& F = L.field();
    const u32 n = L.dim();
    PrimitiveReport rep;
    std::vector<Subspace> mins = minimal_ideals(L, budget);
    rep.socle = Subspace::zero(n);
    for (const Subspace& m : mins) rep.socle = sum(F, rep.socle, m);

    const Subspace zero = Subspace::zero(n);
    PrimitiveKind structural = PrimitiveKind::Undecided;
    if (mins.size() == 1)
        structural = L.is_abelian_section(mins[0], zero) ? PrimitiveKind::Type1
                                                         : PrimitiveKind::Type2;
    else if (mins.size() == 2 && !L.is_abelian_section(mins[0], zero) &&
             !L.is_abelian_section(mins[1], zero))
        structural = PrimitiveKind::Type3;

    std::optional<Subspace> witness;
    bool primitive = false, decided = false;
    rep.mode = SearchMode::Exhaustive;
    if (u) {
        if (!L.is_subalgebra(*u))
            throw std::invalid_argument("socle_core_primitive: candidate is not a subalgebra");
        rep.core = L.core_of(*u);
        if (rep.core->dim() == 0 && u->dim() < n) {
            try {
                if (is_maximal_subalgebra(L, *u, budget)) {
                    witness = *u;
                    primitive = decided = true;
                    rep.mode = SearchMode::Witness;
                }
            } catch (const BudgetError&) {
                rep.note += "candidate maximality sweep budget-limited; ";
            }
        } else {
            rep.note += "candidate is not core-free or not proper; ";
        }
    }
    if (!decided) {
        try {
            MaximalsReport mr = maximal_subalgebras_and_frattini(L, budget);
            for (const Subspace& m : mr.maximals)
                if (L.core_of(m).dim() == 0) {
                    witness = m;
                    primitive = true;
                    break;
                }
            decided = true;
            rep.mode = SearchMode::Exhaustive;
        } catch (const BudgetError&) {
        }
    }
    if (!decided) {
        rep.kind = PrimitiveKind::Undecided;
        rep.mode = SearchMode::BudgetLimited;
        return rep;
    }
    if (!primitive) {
        rep.kind = PrimitiveKind::NotPrimitive;
        return rep;
    }

    rep.witness = witness;
    if (!rep.core) rep.core = L.core_of(*witness);
    rep.kind = structural;
    if (structural == PrimitiveKind::Undecided) {
        rep.note += "primitive but the socle matches no type pattern; ";
        return rep;
    }
    // Structural cross-checks for the established type.
    if (structural == PrimitiveKind::Type1) {
        const Subspace& A = mins[0];
        if (!(L.centralizer_of_section(A, zero) == A))
            rep.note += "type 1: socle is not self-centralizing; ";
        if (sum(F, A, *witness).dim() != n || intersect(F, A, *witness).dim() != 0)
            rep.note += "type 1: witness does not complement the socle; ";
    } else if (structural == PrimitiveKind::Type2) {
        if (L.centralizer_of_section(mins[0], zero).dim() != 0)
            rep.note += "type 2: socle has a nonzero centralizer; ";
    } else if (structural == PrimitiveKind::Type3) {
        const Subspace &A = mins[0], &B = mins[1];
        if (!(L.centralizer_of_section(A, zero) == B) ||
            !(L.centralizer_of_section(B, zero) == A))
            rep.note += "type 3: minimal ideals are not each other's centralizers; ";
        Subspace D = intersect(F, rep.socle, *witness);
        if (D.dim() != A.dim() || A.dim() != B.dim())
            rep.note += "type 3: socle-witness intersection has the wrong dimension; ";
        else if (intersect(F, D, A).dim() != 0 || intersect(F, D, B).dim() != 0)
            rep.note += "type 3: socle-witness intersection meets a minimal ideal; ";
        else if (L.derived_subalgebra_of(D).dim() == 0)
            rep.note += "type 3: socle-witness intersection is abelian; ";
    }
    return rep;
}

}  // namespace liecrown
