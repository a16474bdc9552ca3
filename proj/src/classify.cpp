#include "liecrown/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "liecrown/cohomology.hpp"
#include "liecrown/lmodule.hpp"

namespace liecrown {

namespace {

Verdict fold(bool found, bool exhaustive, std::string yes_note, std::string no_note,
             std::string unknown_note) {
    if (found)
        return exhaustive ? Verdict::yes_exhaustive(std::move(yes_note))
                          : Verdict::yes_witness(std::move(yes_note));
    if (exhaustive) return Verdict::no_exhaustive(std::move(no_note));
    return Verdict::unknown(std::move(unknown_note));
}

bool same_section(const IdealSection& a, const IdealSection& b) {
    return a.top == b.top && a.bottom == b.bottom;
}

// Everything the relation scans need about one algebra: the chief-factor
// sections, their complement reports, and the crossings. Shared across the
// edges of a matching so the complement sweeps run once per section.
struct MContext {
    std::vector<IdealSection> sections;
    std::vector<FactorComplements> fcs;  // aligned with sections
    std::vector<MCrossing> crossings;
    bool exact = true;  // every Frattini verdict decided and no unverified crossing
    std::unordered_map<Subspace, int, SubspaceHash> maximal;  // memo: -1 unknown, 0 no, 1 yes
};

MContext build_mcontext(const LieAlgebra& L, const Budget& budget) {
    MContext ctx;
    ctx.sections = chief_factor_sections(L, budget);
    ctx.fcs.reserve(ctx.sections.size());
    for (const IdealSection& s : ctx.sections) {
        try {
            ctx.fcs.push_back(factor_complements(L, s.top, s.bottom, budget));
        } catch (const BudgetError&) {
            ctx.fcs.push_back(FactorComplements{});  // all verdicts Unknown
        }
        if (ctx.fcs.back().frattini.unknown_v()) ctx.exact = false;
    }
    for (std::size_t u = 0; u < ctx.sections.size(); ++u)
        for (std::size_t w = 0; w < ctx.sections.size(); ++w) {
            if (!covers(L, ctx.sections[u], ctx.sections[w])) continue;
            const Verdict& fu = ctx.fcs[u].frattini;
            const Verdict& fw = ctx.fcs[w].frattini;
            if (fu.yes() && fw.no())
                ctx.crossings.push_back(MCrossing{ctx.sections[u], ctx.sections[w]});
            else if (fu.unknown_v() || fw.unknown_v())
                ctx.exact = false;  // a potential crossing could not be certified
        }
    return ctx;
}

int maximal_memo(MContext& ctx, const LieAlgebra& L, const Subspace& m, const Budget& budget) {
    auto it = ctx.maximal.find(m);
    if (it != ctx.maximal.end()) return it->second;
    int r = -1;
    try {
        r = is_maximal_subalgebra(L, m, budget) ? 1 : 0;
    } catch (const BudgetError&) {
    }
    ctx.maximal.emplace(m, r);
    return r;
}

MRelatedReport m_edge(const LieAlgebra& L, const MContext& ctx, const IdealSection& f1,
                      const IdealSection& f2) {
    MRelatedReport rep;
    bool pending = false;  // an undecided section might still produce a witness

    // Case 1: a supplemented chief factor covers both.
    for (std::size_t k = 0; k < ctx.sections.size(); ++k) {
        const IdealSection& s = ctx.sections[k];
        if (!covers(L, s, f1) || !covers(L, s, f2)) continue;
        if (ctx.fcs[k].frattini.no()) {
            rep.related = ctx.exact ? Verdict::yes_exhaustive("a supplemented chief factor covers both")
                                    : Verdict::yes_witness("a supplemented chief factor covers both");
            rep.case_tag = 1;
            rep.cover = s;
            return rep;
        }
        if (ctx.fcs[k].frattini.unknown_v()) pending = true;
    }
    // Case 2: crossing [U/V over W/X] with V/X covering the first factor and
    // W/X covering the second.
    for (const MCrossing& cr : ctx.crossings) {
        IdealSection vx{cr.upper.bottom, cr.lower.bottom};
        if (covers(L, vx, f1) && covers(L, cr.lower, f2)) {
            rep.related = ctx.exact ? Verdict::yes_exhaustive("a crossing links the factors")
                                    : Verdict::yes_witness("a crossing links the factors");
            rep.case_tag = 2;
            rep.crossing = cr;
            return rep;
        }
    }
    // Case 3: both cover a common Frattini chief factor.
    for (std::size_t k = 0; k < ctx.sections.size(); ++k) {
        const IdealSection& s = ctx.sections[k];
        if (!covers(L, f1, s) || !covers(L, f2, s)) continue;
        if (ctx.fcs[k].frattini.yes()) {
            rep.related = ctx.exact ? Verdict::yes_exhaustive("both cover a Frattini chief factor")
                                    : Verdict::yes_witness("both cover a Frattini chief factor");
            rep.case_tag = 3;
            rep.cover = s;
            return rep;
        }
        if (ctx.fcs[k].frattini.unknown_v()) pending = true;
    }
    // Case 4: crossing [U/V over W/X] with the first covering U/V and the
    // second covering U/W.
    for (const MCrossing& cr : ctx.crossings) {
        IdealSection uw{cr.upper.top, cr.lower.top};
        if (covers(L, f1, cr.upper) && covers(L, f2, uw)) {
            rep.related = ctx.exact ? Verdict::yes_exhaustive("a crossing links the factors")
                                    : Verdict::yes_witness("a crossing links the factors");
            rep.case_tag = 4;
            rep.crossing = cr;
            return rep;
        }
    }
    rep.related = fold(false, ctx.exact && !pending, "",
                       "no covering pattern links the factors",
                       "some section statuses are undecided");
    return rep;
}

std::size_t section_index(const MContext& ctx, const IdealSection& f) {
    for (std::size_t k = 0; k < ctx.sections.size(); ++k)
        if (same_section(ctx.sections[k], f)) return k;
    throw std::logic_error("series factor missing from the chief-factor sections");
}

Verdict negate_c(const Verdict& c) {
    if (c.yes()) return Verdict::no_exhaustive("a complement exists");
    if (c.no()) return c.exhaustive() ? Verdict::yes_exhaustive("no complement exists")
                                      : Verdict::yes_witness("no complement exists");
    return Verdict::unknown(c.note);
}

// Fills the per-pair checks of a matching with shared context.
MatchedPair check_pair(const LieAlgebra& L, MContext& ctx, const IdealSection& f1,
                       const IdealSection& f2, u32 i, u32 j, const MRelatedReport& edge,
                       const Budget& budget) {
    MatchedPair p;
    p.i = i;
    p.j = j;
    p.case_tag = edge.case_tag;

    try {
        p.equivalent =
            l_equivalent(chief_factor_module(L, f1.top, f1.bottom),
                         chief_factor_module(L, f2.top, f2.bottom), budget)
                .verdict;
    } catch (const BudgetError& e) {
        p.equivalent = Verdict::unknown(e.what());
    }

    const FactorComplements& fc1 = ctx.fcs[section_index(ctx, f1)];
    const FactorComplements& fc2 = ctx.fcs[section_index(ctx, f2)];

    if (!fc1.frattini.unknown_v() && !fc2.frattini.unknown_v())
        p.status_agree = fc1.frattini.yes() == fc2.frattini.yes()
                             ? Verdict::yes_exhaustive("same Frattini/supplemented status")
                             : Verdict::no_exhaustive("Frattini status differs");
    else
        p.status_agree = Verdict::unknown("a Frattini verdict is undecided");

    const bool m_decided = !fc1.is_m.unknown_v() && !fc2.is_m.unknown_v();
    p.m_literal_agree = m_decided && fc1.is_m.yes() == fc2.is_m.yes();

    if (m_decided && fc1.is_m.yes() && fc2.is_m.yes()) {
        bool found = false, exhaustive = fc1.complements_exhaustive;
        for (const Subspace& M : fc1.complements) {
            if (!is_complement_of(L, f2.top, f2.bottom, M)) continue;
            int mx = maximal_memo(ctx, L, M, budget);
            if (mx < 0) exhaustive = false;
            if (mx == 1) {
                found = true;
                p.max_complement = M;
                break;
            }
        }
        p.max_complement_found =
            fold(found, exhaustive, "a maximal subalgebra complements both factors",
                 "no common maximal complement exists", "the complement search was incomplete");
    } else {
        p.max_complement_found =
            Verdict::yes_exhaustive("not applicable: the factors are not both m-factors");
    }

    if (m_decided && fc1.is_m.no() && fc2.is_m.no()) {
        if (fc1.is_c.unknown_v() || fc2.is_c.unknown_v()) {
            p.mprime_case = 0;
            p.mixed_config = Verdict::unknown("a complement verdict is undecided");
        } else if (fc1.is_c.no() && fc2.is_c.no()) {
            p.mprime_case = 1;
        } else if (fc1.is_c.yes() && fc2.is_c.yes()) {
            p.mprime_case = 2;
        } else {
            p.mprime_case = 3;
            // Only a common supplemented cover can link a mixed pair; the
            // cover inherits non-complementedness and descends onto the
            // complemented member.
            if (edge.case_tag == 1 && edge.cover) {
                const IdealSection& lower = fc1.is_c.yes() ? f1 : f2;
                p.mixed_config = find_descent_configuration(L, *edge.cover, lower, budget).verdict;
            } else {
                p.mixed_config = Verdict::no_exhaustive(
                    "the matched edge is not a common supplemented cover");
            }
        }
    }
    return p;
}

SeriesMatch match_with_context(const LieAlgebra& L, MContext& ctx, const ChiefSeries& s1,
                               const ChiefSeries& s2, const Budget& budget) {
    SeriesMatch sm;
    const u32 n = s1.length();
    if (n != s2.length())
        throw std::invalid_argument("series_permutation: the series have different lengths");
    if (n > 8) {
        sm.exact = false;
        sm.note = "matching enumeration limited to series of length at most 8";
        return sm;
    }

    std::vector<IdealSection> f1s, f2s;
    for (u32 i = 0; i < n; ++i) {
        f1s.push_back(IdealSection{s1.chain[i + 1], s1.chain[i]});
        f2s.push_back(IdealSection{s2.chain[i + 1], s2.chain[i]});
    }

    std::vector<std::vector<MRelatedReport>> edges(n, std::vector<MRelatedReport>(n));
    for (u32 i = 0; i < n; ++i)
        for (u32 j = 0; j < n; ++j) {
            edges[i][j] = m_edge(L, ctx, f1s[i], f2s[j]);
            if (edges[i][j].related.unknown_v()) sm.exact = false;
        }

    std::vector<u32> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<u32> first;
    do {
        bool ok = true;
        for (u32 i = 0; i < n && ok; ++i) ok = edges[i][perm[i]].related.yes();
        if (ok) {
            if (sm.matching_count == 0) first = perm;
            ++sm.matching_count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (sm.matching_count == 0) {
        sm.violation = sm.exact;  // only decided edges certify a violation
        sm.note = sm.exact ? "the m-related graph admits no perfect matching"
                           : "no matching found; some edges are undecided";
        return sm;
    }

    sm.pi = first;
    for (u32 i = 0; i < n; ++i) {
        MatchedPair p =
            check_pair(L, ctx, f1s[i], f2s[sm.pi[i]], i, sm.pi[i], edges[i][sm.pi[i]], budget);
        if (p.equivalent.unknown_v() || p.status_agree.unknown_v() ||
            p.max_complement_found.unknown_v())
            sm.exact = false;
        sm.pairs.push_back(std::move(p));
    }
    return sm;
}

}  // namespace

bool covers(const LieAlgebra& L, const IdealSection& upper, const IdealSection& lower) {
    const PrimeField& F = L.field();
    return sum(F, upper.bottom, lower.top) == upper.top &&
           intersect(F, upper.bottom, lower.top) == lower.bottom;
}

SeriesLabels label_series(const LieAlgebra& L, const ChiefSeries& s, const Budget& budget) {
    SeriesLabels out;
    for (u32 i = 0; i < s.length(); ++i) {
        FactorLabel lab;
        lab.section = IdealSection{s.chain[i + 1], s.chain[i]};
        lab.abelian = L.is_abelian_section(lab.section.top, lab.section.bottom);
        try {
            FactorComplements fc =
                factor_complements(L, lab.section.top, lab.section.bottom, budget);
            lab.c = fc.is_c;
            lab.m = fc.is_m;
            lab.frattini_verdict = fc.frattini;
        } catch (const BudgetError& e) {
            lab.c = Verdict::unknown(e.what());
            lab.m = Verdict::unknown(e.what());
            lab.frattini_verdict = Verdict::unknown(e.what());
        }
        lab.frattini = lab.frattini_verdict.yes();
        lab.supplemented = lab.frattini_verdict.no();
        if (lab.c.yes()) ++out.c_count;
        if (lab.m.yes()) ++out.m_count;
        if (lab.frattini) ++out.frattini_count;
        if (lab.c.unknown_v() || lab.m.unknown_v() || lab.frattini_verdict.unknown_v())
            out.exact = false;
        out.labels.push_back(std::move(lab));
    }
    return out;
}

std::vector<MCrossing> m_crossings(const LieAlgebra& L, const Budget& budget) {
    MContext ctx = build_mcontext(L, budget);
    if (!ctx.exact)
        throw BudgetError("crossing enumeration: some Frattini verdicts are undecided", 0, 0);
    return ctx.crossings;
}

MRelatedReport m_related(const LieAlgebra& L, const IdealSection& f1, const IdealSection& f2,
                         const Budget& budget) {
    try {
        MContext ctx = build_mcontext(L, budget);
        return m_edge(L, ctx, f1, f2);
    } catch (const BudgetError& e) {
        MRelatedReport rep;
        rep.related = Verdict::unknown(e.what());
        return rep;
    }
}

SeriesMatch series_permutation(const LieAlgebra& L, const ChiefSeries& s1, const ChiefSeries& s2,
                               const Budget& budget) {
    try {
        MContext ctx = build_mcontext(L, budget);
        return match_with_context(L, ctx, s1, s2, budget);
    } catch (const BudgetError& e) {
        SeriesMatch sm;
        sm.exact = false;
        sm.note = std::string("section scan stopped: ") + e.what();
        return sm;
    }
}

DescentConfig descent_configuration(const LieAlgebra& L, const IdealSection& upper,
                                    const IdealSection& lower, const Subspace& X,
                                    const std::optional<Subspace>& lower_complement,
                                    const Budget& budget) {
    const PrimeField& F = L.field();
    DescentConfig cfg;
    LAlgebraModule m = chief_factor_module(L, lower.top, lower.bottom);
    ICResult ic = i_and_c(m);
    cfg.I = ic.i_l;
    cfg.C = ic.c_l;
    cfg.X = X;
    cfg.N = intersect(F, X, cfg.C);

    const bool upper_nonab = !L.is_abelian_section(upper.top, upper.bottom);
    const bool lower_nonab = !L.is_abelian_section(lower.top, lower.bottom);
    const bool x_ok = L.is_ideal(X) && cfg.I.contains(F, X);
    cfg.hypotheses = (covers(L, upper, lower) && upper_nonab && lower_nonab && x_ok)
                         ? Verdict::yes_exhaustive()
                         : Verdict::no_exhaustive("covering or ideal hypotheses fail");

    IdealSection ic_sec{cfg.I, cfg.C};
    IdealSection xn_sec{cfg.X, cfg.N};
    cfg.covers_upper = covers(L, ic_sec, upper) ? Verdict::yes_exhaustive()
                                                : Verdict::no_exhaustive("I/C does not cover it");
    cfg.lower_covered = covers(L, xn_sec, lower) ? Verdict::yes_exhaustive()
                                                 : Verdict::no_exhaustive("X/N does not cover it");
    cfg.chain = covers(L, ic_sec, xn_sec) ? Verdict::yes_exhaustive()
                                          : Verdict::no_exhaustive("I/C does not cover X/N");

    if (cfg.I == cfg.C) {
        cfg.upper_not_complemented =
            Verdict::no_exhaustive("the inner-action section is trivial");
        cfg.primitive_type2 = Verdict::no_exhaustive("the socle section would be trivial");
    } else {
        try {
            cfg.upper_not_complemented =
                negate_c(factor_complements(L, cfg.I, cfg.C, budget).is_c);
        } catch (const BudgetError& e) {
            cfg.upper_not_complemented = Verdict::unknown(e.what());
        }
        try {
            QuotientMap qm = quotient(L, cfg.C);
            PrimitiveReport pr = socle_core_primitive(qm.quotient, {}, budget);
            if (pr.kind == PrimitiveKind::Undecided) {
                cfg.primitive_type2 = Verdict::unknown(pr.note);
            } else {
                const bool ok =
                    pr.kind == PrimitiveKind::Type2 && pr.socle == qm.push_forward(cfg.I);
                cfg.primitive_type2 = ok ? Verdict::yes_exhaustive()
                                         : Verdict::no_exhaustive("not type 2 with socle I/C");
            }
        } catch (const BudgetError& e) {
            cfg.primitive_type2 = Verdict::unknown(e.what());
        }
    }

    if (lower_complement) {
        cfg.lower_complemented = is_complement_of(L, cfg.X, cfg.N, *lower_complement)
                                     ? Verdict::yes_witness("the supplied complement verifies")
                                     : Verdict::unknown("the supplied subspace is not a complement");
    } else if (cfg.X == cfg.N) {
        cfg.lower_complemented = Verdict::yes_exhaustive("the interpolating section is trivial");
    } else {
        try {
            cfg.lower_complemented = factor_complements(L, cfg.X, cfg.N, budget).is_c;
        } catch (const BudgetError& e) {
            cfg.lower_complemented = Verdict::unknown(e.what());
        }
    }
    return cfg;
}

VerdictWith<DescentConfig> find_descent_configuration(const LieAlgebra& L,
                                                      const IdealSection& upper,
                                                      const IdealSection& lower,
                                                      const Budget& budget) {
    VerdictWith<DescentConfig> out;
    bool exhaustive = true;
    try {
        for (const Subspace& X : all_ideals(L, budget)) {
            DescentConfig cfg = descent_configuration(L, upper, lower, X, {}, budget);
            if (cfg.hypotheses.no()) continue;
            const bool arithmetic =
                cfg.covers_upper.yes() && cfg.lower_covered.yes() && cfg.chain.yes();
            if (!arithmetic) continue;
            if (cfg.upper_not_complemented.unknown_v() || cfg.lower_complemented.unknown_v() ||
                cfg.primitive_type2.unknown_v()) {
                exhaustive = false;
                continue;
            }
            if (cfg.upper_not_complemented.yes() && cfg.lower_complemented.yes() &&
                cfg.primitive_type2.yes()) {
                out.verdict = Verdict::yes_witness("an interpolating ideal completes the configuration");
                out.witness = std::move(cfg);
                return out;
            }
        }
    } catch (const BudgetError& e) {
        out.verdict = Verdict::unknown(e.what());
        return out;
    }
    out.verdict = exhaustive
                      ? Verdict::no_exhaustive("no ideal completes the configuration")
                      : Verdict::unknown("some candidate ideals could not be decided");
    return out;
}

CcTypeReport cc_type_and_variation(const LieAlgebra& L, const Budget& budget) {
    const PrimeField& F = L.field();
    CcTypeReport rep;

    std::vector<ChiefSeries> series;
    try {
        series = all_chief_series(L, budget);
    } catch (const BudgetError& e) {
        rep.v_exact = false;
        rep.c_counts_exact = false;
        rep.spread_ok = true;  // vacuous: no series could be compared
        rep.note = std::string("series enumeration stopped: ") + e.what();
        return rep;
    }

    // cc'-type per factor class: the crown chain must be strict and the socle
    // of the primitive image must lack a complement there.
    FactorClassification fcl = factor_classes(L, series.front(), budget);
    if (!fcl.exact) rep.v_exact = false;
    for (const FactorClass& cls : fcl.classes) {
        CcClassReport cr;
        cr.cls = cls;
        if (cls.abelian) {
            cr.cc = Verdict::no_exhaustive("abelian factors are never of cc'-type");
            cr.socle_not_complemented = Verdict::no_exhaustive("not evaluated for abelian factors");
        } else {
            try {
                const IdealSection& f = cls.members.front();
                CrownRecord crown = crown_data(L, chief_factor_module(L, f.top, f.bottom), budget);
                std::optional<bool> strict;
                if (crown.d_exact && crown.e_exact) {
                    const bool ed =
                        crown.D.contains(F, crown.E_core) && !(crown.E_core == crown.D);
                    const bool di = crown.I.contains(F, crown.D) && !(crown.D == crown.I);
                    strict = ed && di;
                    cr.strict_chain = *strict;
                }

                QuotientMap qm = quotient(L, crown.C);
                Subspace soc = socle_of(qm.quotient, budget);
                cr.socle_not_complemented = negate_c(
                    factor_complements(qm.quotient, soc, Subspace::zero(qm.quotient.dim()), budget)
                        .is_c);

                if ((strict && !*strict) || cr.socle_not_complemented.no())
                    cr.cc = Verdict::no_exhaustive("the crown chain or the socle test fails");
                else if (strict && *strict && cr.socle_not_complemented.yes())
                    cr.cc = Verdict::yes_exhaustive("strict crown chain and non-complemented socle");
                else
                    cr.cc = Verdict::unknown("a component of the criterion is undecided");
            } catch (const BudgetError& e) {
                cr.cc = Verdict::unknown(e.what());
                cr.socle_not_complemented = Verdict::unknown(e.what());
            }
        }
        if (cr.cc.yes()) ++rep.v_lower;
        if (cr.cc.yes() || cr.cc.unknown_v()) ++rep.v_upper;
        if (cr.cc.unknown_v()) rep.v_exact = false;
        rep.classes.push_back(std::move(cr));
    }

    // Complemented-factor counts on every series.
    for (const ChiefSeries& s : series) {
        SeriesLabels lb = label_series(L, s, budget);
        rep.c_counts.push_back(lb.c_count);
        for (const FactorLabel& lab : lb.labels)
            if (lab.c.unknown_v()) rep.c_counts_exact = false;
    }
    const auto [mn, mx] = std::minmax_element(rep.c_counts.begin(), rep.c_counts.end());
    const u32 bound = rep.v_exact ? rep.v_lower : rep.v_upper;
    rep.spread_ok = rep.c_counts.empty() || (*mx - *mn) <= bound;

    // Matched m'-pairs across every pair of series.
    try {
        MContext ctx = build_mcontext(L, budget);
        for (std::size_t a = 0; a < series.size(); ++a)
            for (std::size_t b = a; b < series.size(); ++b) {
                SeriesMatch sm = match_with_context(L, ctx, series[a], series[b], budget);
                if (!sm.exact && rep.note.empty())
                    rep.note = "a series matching was budget-limited";
                if (sm.violation && rep.note.empty())
                    rep.note = "a series pair admits no perfect matching";
                for (const MatchedPair& p : sm.pairs) {
                    if (p.mprime_case == 0) continue;
                    MixedPairCheck mc;
                    mc.series_a = u32(a);
                    mc.series_b = u32(b);
                    mc.i = p.i;
                    mc.j = p.j;
                    mc.mprime_case = p.mprime_case;
                    mc.config_ok = p.mprime_case == 3
                                       ? p.mixed_config
                                       : Verdict::yes_exhaustive("uniform complement status");
                    rep.mixed_pairs.push_back(std::move(mc));
                }
            }
    } catch (const BudgetError& e) {
        rep.note += std::string("matching sweep stopped: ") + e.what();
    }
    return rep;
}

}  // namespace liecrown
