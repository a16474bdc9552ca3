#include "liecrown/crowns.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace liecrown {

namespace {

bool subspace_leq(const PrimeField& F, const Subspace& a, const Subspace& b) {
    if (a.dim() > b.dim()) return false;
    for (u32 r = 0; r < a.dim(); ++r)
        if (!b.contains(F, a.basis.row_vec(r))) return false;
    return true;
}

LAlgebraModule section_module(const LieAlgebra& L, const IdealSection& f) {
    return chief_factor_module(L, f.top, f.bottom);
}

// Witness-search outcome folded into a verdict: yes with a found witness, no
// only when every candidate was enumerated and decided, unknown otherwise.
Verdict fold(bool found, bool exhaustive, std::string yes_note, std::string no_note,
             std::string unknown_note) {
    if (found)
        return exhaustive ? Verdict::yes_exhaustive(std::move(yes_note))
                          : Verdict::yes_witness(std::move(yes_note));
    if (exhaustive) return Verdict::no_exhaustive(std::move(no_note));
    return Verdict::unknown(std::move(unknown_note));
}

}  // namespace

CrownRecord crown_data(const LieAlgebra& L, const LAlgebraModule& m, const Budget& budget) {
    const PrimeField& F = L.field();
    if (!(m.acting == L))
        throw std::invalid_argument("crown_data: the module does not act through the given algebra");
    try {
        if (!is_irreducible(m, budget))
            throw std::invalid_argument("crown_data: the carrier is not irreducible");
    } catch (const BudgetError&) {
        // Irreducibility is the caller's responsibility when it is not
        // checkable within budget.
    }

    ICResult ic = i_and_c(m);
    const Subspace& I = ic.i_l;
    std::string note;

    // D: intersection of the ideals R ⊆ I for which I/R is equivalent to the
    // carrier and non-Frattini. Only equal-dimension sections can qualify.
    bool d_exact = true;
    Subspace D = I;
    try {
        for (const Subspace& R : all_ideals(L, budget)) {
            if (R.dim() + m.adim() != I.dim()) continue;
            if (!subspace_leq(F, R, I)) continue;
            LAlgebraModule sec = chief_factor_module(L, I, R);
            VerdictWith<EquivalenceWitness> eq = l_equivalent(m, sec, budget);
            if (eq.verdict.unknown_v()) {
                d_exact = false;
                continue;
            }
            if (!eq.yes()) continue;
            FactorComplements fc = factor_complements(L, I, R, budget);
            if (fc.frattini.unknown_v()) {
                d_exact = false;
                continue;
            }
            if (fc.frattini.yes()) continue;
            D = intersect(F, D, R);
        }
    } catch (const BudgetError& e) {
        d_exact = false;
        note += std::string("ideal scan for D stopped: ") + e.what() + "; ";
    }

    // E: common kernel of all cocycles, with its core in the semidirect sum.
    ELResult el = e_l(m, budget);
    if (!el.exact) note += "cocycle enumeration for E stopped at its budget; ";

    // J: centralizers of the twists isomorphic to no chief factor of L.
    bool j_exact = true;
    Subspace J = I;
    try {
        CocycleSet zs = cocycle_space(m, budget);
        std::vector<Cocycle> alphas = explicit_cocycles(m, zs, budget);
        // Chief factors of matching dimension, deduplicated up to isomorphism.
        std::vector<LAlgebraModule> reference;
        for (const IdealSection& s : chief_factor_sections(L, budget)) {
            if (s.top.dim() - s.bottom.dim() != m.adim()) continue;
            LAlgebraModule sm = section_module(L, s);
            bool dup = false;
            for (const LAlgebraModule& r : reference)
                if (l_isomorphism(r, sm, budget).yes()) {
                    dup = true;
                    break;
                }
            if (!dup) reference.push_back(std::move(sm));
        }
        for (const Cocycle& alpha : alphas) {
            LAlgebraModule tw = twist(m, alpha);
            bool iso_some = false, undecided = false;
            for (const LAlgebraModule& r : reference) {
                VerdictWith<Mat> v = l_isomorphism(tw, r, budget);
                if (v.yes()) {
                    iso_some = true;
                    break;
                }
                if (v.verdict.unknown_v()) undecided = true;
            }
            if (iso_some) continue;   // the twist is a chief factor: excluded
            if (undecided) {
                j_exact = false;      // membership open: dropping it keeps J an upper bound
                continue;
            }
            J = intersect(F, J, i_and_c(tw).c_l);
        }
    } catch (const BudgetError& e) {
        j_exact = false;
        note += std::string("twist sweep for J stopped: ") + e.what() + "; ";
    }

    // The crown algebra I/D: I carries its induced table; D sits inside it.
    LAlgebraModule isec = chief_factor_module(L, I, Subspace::zero(L.dim()));
    std::vector<Vec> drows;
    for (u32 r = 0; r < D.dim(); ++r)
        drows.push_back(section_project(isec, F, D.basis.row_vec(r)));
    Subspace d_in_i = Subspace::span_vectors(F, drows, isec.carrier.dim());
    QuotientMap crown = quotient(isec.carrier, d_in_i);

    CrownRecord rec{m,     I,        ic.c_l,   D, el.raw, el.core, J, std::move(crown),
                    d_exact, el.exact, j_exact, std::move(note)};
    return rec;
}

ConnectedReport l_connected(const LieAlgebra& L, const IdealSection& f1, const IdealSection& f2,
                            const Budget& budget) {
    LAlgebraModule s1 = section_module(L, f1);
    LAlgebraModule s2 = section_module(L, f2);

    ConnectedReport rep{Verdict::unknown(), Verdict::unknown(), Verdict::unknown(),
                        Verdict::unknown(), {}, {}};

    // The equivalence relation itself: some twist of one section is
    // isomorphic to the other.
    try {
        rep.equivalent = l_equivalent(s1, s2, budget).verdict;
    } catch (const BudgetError& e) {
        rep.equivalent = Verdict::unknown(e.what());
    }

    // Isomorphism is the shared first disjunct of the other three conditions.
    VerdictWith<Mat> iso{Verdict::unknown(), {}};
    try {
        iso = l_isomorphism(s1, s2, budget);
    } catch (const BudgetError& e) {
        iso.verdict = Verdict::unknown(e.what());
    }

    // Connected: isomorphic, or some quotient L/K is primitive with two
    // nonabelian minimal ideals isomorphic to the two factors. A quotient
    // with two nonabelian minimal ideals is primitive exactly when some
    // complement of one minimal ideal is core-free and maximal (a core-free
    // maximal subalgebra of such an algebra complements both minimal ideals).
    if (iso.yes()) {
        rep.connected = Verdict::yes_witness("the factors are isomorphic");
    } else {
        bool exhaustive = !iso.verdict.unknown_v();
        bool found = false;
        try {
            for (const Subspace& K : all_ideals(L, budget)) {
                if (found) break;
                QuotientMap qm = quotient(L, K);
                if (qm.quotient.dim() == 0) continue;
                std::vector<Subspace> mins = minimal_ideals(qm.quotient, budget);
                if (mins.size() != 2) continue;
                if (qm.quotient.derived_subalgebra_of(mins[0]).dim() == 0 ||
                    qm.quotient.derived_subalgebra_of(mins[1]).dim() == 0)
                    continue;
                LAlgebraModule ma = chief_factor_module(L, qm.pull_back(mins[0]), K);
                LAlgebraModule mb = chief_factor_module(L, qm.pull_back(mins[1]), K);
                VerdictWith<Mat> a1 = l_isomorphism(ma, s1, budget);
                VerdictWith<Mat> a2 = l_isomorphism(ma, s2, budget);
                VerdictWith<Mat> b1 = l_isomorphism(mb, s1, budget);
                VerdictWith<Mat> b2 = l_isomorphism(mb, s2, budget);
                if (a1.verdict.unknown_v() || a2.verdict.unknown_v() ||
                    b1.verdict.unknown_v() || b2.verdict.unknown_v())
                    exhaustive = false;
                if (!((a1.yes() && b2.yes()) || (a2.yes() && b1.yes()))) continue;
                Subspace qzero = Subspace::zero(qm.quotient.dim());
                FactorComplements fc = factor_complements(qm.quotient, mins[0], qzero, budget);
                if (!fc.complements_exhaustive) exhaustive = false;
                for (const Subspace& M : fc.complements) {
                    if (qm.quotient.core_of(M).dim() != 0) continue;
                    if (!is_complement_of(qm.quotient, mins[1], qzero, M)) continue;
                    if (!is_maximal_subalgebra(qm.quotient, M, budget)) continue;
                    found = true;
                    rep.type3_kernel = K;
                    break;
                }
            }
        } catch (const BudgetError&) {
            exhaustive = false;
        }
        rep.connected = fold(found, exhaustive, "witness quotient found",
                             "no quotient is primitive with matching nonabelian minimal ideals",
                             "quotient scan budget-limited");
    }

    // Common-complement conditions: isomorphic, or isomorphic chief-factor
    // copies of the two factors share a complement (a maximal one for the
    // stronger form).
    if (iso.yes()) {
        rep.common_max_complement = Verdict::yes_witness("the factors are isomorphic");
        rep.common_complement = Verdict::yes_witness("the factors are isomorphic");
    } else {
        bool exhaustive = !iso.verdict.unknown_v();
        bool max_exhaustive = true;
        bool found_common = false, found_max = false;
        std::optional<Subspace> witness, max_witness;
        try {
            std::vector<IdealSection> like1, like2;
            for (const IdealSection& s : chief_factor_sections(L, budget)) {
                LAlgebraModule sm = section_module(L, s);
                VerdictWith<Mat> v1 = l_isomorphism(sm, s1, budget);
                VerdictWith<Mat> v2 = l_isomorphism(sm, s2, budget);
                if (v1.verdict.unknown_v() || v2.verdict.unknown_v()) exhaustive = false;
                if (v1.yes()) like1.push_back(s);
                if (v2.yes()) like2.push_back(s);
            }
            for (const IdealSection& e1 : like1) {
                FactorComplements fc = factor_complements(L, e1.top, e1.bottom, budget);
                if (!fc.complements_exhaustive) exhaustive = false;
                for (const IdealSection& e2 : like2) {
                    for (const Subspace& M : fc.complements) {
                        if (!is_complement_of(L, e2.top, e2.bottom, M)) continue;
                        if (!found_common) {
                            found_common = true;
                            witness = M;
                        }
                        if (!found_max) {
                            try {
                                if (is_maximal_subalgebra(L, M, budget)) {
                                    found_max = true;
                                    max_witness = M;
                                }
                            } catch (const BudgetError&) {
                                max_exhaustive = false;
                            }
                        }
                    }
                }
                if (found_max) break;
            }
        } catch (const BudgetError&) {
            exhaustive = false;
        }
        rep.common_complement = fold(found_common, exhaustive, "common complement found",
                                     "no isomorphic copies share a complement",
                                     "complement search budget-limited");
        rep.common_max_complement =
            fold(found_max, exhaustive && max_exhaustive, "common maximal complement found",
                 "no isomorphic copies share a maximal complement",
                 "maximal-complement search budget-limited");
        rep.complement_witness = found_max ? max_witness : witness;
    }

    return rep;
}

FactorClassification factor_classes(const LieAlgebra& L, const ChiefSeries& s,
                                    const Budget& budget) {
    const u32 n = s.length();
    std::vector<IdealSection> factors;
    factors.reserve(n);
    for (u32 i = 0; i < n; ++i) factors.push_back(IdealSection{s.chain[i + 1], s.chain[i]});

    // Union-find over decided-yes edges; undecided edges only flag inexactness.
    std::vector<u32> parent(n);
    for (u32 i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](u32 x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    bool exact = true;
    for (u32 i = 0; i < n; ++i)
        for (u32 j = i + 1; j < n; ++j) {
            ConnectedReport rep = l_connected(L, factors[i], factors[j], budget);
            bool yes = rep.equivalent.yes() || rep.connected.yes();
            bool no = rep.equivalent.no() || rep.connected.no();
            if (yes)
                parent[find(i)] = find(j);
            else if (!no)
                exact = false;
        }

    FactorClassification out;
    out.exact = exact;
    std::vector<int> class_of_root(n, -1);
    for (u32 i = 0; i < n; ++i) {
        u32 r = find(i);
        if (class_of_root[r] < 0) {
            class_of_root[r] = int(out.classes.size());
            FactorClass c;
            c.dim = factors[i].top.dim() - factors[i].bottom.dim();
            c.abelian = L.is_abelian_section(factors[i].top, factors[i].bottom);
            out.classes.push_back(std::move(c));
        }
        FactorClass& c = out.classes[std::size_t(class_of_root[r])];
        c.indices.push_back(i);
        c.members.push_back(factors[i]);
    }
    return out;
}

}  // namespace liecrown
