#include <algorithm>
#include <vector>

#include "doctest.h"
#include "liecrown/catalog.hpp"
#include "liecrown/chief.hpp"
#include "liecrown/classify.hpp"
#include "liecrown/crowns.hpp"

using namespace liecrown;

namespace {

Vec unit(u32 n, u32 i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

Subspace coords(const LieAlgebra& L, std::initializer_list<u32> is) {
    std::vector<Vec> vs;
    for (u32 i : is) vs.push_back(unit(L.dim(), i));
    return Subspace::span_vectors(L.field(), vs, L.dim());
}

Subspace line(const LieAlgebra& L, const Vec& v) {
    return Subspace::span_vectors(L.field(), {v}, L.dim());
}

// The unique series passing through the given intermediate ideal.
const ChiefSeries& series_through(const std::vector<ChiefSeries>& ss, const Subspace& mid) {
    for (const ChiefSeries& s : ss)
        for (const Subspace& t : s.chain)
            if (t == mid) return s;
    REQUIRE(false);
    return ss.front();
}

bool sections_equal(const IdealSection& a, const IdealSection& b) {
    return a.top == b.top && a.bottom == b.bottom;
}

}  // namespace

TEST_CASE("covering arithmetic between ideal sections") {
    LieAlgebra L = builtin("h3", 2);
    Subspace Z = coords(L, {2});
    Subspace P1 = coords(L, {0, 2});
    Subspace P2 = coords(L, {1, 2});
    Subspace full = Subspace::full(3);

    CHECK(covers(L, {full, P1}, {P2, Z}));     // P1 + P2 = L and P1 ∩ P2 = Z
    CHECK(covers(L, {full, P2}, {P1, Z}));
    CHECK_FALSE(covers(L, {P1, Z}, {Z, Subspace::zero(3)}));  // Z + Z is not P1
    CHECK_FALSE(covers(L, {P2, Z}, {full, P1}));              // not symmetric

    // Every section covers itself.
    for (const IdealSection& s : chief_factor_sections(L)) CHECK(covers(L, s, s));
}

TEST_CASE("complement-status labels of chief series factors") {
    SUBCASE("heisenberg: the center is Frattini, the rest are maximal-complemented") {
        LieAlgebra L = builtin("h3", 2);
        std::vector<ChiefSeries> ss = all_chief_series(L);
        REQUIRE(ss.size() == 3);
        for (const ChiefSeries& s : ss) {
            SeriesLabels lb = label_series(L, s);
            REQUIRE(lb.labels.size() == 3);
            CHECK(lb.exact);
            CHECK(lb.labels[0].abelian);
            CHECK(lb.labels[0].frattini);
            CHECK_FALSE(lb.labels[0].supplemented);
            CHECK(lb.labels[0].c.no());
            CHECK(lb.labels[0].m.no());
            for (int i : {1, 2}) {
                CHECK(lb.labels[i].c.yes());
                CHECK(lb.labels[i].m.yes());
                CHECK(lb.labels[i].supplemented);
                CHECK_FALSE(lb.labels[i].frattini);
            }
            CHECK(lb.c_count == 2);
            CHECK(lb.m_count == 2);
            CHECK(lb.frattini_count == 1);
        }
    }
    SUBCASE("double simple summand: complemented bottom, complemented-not-maximal top") {
        LieAlgebra L = builtin("sl2sl2", 5);
        std::vector<ChiefSeries> ss = all_chief_series(L);
        REQUIRE(ss.size() == 2);
        for (const ChiefSeries& s : ss) {
            SeriesLabels lb = label_series(L, s);
            REQUIRE(lb.labels.size() == 2);
            CHECK(lb.exact);
            CHECK_FALSE(lb.labels[0].abelian);
            CHECK_FALSE(lb.labels[1].abelian);
            CHECK(lb.labels[0].c.yes());
            CHECK(lb.labels[0].m.yes());  // a diagonal copy of the other summand is maximal
            CHECK(lb.labels[1].c.yes());
            CHECK(lb.labels[1].m.no());  // the only complement is the other summand
            CHECK(lb.labels[0].supplemented);
            CHECK(lb.labels[1].supplemented);
            CHECK(lb.c_count == 2);
            CHECK(lb.m_count == 1);
            CHECK(lb.frattini_count == 0);
        }
    }
    SUBCASE("simple algebra: complemented only by zero, which is not maximal") {
        LieAlgebra L = builtin("sl2", 3);
        std::vector<ChiefSeries> ss = all_chief_series(L);
        REQUIRE(ss.size() == 1);
        SeriesLabels lb = label_series(L, ss[0]);
        REQUIRE(lb.labels.size() == 1);
        CHECK(lb.exact);
        CHECK(lb.labels[0].c.yes());
        CHECK(lb.labels[0].m.no());
        CHECK(lb.labels[0].supplemented);
        CHECK(lb.c_count == 1);
        CHECK(lb.m_count == 0);
        CHECK(lb.frattini_count == 0);
    }
    SUBCASE("two-dimensional solvable: both factors complemented by maximal lines") {
        LieAlgebra L = builtin("r2", 3);
        std::vector<ChiefSeries> ss = all_chief_series(L);
        REQUIRE(ss.size() == 1);
        SeriesLabels lb = label_series(L, ss[0]);
        REQUIRE(lb.labels.size() == 2);
        CHECK(lb.exact);
        for (const FactorLabel& lab : lb.labels) {
            CHECK(lab.c.yes());
            CHECK(lab.m.yes());
            CHECK(lab.supplemented);
        }
        CHECK(lb.c_count == 2);
        CHECK(lb.m_count == 2);
        CHECK(lb.frattini_count == 0);
    }
    SUBCASE("one-dimensional algebra") {
        LieAlgebra L = builtin("ab1", 2);
        SeriesLabels lb = label_series(L, all_chief_series(L).front());
        REQUIRE(lb.labels.size() == 1);
        CHECK(lb.labels[0].c.yes());
        CHECK(lb.labels[0].m.yes());
        CHECK(lb.c_count == 1);
        CHECK(lb.m_count == 1);
    }
}

TEST_CASE("crossing patterns need a Frattini factor covering a supplemented one") {
    CHECK(m_crossings(builtin("h3", 2)).empty());
    CHECK(m_crossings(builtin("r2", 3)).empty());
    CHECK(m_crossings(builtin("sl2sl2", 5)).empty());
    CHECK(m_crossings(builtin("ab2", 2)).empty());

    // Heisenberg plus a central line: quotients by the extra central lines
    // keep the commutator line Frattini, while the lines themselves are
    // supplemented by the Heisenberg block.
    LieAlgebra L = builtin("h3ab", 2);
    std::vector<MCrossing> cs = m_crossings(L);
    REQUIRE(cs.size() == 2);
    for (const MCrossing& cr : cs) {
        CHECK(covers(L, cr.upper, cr.lower));
        CHECK(factor_complements(L, cr.upper.top, cr.upper.bottom).frattini.yes());
        CHECK(factor_complements(L, cr.lower.top, cr.lower.bottom).frattini.no());
    }
    Subspace center2 = coords(L, {2, 3});   // the commutator line plus the extra line
    Subspace e4 = coords(L, {3});
    Subspace ze4 = line(L, Vec{0, 0, 1, 1});
    Subspace zero = Subspace::zero(4);
    bool found = false;
    for (const MCrossing& cr : cs)
        found = found || (sections_equal(cr.upper, {center2, e4}) &&
                          sections_equal(cr.lower, {ze4, zero}));
    CHECK(found);
}

TEST_CASE("relatedness of the heisenberg chief factors") {
    LieAlgebra L = builtin("h3", 2);
    Subspace zero = Subspace::zero(3);
    Subspace Z = coords(L, {2});
    Subspace P1 = coords(L, {0, 2});
    Subspace P2 = coords(L, {1, 2});
    Subspace P3 = line(L, Vec{1, 1, 0});
    P3 = sum(L.field(), P3, Z);
    Subspace full = Subspace::full(3);

    // Middle factors of different planes: linked by the top factor of the
    // third plane, which covers both.
    MRelatedReport r = m_related(L, {P1, Z}, {P2, Z});
    CHECK(r.related.yes());
    CHECK(r.related.exhaustive());
    CHECK(r.case_tag == 1);
    REQUIRE(r.cover.has_value());
    CHECK(r.cover->top == full);
    CHECK(r.cover->bottom == P3);

    // Middle factor of one plane and top factor of another: the top factor
    // itself is the common supplemented cover.
    r = m_related(L, {P1, Z}, {full, P2});
    CHECK(r.related.yes());
    CHECK(r.case_tag == 1);
    REQUIRE(r.cover.has_value());
    CHECK(r.cover->bottom == P2);

    r = m_related(L, {full, P1}, {P2, Z});
    CHECK(r.related.yes());
    CHECK(r.case_tag == 1);
    REQUIRE(r.cover.has_value());
    CHECK(r.cover->bottom == P1);

    // The center with itself: both cover the Frattini factor.
    r = m_related(L, {Z, zero}, {Z, zero});
    CHECK(r.related.yes());
    CHECK(r.case_tag == 3);
    REQUIRE(r.cover.has_value());
    CHECK(r.cover->top == Z);

    // Unrelated pairs, all decided exhaustively.
    for (const auto& [f1, f2] : std::vector<std::pair<IdealSection, IdealSection>>{
             {{Z, zero}, {P1, Z}},      // center vs a middle factor
             {{Z, zero}, {full, P1}},   // center vs a top factor
             {{P1, Z}, {full, P1}},     // middle and top of the same plane
             {{full, P1}, {full, P2}},  // top factors of different planes
         }) {
        MRelatedReport nr = m_related(L, f1, f2);
        CHECK(nr.related.no());
        CHECK(nr.related.exhaustive());
    }

    // Supplemented factors relate to themselves through a covering factor.
    r = m_related(L, {P1, Z}, {P1, Z});
    CHECK(r.related.yes());
    CHECK(r.case_tag == 1);
}

TEST_CASE("relatedness across the two simple summands") {
    LieAlgebra L = builtin("sl2sl2", 5);
    Subspace zero = Subspace::zero(6);
    Subspace A = coords(L, {0, 1, 2});
    Subspace B = coords(L, {3, 4, 5});
    Subspace full = Subspace::full(6);

    MRelatedReport r = m_related(L, {A, zero}, {full, B});
    CHECK(r.related.yes());
    CHECK(r.related.exhaustive());
    CHECK(r.case_tag == 1);
    REQUIRE(r.cover.has_value());
    CHECK(r.cover->bottom == B);  // L/B covers both A/0 and itself

    r = m_related(L, {B, zero}, {full, A});
    CHECK(r.related.yes());
    CHECK(r.case_tag == 1);
    REQUIRE(r.cover.has_value());
    CHECK(r.cover->bottom == A);

    for (const auto& [f1, f2] : std::vector<std::pair<IdealSection, IdealSection>>{
             {{A, zero}, {B, zero}},    // the two summands themselves
             {{A, zero}, {full, A}},    // a summand and its own quotient
             {{full, B}, {full, A}},    // the two quotients
         }) {
        MRelatedReport nr = m_related(L, f1, f2);
        CHECK(nr.related.no());
        CHECK(nr.related.exhaustive());
    }

    r = m_related(L, {A, zero}, {A, zero});
    CHECK(r.related.yes());
    CHECK(r.case_tag == 1);
}

TEST_CASE("the weight and trivial factors of the solvable algebra are unrelated") {
    LieAlgebra L = builtin("r2", 3);
    Subspace zero = Subspace::zero(2);
    Subspace W = coords(L, {1});
    Subspace full = Subspace::full(2);

    CHECK(m_related(L, {W, zero}, {full, W}).related.no());
    CHECK(m_related(L, {full, W}, {W, zero}).related.no());
    CHECK(m_related(L, {W, zero}, {W, zero}).related.yes());
    CHECK(m_related(L, {full, W}, {full, W}).related.yes());
}

TEST_CASE("relatedness is symmetric on every section pair") {
    for (const auto& [name, p, stride] : std::vector<std::tuple<const char*, u32, std::size_t>>{
             {"h3", 2, 1}, {"sl2sl2", 5, 1}, {"ab2", 2, 1}, {"h3ab", 2, 3}}) {
        CAPTURE(name);
        LieAlgebra L = builtin(name, p);
        std::vector<IdealSection> secs = chief_factor_sections(L);
        for (std::size_t i = 0; i < secs.size(); i += stride)
            for (std::size_t j = i; j < secs.size(); j += stride) {
                MRelatedReport ab = m_related(L, secs[i], secs[j]);
                MRelatedReport ba = m_related(L, secs[j], secs[i]);
                REQUIRE_FALSE(ab.related.unknown_v());
                REQUIRE_FALSE(ba.related.unknown_v());
                CHECK(ab.related.yes() == ba.related.yes());
            }
    }
}

TEST_CASE("a unique matching aligns the factors of any two heisenberg series") {
    LieAlgebra L = builtin("h3", 2);
    std::vector<ChiefSeries> ss = all_chief_series(L);
    REQUIRE(ss.size() == 3);

    for (std::size_t a = 0; a < ss.size(); ++a)
        for (std::size_t b = 0; b < ss.size(); ++b) {
            SeriesMatch sm = series_permutation(L, ss[a], ss[b]);
            CHECK(sm.matching_count == 1);
            CHECK(sm.exact);
            CHECK_FALSE(sm.violation);
            std::vector<u32> expect = a == b ? std::vector<u32>{0, 1, 2}
                                             : std::vector<u32>{0, 2, 1};
            CHECK(sm.pi == expect);
            REQUIRE(sm.pairs.size() == 3);
            for (const MatchedPair& pr : sm.pairs) {
                CHECK(pr.equivalent.yes());
                CHECK(pr.status_agree.yes());
                CHECK(pr.m_literal_agree);
            }
            // The matched centers form the only pair of m'-factors, neither
            // complemented at all.
            CHECK(sm.pairs[0].mprime_case == 1);
            // Matched maximal-complemented pairs share a maximal complement.
            for (const MatchedPair& pr : sm.pairs) {
                if (pr.mprime_case != 0) continue;
                CHECK(pr.max_complement_found.yes());
                CHECK(pr.max_complement_found.exhaustive());
                REQUIRE(pr.max_complement.has_value());
                IdealSection f1{ss[a].chain[pr.i + 1], ss[a].chain[pr.i]};
                IdealSection f2{ss[b].chain[pr.j + 1], ss[b].chain[pr.j]};
                CHECK(is_complement_of(L, f1.top, f1.bottom, *pr.max_complement));
                CHECK(is_complement_of(L, f2.top, f2.bottom, *pr.max_complement));
            }
        }

    // Concrete cross pair: the common maximal complements are the other
    // series' planes.
    Subspace P1 = coords(L, {0, 2});
    Subspace P2 = coords(L, {1, 2});
    SeriesMatch sm = series_permutation(L, series_through(ss, P1), series_through(ss, P2));
    REQUIRE(sm.pi == std::vector<u32>{0, 2, 1});
    REQUIRE(sm.pairs[1].max_complement.has_value());  // P1/Z matched with L/P2
    CHECK(*sm.pairs[1].max_complement == P2);
    REQUIRE(sm.pairs[2].max_complement.has_value());  // L/P1 matched with P2/Z
    CHECK(*sm.pairs[2].max_complement == P1);
}

TEST_CASE("a unique matching crosses the summands of the double simple algebra") {
    LieAlgebra L = builtin("sl2sl2", 5);
    std::vector<ChiefSeries> ss = all_chief_series(L);
    REQUIRE(ss.size() == 2);
    Subspace A = coords(L, {0, 1, 2});
    Subspace B = coords(L, {3, 4, 5});
    const ChiefSeries& sB = series_through(ss, B);
    const ChiefSeries& sA = series_through(ss, A);

    SUBCASE("cross-series: the bottom of one matches the quotient of the other") {
        SeriesMatch sm = series_permutation(L, sB, sA);
        CHECK(sm.matching_count == 1);
        CHECK(sm.exact);
        CHECK_FALSE(sm.violation);
        CHECK(sm.pi == std::vector<u32>{1, 0});
        REQUIRE(sm.pairs.size() == 2);
        for (const MatchedPair& pr : sm.pairs) {
            CHECK(pr.equivalent.yes());
            CHECK(pr.status_agree.yes());
            // One member is complemented by a maximal subalgebra, the other
            // only by the non-maximal summand: the literal diagnostic fails
            // even though the Frattini/supplemented statuses agree.
            CHECK_FALSE(pr.m_literal_agree);
            CHECK(pr.mprime_case == 0);
            CHECK(pr.max_complement_found.yes());  // vacuous: not both maximal-complemented
            CHECK_FALSE(pr.max_complement.has_value());
        }
    }
    SUBCASE("same series: identity matching with one complemented m'-pair") {
        for (const ChiefSeries& s : {sB, sA}) {
            SeriesMatch sm = series_permutation(L, s, s);
            CHECK(sm.matching_count == 1);
            CHECK(sm.exact);
            CHECK(sm.pi == std::vector<u32>{0, 1});
            REQUIRE(sm.pairs.size() == 2);
            CHECK(sm.pairs[0].m_literal_agree);
            CHECK(sm.pairs[0].max_complement_found.yes());
            REQUIRE(sm.pairs[0].max_complement.has_value());
            IdealSection f{s.chain[1], s.chain[0]};
            CHECK(is_complement_of(L, f.top, f.bottom, *sm.pairs[0].max_complement));
            // The quotient factor pairs with itself as a complemented,
            // non-maximal pair: both nonabelian with complements.
            CHECK(sm.pairs[1].mprime_case == 2);
        }
    }
}

TEST_CASE("matchings of the abelian plane series") {
    LieAlgebra L = builtin("ab2", 2);
    std::vector<ChiefSeries> ss = all_chief_series(L);
    REQUIRE(ss.size() == 3);
    Subspace U = coords(L, {0});
    Subspace V = coords(L, {1});

    for (std::size_t a = 0; a < ss.size(); ++a)
        for (std::size_t b = 0; b < ss.size(); ++b) {
            SeriesMatch sm = series_permutation(L, ss[a], ss[b]);
            CHECK(sm.matching_count == 1);
            CHECK(sm.exact);
            std::vector<u32> expect = a == b ? std::vector<u32>{0, 1}
                                             : std::vector<u32>{1, 0};
            CHECK(sm.pi == expect);
            for (const MatchedPair& pr : sm.pairs) {
                CHECK(pr.equivalent.yes());
                CHECK(pr.status_agree.yes());
                CHECK(pr.m_literal_agree);
                CHECK(pr.max_complement_found.yes());
            }
        }

    // The shared maximal complement of U/0 matched with L/V is V itself.
    SeriesMatch sm = series_permutation(L, series_through(ss, U), series_through(ss, V));
    REQUIRE(sm.pairs.size() == 2);
    REQUIRE(sm.pairs[0].max_complement.has_value());
    CHECK(*sm.pairs[0].max_complement == V);
    REQUIRE(sm.pairs[1].max_complement.has_value());
    CHECK(*sm.pairs[1].max_complement == U);
}

TEST_CASE("matchings stay unique across the longer abelian series") {
    LieAlgebra L = builtin("ab3", 2);
    std::vector<ChiefSeries> ss = all_chief_series(L);
    REQUIRE(ss.size() == 21);
    for (const ChiefSeries& s : ss) {
        SeriesMatch sm = series_permutation(L, ss.front(), s);
        CHECK(sm.matching_count == 1);
        CHECK(sm.exact);
        CHECK_FALSE(sm.violation);
        for (const MatchedPair& pr : sm.pairs) {
            CHECK(pr.equivalent.yes());
            CHECK(pr.status_agree.yes());
        }
    }
}

TEST_CASE("the single simple factor matches itself as a complemented non-maximal pair") {
    LieAlgebra L = builtin("sl2", 3);
    ChiefSeries s = all_chief_series(L).front();
    SeriesMatch sm = series_permutation(L, s, s);
    CHECK(sm.matching_count == 1);
    CHECK(sm.exact);
    CHECK(sm.pi == std::vector<u32>{0});
    REQUIRE(sm.pairs.size() == 1);
    CHECK(sm.pairs[0].equivalent.yes());
    CHECK(sm.pairs[0].status_agree.yes());
    CHECK(sm.pairs[0].m_literal_agree);
    CHECK(sm.pairs[0].mprime_case == 2);
    CHECK(sm.pairs[0].max_complement_found.yes());  // vacuous
}

TEST_CASE("descent components are reported separately for a complemented cover") {
    LieAlgebra L = builtin("sl2sl2", 5);
    Subspace zero = Subspace::zero(6);
    Subspace A = coords(L, {0, 1, 2});
    Subspace B = coords(L, {3, 4, 5});
    Subspace full = Subspace::full(6);

    // Upper factor L/B covers the lower factor A/0; the inner-action ideal of
    // A/0 is all of L with kernel B, so the chain conditions all hold, but the
    // cover is complemented (by B), so the configuration's key clause fails.
    DescentConfig cfg = descent_configuration(L, {full, B}, {A, zero}, A);
    CHECK(cfg.I == full);
    CHECK(cfg.C == B);
    CHECK(cfg.N == zero);
    CHECK(cfg.hypotheses.yes());
    CHECK(cfg.covers_upper.yes());
    CHECK(cfg.chain.yes());
    CHECK(cfg.lower_covered.yes());
    CHECK(cfg.lower_complemented.yes());
    CHECK(cfg.primitive_type2.yes());      // L/C is the simple summand
    CHECK(cfg.upper_not_complemented.no());  // B complements L/B

    // Supplying the complement as a witness settles the lower clause directly.
    DescentConfig w = descent_configuration(L, {full, B}, {A, zero}, A, B);
    CHECK(w.lower_complemented.yes());
    CHECK_FALSE(w.lower_complemented.exhaustive());

    // Abelian factors are rejected by the hypotheses.
    LieAlgebra H = builtin("h3", 2);
    Subspace Z = coords(H, {2});
    DescentConfig bad = descent_configuration(H, {Z, Subspace::zero(3)},
                                              {Z, Subspace::zero(3)}, Z);
    CHECK(bad.hypotheses.no());

    // No ideal completes the configuration when the cover is complemented.
    VerdictWith<DescentConfig> found = find_descent_configuration(L, {full, B}, {A, zero});
    CHECK(found.verdict.no());
    CHECK(found.verdict.exhaustive());
    CHECK_FALSE(found.witness.has_value());
}

TEST_CASE("complemented-factor counts never spread beyond the special-class count") {
    SUBCASE("two-dimensional solvable") {
        CcTypeReport rep = cc_type_and_variation(builtin("r2", 3));
        REQUIRE(rep.classes.size() == 2);
        for (const CcClassReport& c : rep.classes) CHECK(c.cc.no());
        CHECK(rep.v_lower == 0);
        CHECK(rep.v_upper == 0);
        CHECK(rep.v_exact);
        CHECK(rep.c_counts == std::vector<u32>{2});
        CHECK(rep.c_counts_exact);
        CHECK(rep.spread_ok);
        CHECK(rep.mixed_pairs.empty());
    }
    SUBCASE("heisenberg: six matchings, each pairing the centers") {
        CcTypeReport rep = cc_type_and_variation(builtin("h3", 2));
        REQUIRE(rep.classes.size() == 1);
        CHECK(rep.classes[0].cc.no());
        CHECK(rep.v_lower == 0);
        CHECK(rep.v_exact);
        CHECK(rep.c_counts == std::vector<u32>{2, 2, 2});
        CHECK(rep.spread_ok);
        REQUIRE(rep.mixed_pairs.size() == 6);  // three series, ordered pairs a ≤ b
        for (const MixedPairCheck& mp : rep.mixed_pairs) {
            CHECK(mp.mprime_case == 1);  // neither center is complemented
            CHECK(mp.config_ok.yes());
        }
    }
    SUBCASE("simple algebra: the crown chain collapses, so no special class") {
        CcTypeReport rep = cc_type_and_variation(builtin("sl2", 3));
        REQUIRE(rep.classes.size() == 1);
        CHECK(rep.classes[0].cc.no());
        CHECK_FALSE(rep.classes[0].strict_chain);
        CHECK(rep.classes[0].socle_not_complemented.no());
        CHECK(rep.v_lower == 0);
        CHECK(rep.v_exact);
        CHECK(rep.c_counts == std::vector<u32>{1});
        CHECK(rep.spread_ok);
        REQUIRE(rep.mixed_pairs.size() == 1);
        CHECK(rep.mixed_pairs[0].mprime_case == 2);
        CHECK(rep.mixed_pairs[0].config_ok.yes());
    }
    SUBCASE("double simple summand") {
        CcTypeReport rep = cc_type_and_variation(builtin("sl2sl2", 5));
        REQUIRE(rep.classes.size() == 1);
        CHECK(rep.classes[0].cls.members.size() == 2);
        CHECK_FALSE(rep.classes[0].cls.abelian);
        CHECK(rep.classes[0].cc.no());
        CHECK_FALSE(rep.classes[0].strict_chain);
        CHECK(rep.v_lower == 0);
        CHECK(rep.v_exact);
        CHECK(rep.c_counts == std::vector<u32>{2, 2});
        CHECK(rep.spread_ok);
        REQUIRE(rep.mixed_pairs.size() == 2);  // the two same-series quotient pairs
        for (const MixedPairCheck& mp : rep.mixed_pairs) {
            CHECK(mp.mprime_case == 2);
            CHECK(mp.series_a == mp.series_b);
            CHECK(mp.config_ok.yes());
        }
    }
    SUBCASE("abelian plane") {
        CcTypeReport rep = cc_type_and_variation(builtin("ab2", 2));
        REQUIRE(rep.classes.size() == 1);
        CHECK(rep.classes[0].cc.no());
        CHECK(rep.v_lower == 0);
        CHECK(rep.v_exact);
        CHECK(rep.c_counts == std::vector<u32>{2, 2, 2});
        CHECK(rep.spread_ok);
        CHECK(rep.mixed_pairs.empty());
    }
}

TEST_CASE("resource limits degrade classification to stated uncertainty") {
    Budget none{0};
    LieAlgebra H = builtin("h3", 2);
    Subspace Z = coords(H, {2});
    Subspace zero = Subspace::zero(3);

    MRelatedReport r = m_related(H, {Z, zero}, {Z, zero}, none);
    CHECK(r.related.unknown_v());

    ChiefSeries s = all_chief_series(H).front();
    SeriesMatch sm = series_permutation(H, s, s, none);
    CHECK_FALSE(sm.exact);
    CHECK_FALSE(sm.violation);
    CHECK(sm.matching_count == 0);
    CHECK_FALSE(sm.note.empty());

    SeriesLabels lb = label_series(H, s, none);
    CHECK_FALSE(lb.exact);
    CHECK(lb.c_count == 0);
    for (const FactorLabel& lab : lb.labels) CHECK(lab.c.unknown_v());

    CcTypeReport rep = cc_type_and_variation(builtin("sl2sl2", 5), none);
    CHECK_FALSE(rep.v_exact);
    CHECK_FALSE(rep.c_counts_exact);
    CHECK(rep.classes.empty());
    CHECK(rep.spread_ok);  // vacuous: nothing could be compared
    CHECK_FALSE(rep.note.empty());

    CHECK_THROWS_AS((void)m_crossings(H, none), BudgetError);
}

TEST_CASE("classification results are reproducible") {
    LieAlgebra L = builtin("h3", 2);
    std::vector<ChiefSeries> ss = all_chief_series(L);
    SeriesMatch a = series_permutation(L, ss[0], ss[1]);
    SeriesMatch b = series_permutation(L, ss[0], ss[1]);
    CHECK(a.pi == b.pi);
    CHECK(a.matching_count == b.matching_count);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        CHECK(a.pairs[i].mprime_case == b.pairs[i].mprime_case);
        CHECK(a.pairs[i].max_complement.has_value() == b.pairs[i].max_complement.has_value());
    }

    CcTypeReport ra = cc_type_and_variation(builtin("r2", 3));
    CcTypeReport rb = cc_type_and_variation(builtin("r2", 3));
    CHECK(ra.c_counts == rb.c_counts);
    CHECK(ra.v_lower == rb.v_lower);
    CHECK(ra.mixed_pairs.size() == rb.mixed_pairs.size());
}
