#include <stdexcept>
#include <string>

#include "doctest.h"
#include "liecrown/catalog.hpp"
#include "liecrown/report.hpp"

using namespace liecrown;

namespace {

Subspace coords(u32 n, std::initializer_list<u32> is, const PrimeField& F) {
    std::vector<Vec> vs;
    for (u32 i : is) {
        Vec v(n, 0);
        v[i] = 1;
        vs.push_back(v);
    }
    return Subspace::span_vectors(F, vs, n);
}

}  // namespace

TEST_CASE("analysis of the heisenberg algebra collects the frozen facts") {
    LieAlgebra L = builtin("h3", 2);
    AnalysisReport r = analyze(L, true);

    CHECK(r.dim == 3);
    CHECK(r.p == 2);
    CHECK(r.solvable);
    CHECK(r.exact);
    CHECK(r.note.empty());

    Subspace Z = coords(3, {2}, L.field());
    CHECK(r.center == Z);
    CHECK(r.derived == Z);
    REQUIRE(r.socle.has_value());
    CHECK(*r.socle == Z);
    REQUIRE(r.frattini.has_value());
    CHECK(r.frattini->dim() == 1);  // the commutator line
    CHECK(*r.frattini == Z);

    REQUIRE(r.series.size() == 3);
    for (const SeriesReport& sr : r.series) {
        REQUIRE(sr.factors.size() == 3);
        CHECK(sr.exact);
        CHECK(sr.factors[0].c.no());  // the center has no complement
        CHECK(sr.factors[1].c.yes());
        CHECK(sr.factors[2].c.yes());
        CHECK(sr.c_count == 2);
        CHECK(sr.m_count == 2);
        CHECK(sr.frattini_count == 1);
        for (const FactorReport& fr : sr.factors) {
            CHECK(fr.dim == 1);
            CHECK(fr.abelian);
        }
    }

    REQUIRE(r.crowns.size() == 1);  // all three factors are linked
    CHECK(r.crowns[0].members == 3);
    CHECK(r.crowns[0].abelian);
    CHECK(r.crowns[0].D == Z);
    CHECK(r.crowns[0].E_core == Z);
    CHECK(r.crowns[0].d_exact);

    REQUIRE(r.primitive.has_value());
    CHECK(r.primitive->kind == std::string("not primitive"));

    CHECK(r.variation.v_lower == 0);
    CHECK(r.variation.v_exact);
    CHECK(r.variation.c_counts == std::vector<u32>{2, 2, 2});
    CHECK(r.variation.spread == 0);
    CHECK(r.variation.spread_ok);
}

TEST_CASE("json round trip preserves the report exactly") {
    for (const auto& [name, p] : std::vector<std::pair<const char*, u32>>{
             {"h3", 2}, {"r2", 3}, {"ab2", 2}, {"sl2", 3}}) {
        CAPTURE(name);
        AnalysisReport r = analyze(builtin(name, p), true);
        std::string text = report_to_json(r);
        AnalysisReport back = report_from_json(text);
        CHECK(back == r);
        // Serialization is canonical: a second pass is byte-identical.
        CHECK(report_to_json(back) == text);
    }
}

TEST_CASE("json output is schema-stable") {
    AnalysisReport r = analyze(builtin("r2", 3), false);
    std::string text = report_to_json(r);
    for (const char* key : {"\"dim\"", "\"p\"", "\"solvable\"", "\"center\"", "\"derived\"",
                            "\"socle\"", "\"frattini\"", "\"series\"", "\"crowns\"",
                            "\"primitive\"", "\"variation\"", "\"exact\"", "\"note\"",
                            "\"ambient\"", "\"rows\"", "\"truth\"", "\"mode\""}) {
        CAPTURE(key);
        CHECK(text.find(key) != std::string::npos);
    }
}

TEST_CASE("malformed report text is rejected with a diagnostic") {
    CHECK_THROWS_AS((void)report_from_json("{not json"), std::runtime_error);
    CHECK_THROWS_AS((void)report_from_json("{}"), std::runtime_error);  // missing keys
    CHECK_THROWS_AS((void)report_from_json(R"({"dim": 1, "p": "two"})"), std::runtime_error);
    // A subspace whose rows are not reduced is rejected.
    AnalysisReport r = analyze(builtin("ab1", 2), false);
    std::string text = report_to_json(r);
    std::string bad = text;
    bad.replace(bad.find("\"rows\": [\n        [\n          1"),
                std::string("\"rows\": [\n        [\n          1").size(),
                "\"rows\": [\n        [\n          7");
    CHECK_THROWS_AS((void)report_from_json(bad), std::runtime_error);
}

TEST_CASE("single-series analysis truncates only the series list") {
    LieAlgebra L = builtin("h3", 2);
    AnalysisReport one = analyze(L, false);
    AnalysisReport all = analyze(L, true);
    CHECK(one.series.size() == 1);
    CHECK(all.series.size() == 3);
    CHECK(one.series[0] == all.series[0]);
    CHECK(one.crowns == all.crowns);
    CHECK(one.variation == all.variation);  // the bound still sees every series
}

TEST_CASE("text rendering is deterministic and carries the headline facts") {
    LieAlgebra L = builtin("h3", 2);
    AnalysisReport r = analyze(L, true);
    std::string a = report_to_text(r);
    CHECK(a == report_to_text(analyze(L, true)));
    for (const char* needle :
         {"dim 3 over GF(2)", "solvable", "frattini ideal: dim 1", "chief series reported: 3",
          "c' m' frattini", "c m supplemented", "variation: v in [0, 0] (exact)", "spread 0 ok",
          "complete: yes"}) {
        CAPTURE(needle);
        CHECK(a.find(needle) != std::string::npos);
    }
}

TEST_CASE("budget exhaustion yields absent components and notes, never throws") {
    AnalysisReport r = analyze(builtin("h3", 2), true, Budget{0});
    CHECK_FALSE(r.exact);
    CHECK_FALSE(r.note.empty());
    CHECK_FALSE(r.socle.has_value());
    CHECK_FALSE(r.frattini.has_value());
    CHECK(r.series.empty());
    CHECK(r.crowns.empty());
    CHECK_FALSE(r.variation.v_exact);

    // Round trip still works on degraded reports.
    AnalysisReport back = report_from_json(report_to_json(r));
    CHECK(back == r);

    std::string text = report_to_text(r);
    CHECK(text.find("budget-limited") != std::string::npos);
    CHECK(text.find("complete: no") != std::string::npos);
}
