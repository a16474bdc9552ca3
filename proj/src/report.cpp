#include "liecrown/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "liecrown/lmodule.hpp"

namespace liecrown {

namespace {

using nlohmann::json;

void note_once(AnalysisReport& r, const std::string& what) {
    r.exact = false;
    if (r.note.empty()) r.note = what;
}

json subspace_to_json(const Subspace& s) {
    json rows = json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < s.basis.cols; ++c) row.push_back(s.basis.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"ambient", s.n}, {"rows", std::move(rows)}};
}

Subspace subspace_from_json(const json& j) {
    const u32 n = j.at("ambient").get<u32>();
    std::vector<Vec> rows;
    for (const json& row : j.at("rows")) {
        Vec v;
        for (const json& x : row) v.push_back(x.get<u32>());
        if (v.size() != n) throw std::runtime_error("subspace row length mismatch");
        rows.push_back(std::move(v));
    }
    // Rows are stored in reduced form already; from_rref validates that.
    Mat m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return Subspace::from_rref(m, n);
}

const char* truth_name(Truth t) {
    switch (t) {
        case Truth::Yes: return "yes";
        case Truth::No: return "no";
        default: return "unknown";
    }
}

const char* mode_name(SearchMode m) {
    switch (m) {
        case SearchMode::Exhaustive: return "exhaustive";
        case SearchMode::Witness: return "witness";
        default: return "budget-limited";
    }
}

json verdict_to_json(const Verdict& v) {
    return json{{"truth", truth_name(v.value)}, {"mode", mode_name(v.mode)}, {"note", v.note}};
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    const std::string t = j.at("truth").get<std::string>();
    if (t == "yes")
        v.value = Truth::Yes;
    else if (t == "no")
        v.value = Truth::No;
    else if (t == "unknown")
        v.value = Truth::Unknown;
    else
        throw std::runtime_error("unknown truth tag: " + t);
    const std::string m = j.at("mode").get<std::string>();
    if (m == "exhaustive")
        v.mode = SearchMode::Exhaustive;
    else if (m == "witness")
        v.mode = SearchMode::Witness;
    else if (m == "budget-limited")
        v.mode = SearchMode::BudgetLimited;
    else
        throw std::runtime_error("unknown mode tag: " + m);
    v.note = j.at("note").get<std::string>();
    return v;
}

json section_to_json(const IdealSection& s) {
    return json{{"top", subspace_to_json(s.top)}, {"bottom", subspace_to_json(s.bottom)}};
}

IdealSection section_from_json(const json& j) {
    return IdealSection{subspace_from_json(j.at("top")), subspace_from_json(j.at("bottom"))};
}

template <class T>
json optional_to_json(const std::optional<T>& v, json (*enc)(const T&)) {
    return v ? enc(*v) : json(nullptr);
}

}  // namespace

AnalysisReport analyze(const LieAlgebra& L, bool all_series, const Budget& budget) {
    AnalysisReport r;
    r.dim = L.dim();
    r.p = L.field().p();
    StructurePredicates sp = structure_predicates(L);
    r.solvable = sp.is_solvable;
    r.center = sp.center;
    r.derived = L.derived_subalgebra_of(Subspace::full(L.dim()));

    try {
        r.socle = socle_of(L, budget);
    } catch (const BudgetError& e) {
        note_once(r, std::string("socle: ") + e.what());
    }
    try {
        MaximalsReport mr = maximal_subalgebras_and_frattini(L, budget);
        r.frattini = mr.frattini;
    } catch (const BudgetError& e) {
        note_once(r, std::string("frattini ideal: ") + e.what());
    }

    std::vector<ChiefSeries> all;
    try {
        all = all_chief_series(L, budget);
    } catch (const BudgetError& e) {
        note_once(r, std::string("chief series: ") + e.what());
    }
    const std::size_t take = all_series ? all.size() : std::min<std::size_t>(1, all.size());
    for (std::size_t k = 0; k < take; ++k) {
        SeriesLabels lb = label_series(L, all[k], budget);
        SeriesReport sr;
        sr.chain = all[k].chain;
        for (const FactorLabel& lab : lb.labels) {
            FactorReport fr;
            fr.section = lab.section;
            fr.dim = u32(lab.section.top.dim() - lab.section.bottom.dim());
            fr.abelian = lab.abelian;
            fr.c = lab.c;
            fr.m = lab.m;
            fr.frattini = lab.frattini_verdict;
            sr.factors.push_back(std::move(fr));
        }
        sr.c_count = lb.c_count;
        sr.m_count = lb.m_count;
        sr.frattini_count = lb.frattini_count;
        sr.exact = lb.exact;
        if (!lb.exact) note_once(r, "a factor label is undecided");
        r.series.push_back(std::move(sr));
    }

    if (!all.empty()) {
        FactorClassification fc = factor_classes(L, all.front(), budget);
        if (!fc.exact) note_once(r, "a linkage class is conservative");
        for (const FactorClass& cls : fc.classes) {
            CrownReport cr;
            cr.representative = cls.members.front();
            cr.members = u32(cls.members.size());
            cr.abelian = cls.abelian;
            try {
                const IdealSection& f = cls.members.front();
                CrownRecord crown =
                    crown_data(L, chief_factor_module(L, f.top, f.bottom), budget);
                cr.I = crown.I;
                cr.C = crown.C;
                cr.D = crown.D;
                cr.E_raw = crown.E_raw;
                cr.E_core = crown.E_core;
                cr.J = crown.J;
                cr.d_exact = crown.d_exact;
                cr.e_exact = crown.e_exact;
                cr.j_exact = crown.j_exact;
                if (!(crown.d_exact && crown.e_exact && crown.j_exact))
                    note_once(r, "a crown bound is an upper estimate");
            } catch (const BudgetError& e) {
                cr.d_exact = cr.e_exact = cr.j_exact = false;
                note_once(r, std::string("crown: ") + e.what());
            }
            r.crowns.push_back(std::move(cr));
        }
    }

    try {
        PrimitiveReport pr = socle_core_primitive(L, {}, budget);
        PrimitiveSummary ps;
        ps.kind = to_string(pr.kind);
        ps.socle = pr.socle;
        ps.witness = pr.witness;
        ps.exhaustive = pr.kind != PrimitiveKind::Undecided;
        if (!ps.exhaustive) note_once(r, "primitivity undecided");
        r.primitive = std::move(ps);
    } catch (const BudgetError& e) {
        note_once(r, std::string("primitivity: ") + e.what());
    }

    CcTypeReport cc = cc_type_and_variation(L, budget);
    r.variation.v_lower = cc.v_lower;
    r.variation.v_upper = cc.v_upper;
    r.variation.v_exact = cc.v_exact;
    r.variation.c_counts = cc.c_counts;
    r.variation.c_counts_exact = cc.c_counts_exact;
    if (!cc.c_counts.empty()) {
        const auto [mn, mx] = std::minmax_element(cc.c_counts.begin(), cc.c_counts.end());
        r.variation.spread = *mx - *mn;
    }
    r.variation.spread_ok = cc.spread_ok;
    if (!cc.v_exact || !cc.c_counts_exact)
        note_once(r, cc.note.empty() ? "variation data budget-limited" : cc.note);
    return r;
}

std::string report_to_json(const AnalysisReport& r) {
    json j;
    j["dim"] = r.dim;
    j["p"] = r.p;
    j["solvable"] = r.solvable;
    j["center"] = subspace_to_json(r.center);
    j["derived"] = subspace_to_json(r.derived);
    j["socle"] = optional_to_json(r.socle, subspace_to_json);
    j["frattini"] = optional_to_json(r.frattini, subspace_to_json);
    j["series"] = json::array();
    for (const SeriesReport& sr : r.series) {
        json js;
        js["chain"] = json::array();
        for (const Subspace& s : sr.chain) js["chain"].push_back(subspace_to_json(s));
        js["factors"] = json::array();
        for (const FactorReport& fr : sr.factors)
            js["factors"].push_back(json{{"section", section_to_json(fr.section)},
                                         {"dim", fr.dim},
                                         {"abelian", fr.abelian},
                                         {"c", verdict_to_json(fr.c)},
                                         {"m", verdict_to_json(fr.m)},
                                         {"frattini", verdict_to_json(fr.frattini)}});
        js["c_count"] = sr.c_count;
        js["m_count"] = sr.m_count;
        js["frattini_count"] = sr.frattini_count;
        js["exact"] = sr.exact;
        j["series"].push_back(std::move(js));
    }
    j["crowns"] = json::array();
    for (const CrownReport& cr : r.crowns)
        j["crowns"].push_back(json{{"representative", section_to_json(cr.representative)},
                                   {"members", cr.members},
                                   {"abelian", cr.abelian},
                                   {"I", subspace_to_json(cr.I)},
                                   {"C", subspace_to_json(cr.C)},
                                   {"D", subspace_to_json(cr.D)},
                                   {"E_raw", subspace_to_json(cr.E_raw)},
                                   {"E_core", subspace_to_json(cr.E_core)},
                                   {"J", subspace_to_json(cr.J)},
                                   {"d_exact", cr.d_exact},
                                   {"e_exact", cr.e_exact},
                                   {"j_exact", cr.j_exact}});
    if (r.primitive) {
        json jp;
        jp["kind"] = r.primitive->kind;
        jp["socle"] = subspace_to_json(r.primitive->socle);
        jp["witness"] = optional_to_json(r.primitive->witness, subspace_to_json);
        jp["exhaustive"] = r.primitive->exhaustive;
        j["primitive"] = std::move(jp);
    } else {
        j["primitive"] = nullptr;
    }
    j["variation"] = json{{"v_lower", r.variation.v_lower},
                          {"v_upper", r.variation.v_upper},
                          {"v_exact", r.variation.v_exact},
                          {"c_counts", r.variation.c_counts},
                          {"c_counts_exact", r.variation.c_counts_exact},
                          {"spread", r.variation.spread},
                          {"spread_ok", r.variation.spread_ok}};
    j["exact"] = r.exact;
    j["note"] = r.note;
    return j.dump(2);
}

AnalysisReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("report parse: ") + e.what());
    }
    try {
        AnalysisReport r;
        r.dim = j.at("dim").get<u32>();
        r.p = j.at("p").get<u32>();
        r.solvable = j.at("solvable").get<bool>();
        r.center = subspace_from_json(j.at("center"));
        r.derived = subspace_from_json(j.at("derived"));
        if (!j.at("socle").is_null()) r.socle = subspace_from_json(j.at("socle"));
        if (!j.at("frattini").is_null()) r.frattini = subspace_from_json(j.at("frattini"));
        for (const json& js : j.at("series")) {
            SeriesReport sr;
            for (const json& s : js.at("chain")) sr.chain.push_back(subspace_from_json(s));
            for (const json& jf : js.at("factors")) {
                FactorReport fr;
                fr.section = section_from_json(jf.at("section"));
                fr.dim = jf.at("dim").get<u32>();
                fr.abelian = jf.at("abelian").get<bool>();
                fr.c = verdict_from_json(jf.at("c"));
                fr.m = verdict_from_json(jf.at("m"));
                fr.frattini = verdict_from_json(jf.at("frattini"));
                sr.factors.push_back(std::move(fr));
            }
            sr.c_count = js.at("c_count").get<u32>();
            sr.m_count = js.at("m_count").get<u32>();
            sr.frattini_count = js.at("frattini_count").get<u32>();
            sr.exact = js.at("exact").get<bool>();
            r.series.push_back(std::move(sr));
        }
        for (const json& jc : j.at("crowns")) {
            CrownReport cr;
            cr.representative = section_from_json(jc.at("representative"));
            cr.members = jc.at("members").get<u32>();
            cr.abelian = jc.at("abelian").get<bool>();
            cr.I = subspace_from_json(jc.at("I"));
            cr.C = subspace_from_json(jc.at("C"));
            cr.D = subspace_from_json(jc.at("D"));
            cr.E_raw = subspace_from_json(jc.at("E_raw"));
            cr.E_core = subspace_from_json(jc.at("E_core"));
            cr.J = subspace_from_json(jc.at("J"));
            cr.d_exact = jc.at("d_exact").get<bool>();
            cr.e_exact = jc.at("e_exact").get<bool>();
            cr.j_exact = jc.at("j_exact").get<bool>();
            r.crowns.push_back(std::move(cr));
        }
        if (!j.at("primitive").is_null()) {
            const json& jp = j.at("primitive");
            PrimitiveSummary ps;
            ps.kind = jp.at("kind").get<std::string>();
            ps.socle = subspace_from_json(jp.at("socle"));
            if (!jp.at("witness").is_null()) ps.witness = subspace_from_json(jp.at("witness"));
            ps.exhaustive = jp.at("exhaustive").get<bool>();
            r.primitive = std::move(ps);
        }
        const json& jv = j.at("variation");
        r.variation.v_lower = jv.at("v_lower").get<u32>();
        r.variation.v_upper = jv.at("v_upper").get<u32>();
        r.variation.v_exact = jv.at("v_exact").get<bool>();
        r.variation.c_counts = jv.at("c_counts").get<std::vector<u32>>();
        r.variation.c_counts_exact = jv.at("c_counts_exact").get<bool>();
        r.variation.spread = jv.at("spread").get<u32>();
        r.variation.spread_ok = jv.at("spread_ok").get<bool>();
        r.exact = j.at("exact").get<bool>();
        r.note = j.at("note").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("report schema: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("report schema: ") + e.what());
    }
}

namespace {

void print_subspace(std::ostringstream& out, const Subspace& s) {
    out << "dim " << s.dim();
    if (s.dim() == 0 || s.dim() == s.n) return;
    out << " [";
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) out << "; ";
        for (std::size_t c = 0; c < s.basis.cols; ++c) {
            if (c) out << ' ';
            out << s.basis.at(r, c);
        }
    }
    out << ']';
}

const char* status_token(const Verdict& v, const char* yes, const char* no) {
    return v.yes() ? yes : v.no() ? no : "?";
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "algebra: dim " << r.dim << " over GF(" << r.p << ")"
        << (r.solvable ? ", solvable" : ", not solvable") << "\n";
    out << "center: ";
    print_subspace(out, r.center);
    out << "\nderived subalgebra: ";
    print_subspace(out, r.derived);
    out << "\nsocle: ";
    if (r.socle)
        print_subspace(out, *r.socle);
    else
        out << "budget-limited";
    out << "\nfrattini ideal: ";
    if (r.frattini)
        print_subspace(out, *r.frattini);
    else
        out << "budget-limited";
    out << "\n";
    out << "chief series reported: " << r.series.size() << "\n";
    for (std::size_t k = 0; k < r.series.size(); ++k) {
        const SeriesReport& sr = r.series[k];
        out << "  series " << k + 1 << ": factors";
        for (const FactorReport& fr : sr.factors) {
            out << " [dim " << fr.dim << (fr.abelian ? " ab " : " nonab ")
                << status_token(fr.c, "c", "c'") << ' ' << status_token(fr.m, "m", "m'") << ' '
                << status_token(fr.frattini, "frattini", "supplemented") << ']';
        }
        out << "  (c " << sr.c_count << ", m " << sr.m_count << ", frattini "
            << sr.frattini_count << (sr.exact ? "" : ", inexact") << ")\n";
    }
    out << "linkage classes: " << r.crowns.size() << "\n";
    for (const CrownReport& cr : r.crowns) {
        out << "  class of dim-" << cr.representative.top.dim() - cr.representative.bottom.dim()
            << (cr.abelian ? " abelian" : " nonabelian") << " factor, " << cr.members
            << " member(s): I ";
        print_subspace(out, cr.I);
        out << ", C ";
        print_subspace(out, cr.C);
        out << ", D ";
        print_subspace(out, cr.D);
        out << ", E ";
        print_subspace(out, cr.E_core);
        out << ", J ";
        print_subspace(out, cr.J);
        if (!(cr.d_exact && cr.e_exact && cr.j_exact)) out << " (upper bounds)";
        out << "\n";
    }
    out << "primitive: ";
    if (r.primitive) {
        out << r.primitive->kind;
        if (r.primitive->witness) {
            out << ", core-free maximal witness ";
            print_subspace(out, *r.primitive->witness);
        }
    } else {
        out << "budget-limited";
    }
    out << "\n";
    out << "variation: v in [" << r.variation.v_lower << ", " << r.variation.v_upper << "]"
        << (r.variation.v_exact ? " (exact)" : " (bound)") << ", c-counts {";
    for (std::size_t i = 0; i < r.variation.c_counts.size(); ++i) {
        if (i) out << ' ';
        out << r.variation.c_counts[i];
    }
    out << "}, spread " << r.variation.spread << (r.variation.spread_ok ? " ok" : " VIOLATION")
        << "\n";
    out << "complete: " << (r.exact ? "yes" : "no");
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
    return out.str();
}

}  // namespace liecrown
