// Command-line front end: validate and analyze structure-constant files,
// enumerate chief series, test L-equivalence of chief factors, compute
// crowns, emit the built-in catalog, and run the property-verification
// suites.
//
// Exit codes: 0 = success / all properties hold, 1 = property violation,
// 2 = input error, 3 = budget exhausted with undecided results.
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "liecrown/catalog.hpp"
#include "liecrown/classify.hpp"
#include "liecrown/cohomology.hpp"
#include "liecrown/crowns.hpp"
#include "liecrown/report.hpp"

namespace {

using namespace liecrown;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kUndecided = 3;

// ---------------------------------------------------------------- helpers

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string fmt_vec(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string fmt_subspace(const Subspace& s) {
    if (s.dim() == 0) return "0";
    if (s.dim() == s.n) return "L";
    std::string out = "{";
    for (std::size_t r = 0; r < s.basis.rows; ++r) {
        if (r) out += ", ";
        out += fmt_vec(s.basis.row_vec(r));
    }
    return out + "}";
}

std::string fmt_verdict(const Verdict& v) {
    std::string s = to_string(v.value);
    s += v.mode == SearchMode::Exhaustive  ? " (exhaustive)"
         : v.mode == SearchMode::Witness   ? " (witness)"
                                           : " (budget-limited)";
    if (!v.note.empty()) s += ": " + v.note;
    return s;
}

// Default budget scale: LIECROWN_BUDGET when set, else 1. A set-but-garbage
// value is an input error, reported once at startup.
std::optional<u64> env_budget(std::string& err) {
    const char* raw = std::getenv("LIECROWN_BUDGET");
    if (!raw) return std::nullopt;
    std::string s(raw);
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return u64(v);
    } catch (const std::exception&) {
        err = "LIECROWN_BUDGET is not a non-negative integer: \"" + s + "\"";
        return std::nullopt;
    }
}

// Parses FILE into a validated algebra or reports why not (exit 2 semantics).
std::optional<LieAlgebra> load_algebra(const std::string& path) {
    std::optional<std::string> text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read file: " << path << "\n";
        return std::nullopt;
    }
    try {
        return parse_algebra(*text);
    } catch (const ParseError& e) {
        std::cerr << "error: " << path << ":" << e.line << ":" << e.col << ": " << e.what()
                  << "\n";
        return std::nullopt;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

// ---------------------------------------------------------------- validate

int run_validate(const std::string& path) {
    std::optional<LieAlgebra> L = load_algebra(path);
    if (!L) return kInputError;
    StructurePredicates sp = structure_predicates(*L);
    std::cout << "ok: dim " << L->dim() << " over GF(" << L->field().p() << "), "
              << (sp.is_solvable ? "solvable" : "not solvable") << ", center dim "
              << sp.center.dim() << ", derived dim "
              << derived_subalgebra_of(*L, Subspace::full(L->dim())).dim() << "\n";
    return kOk;
}

// ---------------------------------------------------------------- analyze

// A decided failure of a series-invariance or spread claim is the one thing
// exit code 1 is reserved for.
bool report_violates_claims(const AnalysisReport& r) {
    std::optional<u32> m, f;
    for (const SeriesReport& sr : r.series) {
        if (!sr.exact) continue;
        if (m && (*m != sr.m_count || *f != sr.frattini_count)) return true;
        m = sr.m_count;
        f = sr.frattini_count;
    }
    return r.variation.v_exact && r.variation.c_counts_exact && !r.variation.spread_ok;
}

int run_analyze(const std::string& path, bool all_series, bool json, const Budget& budget) {
    std::optional<LieAlgebra> L = load_algebra(path);
    if (!L) return kInputError;
    AnalysisReport r = analyze(*L, all_series, budget);
    std::cout << (json ? report_to_json(r) : report_to_text(r)) << "\n";
    if (report_violates_claims(r)) {
        std::cerr << "property violation: complement counts break the stated invariants\n";
        return kViolation;
    }
    return r.exact ? kOk : kUndecided;
}

// ---------------------------------------------------------------- series

int run_series(const std::string& path, bool enumerate, const Budget& budget) {
    std::optional<LieAlgebra> L = load_algebra(path);
    if (!L) return kInputError;
    std::vector<ChiefSeries> series;
    try {
        series = all_chief_series(*L, budget);
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kUndecided;
    }
    std::cout << "chief series: " << series.size() << "\n";
    if (enumerate) {
        for (std::size_t i = 0; i < series.size(); ++i) {
            std::cout << "series " << (i + 1) << ": ";
            for (std::size_t t = 0; t < series[i].chain.size(); ++t) {
                if (t) std::cout << " < ";
                std::cout << fmt_subspace(series[i].chain[t]);
            }
            std::cout << "\n";
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- equiv

// Factor syntax: "top_gens;bottom_gens" with '|' between generator vectors
// and ',' between coordinates, e.g. "0,0,1|0,1,0;0,0,1". An empty right side
// means the zero ideal. Each side is closed to an ideal.
std::vector<Vec> parse_vec_list(const std::string& side, u32 dim, u32 p) {
    std::vector<Vec> out;
    if (side.empty()) return out;
    std::stringstream items(side);
    std::string item;
    while (std::getline(items, item, '|')) {
        Vec v;
        std::stringstream coords(item);
        std::string c;
        while (std::getline(coords, c, ',')) {
            std::size_t pos = 0;
            unsigned long long raw = std::stoull(c, &pos);
            if (pos != c.size()) throw std::invalid_argument("bad coordinate \"" + c + "\"");
            v.push_back(u32(raw % p));
        }
        if (v.size() != dim)
            throw std::invalid_argument("vector " + fmt_vec(v) + " has " +
                                        std::to_string(v.size()) + " coordinates, expected " +
                                        std::to_string(dim));
        out.push_back(std::move(v));
    }
    if (out.empty()) throw std::invalid_argument("empty generator list");
    return out;
}

IdealSection parse_factor(const LieAlgebra& L, const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
        throw std::invalid_argument(
            "factor must be \"top_gens;bottom_gens\" with exactly one ';'");
    std::vector<Vec> top_gens = parse_vec_list(text.substr(0, semi), L.dim(), L.field().p());
    std::vector<Vec> bot_gens = parse_vec_list(text.substr(semi + 1), L.dim(), L.field().p());
    Subspace bottom =
        bot_gens.empty() ? Subspace::zero(L.dim()) : L.closure(bot_gens, /*ideal_mode=*/true);
    for (const Vec& v : bot_gens) top_gens.push_back(v);
    Subspace top = L.closure(top_gens, /*ideal_mode=*/true);
    if (top.dim() <= bottom.dim()) throw std::invalid_argument("factor section is empty");
    return IdealSection{top, bottom};
}

int run_equiv(const std::string& path, const std::vector<std::string>& factors,
              const Budget& budget) {
    std::optional<LieAlgebra> L = load_algebra(path);
    if (!L) return kInputError;
    if (factors.size() != 2) {
        std::cerr << "error: equiv needs exactly two --factor options\n";
        return kInputError;
    }
    try {
        IdealSection f1 = parse_factor(*L, factors[0]);
        IdealSection f2 = parse_factor(*L, factors[1]);
        LAlgebraModule m1 = chief_factor_module(*L, f1.top, f1.bottom);
        LAlgebraModule m2 = chief_factor_module(*L, f2.top, f2.bottom);
        for (const LAlgebraModule* m : {&m1, &m2})
            if (!is_irreducible(*m, budget)) {
                std::cerr << "error: a supplied section is not a chief factor (reducible)\n";
                return kInputError;
            }
        std::cout << "factor 1: " << fmt_subspace(f1.top) << " / " << fmt_subspace(f1.bottom)
                  << " (dim " << (f1.top.dim() - f1.bottom.dim()) << ")\n";
        std::cout << "factor 2: " << fmt_subspace(f2.top) << " / " << fmt_subspace(f2.bottom)
                  << " (dim " << (f2.top.dim() - f2.bottom.dim()) << ")\n";
        VerdictWith<EquivalenceWitness> eq = l_equivalent(m1, m2, budget);
        std::cout << "equivalent: " << fmt_verdict(eq.verdict) << "\n";
        if (eq.witness) {
            std::cout << "witness cocycle rows:";
            for (std::size_t r = 0; r < eq.witness->beta.rows; ++r)
                std::cout << " " << fmt_vec(eq.witness->beta.row_vec(r));
            std::cout << "\nwitness isomorphism rows:";
            for (std::size_t r = 0; r < eq.witness->phi.rows; ++r)
                std::cout << " " << fmt_vec(eq.witness->phi.row_vec(r));
            std::cout << "\n";
        }
        return eq.verdict.unknown_v() ? kUndecided : kOk;
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kUndecided;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}

// ---------------------------------------------------------------- crowns

int run_crowns(const std::string& path, const Budget& budget) {
    std::optional<LieAlgebra> L = load_algebra(path);
    if (!L) return kInputError;
    bool undecided = false;
    try {
        std::vector<ChiefSeries> series = all_chief_series(*L, budget);
        if (series.empty()) {
            std::cout << "no chief factors (zero algebra)\n";
            return kOk;
        }
        FactorClassification fc = factor_classes(*L, series[0], budget);
        if (!fc.exact) undecided = true;
        std::cout << "linkage classes on one chief series: " << fc.classes.size() << "\n";
        for (std::size_t i = 0; i < fc.classes.size(); ++i) {
            const FactorClass& cls = fc.classes[i];
            const IdealSection& rep = cls.members[0];
            std::cout << "class " << (i + 1) << ": " << cls.members.size()
                      << " factor(s), dim " << cls.dim << ", "
                      << (cls.abelian ? "abelian" : "nonabelian") << "\n";
            CrownRecord cr =
                crown_data(*L, chief_factor_module(*L, rep.top, rep.bottom), budget);
            std::cout << "  I = " << fmt_subspace(cr.I) << "\n";
            std::cout << "  C = " << fmt_subspace(cr.C) << "\n";
            std::cout << "  D = " << fmt_subspace(cr.D) << (cr.d_exact ? "" : "  [inexact]")
                      << "\n";
            std::cout << "  E = " << fmt_subspace(cr.E_core) << (cr.e_exact ? "" : "  [inexact]")
                      << "\n";
            std::cout << "  J = " << fmt_subspace(cr.J) << (cr.j_exact ? "" : "  [inexact]")
                      << "\n";
            std::cout << "  crown I/D dim: " << (cr.I.dim() - cr.D.dim()) << "\n";
            if (!cr.d_exact || !cr.e_exact || !cr.j_exact) undecided = true;
            if (!cr.note.empty()) std::cout << "  note: " << cr.note << "\n";
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kUndecided;
    }
    return undecided ? kUndecided : kOk;
}

// ---------------------------------------------------------------- catalog

int run_catalog_list() {
    std::cout << "name      dim  field    description\n";
    for (const AlgebraSpec& s : catalog_entries()) {
        std::string field =
            s.exact_p ? "p = " + std::to_string(*s.exact_p) : "p >= " + std::to_string(s.min_p);
        std::ostringstream line;
        line.width(10);
        line << std::left << s.name;
        line.width(5);
        line << std::left << s.dim;
        line.width(9);
        line << std::left << field;
        std::cout << line.str() << s.description << "\n";
    }
    return kOk;
}

int run_catalog_emit(const std::string& name, u32 p) {
    try {
        std::cout << serialize_algebra(builtin(name, p));
        return kOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}

// ---------------------------------------------------------------- verify

struct EntryResult {
    int status = kOk;  // kOk | kViolation | kUndecided
    std::string detail;
};

struct Entry {
    std::string name;
    std::function<EntryResult()> run;
};

EntryResult pass(std::string d = {}) { return {kOk, std::move(d)}; }
EntryResult fail(std::string d) { return {kViolation, std::move(d)}; }
EntryResult undecided(std::string d) { return {kUndecided, std::move(d)}; }

struct CorpusAlgebra {
    std::string label;
    LieAlgebra L;
};

std::vector<CorpusAlgebra> build_corpus(const std::vector<u32>& fields, u32 max_dim) {
    std::vector<CorpusAlgebra> out;
    for (u32 p : fields) {
        for (const char* name : {"ab1", "ab2", "ab3", "r2", "h3", "h3ab", "sl2", "sl2sl2"}) {
            LieAlgebra L = [&]() -> LieAlgebra {
                try {
                    return builtin(name, p);
                } catch (const UnsupportedCharacteristic&) {
                    return LieAlgebra::abelian(PrimeField(p), 0);
                }
            }();
            if (L.dim() == 0 || L.dim() > max_dim) continue;
            out.push_back({std::string(name) + "(" + std::to_string(p) + ")", std::move(L)});
        }
    }
    return out;
}

// Factor labels of every chief series agree on the m-count and the Frattini
// count; an undecided label defers the judgement instead of guessing.
EntryResult check_series_invariance(const LieAlgebra& L, const Budget& budget) {
    std::vector<ChiefSeries> series = all_chief_series(L, budget);
    std::optional<u32> m, f;
    for (const ChiefSeries& s : series) {
        SeriesLabels labels = label_series(L, s, budget);
        if (!labels.exact) return undecided("a factor label stayed undecided");
        if (m && (*m != labels.m_count || *f != labels.frattini_count))
            return fail("m/frattini counts differ across series");
        m = labels.m_count;
        f = labels.frattini_count;
    }
    return pass(std::to_string(series.size()) + " series, m-count " + std::to_string(*m) +
                ", frattini count " + std::to_string(*f));
}

// Every chief factor of a solvable algebra is Frattini or complemented,
// never both, never neither.
EntryResult check_dichotomy(const LieAlgebra& L, const Budget& budget) {
    std::vector<IdealSection> sections = chief_factor_sections(L, budget);
    for (const IdealSection& s : sections) {
        FactorComplements fc = factor_complements(L, s.top, s.bottom, budget);
        if (!fc.is_c.valid() || fc.is_c.unknown_v() || fc.frattini.unknown_v())
            return undecided("a complement or Frattini verdict stayed undecided");
        if (fc.frattini.yes() == fc.is_c.yes())
            return fail("factor " + fmt_subspace(s.top) + " / " + fmt_subspace(s.bottom) +
                        " breaks the Frattini/complemented dichotomy");
    }
    return pass(std::to_string(sections.size()) + " chief factors");
}

EntryResult check_roundtrip(const LieAlgebra& L) {
    std::string text = serialize_algebra(L);
    LieAlgebra back = parse_algebra(text);
    if (!(back == L)) return fail("parse(serialize(L)) differs from L");
    if (serialize_algebra(back) != text) return fail("serialization is not canonical");
    return pass(std::to_string(text.size()) + " bytes");
}

EntryResult check_structure(const LieAlgebra& L) {
    StructurePredicates sp = structure_predicates(L);
    if (!sp.jacobi_ok) return fail("jacobi identity fails");
    if (!L.is_ideal(sp.center)) return fail("center is not an ideal");
    if (sp.derived_series.empty()) return fail("empty derived series");
    bool terminal_zero = sp.derived_series.back().dim() == 0;
    if (sp.is_solvable != terminal_zero) return fail("solvability flag disagrees");
    return pass(sp.is_solvable ? "solvable" : "not solvable");
}

EntryResult check_random_solvable(u32 dim_bound, u32 p, u64 seed, const Budget& budget) {
    LieAlgebra L = random_solvable(dim_bound, p, seed);
    if (!(random_solvable(dim_bound, p, seed) == L)) return fail("not deterministic per seed");
    StructurePredicates sp = structure_predicates(L);
    if (!sp.jacobi_ok) return fail("jacobi identity fails");
    if (!sp.is_solvable) return fail("output is not solvable");
    EntryResult r = check_dichotomy(L, budget);
    if (r.status != kOk) return r;
    return pass("dim " + std::to_string(L.dim()) + ", " + r.detail);
}

// The linear-solve route and the generator-assignment enumeration produce
// the same Z1 set on every abelian chief factor.
EntryResult check_z1_crosscheck(const LieAlgebra& L, const Budget& budget) {
    std::vector<ChiefSeries> series = all_chief_series(L, budget);
    if (series.empty()) return pass("0 factors");
    u32 checked = 0;
    auto mat_less = [](const Mat& a, const Mat& b) { return a.a < b.a; };
    for (std::size_t i = 0; i + 1 < series[0].chain.size(); ++i) {
        LAlgebraModule m = chief_factor_module(L, series[0].chain[i + 1], series[0].chain[i]);
        if (!m.abelian_carrier()) continue;
        std::vector<Cocycle> solve = explicit_cocycles(m, cocycle_space(m, budget), budget);
        std::vector<Cocycle> enumerated = cocycle_space_enumerated(m, budget).elements;
        std::sort(solve.begin(), solve.end(), mat_less);
        std::sort(enumerated.begin(), enumerated.end(), mat_less);
        if (solve != enumerated)
            return fail("Z1 routes disagree on factor " + std::to_string(i + 1) + " (" +
                        std::to_string(solve.size()) + " vs " +
                        std::to_string(enumerated.size()) + " cocycles)");
        ++checked;
    }
    return pass(std::to_string(checked) + " abelian factor(s) cross-checked");
}

// -identity is a 1-cocycle of the adjoint module.
EntryResult check_minus_id(u32 p) {
    LieAlgebra L = builtin("sl2", p);
    LAlgebraModule m =
        chief_factor_module(L, Subspace::full(L.dim()), Subspace::zero(L.dim()));
    Mat beta(L.dim(), L.dim());
    for (u32 i = 0; i < L.dim(); ++i) beta.at(i, i) = p - 1;
    if (!is_cocycle(m, beta)) return fail("-id is not a cocycle of the adjoint module");
    return pass();
}

// Cocycle spaces are unchanged by quotienting out a trivially-acting ideal,
// in all three equivalent senses.
EntryResult check_descent(const LieAlgebra& L, const Budget& budget) {
    std::vector<IdealSection> sections = chief_factor_sections(L, budget);
    std::vector<Subspace> ideals = all_ideals(L, budget);
    u32 checked = 0;
    for (const IdealSection& s : sections) {
        LAlgebraModule m = chief_factor_module(L, s.top, s.bottom);
        if (!m.abelian_carrier()) continue;
        Subspace cl = i_and_c(m).c_l;
        for (const Subspace& n : ideals) {
            if (n.dim() == 0) continue;
            if (!(sum(L.field(), n, cl) == cl)) continue;  // need n inside C_L(A)
            DescentReport dr = cocycle_descent(m, n, budget);
            if (!dr.consistent)
                return fail("descent conditions disagree on a (L, n, A) triple");
            ++checked;
        }
    }
    return pass(std::to_string(checked) + " triple(s)");
}

// E equals D on abelian crowns.
EntryResult check_abelian_ed(const LieAlgebra& L, const Budget& budget) {
    std::vector<ChiefSeries> series = all_chief_series(L, budget);
    if (series.empty()) return pass("0 classes");
    FactorClassification fc = factor_classes(L, series[0], budget);
    u32 checked = 0;
    for (const FactorClass& cls : fc.classes) {
        if (!cls.abelian) continue;
        const IdealSection& rep = cls.members[0];
        CrownRecord cr = crown_data(L, chief_factor_module(L, rep.top, rep.bottom), budget);
        if (!cr.d_exact || !cr.e_exact) return undecided("crown intersections were cut short");
        if (!(cr.D == cr.E_core)) return fail("E != D on an abelian crown");
        ++checked;
    }
    return pass(std::to_string(checked) + " abelian class(es)");
}

// The four characterizations of connectedness agree whenever all decided.
EntryResult check_connected_coherence(const LieAlgebra& L, const Budget& budget) {
    std::vector<IdealSection> sections = chief_factor_sections(L, budget);
    if (sections.size() > 12) sections.resize(12);  // bounded sweep; acceptance runs the rest
    u32 agreed = 0, skipped = 0;
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = i; j < sections.size(); ++j) {
            ConnectedReport cr = l_connected(L, sections[i], sections[j], budget);
            const Verdict* vs[] = {&cr.equivalent, &cr.connected, &cr.common_max_complement,
                                   &cr.common_complement};
            bool all_decided = true;
            for (const Verdict* v : vs)
                if (v->unknown_v() || !v->valid()) all_decided = false;
            if (!all_decided) {
                ++skipped;
                continue;
            }
            for (const Verdict* v : vs)
                if (v->yes() != cr.equivalent.yes())
                    return fail("connectedness characterizations disagree on pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            ++agreed;
        }
    std::string d = std::to_string(agreed) + " pair(s) coherent";
    if (skipped) d += ", " + std::to_string(skipped) + " undecided";
    return skipped ? undecided(d) : pass(d);
}

// Any two chief series admit exactly one perfect matching of their factors.
EntryResult check_matching(const LieAlgebra& L, const Budget& budget) {
    std::vector<ChiefSeries> series = all_chief_series(L, budget);
    std::size_t limit = std::min<std::size_t>(series.size(), 10);
    for (std::size_t j = 0; j < limit; ++j) {
        SeriesMatch sm = series_permutation(L, series[0], series[j], budget);
        if (!sm.exact) return undecided("matching against series " + std::to_string(j + 1) +
                                        " was budget-limited");
        if (sm.violation || sm.matching_count != 1)
            return fail("series pair (1, " + std::to_string(j + 1) + ") has " +
                        std::to_string(sm.matching_count) + " matchings");
        for (const MatchedPair& mp : sm.pairs)
            if (!mp.equivalent.yes() || !mp.status_agree.yes())
                return fail("matched pair (" + std::to_string(mp.i) + "," +
                            std::to_string(mp.j) + ") fails its checks");
    }
    return pass(std::to_string(limit) + " series pair(s), all matchings unique");
}

// The per-series complement-count spread stays within the cc'-class count.
EntryResult check_variation(const LieAlgebra& L, const Budget& budget) {
    CcTypeReport r = cc_type_and_variation(L, budget);
    if (!r.v_exact || !r.c_counts_exact)
        return undecided(r.note.empty() ? "variation bound was budget-limited" : r.note);
    if (!r.spread_ok) return fail("complement-count spread exceeds the class bound");
    for (const MixedPairCheck& mp : r.mixed_pairs)
        if (mp.config_ok.no())
            return fail("a mixed m'-pair admits no descent configuration");
    u32 spread = 0;
    if (!r.c_counts.empty()) {
        auto [lo, hi] = std::minmax_element(r.c_counts.begin(), r.c_counts.end());
        spread = *hi - *lo;
    }
    return pass("v in [" + std::to_string(r.v_lower) + ", " + std::to_string(r.v_upper) +
                "], spread " + std::to_string(spread));
}

std::vector<Entry> build_entries(const std::string& suite, const std::vector<u32>& fields,
                                 u32 max_dim, u32 seeds, const Budget& budget) {
    std::vector<Entry> entries;
    bool all = suite == "all";
    auto want = [&](const char* s) { return all || suite == s; };
    std::vector<CorpusAlgebra> corpus = build_corpus(fields, max_dim);

    if (want("core")) {
        for (const CorpusAlgebra& c : corpus) {
            entries.push_back({"core/file-roundtrip/" + c.label,
                               [L = c.L] { return check_roundtrip(L); }});
            entries.push_back({"core/structure/" + c.label,
                               [L = c.L] { return check_structure(L); }});
            entries.push_back({"core/series-invariance/" + c.label,
                               [L = c.L, budget] { return check_series_invariance(L, budget); }});
            if (structure_predicates(c.L).is_solvable)
                entries.push_back({"core/solvable-dichotomy/" + c.label,
                                   [L = c.L, budget] { return check_dichotomy(L, budget); }});
        }
        for (u32 p : fields) {
            if (p > 3) continue;  // the random generator is specified for p in {2, 3}
            u32 bound = std::min<u32>(std::max<u32>(max_dim, 1), 4);
            for (u32 s = 0; s < seeds; ++s)
                entries.push_back(
                    {"core/random-solvable/p" + std::to_string(p) + "-s" + std::to_string(s),
                     [bound, p, s, budget] { return check_random_solvable(bound, p, s, budget); }});
        }
    }
    if (want("cohomology")) {
        for (const CorpusAlgebra& c : corpus) {
            entries.push_back({"cohomology/z1-crosscheck/" + c.label,
                               [L = c.L, budget] { return check_z1_crosscheck(L, budget); }});
            entries.push_back({"cohomology/descent/" + c.label,
                               [L = c.L, budget] { return check_descent(L, budget); }});
        }
        for (u32 p : fields)
            if (p >= 3 && max_dim >= 3)
                entries.push_back({"cohomology/minus-id/sl2(" + std::to_string(p) + ")",
                                   [p] { return check_minus_id(p); }});
    }
    if (want("crowns")) {
        for (const CorpusAlgebra& c : corpus) {
            entries.push_back({"crowns/abelian-ed/" + c.label,
                               [L = c.L, budget] { return check_abelian_ed(L, budget); }});
            entries.push_back(
                {"crowns/coherence/" + c.label,
                 [L = c.L, budget] { return check_connected_coherence(L, budget); }});
        }
    }
    if (want("classify")) {
        for (const CorpusAlgebra& c : corpus) {
            entries.push_back({"classify/matching/" + c.label,
                               [L = c.L, budget] { return check_matching(L, budget); }});
            entries.push_back({"classify/variation/" + c.label,
                               [L = c.L, budget] { return check_variation(L, budget); }});
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.name < b.name; });
    return entries;
}

int run_verify(const std::string& suite, std::vector<u32> fields, u32 max_dim, u32 seeds,
               const Budget& budget) {
    for (u32 p : fields)
        if (!is_prime(p)) {
            std::cerr << "error: field size " << p << " is not prime\n";
            return kInputError;
        }
    std::sort(fields.begin(), fields.end());
    fields.erase(std::unique(fields.begin(), fields.end()), fields.end());

    std::vector<Entry> entries = build_entries(suite, fields, max_dim, seeds, budget);
    std::vector<EntryResult> results(entries.size());

    // Entries are independent; workers pull from a shared index and write to
    // their own slot, so the printed assembly is deterministic.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
            try {
                results[i] = entries[i].run();
            } catch (const BudgetError& e) {
                results[i] = undecided(std::string("budget exhausted: ") + e.what());
            } catch (const std::exception& e) {
                results[i] = fail(std::string("exception: ") + e.what());
            }
        }
    };
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = std::min<std::size_t>(hw ? hw : 2, entries.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    if (workers > 0) work();
    for (std::thread& t : pool) t.join();

    std::size_t width = 0;
    for (const Entry& e : entries) width = std::max(width, e.name.size());
    u32 passed = 0, failed = 0, open = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const EntryResult& r = results[i];
        const char* tag = r.status == kOk ? "PASS    " : r.status == kViolation ? "FAIL    "
                                                                                : "UNKNOWN ";
        (r.status == kOk ? passed : r.status == kViolation ? failed : open)++;
        std::cout << tag << entries[i].name;
        if (!r.detail.empty())
            std::cout << std::string(width - entries[i].name.size() + 2, ' ') << r.detail;
        std::cout << "\n";
    }
    std::cout << entries.size() << " checks: " << passed << " passed, " << failed
              << " failed, " << open << " undecided\n";
    if (failed) return kViolation;
    if (open) return kUndecided;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "liecrown: chief series, crowns, and complement structure of finite-dimensional Lie "
        "algebras over prime fields"};
    app.require_subcommand(1);

    std::string env_err;
    u64 default_scale = env_budget(env_err).value_or(1);

    std::string file, suite = "all", emit_name;
    std::vector<std::string> factors;
    bool all_series = false, json = false, enumerate = false;
    u64 scale = default_scale;
    u32 emit_p = 0, max_dim = 6, seeds = 10;
    std::vector<u32> fields = {2, 3};

    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", scale, "budget scale multiplying all search limits");
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate an algebra file");
    validate->add_option("file", file, "structure-constant file")->required();

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full structural report for an algebra file");
    analyze_cmd->add_option("file", file, "structure-constant file")->required();
    analyze_cmd->add_flag("--all-series", all_series, "report every chief series");
    analyze_cmd->add_flag("--json", json, "emit the report as canonical JSON");
    add_budget(analyze_cmd);

    CLI::App* series_cmd = app.add_subcommand("series", "chief series of an algebra file");
    series_cmd->add_option("file", file, "structure-constant file")->required();
    series_cmd->add_flag("--enumerate", enumerate, "print every series");
    add_budget(series_cmd);

    CLI::App* equiv = app.add_subcommand("equiv", "test L-equivalence of two chief factors");
    equiv->add_option("file", file, "structure-constant file")->required();
    equiv->add_option("--factor", factors,
                      "chief factor as \"top_gens;bottom_gens\" (vectors '|'-separated, "
                      "coordinates ','-separated); give exactly twice")
        ->required();
    add_budget(equiv);

    CLI::App* crowns_cmd = app.add_subcommand("crowns", "crown ideals of an algebra file");
    crowns_cmd->add_option("file", file, "structure-constant file")->required();
    add_budget(crowns_cmd);

    CLI::App* catalog = app.add_subcommand("catalog", "built-in algebra corpus");
    CLI::App* cat_list = catalog->add_subcommand("list", "list the corpus entries");
    CLI::App* cat_emit = catalog->add_subcommand("emit", "print an entry as a file");
    cat_emit->add_option("name", emit_name, "entry name, e.g. h3 or ab2")->required();
    cat_emit->add_option("-p,--field", emit_p, "field characteristic")->required();
    catalog->require_subcommand(1);

    CLI::App* verify = app.add_subcommand("verify", "run the property-verification suites");
    verify->add_option("--suite", suite, "core|cohomology|crowns|classify|all")
        ->check(CLI::IsMember({"core", "cohomology", "crowns", "classify", "all"}));
    verify->add_option("--fields", fields, "prime field sizes")->delimiter(',');
    verify->add_option("--max-dim", max_dim, "skip corpus algebras above this dimension");
    verify->add_option("--seeds", seeds, "random solvable samples per field");
    add_budget(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    if (!env_err.empty()) {
        std::cerr << "error: " << env_err << "\n";
        return kInputError;
    }
    Budget budget{scale};

    if (validate->parsed()) return run_validate(file);
    if (analyze_cmd->parsed()) return run_analyze(file, all_series, json, budget);
    if (series_cmd->parsed()) return run_series(file, enumerate, budget);
    if (equiv->parsed()) return run_equiv(file, factors, budget);
    if (crowns_cmd->parsed()) return run_crowns(file, budget);
    if (catalog->parsed()) {
        if (cat_list->parsed()) return run_catalog_list();
        return run_catalog_emit(emit_name, emit_p);
    }
    return run_verify(suite, fields, max_dim, seeds, budget);
}
