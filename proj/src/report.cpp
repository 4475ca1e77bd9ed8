#include "mvkt/report.hpp"

#include <sstream>
#include <utility>

#include "mvkt/error.hpp"
#include "mvkt/nerve.hpp"
#include "json_util.hpp"

namespace mvkt {

using detail::check_keys;
using detail::group_from_json;
using detail::group_to_json;
using detail::matrix_to_json;
using detail::parse_matrix;
using detail::parse_small_int;
using detail::require_key;
using detail::schema_fail;

namespace {

Json page_to_json(const SpectralPage& page) {
    Json j;
    j["page"] = page.page_number();
    j["dimension"] = page.dimension();
    j["kunneth_flag"] = page.kunneth_flag();
    Json entries = Json::array();
    for (int p = 0; p <= page.dimension(); ++p)
        for (int q = 0; q < 2; ++q) {
            Json e;
            e["p"] = p;
            e["q"] = q;
            e["group"] = group_to_json(page.entry(p, q));
            entries.push_back(std::move(e));
        }
    j["entries"] = std::move(entries);
    Json diffs = Json::array();
    for (const auto& [slot, map] : page.differentials()) {
        const Slot target = page.differential_target(slot);
        Json d;
        d["from"] = Json::array({slot.p, slot.q});
        d["to"] = Json::array({target.p, target.q});
        d["matrix"] = matrix_to_json(map.matrix());
        diffs.push_back(std::move(d));
    }
    j["differentials"] = std::move(diffs);
    return j;
}

SpectralPage page_from_json(const Json& v, const std::string& ctx) {
    check_keys(v, {"page", "dimension", "kunneth_flag", "entries", "differentials"}, ctx);
    const int number =
        static_cast<int>(parse_small_int(require_key(v, "page", ctx), ctx + "/page"));
    const int dim = static_cast<int>(
        parse_small_int(require_key(v, "dimension", ctx), ctx + "/dimension"));
    SpectralPage page(number, dim);

    const Json& flag = require_key(v, "kunneth_flag", ctx);
    if (!flag.is_boolean()) schema_fail(ctx + "/kunneth_flag", "expected a boolean");
    page.set_kunneth_flag(flag.get<bool>());

    const Json& entries = require_key(v, "entries", ctx);
    if (!entries.is_array()) schema_fail(ctx + "/entries", "expected an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string ectx = ctx + "/entries[" + std::to_string(i) + "]";
        const Json& e = entries[i];
        check_keys(e, {"p", "q", "group"}, ectx);
        const int p = static_cast<int>(parse_small_int(require_key(e, "p", ectx), ectx + "/p"));
        const int q = static_cast<int>(parse_small_int(require_key(e, "q", ectx), ectx + "/q"));
        page.set_entry(p, q, group_from_json(require_key(e, "group", ectx), ectx + "/group"));
    }

    const Json& diffs = require_key(v, "differentials", ctx);
    if (!diffs.is_array()) schema_fail(ctx + "/differentials", "expected an array");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        const std::string dctx = ctx + "/differentials[" + std::to_string(i) + "]";
        const Json& d = diffs[i];
        check_keys(d, {"from", "to", "matrix"}, dctx);
        auto slot_of = [&](const char* key) {
            const Json& s = require_key(d, key, dctx);
            if (!s.is_array() || s.size() != 2)
                schema_fail(dctx + "/" + key, "expected [p, q]");
            return Slot{static_cast<int>(parse_small_int(s[0], dctx + "/" + key + "[0]")),
                        static_cast<int>(parse_small_int(s[1], dctx + "/" + key + "[1]"))};
        };
        const Slot from = slot_of("from");
        const Slot to = slot_of("to");
        page.set_differential(from,
                              GroupMap(page.entry(from.p, from.q), page.entry(to.p, to.q),
                                       parse_matrix(require_key(d, "matrix", dctx),
                                                    dctx + "/matrix")));
    }
    return page;
}

Json degree_to_json(const GradedDegree& d) {
    Json j;
    Json pieces = Json::array();
    for (const FgAbelianGroup& g : d.graded_pieces) pieces.push_back(group_to_json(g));
    j["graded_pieces"] = std::move(pieces);
    Json res;
    if (d.determined) {
        res["status"] = "determined";
        res["rule"] = d.rule;
        res["group"] = group_to_json(*d.determined);
    } else {
        res["status"] = "ambiguous";
        res["rule"] = d.rule;
    }
    j["resolution"] = std::move(res);
    return j;
}

GradedDegree degree_from_json(const Json& v, const std::string& ctx) {
    check_keys(v, {"graded_pieces", "resolution"}, ctx);
    GradedDegree d;
    const Json& pieces = require_key(v, "graded_pieces", ctx);
    if (!pieces.is_array()) schema_fail(ctx + "/graded_pieces", "expected an array");
    for (std::size_t i = 0; i < pieces.size(); ++i)
        d.graded_pieces.push_back(group_from_json(
            pieces[i], ctx + "/graded_pieces[" + std::to_string(i) + "]"));
    const Json& res = require_key(v, "resolution", ctx);
    const std::string rctx = ctx + "/resolution";
    const Json& status = require_key(res, "status", rctx);
    if (!status.is_string()) schema_fail(rctx + "/status", "expected a string");
    const Json& rule = require_key(res, "rule", rctx);
    if (!rule.is_string()) schema_fail(rctx + "/rule", "expected a string");
    d.rule = rule.get<std::string>();
    if (status.get<std::string>() == "determined") {
        check_keys(res, {"status", "rule", "group"}, rctx);
        d.determined = group_from_json(require_key(res, "group", rctx), rctx + "/group");
    } else if (status.get<std::string>() == "ambiguous") {
        check_keys(res, {"status", "rule"}, rctx);
    } else {
        schema_fail(rctx + "/status", "expected \"determined\" or \"ambiguous\"");
    }
    return d;
}

Json assembled_to_json(const AssembledKTheory& a) {
    Json j;
    j["k0"] = degree_to_json(a.degree[0]);
    j["k1"] = degree_to_json(a.degree[1]);
    return j;
}

AssembledKTheory assembled_from_json(const Json& v, const std::string& ctx) {
    check_keys(v, {"k0", "k1"}, ctx);
    AssembledKTheory a;
    a.degree[0] = degree_from_json(require_key(v, "k0", ctx), ctx + "/k0");
    a.degree[1] = degree_from_json(require_key(v, "k1", ctx), ctx + "/k1");
    return a;
}

Verdict verdict_from_name(const std::string& name, const std::string& ctx) {
    if (name == "obstruction_proven") return Verdict::obstruction_proven;
    if (name == "no_obstruction_detected") return Verdict::no_obstruction_detected;
    if (name == "inconclusive") return Verdict::inconclusive;
    schema_fail(ctx, "unknown verdict '" + name + "'");
}

std::string matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (Index i = 0; i < m.rows(); ++i) {
        if (i > 0) out << ", ";
        out << "[";
        for (Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ", ";
            out << m(i, j);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

void render_page_text(std::ostringstream& out, const char* label, const SpectralPage& page) {
    out << label << " page (kunneth flag " << (page.kunneth_flag() ? "on" : "off") << "):\n";
    for (int p = 0; p <= page.dimension(); ++p)
        for (int q = 0; q < 2; ++q)
            out << "  " << label << "[p=" << p << ",q=" << q
                << "] = " << to_string(page.entry(p, q)) << "\n";
    for (const auto& [slot, map] : page.differentials()) {
        const Slot target = page.differential_target(slot);
        out << "  d" << page.page_number() << " (" << slot.p << "," << slot.q << ") -> ("
            << target.p << "," << target.q << "): " << matrix_text(map.matrix()) << "\n";
    }
}

void render_degree_text(std::ostringstream& out, const std::string& label,
                        const GradedDegree& d) {
    out << "  " << label << " = ";
    if (d.determined) {
        out << to_string(*d.determined);
    } else {
        out << "graded ";
        for (std::size_t i = 0; i < d.graded_pieces.size(); ++i) {
            if (i > 0) out << ", ";
            out << to_string(d.graded_pieces[i]);
        }
    }
    out << "    [" << d.rule << "]\n";
}

}  // namespace

RunReport run_scenario(const Scenario& sc, bool baseline_only) {
    Scenario effective = sc;
    if (baseline_only) {
        effective.cocycle_trivial = true;
        effective.cocycle.clear();
    }
    const ResolvedInputs in = resolve(effective);
    PipelineResult pipeline = run_pipeline(in.nerve, in.cs, in.cocycle);

    RunReport r;
    r.scenario = std::move(effective);
    r.baseline_only = baseline_only;
    r.cocycle_class = pipeline.cocycle_class;
    r.e1 = std::move(pipeline.e1);
    r.e2 = std::move(pipeline.e2);
    r.e3 = std::move(pipeline.e3);
    r.assembled = std::move(pipeline.assembled);
    r.baseline = baseline_untwisted(in.nerve, in.cs);
    ObstructionOutcome outcome = compare_assembled(r.assembled, r.baseline);
    r.verdict = outcome.verdict;
    r.reasons = std::move(outcome.reasons);
    return r;
}

Json report_to_json(const RunReport& report) {
    Json out;
    out["schema"] = "mvkt/1";
    out["scenario"] = scenario_to_json(report.scenario);

    Json cls;
    cls["trivial"] = report.cocycle_class.trivial;
    cls["h2_dimension_mod2"] = report.cocycle_class.h2_dimension_mod2;
    out["cocycle_class"] = std::move(cls);

    Json pages;
    pages["e1"] = page_to_json(report.e1);
    pages["e2"] = page_to_json(report.e2);
    pages["e3"] = page_to_json(report.e3);
    out["pages"] = std::move(pages);

    out["assembled"] = assembled_to_json(report.assembled);
    out["baseline"] = assembled_to_json(report.baseline);

    Json obstruction;
    obstruction["verdict"] = std::string(verdict_name(report.verdict));
    obstruction["reasons"] = report.reasons;
    out["obstruction"] = std::move(obstruction);

    Json assumptions;
    assumptions["good_cover_unchecked"] = true;
    assumptions["assumption_k"] = report.scenario.assumption_k;
    out["assumptions"] = std::move(assumptions);
    return out;
}

RunReport report_from_json(const Json& doc) {
    const std::string ctx = "/";
    check_keys(doc,
               {"schema", "scenario", "cocycle_class", "pages", "assembled", "baseline",
                "obstruction", "assumptions"},
               ctx);
    const Json& schema = require_key(doc, "schema", ctx);
    if (!schema.is_string() || schema.get<std::string>() != "mvkt/1")
        schema_fail("/schema", "expected \"mvkt/1\"");

    RunReport r;
    r.scenario = parse_scenario(require_key(doc, "scenario", ctx));

    const Json& cls = require_key(doc, "cocycle_class", ctx);
    check_keys(cls, {"trivial", "h2_dimension_mod2"}, "/cocycle_class");
    const Json& trivial = require_key(cls, "trivial", "/cocycle_class");
    if (!trivial.is_boolean()) schema_fail("/cocycle_class/trivial", "expected a boolean");
    r.cocycle_class.trivial = trivial.get<bool>();
    r.cocycle_class.h2_dimension_mod2 = parse_small_int(
        require_key(cls, "h2_dimension_mod2", "/cocycle_class"),
        "/cocycle_class/h2_dimension_mod2");

    const Json& pages = require_key(doc, "pages", ctx);
    check_keys(pages, {"e1", "e2", "e3"}, "/pages");
    r.e1 = page_from_json(require_key(pages, "e1", "/pages"), "/pages/e1");
    r.e2 = page_from_json(require_key(pages, "e2", "/pages"), "/pages/e2");
    r.e3 = page_from_json(require_key(pages, "e3", "/pages"), "/pages/e3");

    r.assembled = assembled_from_json(require_key(doc, "assembled", ctx), "/assembled");
    r.baseline = assembled_from_json(require_key(doc, "baseline", ctx), "/baseline");

    const Json& obstruction = require_key(doc, "obstruction", ctx);
    check_keys(obstruction, {"verdict", "reasons"}, "/obstruction");
    const Json& verdict = require_key(obstruction, "verdict", "/obstruction");
    if (!verdict.is_string()) schema_fail("/obstruction/verdict", "expected a string");
    r.verdict = verdict_from_name(verdict.get<std::string>(), "/obstruction/verdict");
    const Json& reasons = require_key(obstruction, "reasons", "/obstruction");
    if (!reasons.is_array()) schema_fail("/obstruction/reasons", "expected an array");
    for (std::size_t i = 0; i < reasons.size(); ++i) {
        if (!reasons[i].is_string())
            schema_fail("/obstruction/reasons[" + std::to_string(i) + "]",
                        "expected a string");
        r.reasons.push_back(reasons[i].get<std::string>());
    }

    const Json& assumptions = require_key(doc, "assumptions", ctx);
    check_keys(assumptions, {"good_cover_unchecked", "assumption_k"}, "/assumptions");
    for (const char* key : {"good_cover_unchecked", "assumption_k"})
        if (!require_key(assumptions, key, "/assumptions").is_boolean())
            schema_fail(std::string("/assumptions/") + key, "expected a boolean");
    return r;
}

bool operator==(const RunReport& a, const RunReport& b) {
    return report_to_json(a) == report_to_json(b);
}

std::string render_json(const RunReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string render_text(const RunReport& report, bool dump_pages) {
    std::ostringstream out;
    out << "mvkt run: "
        << (report.scenario.name.empty() ? std::string("(unnamed scenario)")
                                         : report.scenario.name)
        << "\n";

    const SimplicialComplex nerve = resolve(report.scenario).nerve;
    out << "nerve: dimension " << nerve.dimension() << ", simplex counts [";
    for (int p = 0; p <= nerve.dimension(); ++p) {
        if (p > 0) out << ", ";
        out << nerve.simplex_count(p);
    }
    out << "], euler characteristic " << euler_characteristic(nerve) << "\n";

    out << "cocycle class: " << (report.cocycle_class.trivial ? "trivial" : "nontrivial")
        << " (dim_F2 H^2 = " << report.cocycle_class.h2_dimension_mod2 << ")\n";
    out << "assumptions: good cover (unchecked), assumption (K) "
        << (report.scenario.assumption_k ? "granted" : "not granted") << "\n";

    if (dump_pages) {
        render_page_text(out, "E1", report.e1);
        render_page_text(out, "E2", report.e2);
        render_page_text(out, "E3", report.e3);
    }

    out << "twisted K-theory:\n";
    render_degree_text(out, "K_0(A)", report.assembled.degree[0]);
    render_degree_text(out, "K_1(A)", report.assembled.degree[1]);
    out << "untwisted baseline:\n";
    render_degree_text(out, "K_0", report.baseline.degree[0]);
    render_degree_text(out, "K_1", report.baseline.degree[1]);

    out << "verdict: " << verdict_name(report.verdict) << "\n";
    for (const std::string& reason : report.reasons) out << "  - " << reason << "\n";
    return out.str();
}

}  // namespace mvkt
