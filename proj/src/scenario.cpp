#include "mvkt/scenario.hpp"

#include <algorithm>
#include <utility>

#include "mvkt/abelian.hpp"
#include "mvkt/catalog.hpp"
#include "mvkt/error.hpp"
#include "json_util.hpp"

namespace mvkt {

using detail::check_keys;
using detail::group_to_json;
using detail::int_to_json;
using detail::matrix_to_json;
using detail::parse_int;
using detail::parse_matrix;
using detail::parse_small_int;
using detail::require_key;
using detail::schema_fail;

namespace {

GroupSpec parse_group_spec(const Json& v, const std::string& ctx) {
    check_keys(v, {"rank", "torsion"}, ctx);
    GroupSpec g;
    g.rank = parse_small_int(require_key(v, "rank", ctx), ctx + "/rank");
    if (g.rank < 0) schema_fail(ctx + "/rank", "rank must be >= 0");
    const Json& tors = require_key(v, "torsion", ctx);
    if (!tors.is_array()) schema_fail(ctx + "/torsion", "expected an array");
    for (std::size_t i = 0; i < tors.size(); ++i) {
        Int d = parse_int(tors[i], ctx + "/torsion[" + std::to_string(i) + "]");
        if (d < 1)
            schema_fail(ctx + "/torsion[" + std::to_string(i) + "]",
                        "cyclic orders must be >= 1");
        g.torsion.push_back(std::move(d));
    }
    return g;
}

std::vector<int> parse_simplex(const Json& v, const std::string& ctx) {
    if (!v.is_array() || v.empty()) schema_fail(ctx, "expected a nonempty vertex array");
    std::vector<int> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s.push_back(static_cast<int>(
            parse_small_int(v[i], ctx + "[" + std::to_string(i) + "]")));
    return s;
}

NerveSpec parse_nerve(const Json& v, const std::string& ctx) {
    NerveSpec spec;
    if (!v.is_object()) schema_fail(ctx, "expected an object");
    if (v.contains("catalog")) {
        check_keys(v, {"catalog"}, ctx);
        const Json& name = v["catalog"];
        if (!name.is_string()) schema_fail(ctx + "/catalog", "expected a string");
        spec.kind = NerveSpec::Kind::catalog;
        spec.catalog_name = name.get<std::string>();
        return spec;
    }
    if (v.contains("maximal_simplices")) {
        check_keys(v, {"vertex_count", "maximal_simplices"}, ctx);
        spec.kind = NerveSpec::Kind::maximal;
        spec.vertex_count =
            parse_small_int(require_key(v, "vertex_count", ctx), ctx + "/vertex_count");
        const Json& list = v["maximal_simplices"];
        if (!list.is_array()) schema_fail(ctx + "/maximal_simplices", "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i)
            spec.maximal.push_back(parse_simplex(
                list[i], ctx + "/maximal_simplices[" + std::to_string(i) + "]"));
        return spec;
    }
    if (v.contains("cover")) {
        check_keys(v, {"ground_set_size", "cover"}, ctx);
        spec.kind = NerveSpec::Kind::cover;
        spec.cover.ground_set_size = parse_small_int(
            require_key(v, "ground_set_size", ctx), ctx + "/ground_set_size");
        const Json& list = v["cover"];
        if (!list.is_array()) schema_fail(ctx + "/cover", "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i)
            spec.cover.sets.push_back(
                parse_simplex(list[i], ctx + "/cover[" + std::to_string(i) + "]"));
        return spec;
    }
    schema_fail(ctx, "need one of 'maximal_simplices', 'cover' or 'catalog'");
}

}  // namespace

Scenario parse_scenario(const Json& doc) {
    const std::string ctx = "/";
    check_keys(doc, {"schema", "name", "nerve", "coefficients", "cocycle", "options"}, ctx);

    const Json& schema = require_key(doc, "schema", ctx);
    if (!schema.is_string() || schema.get<std::string>() != "mvkt/1")
        schema_fail("/schema", "expected \"mvkt/1\"");

    Scenario sc;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) schema_fail("/name", "expected a string");
        sc.name = doc["name"].get<std::string>();
    }

    sc.nerve = parse_nerve(require_key(doc, "nerve", ctx), "/nerve");

    const Json& coeff = require_key(doc, "coefficients", ctx);
    check_keys(coeff, {"k0", "k1", "phi0", "phi1", "assumption_k"}, "/coefficients");
    sc.k0 = parse_group_spec(require_key(coeff, "k0", "/coefficients"), "/coefficients/k0");
    sc.k1 = parse_group_spec(require_key(coeff, "k1", "/coefficients"), "/coefficients/k1");
    sc.phi0 = parse_matrix(require_key(coeff, "phi0", "/coefficients"), "/coefficients/phi0");
    sc.phi1 = parse_matrix(require_key(coeff, "phi1", "/coefficients"), "/coefficients/phi1");
    const Json& ak = require_key(coeff, "assumption_k", "/coefficients");
    if (!ak.is_boolean()) schema_fail("/coefficients/assumption_k", "expected a boolean");
    sc.assumption_k = ak.get<bool>();

    const Json& cocycle = require_key(doc, "cocycle", ctx);
    if (cocycle.is_string()) {
        if (cocycle.get<std::string>() != "trivial")
            schema_fail("/cocycle", "the only string form is \"trivial\"");
        sc.cocycle_trivial = true;
    } else if (cocycle.is_array()) {
        sc.cocycle_trivial = false;
        for (std::size_t i = 0; i < cocycle.size(); ++i) {
            const std::string pctx = "/cocycle[" + std::to_string(i) + "]";
            const Json& pair = cocycle[i];
            if (!pair.is_array() || pair.size() != 2)
                schema_fail(pctx, "expected [simplex, value] pairs");
            CocyclePair cp;
            cp.simplex = parse_simplex(pair[0], pctx + "[0]");
            cp.value = static_cast<int>(parse_small_int(pair[1], pctx + "[1]"));
            if (cp.value != 0 && cp.value != 1)
                schema_fail(pctx + "[1]", "cocycle values must be 0 or 1");
            sc.cocycle.push_back(std::move(cp));
        }
    } else {
        schema_fail("/cocycle", "expected \"trivial\" or an array of pairs");
    }

    if (doc.contains("options")) {
        const Json& opts = doc["options"];
        check_keys(opts, {"dump_pages", "format"}, "/options");
        if (opts.contains("dump_pages")) {
            if (!opts["dump_pages"].is_boolean())
                schema_fail("/options/dump_pages", "expected a boolean");
            sc.options.dump_pages = opts["dump_pages"].get<bool>();
        }
        if (opts.contains("format")) {
            if (!opts["format"].is_string())
                schema_fail("/options/format", "expected a string");
            sc.options.format = opts["format"].get<std::string>();
            if (sc.options.format != "text" && sc.options.format != "json")
                schema_fail("/options/format", "expected \"text\" or \"json\"");
        }
    }
    return sc;
}

Scenario parse_scenario_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::SchemaError, "invalid JSON at byte " + std::to_string(e.byte) +
                                         ": " + e.what());
    }
    return parse_scenario(doc);
}

Json scenario_to_json(const Scenario& sc) {
    Json out;
    out["schema"] = "mvkt/1";
    if (!sc.name.empty()) out["name"] = sc.name;

    Json nerve;
    switch (sc.nerve.kind) {
        case NerveSpec::Kind::catalog:
            nerve["catalog"] = sc.nerve.catalog_name;
            break;
        case NerveSpec::Kind::maximal: {
            nerve["vertex_count"] = sc.nerve.vertex_count;
            std::vector<std::vector<int>> sorted = sc.nerve.maximal;
            for (auto& s : sorted) std::sort(s.begin(), s.end());
            std::sort(sorted.begin(), sorted.end());
            Json list = Json::array();
            for (const auto& s : sorted) list.push_back(s);
            nerve["maximal_simplices"] = std::move(list);
            break;
        }
        case NerveSpec::Kind::cover: {
            nerve["ground_set_size"] = sc.nerve.cover.ground_set_size;
            Json list = Json::array();
            for (const auto& raw : sc.nerve.cover.sets) {
                std::vector<int> s = raw;
                std::sort(s.begin(), s.end());
                list.push_back(s);  // set order defines the nerve vertices
            }
            nerve["cover"] = std::move(list);
            break;
        }
    }
    out["nerve"] = std::move(nerve);

    const FgAbelianGroup k0 = FgAbelianGroup::from_summands(sc.k0.rank, sc.k0.torsion);
    const FgAbelianGroup k1 = FgAbelianGroup::from_summands(sc.k1.rank, sc.k1.torsion);
    Json coeff;
    coeff["k0"] = group_to_json(k0);
    coeff["k1"] = group_to_json(k1);
    // echo the reduced representatives when the matrices are well defined;
    // raw input passes through otherwise so error reports stay faithful
    auto phi_json = [&](const IntMatrix& m, const FgAbelianGroup& g) {
        try {
            return matrix_to_json(GroupMap(g, g, m).matrix());
        } catch (const Error&) {
            return matrix_to_json(m);
        }
    };
    coeff["phi0"] = phi_json(sc.phi0, k0);
    coeff["phi1"] = phi_json(sc.phi1, k1);
    coeff["assumption_k"] = sc.assumption_k;
    out["coefficients"] = std::move(coeff);

    // sparse canonical support: nonzero values sorted by simplex
    std::vector<std::vector<int>> support;
    for (const auto& cp : sc.cocycle) {
        if (cp.value == 0) continue;
        std::vector<int> s = cp.simplex;
        std::sort(s.begin(), s.end());
        support.push_back(std::move(s));
    }
    std::sort(support.begin(), support.end());
    if (sc.cocycle_trivial || support.empty()) {
        out["cocycle"] = "trivial";
    } else {
        Json pairs = Json::array();
        for (const auto& s : support) pairs.push_back(Json::array({Json(s), Json(1)}));
        out["cocycle"] = std::move(pairs);
    }

    Json opts;
    opts["dump_pages"] = sc.options.dump_pages;
    opts["format"] = sc.options.format.empty() ? "text" : sc.options.format;
    out["options"] = std::move(opts);
    return out;
}

ResolvedInputs resolve(const Scenario& sc) {
    ResolvedInputs out;

    switch (sc.nerve.kind) {
        case NerveSpec::Kind::maximal:
            out.nerve = SimplicialComplex::from_maximal_simplices(sc.nerve.vertex_count,
                                                                  sc.nerve.maximal);
            break;
        case NerveSpec::Kind::cover:
            out.nerve = nerve_of_cover(sc.nerve.cover);
            break;
        case NerveSpec::Kind::catalog: {
            const Scenario entry = catalog_scenario(sc.nerve.catalog_name);
            out.nerve = resolve(entry).nerve;  // catalog nerves are non-recursive
            break;
        }
    }

    FgAbelianGroup k0 = FgAbelianGroup::from_summands(sc.k0.rank, sc.k0.torsion);
    FgAbelianGroup k1 = FgAbelianGroup::from_summands(sc.k1.rank, sc.k1.torsion);
    GroupMap phi0(k0, k0, sc.phi0);
    GroupMap phi1(k1, k1, sc.phi1);
    out.cs = CoefficientSystem{std::move(k0), std::move(k1), std::move(phi0),
                               std::move(phi1), sc.assumption_k};

    if (sc.cocycle_trivial) {
        out.cocycle = Cocycle2::trivial(out.nerve);
    } else {
        std::vector<std::pair<std::vector<int>, int>> pairs;
        for (const auto& cp : sc.cocycle) pairs.emplace_back(cp.simplex, cp.value);
        out.cocycle = Cocycle2::from_pairs(out.nerve, pairs);
    }
    return out;
}

}  // namespace mvkt
