#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mvkt/matrix.hpp"
#include "mvkt/nerve.hpp"
#include "mvkt/twist.hpp"

namespace mvkt {

/// Key order is preserved so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

struct GroupSpec {
    Index rank = 0;
    std::vector<Int> torsion;  // arbitrary cyclic orders, canonicalized on resolve
};

struct NerveSpec {
    enum class Kind { maximal, cover, catalog };
    Kind kind = Kind::maximal;
    Index vertex_count = 0;                  // maximal
    std::vector<std::vector<int>> maximal;   // maximal
    CoverDescription cover;                  // cover
    std::string catalog_name;                // catalog
};

struct CocyclePair {
    std::vector<int> simplex;
    int value = 0;
};

struct ScenarioOptions {
    bool dump_pages = false;
    std::string format;  // "", "text" or "json"; empty means unset
};

/**
 * Parsed input document (schema "mvkt/1"). Parsing is purely structural;
 * all mathematical validation happens in resolve() and downstream so that
 * schema failures and validation failures keep their distinct exit classes.
 */
struct Scenario {
    std::string name;  // empty when absent
    NerveSpec nerve;
    GroupSpec k0, k1;
    IntMatrix phi0, phi1;
    bool assumption_k = false;
    bool cocycle_trivial = true;
    std::vector<CocyclePair> cocycle;
    ScenarioOptions options;
};

/// Throws Error(SchemaError) with a JSON-pointer style context on any
/// structural problem, including unknown keys.
Scenario parse_scenario(const Json& doc);

/// parse_scenario applied to text; JSON syntax errors carry a byte position.
Scenario parse_scenario_text(const std::string& text);

/// Canonicalized echo: groups in invariant-factor form, reduced phi
/// representatives, sorted simplices, sparse nonzero cocycle support.
Json scenario_to_json(const Scenario& sc);

struct ResolvedInputs {
    SimplicialComplex nerve;
    CoefficientSystem cs;
    Cocycle2 cocycle;
};

/// Builds the validated module inputs; throws validation-class errors.
ResolvedInputs resolve(const Scenario& sc);

}  // namespace mvkt
