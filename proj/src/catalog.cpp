#include "mvkt/catalog.hpp"

#include "mvkt/error.hpp"

namespace mvkt {

namespace {

// every entry uses the running example coefficients: K_0 = K_1 = Z/3 with
// the inversion automorphism, and the finiteness assumption granted
Scenario base_scenario() {
    Scenario sc;
    sc.k0 = GroupSpec{0, {Int(3)}};
    sc.k1 = GroupSpec{0, {Int(3)}};
    sc.phi0 = IntMatrix::Constant(1, 1, Int(-1));
    sc.phi1 = IntMatrix::Constant(1, 1, Int(-1));
    sc.assumption_k = true;
    sc.cocycle_trivial = true;
    return sc;
}

NerveSpec cover_spec(Index ground, std::vector<std::vector<int>> sets) {
    NerveSpec n;
    n.kind = NerveSpec::Kind::cover;
    n.cover.ground_set_size = ground;
    n.cover.sets = std::move(sets);
    return n;
}

NerveSpec maximal_spec(Index vertices, std::vector<std::vector<int>> maximal) {
    NerveSpec n;
    n.kind = NerveSpec::Kind::maximal;
    n.vertex_count = vertices;
    n.maximal = std::move(maximal);
    return n;
}

NerveSpec octahedron_spec() {
    return maximal_spec(6, {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                            {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "interval-2cover",
        "interval-3cover",
        "circle-3cover",
        "sphere-octahedron-untwisted",
        "sphere-octahedron-twisted",
        "sphere-tetrahedron-twisted",
    };
    return names;
}

Scenario catalog_scenario(const std::string& name) {
    Scenario sc = base_scenario();
    sc.name = name;
    if (name == "interval-2cover") {
        sc.nerve = cover_spec(3, {{0, 1}, {1, 2}});
    } else if (name == "interval-3cover") {
        sc.nerve = cover_spec(5, {{0, 1}, {1, 2, 3}, {3, 4}});
    } else if (name == "circle-3cover") {
        sc.nerve = cover_spec(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    } else if (name == "sphere-octahedron-untwisted") {
        sc.nerve = octahedron_spec();
    } else if (name == "sphere-octahedron-twisted") {
        sc.nerve = octahedron_spec();
        sc.cocycle_trivial = false;
        sc.cocycle = {CocyclePair{{0, 2, 4}, 1}};
    } else if (name == "sphere-tetrahedron-twisted") {
        sc.nerve = maximal_spec(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
        sc.cocycle_trivial = false;
        sc.cocycle = {CocyclePair{{0, 1, 2}, 1}};
    } else {
        std::string known;
        for (const std::string& n : catalog_names()) {
            if (!known.empty()) known += ", ";
            known += n;
        }
        fail(ErrorCode::SchemaError, "unknown catalog entry '" + name +
                                         "'; available: " + known);
    }
    return sc;
}

}  // namespace mvkt
