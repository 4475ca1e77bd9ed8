#pragma once

// private helpers shared by the scenario / report / verify serializers

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "mvkt/abelian.hpp"
#include "mvkt/error.hpp"
#include "mvkt/scenario.hpp"

namespace mvkt::detail {

[[noreturn]] inline void schema_fail(const std::string& ctx, const std::string& message) {
    fail(ErrorCode::SchemaError, ctx + ": " + message);
}

inline const Json& require_key(const Json& obj, const char* key, const std::string& ctx) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_fail(ctx, std::string("missing key '") + key + "'");
    return *it;
}

inline void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                       const std::string& ctx) {
    if (!obj.is_object()) schema_fail(ctx, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known |= (key == a);
        if (!known) schema_fail(ctx, "unknown key '" + key + "'");
    }
}

inline Int parse_int(const Json& v, const std::string& ctx) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            schema_fail(ctx, "string is not a decimal integer");
        }
    }
    schema_fail(ctx, "expected an integer (number or decimal string)");
}

inline long parse_small_int(const Json& v, const std::string& ctx) {
    if (!v.is_number_integer()) schema_fail(ctx, "expected an integer");
    return static_cast<long>(v.get<long long>());
}

inline IntMatrix parse_matrix(const Json& v, const std::string& ctx) {
    if (!v.is_array()) schema_fail(ctx, "expected a matrix (array of rows)");
    const Index rows = static_cast<Index>(v.size());
    Index cols = -1;
    IntMatrix m;
    for (Index i = 0; i < rows; ++i) {
        const Json& row = v[static_cast<std::size_t>(i)];
        const std::string rctx = ctx + "[" + std::to_string(i) + "]";
        if (!row.is_array()) schema_fail(rctx, "expected a row (array)");
        if (cols < 0) {
            cols = static_cast<Index>(row.size());
            m = IntMatrix(rows, cols);
        } else if (static_cast<Index>(row.size()) != cols) {
            schema_fail(rctx, "ragged rows");
        }
        for (Index j = 0; j < cols; ++j)
            m(i, j) = parse_int(row[static_cast<std::size_t>(j)],
                                rctx + "[" + std::to_string(j) + "]");
    }
    if (rows == 0) m = IntMatrix(0, 0);
    return m;
}

inline Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json group_to_json(const FgAbelianGroup& g) {
    Json j;
    j["rank"] = g.free_rank();
    Json tors = Json::array();
    for (const Int& d : g.invariant_factors()) tors.push_back(int_to_json(d));
    j["torsion"] = std::move(tors);
    return j;
}

/// Canonical-form group; the ctor re-validates the divisibility chain.
inline FgAbelianGroup group_from_json(const Json& v, const std::string& ctx) {
    check_keys(v, {"rank", "torsion"}, ctx);
    const long rank = parse_small_int(require_key(v, "rank", ctx), ctx + "/rank");
    const Json& tors = require_key(v, "torsion", ctx);
    if (!tors.is_array()) schema_fail(ctx + "/torsion", "expected an array");
    std::vector<Int> factors;
    for (std::size_t i = 0; i < tors.size(); ++i)
        factors.push_back(parse_int(tors[i], ctx + "/torsion[" + std::to_string(i) + "]"));
    return FgAbelianGroup(rank, std::move(factors));
}

}  // namespace mvkt::detail
