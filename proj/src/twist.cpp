#include "mvkt/twist.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mvkt/gf2.hpp"

namespace mvkt {

void validate_involution(const CoefficientSystem& cs) {
    struct Entry {
        const char* name;
        const GroupMap* map;
        const FgAbelianGroup* degree;
    };
    const Entry entries[] = {{"phi0", &cs.phi0, &cs.k0}, {"phi1", &cs.phi1, &cs.k1}};
    for (const auto& [name, map, degree] : entries) {
        if (!(map->source() == *degree) || !(map->target() == *degree))
            fail(ErrorCode::NotWellDefined,
                 std::string(name) + " is not an endomorphism of its degree");
        if (!is_isomorphism(*map))
            fail(ErrorCode::NotBijective, std::string(name) + " is not an automorphism");
        if (!is_identity(compose(*map, *map)))
            fail(ErrorCode::NotInvolutive, std::string(name) + " does not square to the identity");
    }
}

Cocycle2 Cocycle2::trivial(const SimplicialComplex& complex) {
    Cocycle2 c;
    c.values_.assign(static_cast<std::size_t>(complex.simplex_count(2)), 0);
    return c;
}

Cocycle2 Cocycle2::from_pairs(const SimplicialComplex& complex,
                              const std::vector<std::pair<std::vector<int>, int>>& pairs) {
    Cocycle2 c = trivial(complex);
    std::set<Index> seen;
    for (const auto& [raw, value] : pairs) {
        std::vector<int> simplex = raw;
        std::sort(simplex.begin(), simplex.end());
        if (value != 0 && value != 1)
            fail(ErrorCode::SchemaError, "cocycle value must be 0 or 1");
        if (simplex.size() != 3)
            fail(ErrorCode::SchemaError, "cocycle entries must name 2-simplices");
        auto idx = complex.simplex_index(simplex);
        if (!idx) fail(ErrorCode::SchemaError, "cocycle entry names a missing 2-simplex");
        if (!seen.insert(*idx).second)
            fail(ErrorCode::SchemaError, "cocycle entry repeats a 2-simplex");
        c.values_[static_cast<std::size_t>(*idx)] = static_cast<Bit>(value);
    }
    return c;
}

BitVector Cocycle2::vector() const {
    BitVector v(static_cast<Index>(values_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i) v(static_cast<Index>(i)) = values_[i];
    return v;
}

bool is_cocycle(const Cocycle2& c, const SimplicialComplex& complex) {
    if (static_cast<Index>(c.values().size()) != complex.simplex_count(2))
        fail(ErrorCode::ShapeMismatch, "cochain length differs from the 2-simplex count");
    BitVector image = gf2_matvec(coboundary_matrix_mod2(complex, 2), c.vector());
    for (Index i = 0; i < image.size(); ++i)
        if (image(i)) return false;
    return true;
}

CocycleClass cohomology_class(const Cocycle2& c, const SimplicialComplex& complex) {
    if (!is_cocycle(c, complex))
        fail(ErrorCode::NotACocycle, "the 2-cochain has a nonzero coboundary");
    BitMatrix delta1 = coboundary_matrix_mod2(complex, 1);
    BitMatrix delta2 = coboundary_matrix_mod2(complex, 2);
    CocycleClass cls;
    cls.h2_dimension_mod2 =
        complex.simplex_count(2) - gf2_rank(delta2) - gf2_rank(delta1);
    cls.trivial = gf2_solve(delta1, c.vector()).has_value();
    return cls;
}

}  // namespace mvkt
