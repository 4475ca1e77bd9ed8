#pragma once

#include <optional>
#include <vector>

#include "mvkt/abelian.hpp"
#include "mvkt/error.hpp"
#include "mvkt/matrix.hpp"

namespace mvkt {

/**
 * Finite abstract simplicial complex on vertices 0..vertex_count-1. Every
 * vertex is a 0-simplex. Simplices are stored per dimension as strictly
 * increasing vertex lists in lexicographic order, so simplex indices are
 * stable and reports are deterministic.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // empty complex

    /// Downward closure of the given simplices plus all singletons.
    static SimplicialComplex from_maximal_simplices(Index vertex_count,
                                                    std::vector<std::vector<int>> maximal);

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }

    Index vertex_count() const { return vertex_count_; }

    Index simplex_count(int p) const;

    /// Lexicographically sorted p-simplices; p must lie in 0..dimension().
    const std::vector<std::vector<int>>& simplices(int p) const;

    /// Index of a simplex given by a strictly increasing vertex list.
    std::optional<Index> simplex_index(const std::vector<int>& simplex) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    Index vertex_count_ = 0;
    std::vector<std::vector<std::vector<int>>> simplices_;
};

/// Open cover data: sets of indices into a ground set 0..ground_set_size-1.
struct CoverDescription {
    Index ground_set_size = 0;
    std::vector<std::vector<int>> sets;
};

/// Nerve: one vertex per cover set, a p-simplex per (p+1)-fold intersection.
/// Rejects empty sets, out-of-range or repeated elements, and families whose
/// union misses part of the ground set.
SimplicialComplex nerve_of_cover(const CoverDescription& cover);

/// Matrix of d_p with the alternating-sign convention
/// d(v_0..v_p) = sum_i (-1)^i (v_0..v_i^..v_p); shape count(p-1) x count(p).
IntMatrix boundary_matrix(const SimplicialComplex& complex, int p);

/// Mod-2 coboundary in degree p, the transpose of boundary(p+1);
/// shape count(p+1) x count(p). Degree p = dimension gives a 0-row matrix.
BitMatrix coboundary_matrix_mod2(const SimplicialComplex& complex, int p);

/// Simplicial chain complex over Z; construction re-checks d d = 0.
IntegerChainComplex chain_complex(const SimplicialComplex& complex);

bool is_connected(const SimplicialComplex& complex);

/// Connected, pure 2-dimensional, every edge in exactly two triangles.
bool is_closed_surface(const SimplicialComplex& complex);

/**
 * Generator of ker d_2 when that kernel has rank one and the generator has
 * all coefficients +-1 (the fundamental cycle of a closed orientable
 * surface), normalized so its first entry is +1. nullopt otherwise.
 */
std::optional<IntVector> fundamental_cycle(const SimplicialComplex& complex);

long long euler_characteristic(const SimplicialComplex& complex);

}  // namespace mvkt
