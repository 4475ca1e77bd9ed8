#pragma once

#include <vector>

#include "mvkt/matrix.hpp"
#include "mvkt/nerve.hpp"

namespace mvkt {

/// Rank of an integer matrix over F_p, p prime.
Index rank_mod_p(const IntMatrix& m, long p);

/// dim_Fp H_deg(complex; F_p) for deg = 0..dimension(), by rank counting.
std::vector<Index> homology_dims_mod_p(const SimplicialComplex& complex, long p);

}  // namespace mvkt
