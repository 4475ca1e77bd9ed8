#pragma once

#include <optional>

#include "mvkt/matrix.hpp"

namespace mvkt {

Index gf2_rank(BitMatrix m);

/// One solution of a x = b over F_2 (free variables set to 0), or nullopt.
std::optional<BitVector> gf2_solve(BitMatrix a, const BitVector& b);

BitVector gf2_matvec(const BitMatrix& a, const BitVector& x);

}  // namespace mvkt
