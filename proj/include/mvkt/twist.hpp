#pragma once

#include <utility>
#include <vector>

#include "mvkt/abelian.hpp"
#include "mvkt/matrix.hpp"
#include "mvkt/nerve.hpp"

namespace mvkt {

/**
 * Coefficient K-theory pair K_0(D), K_1(D) with the automorphism phi acting
 * degreewise. Degrees are read mod 2 everywhere.
 */
struct CoefficientSystem {
    FgAbelianGroup k0, k1;
    GroupMap phi0, phi1;
    bool assumption_k = false;

    const FgAbelianGroup& k(int q) const { return (((q % 2) + 2) % 2 == 0) ? k0 : k1; }
    const GroupMap& phi(int q) const { return (((q % 2) + 2) % 2 == 0) ? phi0 : phi1; }
};

/// Checks that phi0, phi1 are automorphisms of their degree squaring to the
/// identity. Throws NotWellDefined for mis-wired maps, then NotBijective,
/// then NotInvolutive, in that order.
void validate_involution(const CoefficientSystem& cs);

/// Z/2-valued 2-cochain aligned with the lexicographic 2-simplex order.
class Cocycle2 {
public:
    Cocycle2() = default;

    static Cocycle2 trivial(const SimplicialComplex& complex);

    /// Values for listed 2-simplices; unlisted simplices get 0. Rejects
    /// unknown simplices, duplicate entries, and values outside {0, 1}.
    static Cocycle2 from_pairs(const SimplicialComplex& complex,
                               const std::vector<std::pair<std::vector<int>, int>>& pairs);

    const std::vector<Bit>& values() const { return values_; }
    BitVector vector() const;

    friend bool operator==(const Cocycle2&, const Cocycle2&) = default;

private:
    std::vector<Bit> values_;
};

/// delta^2 c = 0 over F_2; the cochain length must match the 2-simplex count.
bool is_cocycle(const Cocycle2& c, const SimplicialComplex& complex);

struct CocycleClass {
    bool trivial = true;           // c lies in the image of delta^1
    Index h2_dimension_mod2 = 0;   // dim_F2 H^2(complex; Z/2)
};

/// Throws NotACocycle when delta^2 c != 0.
CocycleClass cohomology_class(const Cocycle2& c, const SimplicialComplex& complex);

}  // namespace mvkt
