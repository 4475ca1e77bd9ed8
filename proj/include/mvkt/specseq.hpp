#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvkt/abelian.hpp"
#include "mvkt/nerve.hpp"
#include "mvkt/twist.hpp"

namespace mvkt {

/// Bigraded position (p, q) with q read mod 2.
struct Slot {
    int p = 0;
    int q = 0;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

/**
 * One page of the homological spectral sequence of a covered algebra. The
 * column index p runs over 0..dimension of the nerve; the row index q lives
 * in Z/2 because the coefficient K-groups are 2-periodic. Differentials on
 * page r map (p, q) -> (p - r, q + r - 1 mod 2) and are keyed by their
 * source slot.
 */
class SpectralPage {
public:
    SpectralPage() = default;

    SpectralPage(int page_number, int dimension);

    int page_number() const { return page_number_; }
    int dimension() const { return dimension_; }

    const FgAbelianGroup& entry(int p, int q) const;
    void set_entry(int p, int q, FgAbelianGroup g);

    const std::map<Slot, GroupMap>& differentials() const { return differentials_; }

    /// Checks the slot geometry for this page and that the map's groups
    /// equal the page entries before storing.
    void set_differential(Slot source, GroupMap d);

    Slot differential_target(Slot source) const;

    /// Set on trivially twisted runs; assembly may then resolve extensions
    /// as direct sums.
    bool kunneth_flag() const { return kunneth_flag_; }
    void set_kunneth_flag(bool flag) { kunneth_flag_ = flag; }

    friend bool operator==(const SpectralPage&, const SpectralPage&) = default;

private:
    int page_number_ = 0;
    int dimension_ = -1;
    std::vector<std::array<FgAbelianGroup, 2>> entries_;
    std::map<Slot, GroupMap> differentials_;
    bool kunneth_flag_ = false;
};

/// E1_{p,q} = M_q^(copies of p-simplices) with the suspension shift
/// M_q = K_{q-1 mod 2}(D) absorbed once here; d1 applies the nerve boundary
/// to each coefficient generator.
SpectralPage e1_page(const SimplicialComplex& nerve, const CoefficientSystem& cs);

/// E2_{p,q} = H_p(nerve) (x) M_q (+) Tor(H_{p-1}(nerve), M_q).
SpectralPage e2_page(const SpectralPage& e1, const SimplicialComplex& nerve,
                     const CoefficientSystem& cs);

/**
 * Attaches d2 = phi_* - id from (2, q) to (0, q+1) when the twisting class is
 * nontrivial. Requires the nerve to be a connected closed surface with a
 * fundamental cycle (else TwistedRunUnsupported) and the two coefficient
 * degrees to share one canonical form (else CoefficientDegreeMismatch).
 * A trivial class attaches nothing and raises the Kunneth flag.
 */
SpectralPage attach_d2(const SpectralPage& e2, const SimplicialComplex& nerve,
                       const CoefficientSystem& cs, const Cocycle2& twist);

/// E3 = E_infinity for nerves of dimension <= 2; throws UnsupportedDimension
/// above that, where higher differentials could still act.
SpectralPage e_infinity(const SpectralPage& page_with_d2);

/// Associated graded of one total degree plus the extension resolution.
struct GradedDegree {
    std::vector<FgAbelianGroup> graded_pieces;  // filtration index p = 0..dim
    std::optional<FgAbelianGroup> determined;   // nullopt: extensions ambiguous
    std::string rule;                           // which resolution rule fired

    friend bool operator==(const GradedDegree&, const GradedDegree&) = default;
};

struct AssembledKTheory {
    std::array<GradedDegree, 2> degree;  // total degree n = 0, 1

    friend bool operator==(const AssembledKTheory&, const AssembledKTheory&) = default;
};

/**
 * Reads K_n off the infinity page: pieces E_{p, n-p mod 2}. Extensions are
 * resolved when all pieces vanish, exactly one survives, the surviving
 * orders are finite and pairwise coprime, or the Kunneth flag is set;
 * otherwise the degree stays ambiguous.
 */
AssembledKTheory assemble(const SpectralPage& einf);

/// Assembled K-theory of the untwisted (trivial cocycle) run.
AssembledKTheory baseline_untwisted(const SimplicialComplex& nerve,
                                    const CoefficientSystem& cs);

enum class Verdict { obstruction_proven, no_obstruction_detected, inconclusive };

std::string_view verdict_name(Verdict v);

struct ObstructionOutcome {
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> reasons;
};

/**
 * Extension-robust comparison per total degree: sum of free ranks and
 * product of torsion orders of the graded pieces. Any mismatch proves an
 * obstruction; full agreement of invariants plus equal determined groups on
 * both sides clears it; anything else is inconclusive.
 */
ObstructionOutcome compare_assembled(const AssembledKTheory& twisted,
                                     const AssembledKTheory& baseline);

struct PipelineResult {
    CocycleClass cocycle_class;
    SpectralPage e1, e2, e3;  // e2 carries the attached differentials
    AssembledKTheory assembled;
};

/// validate_involution + E1 + E2 + d2 + E_infinity + assembly.
PipelineResult run_pipeline(const SimplicialComplex& nerve, const CoefficientSystem& cs,
                            const Cocycle2& twist);

}  // namespace mvkt
