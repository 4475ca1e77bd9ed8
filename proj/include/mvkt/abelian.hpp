#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mvkt/error.hpp"
#include "mvkt/matrix.hpp"

namespace mvkt {

/**
 * Finitely generated abelian group in invariant-factor canonical form:
 * Z^rank (+) Z/d_1 (+) ... (+) Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
 *
 * Equality of canonical forms is isomorphism, so operator== is the
 * isomorphism test. Generators are ordered free-first, then torsion in
 * invariant-factor order; every matrix of a GroupMap refers to this order.
 */
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;  // trivial group

    /// Requires canonical data: factors >= 2 in a divisibility chain.
    FgAbelianGroup(Index free_rank, std::vector<Int> invariant_factors);

    /// Canonicalizes an arbitrary direct sum of cyclic pieces. Orders may be
    /// given in any sequence; 0 means an infinite cyclic summand, 1 summands
    /// vanish. Negative orders are rejected.
    static FgAbelianGroup from_summands(Index free_rank, const std::vector<Int>& orders);

    Index free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    Index torsion_count() const { return static_cast<Index>(factors_.size()); }
    Index generator_count() const { return free_rank_ + torsion_count(); }

    /// Order of generator i (free generators first); 0 for infinite order.
    Int generator_order(Index i) const;

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    /// Product of the invariant factors (1 for free groups).
    Int torsion_order() const;

    /// generator_count x torsion_count matrix whose columns are the relations
    /// d_j * (torsion generator j) = 0.
    IntMatrix relation_matrix() const;

    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

private:
    Index free_rank_ = 0;
    std::vector<Int> factors_;
};

/// "0", "Z", "Z^2 + Z/2 + Z/6", ...
std::string to_string(const FgAbelianGroup& g);
std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& g);

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// n-fold direct sum of g with itself.
FgAbelianGroup direct_sum_power(const FgAbelianGroup& g, Index n);

/// a (x)_Z b via the cyclic rules Z(x)Z=Z, Z(x)Z/d=Z/d, Z/d(x)Z/e=Z/gcd(d,e).
FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Tor_1^Z(a, b); free parts contribute nothing, Tor(Z/d, Z/e) = Z/gcd(d,e).
FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Extension-robust invariants: free rank and torsion order.
std::pair<Index, Int> group_order_and_rank(const FgAbelianGroup& g);

/**
 * Smith normal form with unimodular provenance: u * input * v == d where d is
 * diagonal with non-negative entries in a divisibility chain (zeros last).
 * u_inv and v_inv are the exact inverses of u and v.
 */
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
    Index rank = 0;  // number of nonzero diagonal entries

    std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(IntMatrix m);

/// Z^rows / column-span(relations), in canonical form.
FgAbelianGroup cokernel(const IntMatrix& relations);

/// Basis of the integer kernel lattice of m, one column per basis vector.
IntMatrix kernel_basis(const IntMatrix& m);

/// Column basis (possibly fewer columns) of the lattice spanned by the
/// columns of generators.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Integer solution x of a x = b, column by column; nullopt if none exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/**
 * Chain complex of free Z-modules ... -> C_p -> C_{p-1} -> ... -> C_0.
 * boundaries[p-1] is the matrix of d_p: C_p -> C_{p-1} (shape rank(p-1) x
 * rank(p)). Construction checks shapes and d d = 0.
 */
class IntegerChainComplex {
public:
    IntegerChainComplex(std::vector<Index> ranks, std::vector<IntMatrix> boundaries);

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    Index rank(int p) const;
    const IntMatrix& boundary(int p) const;  // 1 <= p <= top_degree()

private:
    std::vector<Index> ranks_;
    std::vector<IntMatrix> boundaries_;
};

/// H_p = ker d_p / im d_{p+1} in canonical form; 0 <= p <= top_degree().
FgAbelianGroup homology_at(const IntegerChainComplex& cc, int p);

/**
 * Homomorphism between groups in canonical form. The matrix acts on generator
 * coordinates (target rows, source columns). Construction checks
 * well-definedness (each source relation maps into target relations) and
 * reduces entries in torsion target rows into [0, order).
 */
class GroupMap {
public:
    GroupMap() = default;  // zero map between trivial groups

    GroupMap(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

    static GroupMap identity(const FgAbelianGroup& g);
    static GroupMap zero(const FgAbelianGroup& source, const FgAbelianGroup& target);

    const FgAbelianGroup& source() const { return source_; }
    const FgAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    bool is_zero() const { return is_zero_matrix(matrix_); }

    friend bool operator==(const GroupMap& a, const GroupMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ &&
               matrices_equal(a.matrix_, b.matrix_);
    }

private:
    FgAbelianGroup source_;
    FgAbelianGroup target_;
    IntMatrix matrix_;
};

/// f after g; requires g.target() == f.source().
GroupMap compose(const GroupMap& f, const GroupMap& g);

bool is_identity(const GroupMap& f);

/// f - id on an endomorphism (source == target required).
GroupMap subtract_identity(const GroupMap& f);

/// True iff source and target have equal canonical form and f is surjective
/// (for finitely generated groups this forces bijectivity).
bool is_isomorphism(const GroupMap& f);

/// ker f as an abstract group in canonical form.
FgAbelianGroup kernel_group(const GroupMap& f);

/// coker f = target / im f in canonical form.
FgAbelianGroup cokernel_group(const GroupMap& f);

}  // namespace mvkt
