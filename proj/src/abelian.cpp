#include "mvkt/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mvkt {

namespace {

bool divides(const Int& d, const Int& a) {
    // d | a with the convention 0 | a iff a == 0
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

FgAbelianGroup::FgAbelianGroup(Index free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
    if (free_rank_ < 0) fail(ErrorCode::ShapeMismatch, "negative free rank");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            fail(ErrorCode::ShapeMismatch, "invariant factor " + factors_[i].get_str() +
                                               " is not >= 2");
        if (i > 0 && !divides(factors_[i - 1], factors_[i]))
            fail(ErrorCode::ShapeMismatch, "invariant factors do not form a divisibility chain");
    }
}

FgAbelianGroup FgAbelianGroup::from_summands(Index free_rank, const std::vector<Int>& orders) {
    for (const Int& o : orders)
        if (o < 0) fail(ErrorCode::ShapeMismatch, "negative cyclic order " + o.get_str());
    const Index k = static_cast<Index>(orders.size());
    IntMatrix rel = IntMatrix::Zero(k, k);
    for (Index i = 0; i < k; ++i) rel(i, i) = orders[static_cast<std::size_t>(i)];
    FgAbelianGroup folded = cokernel(rel);
    return FgAbelianGroup(free_rank + folded.free_rank(), folded.invariant_factors());
}

Int FgAbelianGroup::generator_order(Index i) const {
    if (i < 0 || i >= generator_count())
        fail(ErrorCode::ShapeMismatch, "generator index out of range");
    if (i < free_rank_) return 0;
    return factors_[static_cast<std::size_t>(i - free_rank_)];
}

Int FgAbelianGroup::torsion_order() const {
    Int p = 1;
    for (const Int& d : factors_) p *= d;
    return p;
}

IntMatrix FgAbelianGroup::relation_matrix() const {
    IntMatrix rel = IntMatrix::Zero(generator_count(), torsion_count());
    for (Index j = 0; j < torsion_count(); ++j)
        rel(free_rank_ + j, j) = factors_[static_cast<std::size_t>(j)];
    return rel;
}

std::string to_string(const FgAbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (g.free_rank() == 1) {
        sep();
        os << "Z";
    } else if (g.free_rank() > 1) {
        sep();
        os << "Z^" << g.free_rank();
    }
    for (const Int& d : g.invariant_factors()) {
        sep();
        os << "Z/" << d.get_str();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& g) {
    return os << to_string(g);
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FgAbelianGroup::from_summands(a.free_rank() + b.free_rank(), orders);
}

FgAbelianGroup direct_sum_power(const FgAbelianGroup& g, Index n) {
    if (n < 0) fail(ErrorCode::ShapeMismatch, "negative direct sum power");
    // n copies of each factor, interleaved in factor order, stays canonical
    std::vector<Int> factors;
    factors.reserve(static_cast<std::size_t>(n) * g.invariant_factors().size());
    for (const Int& d : g.invariant_factors())
        for (Index i = 0; i < n; ++i) factors.push_back(d);
    return FgAbelianGroup(g.free_rank() * n, std::move(factors));
}

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> orders;
    for (const Int& da : a.invariant_factors())
        for (Index i = 0; i < b.free_rank(); ++i) orders.push_back(da);
    for (const Int& db : b.invariant_factors())
        for (Index i = 0; i < a.free_rank(); ++i) orders.push_back(db);
    for (const Int& da : a.invariant_factors())
        for (const Int& db : b.invariant_factors()) orders.push_back(gcd(da, db));
    return FgAbelianGroup::from_summands(a.free_rank() * b.free_rank(), orders);
}

FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> orders;
    for (const Int& da : a.invariant_factors())
        for (const Int& db : b.invariant_factors()) orders.push_back(gcd(da, db));
    return FgAbelianGroup::from_summands(0, orders);
}

std::pair<Index, Int> group_order_and_rank(const FgAbelianGroup& g) {
    return {g.free_rank(), g.torsion_order()};
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> out;
    const Index n = std::min(d.rows(), d.cols());
    out.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
}

SmithDecomposition smith_normal_form(IntMatrix m) {
    const Index rows = m.rows();
    const Index cols = m.cols();

    SmithDecomposition s;
    s.d = std::move(m);
    s.u = IntMatrix::Identity(rows, rows);
    s.u_inv = IntMatrix::Identity(rows, rows);
    s.v = IntMatrix::Identity(cols, cols);
    s.v_inv = IntMatrix::Identity(cols, cols);
    IntMatrix& d = s.d;

    // Every elementary operation is mirrored on the provenance factors so that
    // u * input * v == d and u_inv, v_inv stay exact inverses.
    auto row_swap = [&](Index i, Index j) {
        if (i == j) return;
        d.row(i).swap(d.row(j));
        s.u.row(i).swap(s.u.row(j));
        s.u_inv.col(i).swap(s.u_inv.col(j));
    };
    auto col_swap = [&](Index i, Index j) {
        if (i == j) return;
        d.col(i).swap(d.col(j));
        s.v.col(i).swap(s.v.col(j));
        s.v_inv.row(i).swap(s.v_inv.row(j));
    };
    auto row_axpy = [&](Index i, Index j, const Int& q) {  // row i -= q * row j
        if (q == 0) return;
        d.row(i) -= q * d.row(j);
        s.u.row(i) -= q * s.u.row(j);
        s.u_inv.col(j) += q * s.u_inv.col(i);
    };
    auto col_axpy = [&](Index j, Index k, const Int& q) {  // col j -= q * col k
        if (q == 0) return;
        d.col(j) -= q * d.col(k);
        s.v.col(j) -= q * s.v.col(k);
        s.v_inv.row(k) += q * s.v_inv.row(j);
    };
    auto row_negate = [&](Index i) {
        d.row(i) = -d.row(i);
        s.u.row(i) = -s.u.row(i);
        s.u_inv.col(i) = -s.u_inv.col(i);
    };

    const Index n = std::min(rows, cols);
    for (Index t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero magnitude in the trailing submatrix as pivot
            Index pi = -1, pj = -1;
            Int best;
            for (Index j = t; j < cols; ++j) {
                for (Index i = t; i < rows; ++i) {
                    if (d(i, j) == 0) continue;
                    Int a = abs(d(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) break;  // trailing submatrix is zero; remaining diagonal stays 0
            row_swap(t, pi);
            col_swap(t, pj);

            bool cleared = true;
            for (Index i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                row_axpy(i, t, d(i, t) / d(t, t));
                if (d(i, t) != 0) cleared = false;  // remainder smaller than pivot
            }
            for (Index j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                col_axpy(j, t, d(t, j) / d(t, t));
                if (d(t, j) != 0) cleared = false;
            }
            if (!cleared) continue;

            // divisibility chain: pivot must divide the rest of the submatrix
            Index oi = -1, oj = -1;
            for (Index j = t + 1; j < cols && oi < 0; ++j)
                for (Index i = t + 1; i < rows; ++i)
                    if (!divides(d(t, t), d(i, j))) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi < 0) break;  // pivot final
            row_axpy(t, oi, Int(-1));  // pull the offending row up, keep reducing
        }
        if (d(t, t) < 0) row_negate(t);
    }

    for (Index t = 0; t < n; ++t)
        if (d(t, t) != 0) ++s.rank;
    return s;
}

FgAbelianGroup cokernel(const IntMatrix& relations) {
    SmithDecomposition s = smith_normal_form(relations);
    std::vector<Int> factors;
    for (const Int& di : s.diagonal())
        if (di >= 2) factors.push_back(di);
    return FgAbelianGroup(relations.rows() - s.rank, std::move(factors));
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    return s.v.rightCols(m.cols() - s.rank);
}

IntMatrix lattice_basis(const IntMatrix& generators) {
    SmithDecomposition s = smith_normal_form(generators);
    IntMatrix basis(generators.rows(), s.rank);
    for (Index j = 0; j < s.rank; ++j) basis.col(j) = s.d(j, j) * s.u_inv.col(j);
    return basis;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) fail(ErrorCode::ShapeMismatch, "solve_integer row mismatch");
    SmithDecomposition s = smith_normal_form(a);
    IntMatrix ub = s.u * b;
    IntMatrix y = IntMatrix::Zero(a.cols(), b.cols());
    const Index n = std::min(a.rows(), a.cols());
    for (Index c = 0; c < b.cols(); ++c) {
        for (Index i = 0; i < a.rows(); ++i) {
            const Int di = (i < n) ? s.d(i, i) : Int(0);
            if (di != 0) {
                if (!divides(di, ub(i, c))) return std::nullopt;
                y(i, c) = ub(i, c) / di;
            } else if (ub(i, c) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.v * y;
}

IntegerChainComplex::IntegerChainComplex(std::vector<Index> ranks,
                                         std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    for (Index r : ranks_)
        if (r < 0) fail(ErrorCode::InvalidChainComplex, "negative chain rank");
    if (ranks_.empty()) {
        if (!boundaries_.empty())
            fail(ErrorCode::InvalidChainComplex, "boundaries given for an empty complex");
        return;
    }
    if (boundaries_.size() + 1 != ranks_.size())
        fail(ErrorCode::InvalidChainComplex,
             "expected one boundary map per degree 1..top");
    for (int p = 1; p <= top_degree(); ++p) {
        const IntMatrix& dp = boundaries_[static_cast<std::size_t>(p - 1)];
        if (dp.rows() != rank(p - 1) || dp.cols() != rank(p))
            fail(ErrorCode::InvalidChainComplex,
                 "boundary " + std::to_string(p) + " has the wrong shape");
    }
    for (int p = 2; p <= top_degree(); ++p) {
        IntMatrix dd = boundary(p - 1) * boundary(p);
        if (!is_zero_matrix(dd))
            fail(ErrorCode::InvalidChainComplex,
                 "d d != 0 between degrees " + std::to_string(p) + " and " +
                     std::to_string(p - 2));
    }
}

Index IntegerChainComplex::rank(int p) const {
    if (p < 0 || p > top_degree()) return 0;
    return ranks_[static_cast<std::size_t>(p)];
}

const IntMatrix& IntegerChainComplex::boundary(int p) const {
    if (p < 1 || p > top_degree())
        fail(ErrorCode::DegreeOutOfRange, "no boundary map in degree " + std::to_string(p));
    return boundaries_[static_cast<std::size_t>(p - 1)];
}

FgAbelianGroup homology_at(const IntegerChainComplex& cc, int p) {
    if (p < 0 || p > cc.top_degree())
        fail(ErrorCode::DegreeOutOfRange, "homology degree " + std::to_string(p) +
                                              " outside 0.." + std::to_string(cc.top_degree()));
    const Index np = cc.rank(p);
    IntMatrix dp = (p >= 1) ? cc.boundary(p) : IntMatrix::Zero(0, np);
    SmithDecomposition s = smith_normal_form(std::move(dp));

    // cycle coordinates are the kernel columns of v; express the image of
    // d_{p+1} in those coordinates and divide
    IntMatrix dnext = (p + 1 <= cc.top_degree()) ? cc.boundary(p + 1) : IntMatrix::Zero(np, 0);
    IntMatrix w = s.v_inv * dnext;
    return cokernel(w.bottomRows(np - s.rank));
}

GroupMap::GroupMap(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generator_count() ||
        matrix_.cols() != source_.generator_count())
        fail(ErrorCode::ShapeMismatch,
             "map matrix is " + std::to_string(matrix_.rows()) + "x" +
                 std::to_string(matrix_.cols()) + " but generators need " +
                 std::to_string(target_.generator_count()) + "x" +
                 std::to_string(source_.generator_count()));

    // well-definedness: order(source gen) * image must vanish in the target
    for (Index j = source_.free_rank(); j < source_.generator_count(); ++j) {
        const Int oj = source_.generator_order(j);
        for (Index i = 0; i < target_.generator_count(); ++i) {
            const Int ti = target_.generator_order(i);
            const Int x = oj * matrix_(i, j);
            const bool ok = (ti == 0) ? (x == 0) : divides(ti, x);
            if (!ok)
                fail(ErrorCode::NotWellDefined,
                     "entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") does not respect the source relation of order " + oj.get_str());
        }
    }

    // canonical representative: torsion target rows reduced into [0, order)
    for (Index i = target_.free_rank(); i < target_.generator_count(); ++i) {
        const Int ti = target_.generator_order(i);
        for (Index j = 0; j < matrix_.cols(); ++j)
            matrix_(i, j) = mod_floor(matrix_(i, j), ti);
    }
}

GroupMap GroupMap::identity(const FgAbelianGroup& g) {
    return GroupMap(g, g, IntMatrix::Identity(g.generator_count(), g.generator_count()));
}

GroupMap GroupMap::zero(const FgAbelianGroup& source, const FgAbelianGroup& target) {
    return GroupMap(source, target,
                    IntMatrix::Zero(target.generator_count(), source.generator_count()));
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
    if (!(g.target() == f.source()))
        fail(ErrorCode::ShapeMismatch, "compose: inner groups differ");
    return GroupMap(g.source(), f.target(), f.matrix() * g.matrix());
}

bool is_identity(const GroupMap& f) {
    if (!(f.source() == f.target())) return false;
    return f == GroupMap::identity(f.source());
}

GroupMap subtract_identity(const GroupMap& f) {
    if (!(f.source() == f.target()))
        fail(ErrorCode::ShapeMismatch, "subtract_identity needs an endomorphism");
    IntMatrix m = f.matrix();
    for (Index i = 0; i < m.rows(); ++i) m(i, i) -= 1;
    return GroupMap(f.source(), f.target(), std::move(m));
}

bool is_isomorphism(const GroupMap& f) {
    if (!(f.source() == f.target())) return false;
    // surjective endomorphism of a finitely generated group is bijective
    return cokernel(hcat(f.matrix(), f.target().relation_matrix())).is_trivial();
}

FgAbelianGroup kernel_group(const GroupMap& f) {
    const IntMatrix& a = f.matrix();
    const IntMatrix rh = f.target().relation_matrix();
    const IntMatrix rg = f.source().relation_matrix();

    // x lies in the kernel iff a x is a target relation combination
    IntMatrix pre = kernel_basis(hcat(a, rh)).topRows(a.cols());
    IntMatrix basis = lattice_basis(pre);
    if (basis.cols() == 0) return FgAbelianGroup{};

    // source relations live inside the preimage lattice by well-definedness
    std::optional<IntMatrix> y = solve_integer(basis, rg);
    if (!y)
        fail(ErrorCode::ShapeMismatch, "internal: source relations escaped the kernel lattice");
    return cokernel(*y);
}

FgAbelianGroup cokernel_group(const GroupMap& f) {
    return cokernel(hcat(f.matrix(), f.target().relation_matrix()));
}

}  // namespace mvkt
