#include "mvkt/gf2.hpp"

#include <vector>

#include "mvkt/error.hpp"

namespace mvkt {

namespace {

// forward elimination into row echelon form; returns pivot columns
std::vector<Index> eliminate(BitMatrix& m) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index piv = -1;
        for (Index i = row; i < m.rows(); ++i)
            if (m(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.row(row).swap(m.row(piv));
        for (Index i = 0; i < m.rows(); ++i)
            if (i != row && m(i, col))
                for (Index j = col; j < m.cols(); ++j) m(i, j) ^= m(row, j);
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Index gf2_rank(BitMatrix m) {
    return static_cast<Index>(eliminate(m).size());
}

std::optional<BitVector> gf2_solve(BitMatrix a, const BitVector& b) {
    if (a.rows() != b.size()) fail(ErrorCode::ShapeMismatch, "gf2_solve row mismatch");
    const Index cols = a.cols();
    BitMatrix aug(a.rows(), cols + 1);
    aug.leftCols(cols) = a;
    aug.col(cols) = b;
    std::vector<Index> pivots = eliminate(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    BitVector x = BitVector::Zero(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x(pivots[r]) = aug(static_cast<Index>(r), cols);
    return x;
}

BitVector gf2_matvec(const BitMatrix& a, const BitVector& x) {
    if (a.cols() != x.size()) fail(ErrorCode::ShapeMismatch, "gf2_matvec size mismatch");
    BitVector y = BitVector::Zero(a.rows());
    for (Index i = 0; i < a.rows(); ++i) {
        Bit acc = 0;
        for (Index j = 0; j < a.cols(); ++j) acc ^= static_cast<Bit>(a(i, j) & x(j));
        y(i) = acc;
    }
    return y;
}

}  // namespace mvkt
