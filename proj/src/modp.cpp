#include "mvkt/modp.hpp"

#include <vector>

#include "mvkt/error.hpp"

namespace mvkt {

Index rank_mod_p(const IntMatrix& m, long p) {
    if (p < 2) fail(ErrorCode::ShapeMismatch, "rank_mod_p needs a prime modulus");
    const Index rows = m.rows(), cols = m.cols();
    std::vector<std::vector<long>> a(static_cast<std::size_t>(rows),
                                     std::vector<long>(static_cast<std::size_t>(cols)));
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                mod_floor(m(i, j), Int(p)).get_si();

    Index rank = 0;
    for (Index col = 0; col < cols && rank < rows; ++col) {
        Index piv = -1;
        for (Index i = rank; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(piv)]);
        const long pivot = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (Index i = rank + 1; i < rows; ++i) {
            const long lead = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (lead == 0) continue;
            // eliminate without inverses: pivot * row_i - lead * row_rank
            for (Index j = col; j < cols; ++j) {
                auto& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                v = ((pivot * v -
                      lead * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) %
                         p +
                     p) %
                    p;
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<Index> homology_dims_mod_p(const SimplicialComplex& complex, long p) {
    std::vector<Index> dims;
    for (int deg = 0; deg <= complex.dimension(); ++deg) {
        const Index below = (deg >= 1) ? rank_mod_p(boundary_matrix(complex, deg), p) : 0;
        const Index above = rank_mod_p(boundary_matrix(complex, deg + 1), p);
        dims.push_back(complex.simplex_count(deg) - below - above);
    }
    return dims;
}

}  // namespace mvkt
