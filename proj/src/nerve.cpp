#include "mvkt/nerve.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace mvkt {

namespace {

std::string simplex_text(const std::vector<int>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal_simplices(
    Index vertex_count, std::vector<std::vector<int>> maximal) {
    if (vertex_count < 0) fail(ErrorCode::InvalidComplex, "negative vertex count");

    std::vector<std::set<std::vector<int>>> byd;
    auto place = [&](const std::vector<int>& s) {
        const std::size_t d = s.size() - 1;
        if (byd.size() <= d) byd.resize(d + 1);
        byd[d].insert(s);
    };

    for (Index v = 0; v < vertex_count; ++v) place({static_cast<int>(v)});

    for (auto& simplex : maximal) {
        if (simplex.empty()) fail(ErrorCode::InvalidComplex, "empty simplex");
        std::sort(simplex.begin(), simplex.end());
        for (std::size_t i = 0; i < simplex.size(); ++i) {
            if (simplex[i] < 0 || simplex[i] >= vertex_count)
                fail(ErrorCode::InvalidComplex,
                     "vertex " + std::to_string(simplex[i]) + " outside 0.." +
                         std::to_string(vertex_count - 1));
            if (i > 0 && simplex[i] == simplex[i - 1])
                fail(ErrorCode::InvalidComplex,
                     "repeated vertex in simplex " + simplex_text(simplex));
        }
        // downward closure over nonempty vertex subsets
        const std::size_t n = simplex.size();
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1ul << i)) face.push_back(simplex[i]);
            place(face);
        }
    }

    SimplicialComplex out;
    out.vertex_count_ = vertex_count;
    for (auto& level : byd)
        out.simplices_.emplace_back(level.begin(), level.end());
    while (!out.simplices_.empty() && out.simplices_.back().empty())
        out.simplices_.pop_back();
    return out;
}

Index SimplicialComplex::simplex_count(int p) const {
    if (p < 0 || p > dimension()) return 0;
    return static_cast<Index>(simplices_[static_cast<std::size_t>(p)].size());
}

const std::vector<std::vector<int>>& SimplicialComplex::simplices(int p) const {
    if (p < 0 || p > dimension())
        fail(ErrorCode::DegreeOutOfRange, "no simplices in dimension " + std::to_string(p));
    return simplices_[static_cast<std::size_t>(p)];
}

std::optional<Index> SimplicialComplex::simplex_index(const std::vector<int>& simplex) const {
    const int p = static_cast<int>(simplex.size()) - 1;
    if (p < 0 || p > dimension()) return std::nullopt;
    const auto& level = simplices_[static_cast<std::size_t>(p)];
    auto it = std::lower_bound(level.begin(), level.end(), simplex);
    if (it == level.end() || *it != simplex) return std::nullopt;
    return static_cast<Index>(it - level.begin());
}

SimplicialComplex nerve_of_cover(const CoverDescription& cover) {
    if (cover.ground_set_size < 0)
        fail(ErrorCode::CoverConditionViolated, "negative ground set size");

    std::vector<std::set<int>> sets;
    std::set<int> covered;
    for (std::size_t k = 0; k < cover.sets.size(); ++k) {
        const auto& raw = cover.sets[k];
        if (raw.empty())
            fail(ErrorCode::CoverConditionViolated, "cover set " + std::to_string(k) +
                                                        " is empty");
        std::set<int> s;
        for (int e : raw) {
            if (e < 0 || e >= cover.ground_set_size)
                fail(ErrorCode::CoverConditionViolated,
                     "cover set " + std::to_string(k) + " contains " + std::to_string(e) +
                         " outside the ground set");
            if (!s.insert(e).second)
                fail(ErrorCode::CoverConditionViolated,
                     "cover set " + std::to_string(k) + " repeats element " +
                         std::to_string(e));
        }
        covered.insert(s.begin(), s.end());
        sets.push_back(std::move(s));
    }
    if (static_cast<Index>(covered.size()) != cover.ground_set_size)
        fail(ErrorCode::CoverConditionViolated, "sets do not cover the ground set");

    const int n = static_cast<int>(sets.size());
    std::vector<std::vector<int>> simplices;

    // grow intersecting families; every extension keeps a nonempty intersection
    std::vector<int> current;
    auto grow = [&](auto&& self, int start, const std::set<int>& inter) -> void {
        for (int i = start; i < n; ++i) {
            std::set<int> next;
            std::set_intersection(inter.begin(), inter.end(), sets[static_cast<std::size_t>(i)].begin(),
                                  sets[static_cast<std::size_t>(i)].end(),
                                  std::inserter(next, next.begin()));
            if (next.empty()) continue;
            current.push_back(i);
            simplices.push_back(current);
            self(self, i + 1, next);
            current.pop_back();
        }
    };
    for (int i = 0; i < n; ++i) {
        current.assign(1, i);
        grow(grow, i + 1, sets[static_cast<std::size_t>(i)]);
    }

    return SimplicialComplex::from_maximal_simplices(n, std::move(simplices));
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, int p) {
    if (p < 1) fail(ErrorCode::DegreeOutOfRange, "boundary degree must be >= 1");
    IntMatrix d = IntMatrix::Zero(complex.simplex_count(p - 1), complex.simplex_count(p));
    if (p > complex.dimension()) return d;
    const auto& cols = complex.simplices(p);
    for (Index j = 0; j < static_cast<Index>(cols.size()); ++j) {
        const auto& simplex = cols[static_cast<std::size_t>(j)];
        Int sign = 1;
        for (std::size_t i = 0; i < simplex.size(); ++i) {
            std::vector<int> face = simplex;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            auto row = complex.simplex_index(face);
            if (!row) fail(ErrorCode::InvalidComplex, "missing face " + simplex_text(face));
            d(*row, j) = sign;
            sign = -sign;
        }
    }
    return d;
}

BitMatrix coboundary_matrix_mod2(const SimplicialComplex& complex, int p) {
    if (p < 0) fail(ErrorCode::DegreeOutOfRange, "coboundary degree must be >= 0");
    IntMatrix d = boundary_matrix(complex, p + 1);
    BitMatrix delta(d.cols(), d.rows());
    for (Index i = 0; i < d.rows(); ++i)
        for (Index j = 0; j < d.cols(); ++j)
            delta(j, i) = static_cast<Bit>(mod_floor(d(i, j), 2).get_ui());
    return delta;
}

IntegerChainComplex chain_complex(const SimplicialComplex& complex) {
    std::vector<Index> ranks;
    std::vector<IntMatrix> boundaries;
    for (int p = 0; p <= complex.dimension(); ++p) {
        ranks.push_back(complex.simplex_count(p));
        if (p >= 1) boundaries.push_back(boundary_matrix(complex, p));
    }
    return IntegerChainComplex(std::move(ranks), std::move(boundaries));
}

bool is_connected(const SimplicialComplex& complex) {
    const Index n = complex.simplex_count(0);
    if (n <= 1) return true;
    std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n));
    if (complex.dimension() >= 1) {
        for (const auto& e : complex.simplices(1)) {
            adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
            adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Index> stack{0};
    seen[0] = true;
    Index reached = 1;
    while (!stack.empty()) {
        Index v = stack.back();
        stack.pop_back();
        for (Index w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

bool is_closed_surface(const SimplicialComplex& complex) {
    if (complex.dimension() != 2) return false;

    // pure: every vertex under some edge, every edge under exactly 2 triangles
    std::vector<bool> vertex_used(static_cast<std::size_t>(complex.simplex_count(0)), false);
    for (const auto& e : complex.simplices(1)) {
        vertex_used[static_cast<std::size_t>(e[0])] = true;
        vertex_used[static_cast<std::size_t>(e[1])] = true;
    }
    for (bool used : vertex_used)
        if (!used) return false;

    std::vector<int> edge_degree(static_cast<std::size_t>(complex.simplex_count(1)), 0);
    for (const auto& t : complex.simplices(2)) {
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<int> edge = t;
            edge.erase(edge.begin() + static_cast<std::ptrdiff_t>(i));
            ++edge_degree[static_cast<std::size_t>(*complex.simplex_index(edge))];
        }
    }
    for (int deg : edge_degree)
        if (deg != 2) return false;

    return is_connected(complex);
}

std::optional<IntVector> fundamental_cycle(const SimplicialComplex& complex) {
    if (complex.dimension() < 2) return std::nullopt;
    SmithDecomposition s = smith_normal_form(boundary_matrix(complex, 2));
    const Index n2 = complex.simplex_count(2);
    if (n2 - s.rank != 1) return std::nullopt;
    IntVector z = s.v.col(s.rank);
    for (Index i = 0; i < z.size(); ++i)
        if (abs(z(i)) != 1) return std::nullopt;
    if (z(0) < 0) z = -z;
    return z;
}

long long euler_characteristic(const SimplicialComplex& complex) {
    long long chi = 0;
    long long sign = 1;
    for (int p = 0; p <= complex.dimension(); ++p) {
        chi += sign * static_cast<long long>(complex.simplex_count(p));
        sign = -sign;
    }
    return chi;
}

}  // namespace mvkt
