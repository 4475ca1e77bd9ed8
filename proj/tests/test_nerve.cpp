#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mvkt/nerve.hpp"
#include "oracle.hpp"

using namespace mvkt;

namespace {

SimplicialComplex octahedron() {
    return SimplicialComplex::from_maximal_simplices(
        6, {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
            {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

SimplicialComplex tetrahedron_boundary() {
    return SimplicialComplex::from_maximal_simplices(4, {{0, 1, 2}, {0, 1, 3},
                                                         {0, 2, 3}, {1, 2, 3}});
}

// minimal 6-vertex triangulation of the projective plane
SimplicialComplex projective_plane() {
    return SimplicialComplex::from_maximal_simplices(
        6, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
            {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("closure from maximal simplices") {
    auto oct = octahedron();
    CHECK(oct.dimension() == 2);
    CHECK(oct.simplex_count(0) == 6);
    CHECK(oct.simplex_count(1) == 12);
    CHECK(oct.simplex_count(2) == 8);
    CHECK(euler_characteristic(oct) == 2);
    // the three diagonals are not edges
    CHECK_FALSE(oct.simplex_index({0, 1}).has_value());
    CHECK_FALSE(oct.simplex_index({2, 3}).has_value());
    CHECK_FALSE(oct.simplex_index({4, 5}).has_value());
    CHECK(oct.simplex_index({0, 2}).has_value());
    CHECK(oct.simplex_index({0, 2, 4}) == Index(0));  // lex-first triangle
}

TEST_CASE("maximal simplex validation") {
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices(3, {{0, 0, 1}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices(3, {{-1, 0}}), Error);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices(2, {{}}), Error);
    // unsorted input is normalized
    auto c = SimplicialComplex::from_maximal_simplices(3, {{2, 0, 1}});
    CHECK(c.simplex_index({0, 1, 2}).has_value());
}

TEST_CASE("isolated vertices are part of the complex") {
    auto c = SimplicialComplex::from_maximal_simplices(4, {{0, 1}});
    CHECK(c.simplex_count(0) == 4);
    CHECK(c.dimension() == 1);
    CHECK_FALSE(is_connected(c));
}

TEST_CASE("boundary matrix signs") {
    auto tri = SimplicialComplex::from_maximal_simplices(3, {{0, 1, 2}});
    SUBCASE("hollow part matches the reference d1") {
        IntMatrix d1 = boundary_matrix(tri, 1);
        IntMatrix expect(3, 3);
        expect << -1, -1, 0, 1, 0, -1, 0, 1, 1;
        CHECK(matrices_equal(d1, expect));
    }
    SUBCASE("d2 alternates signs over faces") {
        IntMatrix d2 = boundary_matrix(tri, 2);
        IntMatrix expect(3, 1);
        expect << 1, -1, 1;  // faces (1,2), (0,2), (0,1) rows (0,1),(0,2),(1,2)
        CHECK(matrices_equal(d2, expect));
    }
    SUBCASE("degree above dimension gives a zero-column matrix") {
        IntMatrix d3 = boundary_matrix(tri, 3);
        CHECK(d3.rows() == 1);
        CHECK(d3.cols() == 0);
    }
    SUBCASE("degree 0 is rejected") {
        CHECK_THROWS_AS(boundary_matrix(tri, 0), Error);
    }
}

TEST_CASE("chain complex and homology of reference spaces") {
    SUBCASE("octahedron sphere") {
        auto cc = chain_complex(octahedron());
        CHECK(homology_at(cc, 0) == FgAbelianGroup(1, {}));
        CHECK(homology_at(cc, 1) == FgAbelianGroup{});
        CHECK(homology_at(cc, 2) == FgAbelianGroup(1, {}));
    }
    SUBCASE("tetrahedron boundary sphere") {
        auto cc = chain_complex(tetrahedron_boundary());
        CHECK(homology_at(cc, 0) == FgAbelianGroup(1, {}));
        CHECK(homology_at(cc, 1) == FgAbelianGroup{});
        CHECK(homology_at(cc, 2) == FgAbelianGroup(1, {}));
    }
    SUBCASE("projective plane has 2-torsion") {
        auto rp2 = projective_plane();
        CHECK(rp2.simplex_count(0) == 6);
        CHECK(rp2.simplex_count(1) == 15);
        CHECK(rp2.simplex_count(2) == 10);
        CHECK(euler_characteristic(rp2) == 1);
        auto cc = chain_complex(rp2);
        CHECK(homology_at(cc, 0) == FgAbelianGroup(1, {}));
        CHECK(homology_at(cc, 1) == FgAbelianGroup(0, {Int(2)}));
        CHECK(homology_at(cc, 2) == FgAbelianGroup{});
    }
    SUBCASE("solid triangle is contractible") {
        auto cc = chain_complex(SimplicialComplex::from_maximal_simplices(3, {{0, 1, 2}}));
        CHECK(homology_at(cc, 0) == FgAbelianGroup(1, {}));
        CHECK(homology_at(cc, 1) == FgAbelianGroup{});
        CHECK(homology_at(cc, 2) == FgAbelianGroup{});
    }
    SUBCASE("two hollow triangles: additivity of H0 and H1") {
        auto c = SimplicialComplex::from_maximal_simplices(
            6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
        auto cc = chain_complex(c);
        CHECK(homology_at(cc, 0) == FgAbelianGroup(2, {}));
        CHECK(homology_at(cc, 1) == FgAbelianGroup(2, {}));
        CHECK_FALSE(is_connected(c));
    }
}

TEST_CASE("homology ranks agree with the mod-p oracle on torsion-free spaces") {
    // all reference spaces here have torsion-free homology, so dim_Fp equals
    // the Betti number in every degree for every prime
    std::vector<SimplicialComplex> spaces = {
        octahedron(), tetrahedron_boundary(),
        SimplicialComplex::from_maximal_simplices(3, {{0, 1}, {0, 2}, {1, 2}}),
        SimplicialComplex::from_maximal_simplices(5, {{0, 1, 2, 3, 4}})};
    for (const auto& c : spaces) {
        auto cc = chain_complex(c);
        for (long p : {2L, 3L, 5L}) {
            for (int deg = 0; deg <= c.dimension(); ++deg) {
                Index rank_below =
                    (deg >= 1) ? oracle::modp_rank(boundary_matrix(c, deg), p) : 0;
                Index rank_above = oracle::modp_rank(boundary_matrix(c, deg + 1), p);
                Index dim_fp = c.simplex_count(deg) - rank_below - rank_above;
                auto h = homology_at(cc, deg);
                CHECK(h.invariant_factors().empty());
                CHECK(h.free_rank() == dim_fp);
            }
        }
    }
}

TEST_CASE("nerves of the catalog covers") {
    SUBCASE("two intervals give a segment") {
        auto n = nerve_of_cover({3, {{0, 1}, {1, 2}}});
        CHECK(n.dimension() == 1);
        CHECK(n.simplex_count(0) == 2);
        CHECK(n.simplex_count(1) == 1);
        CHECK(is_connected(n));
    }
    SUBCASE("three intervals give a path") {
        auto n = nerve_of_cover({5, {{0, 1}, {1, 2, 3}, {3, 4}}});
        CHECK(n.dimension() == 1);
        CHECK(n.simplex_count(0) == 3);
        CHECK(n.simplex_count(1) == 2);
        CHECK_FALSE(n.simplex_index({0, 2}).has_value());  // ends do not meet
    }
    SUBCASE("three arcs give a hollow triangle") {
        auto n = nerve_of_cover({6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}});
        CHECK(n.dimension() == 1);
        CHECK(n.simplex_count(0) == 3);
        CHECK(n.simplex_count(1) == 3);
        auto cc = chain_complex(n);
        CHECK(homology_at(cc, 1) == FgAbelianGroup(1, {}));  // circle
    }
    SUBCASE("triple overlap produces a 2-simplex") {
        auto n = nerve_of_cover({1, {{0}, {0}, {0}}});
        CHECK(n.dimension() == 2);
        CHECK(n.simplex_count(2) == 1);
    }
}

TEST_CASE("cover validation") {
    CHECK_THROWS_AS(nerve_of_cover({2, {{0, 1}, {}}}), Error);
    CHECK_THROWS_AS(nerve_of_cover({2, {{0, 2}}}), Error);
    CHECK_THROWS_AS(nerve_of_cover({2, {{0, 0, 1}}}), Error);
    CHECK_THROWS_AS(nerve_of_cover({3, {{0, 1}}}), Error);  // 2 is uncovered
    try {
        nerve_of_cover({2, {{0, 1}, {}}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CoverConditionViolated);
    }
}

TEST_CASE("closed surface detection") {
    CHECK(is_closed_surface(octahedron()));
    CHECK(is_closed_surface(tetrahedron_boundary()));
    CHECK(is_closed_surface(projective_plane()));
    // a disc has boundary edges of degree 1
    CHECK_FALSE(is_closed_surface(SimplicialComplex::from_maximal_simplices(3, {{0, 1, 2}})));
    // not pure: dangling edge
    CHECK_FALSE(is_closed_surface(SimplicialComplex::from_maximal_simplices(
        5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 4}})));
    // wrong dimension
    CHECK_FALSE(is_closed_surface(nerve_of_cover({3, {{0, 1}, {1, 2}}})));
    // disconnected union of two tetrahedron boundaries
    CHECK_FALSE(is_closed_surface(SimplicialComplex::from_maximal_simplices(
        8, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
            {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}})));
}

TEST_CASE("fundamental cycle") {
    SUBCASE("octahedron carries one, normalized to lead with +1") {
        auto z = fundamental_cycle(octahedron());
        REQUIRE(z.has_value());
        CHECK(z->size() == 8);
        CHECK((*z)(0) == 1);
        for (Index i = 0; i < z->size(); ++i) CHECK(abs((*z)(i)) == 1);
        CHECK(is_zero_matrix(boundary_matrix(octahedron(), 2) * *z));
    }
    SUBCASE("projective plane carries none") {
        CHECK_FALSE(fundamental_cycle(projective_plane()).has_value());
    }
    SUBCASE("low dimension carries none") {
        CHECK_FALSE(fundamental_cycle(nerve_of_cover({3, {{0, 1}, {1, 2}}})).has_value());
    }
    SUBCASE("disc carries none") {
        auto disc = SimplicialComplex::from_maximal_simplices(3, {{0, 1, 2}});
        CHECK_FALSE(fundamental_cycle(disc).has_value());
    }
}

TEST_CASE("mod-2 coboundary shapes and values") {
    auto oct = octahedron();
    SUBCASE("top degree has no rows") {
        BitMatrix d2 = coboundary_matrix_mod2(oct, 2);
        CHECK(d2.rows() == 0);
        CHECK(d2.cols() == 8);
    }
    SUBCASE("degree 1 transposes the triangle boundary") {
        BitMatrix d1 = coboundary_matrix_mod2(oct, 1);
        CHECK(d1.rows() == 8);
        CHECK(d1.cols() == 12);
        // each triangle has exactly its three edges
        for (Index i = 0; i < 8; ++i) {
            int ones = 0;
            for (Index j = 0; j < 12; ++j) ones += d1(i, j);
            CHECK(ones == 3);
        }
    }
    SUBCASE("solid tetrahedron degree 2 is the all-ones row against its faces") {
        auto solid = SimplicialComplex::from_maximal_simplices(4, {{0, 1, 2, 3}});
        BitMatrix d2 = coboundary_matrix_mod2(solid, 2);
        REQUIRE(d2.rows() == 1);
        REQUIRE(d2.cols() == 4);
        for (Index j = 0; j < 4; ++j) CHECK(d2(0, j) == 1);
    }
}
