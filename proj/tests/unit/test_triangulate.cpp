#include "plsurf/triangulate.hpp"

#include "plsurf/decide.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace plsurf;
using testing::r;
using testing::vec;

TEST_CASE("point location")
{
    Segment s{vec({0, 0, 0}), vec({2, 2, 0})};
    CHECK(point_in_segment(vec({1, 1, 0}), s));
    CHECK_FALSE(point_in_segment(vec({3, 3, 0}), s));
    Triangle t{vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0})};
    CHECK(point_in_triangle(vec({1, 1, 0}), t));
    CHECK_FALSE(point_in_triangle(vec({1, 1, 1}), t));
    CHECK_FALSE(point_in_triangle(vec({2, 1, 0}), t));
}

TEST_CASE("simplex intersection of crossing segments")
{
    auto bfs = simplex_intersection({vec({0, 0}), vec({2, 2})}, {vec({0, 2}), vec({2, 0})});
    REQUIRE(bfs.size() == 1);
    CHECK(bfs[0].lambda[0] == r(1, 2));
    CHECK(bfs[0].mu[1] == r(1, 2));
    CHECK(simplex_intersection({vec({0, 0}), vec({1, 0})}, {vec({0, 1}), vec({1, 1})}).empty());
}

TEST_CASE("compatibility detects crossing simplices")
{
    PLSC bad = make_plsc(2, {{vec({0, 0}), vec({2, 2})}, {vec({0, 2}), vec({2, 0})}}, {});
    CHECK_FALSE(is_compatible(bad));
    PLSC good = make_plsc(2, {}, {Triangle{vec({0, 0}), vec({1, 0}), vec({0, 1})},
                                  Triangle{vec({1, 0}), vec({1, 1}), vec({0, 1})}});
    CHECK(is_compatible(good));
    CHECK(good.faces.size() == 2);
    CHECK(good.edges.size() == 5);
}

TEST_CASE("compatibility rejects overlaps, T-junctions and piercings")
{
    auto tri = [](RatVector a, RatVector b, RatVector c) { return Triangle{std::move(a), std::move(b), std::move(c)}; };
    // coplanar overlap
    CHECK_FALSE(is_compatible(make_plsc(3, {}, {tri(vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0})),
                                                tri(vec({1, 1, 0}), vec({3, 1, 0}), vec({1, 3, 0}))})));
    // T-junction: a vertex in the middle of a neighbour's side
    CHECK_FALSE(is_compatible(make_plsc(3, {}, {tri(vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0})),
                                                tri(vec({1, 0, 0}), vec({2, 0, 0}), vec({2, -1, 0}))})));
    // shared vertex, crossing planes
    CHECK_FALSE(is_compatible(make_plsc(3, {}, {tri(vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0})),
                                                tri(vec({0, 0, 0}), vec({1, 1, -1}), vec({1, 1, 1}))})));
    // shared edge, folded: compatible
    CHECK(is_compatible(make_plsc(3, {}, {tri(vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0})),
                                          tri(vec({0, 0, 0}), vec({2, 0, 0}), vec({1, -1, 1}))})));
    // shared edge, coplanar on opposite sides: compatible
    CHECK(is_compatible(make_plsc(3, {}, {tri(vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0})),
                                          tri(vec({0, 0, 0}), vec({2, 0, 0}), vec({1, -1, 0}))})));
    // edge lying across a triangle
    CHECK_FALSE(is_compatible(make_plsc(3, {{vec({-1, 1, 0}), vec({3, 1, 0})}},
                                        {tri(vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0}))})));
}

TEST_CASE("overlapping triangles and an edge are refined compatibly")
{
    std::vector<Triangle> polys{{vec({0, 0, 0}), vec({4, 0, 0}), vec({0, 4, 0})},
                                {vec({1, 1, 0}), vec({5, 1, 0}), vec({1, 5, 0})},
                                {vec({0, 0, -1}), vec({3, 3, 2}), vec({0, 3, 2})}};
    std::vector<Segment> edges{{vec({-1, 2, 0}), vec({6, 2, 0})}, {vec({2, 2, -2}), vec({2, 2, 3})}};
    PLSC c = compatible_triangulation(edges, polys);
    CHECK(check_triangulation(edges, polys, c) == "");
}

TEST_CASE("random instances satisfy the postconditions")
{
    std::mt19937_64 rng(17);
    for (int n = 0; n < 15; ++n) {
        std::vector<Triangle> polys;
        std::vector<Segment> edges;
        while (polys.size() < 3) {
            Triangle t{testing::random_vec(rng, 3, 2), testing::random_vec(rng, 3, 2), testing::random_vec(rng, 3, 2)};
            if (t.nondegenerate())
                polys.push_back(t);
        }
        while (edges.size() < 2) {
            Segment s{testing::random_vec(rng, 3, 2), testing::random_vec(rng, 3, 2)};
            if (s.a != s.b)
                edges.push_back(s);
        }
        PLSC c = compatible_triangulation(edges, polys);
        CHECK(check_triangulation(edges, polys, c) == "");
    }
}

TEST_CASE("shelling a square disk reproduces its boundary")
{
    std::vector<RatVector> pos{vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1}), vec({1, 2} )};
    std::vector<std::array<std::size_t, 3>> faces{{0, 1, 2}, {0, 2, 3}, {3, 2, 4}};
    std::vector<std::size_t> boundary{0, 1, 2, 4, 3};
    auto steps = shell_disk(faces, boundary, {0});
    REQUIRE(steps.size() == 3);
    KiteWord x(2);
    for (const auto& s : steps)
        x.kites.push_back(shell_step_kite(pos, s, PLWord(2)));
    std::vector<std::size_t> cycle = boundary;
    cycle.push_back(0);
    CHECK(boundary_delta(x) == reduce(vertex_path_word(pos, cycle)));
}

TEST_CASE("shelling a closed surface gives a null boundary")
{
    KiteWord tet = gen_example("tetrahedron");
    std::vector<RatVector> pos{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
    auto steps = shell_sphere({{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
    KiteWord x(3);
    for (const auto& s : steps)
        x.kites.push_back(shell_step_kite(pos, s, PLWord(3)));
    CHECK(boundary_delta(x).empty());
    CHECK(surface_signature(x, 2, 3).gamma == surface_signature(tet, 2, 3).gamma);
}

TEST_CASE("compatible representatives keep the chain and the signature")
{
    std::mt19937_64 rng(8);
    for (int n = 0; n < 6; ++n) {
        KiteWord x = random_kite_word(rng, 3, 3);
        CompatibleRepresentative rep = compatible_representative(x);
        CHECK(is_compatible(rep.complex));
        CHECK(kite_chain(rep.word, rep.complex) == chain(rep.mapping));
        SurfaceSignature a = surface_signature(x, 3, 4), b = surface_signature(rep.word, 3, 4);
        CHECK(a.boundary == b.boundary);
        CHECK(a.gamma == b.gamma);
    }
}
