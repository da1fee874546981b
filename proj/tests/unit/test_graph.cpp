#include "latwalk/error.hpp"
#include "latwalk/graph.hpp"
#include "latwalk/isomorphism.hpp"
#include "latwalk/lattice.hpp"
#include "latwalk/lattice_catalog.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace latwalk;

namespace {

std::vector<Vertex> sorted_neighbors(const ImplicitGraph& g, const Vertex& v)
{
    auto n = g.neighbors(v);
    std::sort(n.begin(), n.end());
    return n;
}

std::set<std::pair<Vertex, Vertex>> swap_coords(const std::set<std::pair<Vertex, Vertex>>& edges,
                                                std::size_t split)
{
    std::set<std::pair<Vertex, Vertex>> out;
    for (const auto& [a, b] : edges) {
        const Vertex sa = Vertex::concat(a.tail(split), a.head(split));
        const Vertex sb = Vertex::concat(b.tail(split), b.head(split));
        out.emplace(std::min(sa, sb), std::max(sa, sb));
    }
    return out;
}

} // namespace

TEST_SUITE("vertex")
{
    TEST_CASE("tuples concatenate, split and print")
    {
        const Vertex a{1, -2};
        const Vertex b{7};
        const Vertex c = Vertex::concat(a, b);
        CHECK(c.dim() == 3);
        CHECK(c.to_string() == "1,-2,7");
        CHECK(c.head(2) == a);
        CHECK(c.tail(2) == b);
        CHECK(a.with(1, 5) == Vertex{1, 5});
        CHECK(parse_vertex("3,-4") == Vertex{3, -4});
        CHECK(Vertex::zero(2) == Vertex{0, 0});
    }

    TEST_CASE("ordering compares dimension before coordinates")
    {
        CHECK(Vertex{5} < Vertex{0, 0});
        CHECK(Vertex{0, 1} < Vertex{1, 0});
        CHECK(Vertex{-1, 3} < Vertex{0, -3});
    }

    TEST_CASE("malformed text and oversized tuples are rejected")
    {
        CHECK_THROWS_AS(parse_vertex(""), InvalidParameter);
        CHECK_THROWS_AS(parse_vertex("1,,2"), InvalidParameter);
        CHECK_THROWS_AS(parse_vertex("1,x"), InvalidParameter);
        CHECK_THROWS_AS(Vertex::zero(Vertex::max_dim + 1), InvalidParameter);
    }
}

TEST_SUITE("finite graphs")
{
    TEST_CASE("path graphs")
    {
        const auto p1 = path_graph(1);
        CHECK(p1.size() == 1);
        CHECK(p1.edge_count() == 0);

        const auto p2 = path_graph(2);
        CHECK(p2.edge_count() == 1);
        CHECK(p2.adjacent(0, 1));

        const auto p4 = path_graph(4);
        std::vector<std::size_t> degrees;
        for (std::uint32_t i = 0; i < 4; ++i) {
            degrees.push_back(p4.degree(i));
        }
        CHECK(degrees == std::vector<std::size_t>{1, 2, 2, 1});
        CHECK(p4.root() == 0u);

        CHECK_THROWS_AS(path_graph(0), InvalidParameter);
    }

    TEST_CASE("construction validates simple undirected structure")
    {
        const std::vector<Vertex> vs{Vertex{0}, Vertex{1}};
        CHECK_THROWS_AS(FiniteGraph(vs, {{1}, {}}), InvalidParameter);     // asymmetric
        CHECK_THROWS_AS(FiniteGraph(vs, {{0}, {}}), InvalidParameter);     // self-loop
        CHECK_THROWS_AS(FiniteGraph(vs, {{1, 1}, {0, 0}}), InvalidParameter);
        CHECK_THROWS_AS(FiniteGraph(vs, {{2}, {}}), InvalidParameter);
        CHECK_THROWS_AS(FiniteGraph({Vertex{0}, Vertex{0}}, {{}, {}}), InvalidParameter);
        CHECK_THROWS_AS(FiniteGraph({Vertex{0}, Vertex{0, 1}}, {{}, {}}), InvalidParameter);
        CHECK_THROWS_AS(FiniteGraph(vs, {{1}, {0}}, 5), InvalidParameter);
        CHECK_NOTHROW(FiniteGraph(vs, {{1}, {0}}, 1));
    }

    TEST_CASE("edge list export")
    {
        std::ostringstream os;
        write_edge_list(os, kronecker(path_graph(2), path_graph(2)));
        CHECK(os.str() == "# dim=2 root=0,0\n0,0 -- 1,1\n0,1 -- 1,0\n");
    }
}

TEST_SUITE("base lines")
{
    TEST_CASE("neighbor functions")
    {
        CHECK(sorted_neighbors(integer_line(), Vertex{0}) == std::vector<Vertex>{Vertex{-1}, Vertex{1}});
        CHECK(sorted_neighbors(half_line(), Vertex{0}) == std::vector<Vertex>{Vertex{1}});
        CHECK(sorted_neighbors(half_line(), Vertex{3}) == std::vector<Vertex>{Vertex{2}, Vertex{4}});
        CHECK_FALSE(half_line().contains(Vertex{-1}));
        CHECK_FALSE(integer_line().contains(Vertex{0, 0}));
    }
}

TEST_SUITE("products")
{
    TEST_CASE("Kronecker product examples")
    {
        const auto empty = kronecker(path_graph(1), path_graph(4));
        CHECK(empty.size() == 4);
        CHECK(empty.edge_count() == 0);

        // Brute force over all 4x4 vertex pairs: (a,b)~(c,d) iff a~c and b~d.
        const auto p2 = path_graph(2);
        const auto k = kronecker(p2, p2);
        CHECK(k.size() == 4);
        std::size_t edges = 0;
        for (std::uint32_t i = 0; i < 4; ++i) {
            for (std::uint32_t j = i + 1; j < 4; ++j) {
                const Vertex a = k.vertex(i);
                const Vertex b = k.vertex(j);
                const bool expect = a[0] != b[0] && a[1] != b[1];
                CHECK(k.adjacent(i, j) == expect);
                edges += expect;
            }
        }
        CHECK(edges == 2);
        for (std::uint32_t i = 0; i < 4; ++i) {
            CHECK(k.degree(i) == 1); // two disjoint edges
        }

        const Graph zz = kronecker(Graph{integer_line()}, Graph{integer_line()});
        CHECK(as_implicit(zz).neighbors(Vertex{0, 0}).size() == 4);
    }

    TEST_CASE("Cartesian product examples")
    {
        const auto c = cartesian(path_graph(2), path_graph(2));
        CHECK(c.size() == 4);
        CHECK(c.edge_count() == 4);
        for (std::uint32_t i = 0; i < 4; ++i) {
            CHECK(c.degree(i) == 2);
        }
        CHECK(connected_components(c).size() == 1);

        const Graph zz = cartesian(Graph{integer_line()}, Graph{integer_line()});
        CHECK(as_implicit(zz).neighbors(Vertex{0, 0}).size() == 4);
        const Graph qq = cartesian(Graph{half_line()}, Graph{half_line()});
        CHECK(as_implicit(qq).neighbors(Vertex{0, 0}).size() == 2);
    }

    TEST_CASE("finite by infinite products are implicit")
    {
        const Graph g = kronecker(Graph{path_graph(3)}, Graph{integer_line()});
        CHECK(std::holds_alternative<ImplicitGraph>(g));
        CHECK(graph_dim(g) == 2);
        CHECK(as_implicit(g).neighbors(Vertex{1, 0}).size() == 4);
        CHECK(as_implicit(g).neighbors(Vertex{0, 0}).size() == 2);
    }
}

TEST_SUITE("restricted lattices")
{
    TEST_CASE("degrees at the origin")
    {
        // x >= y admits (1,0) and (0,-1) only: (-1,0) and (0,1) break the inequality.
        const auto half = restrict_lattice(LatticeDomain::half_plane());
        CHECK(sorted_neighbors(half, Vertex{0, 0}) == std::vector<Vertex>{Vertex{0, -1}, Vertex{1, 0}});

        const auto chamber = restrict_lattice(LatticeDomain::chamber3());
        CHECK(sorted_neighbors(chamber, Vertex{0, 0, 0}) ==
              std::vector<Vertex>{Vertex{0, 0, -1}, Vertex{1, 0, 0}});

        const auto plane = restrict_lattice(LatticeDomain::full_z2());
        for (int a = -3; a <= 3; ++a) {
            for (int b = -3; b <= 3; ++b) {
                CHECK(plane.neighbors(Vertex{a, b}).size() == 4);
            }
        }
    }

    TEST_CASE("domain parameters are validated")
    {
        CHECK_THROWS_AS(LatticeDomain::strip(1), InvalidParameter);
        CHECK_THROWS_AS(LatticeDomain::diamond(1, 3), InvalidParameter);
        CHECK(LatticeDomain::strip(3).contains(Vertex{2, 0}));
        CHECK_FALSE(LatticeDomain::strip(3).contains(Vertex{3, 0}));
        CHECK(LatticeDomain::diamond(3, 3).contains(Vertex{2, 0}));
        CHECK_FALSE(LatticeDomain::diamond(3, 3).contains(Vertex{2, 1}));
    }
}

TEST_SUITE("balls and components")
{
    TEST_CASE("ball examples")
    {
        const auto b = ball(integer_line(), Vertex{0}, 2);
        CHECK(b.size() == 5);
        CHECK(b.edge_count() == 4);
        CHECK(b.vertex(*b.root()) == Vertex{0});
        CHECK(b.ball_radius() == 2);

        const auto origin = restrict_component(as_implicit(kronecker(Graph{integer_line()},
                                                                     Graph{integer_line()})),
                                               equal_parity({0, 1}), "(Z xK Z)°");
        CHECK(ball(origin, Vertex{0, 0}, 1).size() == 5);
        CHECK(ball(half_line(), Vertex{4}, 0).size() == 1);
        CHECK(ball(path_graph(3), Vertex{0}, 0).size() == 1);
    }

    TEST_CASE("ball errors")
    {
        CHECK_THROWS_AS(ball(integer_line(), Vertex{0}, -1), InvalidParameter);
        CHECK_THROWS_AS(ball(half_line(), Vertex{-1}, 1), InvalidParameter);
        CHECK_THROWS_AS(ball(restrict_lattice(LatticeDomain::full_z2()), Vertex{0, 0}, 10, 100),
                        ResourceLimit);
    }

    TEST_CASE("ball vertices are in BFS layer order with the root first")
    {
        const auto b = ball(restrict_lattice(LatticeDomain::full_z2()), Vertex{0, 0}, 3);
        const auto d = root_distances(b);
        CHECK(b.vertex(0) == Vertex{0, 0});
        CHECK(std::is_sorted(d.begin(), d.end()));
        for (std::size_t i = 1; i < b.size(); ++i) {
            if (d[i] == d[i - 1]) {
                CHECK(b.vertex(static_cast<std::uint32_t>(i - 1)) <
                      b.vertex(static_cast<std::uint32_t>(i)));
            }
        }
    }

    TEST_CASE("component examples")
    {
        const auto p2 = path_graph(2);
        CHECK(connected_components(kronecker(p2, p2)).size() == 2);
        CHECK(connected_components(cartesian(p2, p2)).size() == 1);

        const auto origin = restrict_component(as_implicit(kronecker(Graph{integer_line()},
                                                                     Graph{integer_line()})),
                                               equal_parity({0, 1}), "(Z xK Z)°");
        const auto b = ball(origin, Vertex{0, 0}, 5);
        CHECK(connected_components(b).size() == 1);
        for (const auto& v : b.vertices()) {
            CHECK((v[0] + v[1]) % 2 == 0);
        }
        CHECK(validate_component(origin, Vertex{0, 0}, 5));
    }

    TEST_CASE("degree histogram")
    {
        const auto line = ball(integer_line(), Vertex{0}, 3);
        const auto h = degree_histogram(line, 2);
        CHECK(h.size() == 1);
        CHECK(h.at(2) == 5);
        CHECK_THROWS_AS(degree_histogram(line, 3), InvalidParameter);
        CHECK_THROWS_AS(degree_histogram(path_graph(4), 1), InvalidParameter);

        const auto mixed = LatticeKind::make(LatticeKind::Id::mixed3);
        const auto chamber = LatticeKind::make(LatticeKind::Id::chamber3);
        const auto hm = degree_histogram(ball(lattice_graph(mixed), lattice_root(mixed), 6), 4);
        const auto hc = degree_histogram(ball(lattice_graph(chamber), lattice_root(chamber), 6), 4);
        CHECK(hm.at(2) == 1);
        CHECK(hc.at(2) >= 2);
    }
}

TEST_SUITE("isomorphisms")
{
    TEST_CASE("plane map on small and medium balls")
    {
        CHECK(verify_isomorphism(iso_plane(), 0).ok);
        const auto r = verify_isomorphism(iso_plane(), 6);
        CHECK(r.ok);
        CHECK(r.source_vertices == 85); // 2r^2 + 2r + 1
    }

    TEST_CASE("restricted maps")
    {
        CHECK(verify_isomorphism(iso_strip(3), 6).ok);
        CHECK(verify_isomorphism(iso_strip(4), 6).ok);
        CHECK(verify_isomorphism(iso_half_plane(), 6).ok);
        CHECK(verify_isomorphism(iso_diamond(4, 4), 6).ok);
        CHECK(verify_isomorphism(iso_wedge(), 6).ok);
    }

    TEST_CASE("identity from P3 onto P2 fails with a witness")
    {
        const IsoCase c{"P3 -> P2", IsoMap::identity(1, "P3", "P2"), Graph{path_graph(3)}, Vertex{0},
                        Graph{path_graph(2)}, Vertex{0}};
        const auto r = verify_isomorphism(c, 2);
        CHECK_FALSE(r.ok);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->first == Vertex{2});
    }

    TEST_CASE("a non-injective map is reported")
    {
        const IsoMap collapse({{1, 1}}, {0}, "Z xC Z", "Z");
        const IsoCase c{"collapse", collapse,
                        Graph{cartesian(Graph{integer_line()}, Graph{integer_line()})},
                        Vertex{0, 0}, Graph{integer_line()}, Vertex{0}};
        const auto r = verify_isomorphism(c, 1);
        CHECK_FALSE(r.ok);
        CHECK(r.witness.has_value());
    }
}

TEST_SUITE("product properties")
{
    TEST_CASE("symmetry under coordinate swap")
    {
        gen::Rng rng(101);
        for (int t = 0; t < 100; ++t) {
            const auto g1 = gen::graph(rng, 1, 10, false);
            const auto g2 = gen::graph(rng, 1, 10, false);
            CAPTURE(t);
            CHECK(swap_coords(edge_set(kronecker(g1, g2)), 1) == edge_set(kronecker(g2, g1)));
            CHECK(swap_coords(edge_set(cartesian(g1, g2)), 1) == edge_set(cartesian(g2, g1)));
        }
    }

    TEST_CASE("associativity")
    {
        gen::Rng rng(202);
        for (int t = 0; t < 60; ++t) {
            const auto g1 = gen::graph(rng, 1, 5, false);
            const auto g2 = gen::graph(rng, 1, 5, false);
            const auto g3 = gen::graph(rng, 1, 5, false);
            CAPTURE(t);
            CHECK(edge_set(kronecker(kronecker(g1, g2), g3)) ==
                  edge_set(kronecker(g1, kronecker(g2, g3))));
            CHECK(edge_set(cartesian(cartesian(g1, g2), g3)) ==
                  edge_set(cartesian(g1, cartesian(g2, g3))));
        }
    }

    TEST_CASE("Kronecker product of connected graphs has at most two components")
    {
        gen::Rng rng(303);
        for (int t = 0; t < 200; ++t) {
            const auto g1 = gen::graph(rng, 2, 8, true);
            const auto g2 = gen::graph(rng, 2, 8, true);
            CAPTURE(t);
            CHECK(connected_components(kronecker(g1, g2)).size() <= 2);
        }
    }

    TEST_CASE("Kronecker product commutes with induced subgraphs")
    {
        gen::Rng rng(404);
        for (int t = 0; t < 100; ++t) {
            const auto g1 = gen::graph(rng, 1, 8, false);
            const auto g2 = gen::graph(rng, 1, 8, false);
            auto k1 = gen::subset(rng, g1.size());
            auto k2 = gen::subset(rng, g2.size());
            k1[0] = true;
            k2[0] = true;
            auto in1 = [&](const Vertex& v) { return k1[static_cast<std::size_t>(v[0])]; };
            auto in2 = [&](const Vertex& v) { return k2[static_cast<std::size_t>(v[0])]; };
            const auto h1 = induced_subgraph(g1, in1);
            const auto h2 = induced_subgraph(g2, in2);
            const auto sub = induced_subgraph(kronecker(g1, g2), [&](const Vertex& v) {
                return in1(v.head(1)) && in2(v.tail(1));
            });
            const auto direct = kronecker(h1, h2);
            CAPTURE(t);
            CHECK(direct.vertices() == sub.vertices());
            CHECK(edge_set(direct) == edge_set(sub));
        }
    }

    TEST_CASE("Kronecker edges join vertices at Cartesian distance two")
    {
        gen::Rng rng(505);
        for (int t = 0; t < 60; ++t) {
            const auto g1 = gen::graph(rng, 1, 6, false);
            const auto g2 = gen::graph(rng, 1, 6, false);
            const auto cp = cartesian(g1, g2);
            for (const auto& [a, b] : edge_set(kronecker(g1, g2))) {
                const auto d = root_distances(cp.with_root(cp.index_of(a)));
                CHECK(d[*cp.index_of(b)] == 2);
            }
        }

        const Graph zc = cartesian(Graph{integer_line()}, Graph{integer_line()});
        const Graph zk = kronecker(Graph{integer_line()}, Graph{integer_line()});
        const auto big = ball(zc, Vertex{0, 0}, 8);
        for (const auto& [a, b] : edge_set(ball(zk, Vertex{0, 0}, 3))) {
            const auto d = root_distances(big.with_root(big.index_of(a)));
            CHECK(d[*big.index_of(b)] == 2);
        }
    }

    TEST_CASE("ball(r) is the induced subgraph of ball(r+1) on its vertices")
    {
        for (const auto& token : {"z2", "halfplane", "wedge", "chamber3", "bcc3", "mixed3"}) {
            const auto kind = parse_lattice_kind(token);
            const Graph g = lattice_graph(kind);
            for (int r = 0; r < 5; ++r) {
                const auto small = ball(g, lattice_root(kind), r);
                const auto large = ball(g, lattice_root(kind), r + 1);
                const auto restricted =
                    induced_subgraph(large, [&](const Vertex& v) { return small.contains(v); });
                CAPTURE(token);
                CAPTURE(r);
                CHECK(restricted.size() == small.size());
                CHECK(edge_set(restricted) == edge_set(small));
            }
        }
    }
}
