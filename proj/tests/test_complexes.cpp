#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wl2/cw.hpp"
#include "wl2/fixtures.hpp"
#include "wl2/graph_aut.hpp"
#include "wl2/homology.hpp"
#include "wl2/isomorphism.hpp"
#include "wl2/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace wl2;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SimplicialComplex two_points() { return SimplicialComplex(std::vector<Simplex>{{0}, {1}}); }

bool sphere(const BettiVector& b, int d) { return b.concentrated_in(d) && b.at(d) == 1; }

long long euler_from_betti(const BettiVector& b) {
    long long e = 0;
    for (std::size_t i = 0; i < b.b.size(); ++i) e += ((b.lo + static_cast<int>(i)) % 2 == 0 ? 1 : -1) * b.b[i];
    return e;
}

// Every permutation checked directly against the edge labels.
long long brute_force_automorphisms(const LabeledGraph& g) {
    std::vector<int> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < g.size() && ok; ++u)
            for (int v = u + 1; v < g.size() && ok; ++v) ok = g.label(u, v) == g.label(p[u], p[v]);
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

LabeledGraph labeled(const SimplicialComplex& K, int label) { return graph_of_complex(K, label); }

}  // namespace

TEST_CASE("flag complexes") {
    CHECK_FALSE(is_flag(simplex_boundary(2)));
    CHECK(is_flag(cycle_graph(5)));
    CHECK(is_flag(barycentric_subdivision(simplex_cw(3, true))));
    CHECK(is_flag(torus_grid(4, 4)));
}

TEST_CASE("full subcomplexes, links and joins") {
    auto tri = simplex_complex(2);
    CHECK(full_subcomplex(tri, {0, 2}).facets().size() == 1);
    CHECK(full_subcomplex(tri, {}).num_vertices() == 0);

    auto square = join(two_points(), two_points());
    CHECK(square.facets().size() == 4);
    CHECK(square.num_vertices() == 4);
    CHECK(sphere(homology(square, true), 1));

    auto octahedron = join(square, two_points());
    auto lk = link(octahedron, {0});
    CHECK(lk.facets().size() == 4);
    CHECK(sphere(homology(lk, true), 1));
    CHECK(star(octahedron, {0}).facets().size() == 4);
    CHECK(sphere(homology(cone(square), true), 1) == false);
    CHECK(homology(cone(square), true).all_zero());
}

TEST_CASE("skeleta of simplices") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            auto b = homology(skeleton(simplex_complex(n), k), true);
            CHECK(b.concentrated_in(k));
            CHECK(b.at(k) == binom(n, k + 1));
        }
}

TEST_CASE("homology against the Euler characteristic") {
    std::vector<SimplicialComplex> cases = {torus_grid(4, 4), torus_grid(5, 4), simplex_boundary(4), petersen_graph(),
                                            skeleton(simplex_complex(5), 2)};
    for (auto& K : cases) CHECK(euler_from_betti(homology(K, false)) == K.euler_characteristic());
    auto t = homology(torus_grid(4, 4), false);
    CHECK(t.at(0) == 1);
    CHECK(t.at(1) == 2);
    CHECK(t.at(2) == 1);
    CHECK(sphere(homology(simplex_boundary(3), true), 2));
}

TEST_CASE("relative homology") {
    // (disc, circle)
    auto rel = relative_homology(simplex_complex(2), simplex_boundary(2));
    CHECK(rel.concentrated_in(2));
    CHECK(rel.at(2) == 1);
}

TEST_CASE("order complexes") {
    auto seg = simplex_cw(1, false).face_poset();
    auto path = order_complex(seg);
    CHECK(path.num_vertices() == 3);
    CHECK(path.facets().size() == 2);

    Poset anti;
    anti.n = 4;
    anti.above.assign(4, {});
    anti.labels = {"a", "b", "c", "d"};
    anti.grades = {0, 0, 0, 0};
    CHECK(order_complex(anti).facets().size() == 4);
    CHECK(order_complex(anti).dimension() == 0);
}

TEST_CASE("flag poset complements") {
    auto hex = flag_poset_complement(3, 1);
    CHECK(hex.num_vertices() == 6);
    CHECK(sphere(homology(hex, true), 1));
    auto three = homology(flag_poset_complement(3, 2), true);
    CHECK(three.concentrated_in(0));
    CHECK(three.at(0) == 2);
    CHECK(homology(flag_poset_complement(4, 2), true).concentrated_in(1));
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= m; ++k) {
            auto b = homology(flag_poset_complement(m, k), true);
            // reduced H_{k-2} of the (k-2)-skeleton of the (m-1)-simplex
            long long expected = k == 1 ? 1 : binom(m - 1, k - 1);
            CHECK(b.concentrated_in(m - k - 1));
            CHECK(b.at(m - k - 1) == expected);
        }
}

TEST_CASE("regular CW complexes") {
    auto sq = cube_cw(2, false);
    CHECK(sq.size() == 9);
    auto b = barycentric_subdivision(sq);
    CHECK(b.num_vertices() == 9);
    CHECK(b.facets().size() == 8);
    CHECK(b.graded());

    CHECK(cube_cw(6, true).size() == 728);
    CHECK(sphere(homology(cube_cw(4, true), true), 3));
    CHECK(sphere(homology(cross_polytope_boundary_cw(4), true), 3));
    CHECK(homology(cube_cw(3, false), true).all_zero());

    auto pt = RegularCWComplex({Cell{"v", 0, {}}});
    CHECK(barycentric_subdivision(pt).num_vertices() == 1);

    CHECK(parse_cw(cube_cw(3, true).to_text()) == cube_cw(3, true));
    CHECK(parse_cw(cube_cw(3, true).to_text()).pl_declared());
    CHECK_THROWS_AS(parse_cw("cw v1\na 0\nb 1 +a +c\n"), InputError);
}

TEST_CASE("cellular homology agrees with the subdivision") {
    for (auto X : {cube_cw(3, true), simplex_cw(4, true), cross_polytope_boundary_cw(3), cube_cw(2, false)}) {
        auto a = homology(X, true), b = homology(barycentric_subdivision(X), true);
        CHECK(a.str() == b.str());
    }
}

TEST_CASE("link decomposition on small complexes") {
    auto X = cube_cw(3, true);
    for (int c = 0; c < X.size(); ++c) CHECK(link_join_decomposition_check(X, c));
    auto D = simplex_cw(3, false);
    for (int c = 0; c < D.size(); ++c) CHECK(link_join_decomposition_check(D, c));
}

TEST_CASE("graded isomorphism") {
    auto G = comparability_graph(cube_cw(3, true).face_poset());
    std::vector<int> perm;
    auto H = shuffled(G, 5, &perm);
    auto iso = graded_isomorphism(G, H);
    REQUIRE(iso.has_value());
    for (int u = 0; u < G.size(); ++u) {
        CHECK(G.grade[u] == H.grade[(*iso)[u]]);
        for (int v : G.adj[u]) CHECK(H.adjacent((*iso)[u], (*iso)[v]));
    }
    // the octahedron and the cube have isomorphic face posets only up to reversal
    auto O = comparability_graph(cross_polytope_boundary_cw(3).face_poset());
    CHECK_FALSE(graded_isomorphism(G, O).has_value());

    // same graph, different grades
    auto J = H;
    std::swap(J.grade[0], J.grade[J.size() - 1]);
    if (J.grade[0] != H.grade[0]) CHECK_FALSE(graded_isomorphism(G, J).has_value());

    auto join_g = graph_join(graph_of(cycle_graph(4)), graph_of(two_points()));
    CHECK(join_g.size() == 6);
    CHECK(join_g.edge_count() == 4 + 8);
    CHECK(simplicial_isomorphism(clique_complex(join_g), clique_complex(shuffled(join_g, 9)), false).has_value());
}

TEST_CASE("graph automorphisms match brute force") {
    std::vector<LabeledGraph> graphs = {labeled(cycle_graph(6), 2), labeled(cycle_graph(7), 3),
                                        labeled(complete_graph(5), 3), labeled(cycle_graph(8), 2)};
    LabeledGraph cube;
    cube.names = {"0", "1", "2", "3", "4", "5", "6", "7"};
    cube.adj.assign(8, {});
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) cube.add_edge(u, u ^ (1 << b), 2);
    graphs.push_back(cube);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        LabeledGraph g;
        int n = 6 + trial % 3;
        g.adj.assign(n, {});
        for (int i = 0; i < n; ++i) g.names.push_back("v" + std::to_string(i));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v, 2 + static_cast<int>(rng() % 2));
        graphs.push_back(g);
    }
    for (auto& g : graphs) {
        auto A = graph_aut(g);
        CHECK(A.order() == brute_force_automorphisms(g));
        long long prod = 1;
        for (long long o : A.orbit_lengths) prod *= o;
        CHECK(prod == A.order());
    }
    auto P = graph_aut(labeled(petersen_graph(), 3));
    CHECK(P.order() == 120);
    CHECK(P.vertex_transitive);
    CHECK(P.edge_transitive);
    CHECK(P.stabilizer_order(0) == 12);
}

TEST_CASE("text round trips") {
    auto K = torus_grid(4, 5);
    CHECK(parse_simplicial(K.to_text()) == K);
    CHECK_THROWS_AS(parse_simplicial("simp v1\nvertices: a b\na c\n"), InputError);
}
