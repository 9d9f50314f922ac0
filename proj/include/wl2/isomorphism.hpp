#pragma once

#include "wl2/simplicial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace wl2 {

// Undirected graph with an integer grade per vertex. Stands for the flag
// complex it spans when the complexes involved are flag.
struct GradedGraph {
    std::vector<std::vector<int>> adj;  // sorted neighbour lists
    std::vector<int> grade;

    int size() const { return static_cast<int>(adj.size()); }
    std::size_t edge_count() const;
    bool adjacent(int u, int v) const;
};

GradedGraph graph_of(const SimplicialComplex& K);
// Comparability graph of a poset, graded by the poset grades.
GradedGraph comparability_graph(const Poset& P);
GradedGraph induced_subgraph(const GradedGraph& g, const std::vector<int>& vertices);
GradedGraph graph_join(const GradedGraph& a, const GradedGraph& b);
// Relabels vertices by a seeded random permutation; perm[old] = new.
GradedGraph shuffled(const GradedGraph& g, std::uint64_t seed, std::vector<int>* perm = nullptr);
// Clique complex (small graphs only).
SimplicialComplex clique_complex(const GradedGraph& g);

using IsoAccept = std::function<bool(const std::vector<int>&)>;

// Grade- and adjacency-preserving bijection a -> b, found by colour refinement
// followed by backtracking. `accept` may veto complete candidates.
std::optional<std::vector<int>> graded_isomorphism(const GradedGraph& a, const GradedGraph& b,
                                                   const IsoAccept& accept = {});
// Simplicial isomorphism (facets checked), optionally grade-preserving.
std::optional<std::vector<int>> simplicial_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                                       bool graded);

}  // namespace wl2
