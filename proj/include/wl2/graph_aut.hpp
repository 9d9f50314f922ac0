#pragma once

#include "wl2/coxeter.hpp"
#include "wl2/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wl2 {

// Simple undirected graph with a positive integer label on every edge.
struct LabeledGraph {
    std::vector<std::string> names;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, label), sorted

    int size() const { return static_cast<int>(adj.size()); }
    int label(int u, int v) const;  // 0 when not adjacent
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    std::vector<std::pair<int, int>> edges() const;  // u < v
    void add_edge(int u, int v, int label);
};

// 1-skeleton of the nerve: generators joined when their label is finite.
LabeledGraph labeled_nerve_graph(const CoxeterSystem& sys);

using Perm = std::vector<int>;

struct AutGroup {
    std::vector<Perm> elements;    // every automorphism, identity first
    std::vector<Perm> generators;
    std::vector<int> base;         // stabilizer chain base points
    std::vector<long long> orbit_lengths;  // basic orbit sizes along the chain
    std::vector<int> vertex_orbit;         // orbit id per vertex
    std::vector<int> edge_orbit;           // orbit id per edge of edges()
    bool vertex_transitive = false;
    bool edge_transitive = false;

    long long order() const { return static_cast<long long>(elements.size()); }
    long long stabilizer_order(int v) const;
    // Automorphisms fixing v and the edge {v, u} (setwise fixed means u fixed too).
    long long edge_stabilizer_order(int v, int u) const;
};

// Full label-preserving automorphism group by backtracking with degree and
// label refinement. Throws ResourceError beyond `cap` elements.
AutGroup graph_aut(const LabeledGraph& g, std::size_t cap = 2000000);

}  // namespace wl2
