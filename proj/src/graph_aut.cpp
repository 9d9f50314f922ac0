#include "wl2/graph_aut.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wl2 {

int LabeledGraph::label(int u, int v) const {
    auto it = std::lower_bound(adj[u].begin(), adj[u].end(), std::make_pair(v, 0));
    return it != adj[u].end() && it->first == v ? it->second : 0;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (auto [v, l] : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void LabeledGraph::add_edge(int u, int v, int l) {
    if (u == v || label(u, v)) throw InputError("loop or repeated edge");
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), std::make_pair(v, 0)), {v, l});
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), std::make_pair(u, 0)), {u, l});
}

LabeledGraph labeled_nerve_graph(const CoxeterSystem& sys) {
    LabeledGraph g;
    g.names = sys.names();
    g.adj.resize(sys.rank());
    for (int s = 0; s < sys.rank(); ++s)
        for (int t = s + 1; t < sys.rank(); ++t)
            if (sys.m(s, t) != kInfinity) g.add_edge(s, t, sys.m(s, t));
    return g;
}

long long AutGroup::stabilizer_order(int v) const {
    return std::count_if(elements.begin(), elements.end(), [&](const Perm& p) { return p[v] == v; });
}

long long AutGroup::edge_stabilizer_order(int v, int u) const {
    return std::count_if(elements.begin(), elements.end(), [&](const Perm& p) { return p[v] == v && p[u] == u; });
}

namespace {

Perm compose(const Perm& a, const Perm& b) {  // a after b
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
    Perm id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    std::set<Perm> seen{id};
    std::vector<Perm> queue{id};
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (auto& g : gens) {
            Perm p = compose(g, queue[h]);
            if (seen.insert(p).second) queue.push_back(p);
        }
    return seen;
}

}  // namespace

AutGroup graph_aut(const LabeledGraph& g, std::size_t cap) {
    const int n = g.size();
    // Invariant per vertex: sorted incident labels.
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
        for (auto [u, l] : g.adj[v]) sig[v].push_back(l);
        std::sort(sig[v].begin(), sig[v].end());
    }
    AutGroup G;
    Perm map(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> extend = [&](int v) {
        if (v == n) {
            if (G.elements.size() >= cap) throw ResourceError("automorphism group exceeds the element cap");
            G.elements.push_back(map);
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c] || sig[c] != sig[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = g.label(v, u) == g.label(c, map[u]);
            if (!ok) continue;
            map[v] = c;
            used[c] = true;
            extend(v + 1);
            used[c] = false;
            map[v] = -1;
        }
    };
    extend(0);
    std::sort(G.elements.begin(), G.elements.end());  // identity is the smallest
    // Stabilizer chain with base 0, 1, 2, ...
    std::vector<Perm> level = G.elements;
    for (int b = 0; b < n && level.size() > 1; ++b) {
        std::set<int> orbit;
        for (auto& p : level) orbit.insert(p[b]);
        if (orbit.size() > 1) {
            G.base.push_back(b);
            G.orbit_lengths.push_back(static_cast<long long>(orbit.size()));
        }
        std::vector<Perm> next;
        for (auto& p : level)
            if (p[b] == b) next.push_back(p);
        level = std::move(next);
    }
    std::set<Perm> generated = closure(G.generators, n);
    for (auto& p : G.elements)
        if (!generated.count(p)) {
            G.generators.push_back(p);
            generated = closure(G.generators, n);
        }
    G.vertex_orbit.assign(n, -1);
    int orbits = 0;
    for (int v = 0; v < n; ++v) {
        if (G.vertex_orbit[v] >= 0) continue;
        for (auto& p : G.elements) G.vertex_orbit[p[v]] = orbits;
        ++orbits;
    }
    G.vertex_transitive = orbits <= 1;
    auto E = g.edges();
    G.edge_orbit.assign(E.size(), -1);
    int eorbits = 0;
    for (std::size_t e = 0; e < E.size(); ++e) {
        if (G.edge_orbit[e] >= 0) continue;
        for (auto& p : G.elements) {
            auto img = std::minmax(p[E[e].first], p[E[e].second]);
            auto it = std::lower_bound(E.begin(), E.end(), std::make_pair(img.first, img.second));
            G.edge_orbit[it - E.begin()] = eorbits;
        }
        ++eorbits;
    }
    G.edge_transitive = eorbits <= 1;
    return G;
}

}  // namespace wl2
