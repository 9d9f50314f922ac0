#include "wl2/isomorphism.hpp"

#include "wl2/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace wl2 {

std::size_t GradedGraph::edge_count() const {
    std::size_t e = 0;
    for (auto& a : adj) e += a.size();
    return e / 2;
}

bool GradedGraph::adjacent(int u, int v) const { return std::binary_search(adj[u].begin(), adj[u].end(), v); }

GradedGraph graph_of(const SimplicialComplex& K) {
    GradedGraph g;
    g.adj = K.adjacency();
    for (int v = 0; v < K.num_vertices(); ++v) g.grade.push_back(K.grade(v));
    return g;
}

GradedGraph comparability_graph(const Poset& P) {
    GradedGraph g;
    g.adj.resize(P.n);
    for (int i = 0; i < P.n; ++i)
        for (int j : P.above[i]) {
            g.adj[i].push_back(j);
            g.adj[j].push_back(i);
        }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    g.grade = P.grades.empty() ? std::vector<int>(P.n, 0) : P.grades;
    return g;
}

GradedGraph induced_subgraph(const GradedGraph& g, const std::vector<int>& vertices) {
    std::vector<int> remap(g.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) remap[vertices[i]] = static_cast<int>(i);
    GradedGraph h;
    h.adj.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (int u : g.adj[vertices[i]])
            if (remap[u] >= 0) h.adj[i].push_back(remap[u]);
        std::sort(h.adj[i].begin(), h.adj[i].end());
        h.grade.push_back(g.grade[vertices[i]]);
    }
    return h;
}

GradedGraph graph_join(const GradedGraph& a, const GradedGraph& b) {
    const int na = a.size(), nb = b.size();
    GradedGraph g;
    g.adj.resize(na + nb);
    for (int v = 0; v < na; ++v) {
        g.adj[v] = a.adj[v];
        for (int u = 0; u < nb; ++u) g.adj[v].push_back(na + u);
    }
    for (int u = 0; u < nb; ++u) {
        for (int v = 0; v < na; ++v) g.adj[na + u].push_back(v);
        for (int w : b.adj[u]) g.adj[na + u].push_back(na + w);
    }
    g.grade = a.grade;
    g.grade.insert(g.grade.end(), b.grade.begin(), b.grade.end());
    return g;
}

GradedGraph shuffled(const GradedGraph& g, std::uint64_t seed, std::vector<int>* perm_out) {
    std::vector<int> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    GradedGraph h;
    h.adj.resize(g.size());
    h.grade.resize(g.size());
    for (int v = 0; v < g.size(); ++v) {
        h.grade[perm[v]] = g.grade[v];
        for (int u : g.adj[v]) h.adj[perm[v]].push_back(perm[u]);
    }
    for (auto& a : h.adj) std::sort(a.begin(), a.end());
    if (perm_out) *perm_out = perm;
    return h;
}

SimplicialComplex clique_complex(const GradedGraph& g) {
    std::vector<Simplex> cliques;
    Simplex cur;
    std::function<void(const std::vector<int>&)> grow = [&](const std::vector<int>& cand) {
        bool extended = false;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
            cur.push_back(v);
            grow(next);
            cur.pop_back();
            extended = true;
        }
        if (!extended && !cur.empty()) cliques.push_back(cur);
    };
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    grow(all);
    std::vector<int> grades = g.grade;
    if (std::all_of(grades.begin(), grades.end(), [](int x) { return x < 0; })) grades.clear();
    std::vector<std::string> labels;
    for (int v = 0; v < g.size(); ++v) labels.push_back(std::to_string(v));
    return SimplicialComplex(std::move(cliques), std::move(labels), std::move(grades));
}

namespace {

// Joint colour refinement of two graphs starting from the colouring `col`
// (a's vertices first, then b's). Colour ids are canonical for the pair, so
// equal ids on both sides mean equal refinement histories.
void refine(const GradedGraph& a, const GradedGraph& b, std::vector<int>& col) {
    const int na = a.size(), nb = b.size();
    auto graph = [&](int v) -> const GradedGraph& { return v < na ? a : b; };
    auto local = [&](int v) { return v < na ? v : v - na; };
    auto offset = [&](int v) { return v < na ? 0 : na; };
    std::size_t classes = std::set<int>(col.begin(), col.end()).size();
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(na + nb);
        for (int v = 0; v < na + nb; ++v) {
            std::vector<int> sig{col[v]};
            for (int u : graph(v).adj[local(v)]) sig.push_back(col[u + offset(v)]);
            std::sort(sig.begin() + 1, sig.end());
            next[v] = ids.emplace(std::move(sig), 0).first->second;
        }
        // Number colours by sorted signature so ids do not depend on vertex order.
        int id = 0;
        for (auto& [sig, c] : ids) c = id++;
        for (int v = 0; v < na + nb; ++v) {
            std::vector<int> sig{col[v]};
            for (int u : graph(v).adj[local(v)]) sig.push_back(col[u + offset(v)]);
            std::sort(sig.begin() + 1, sig.end());
            next[v] = ids.at(sig);
        }
        col = std::move(next);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
}

// Individualisation and refinement: pick the smallest non-singleton colour
// class, fix one vertex of a there, and try each vertex of b in the class.
struct Search {
    const GradedGraph& a;
    const GradedGraph& b;
    const IsoAccept& accept;
    std::vector<int> result;
    long long budget = 2000000;

    bool run(std::vector<int> col) {
        if (--budget < 0) throw ResourceError("isomorphism search budget exhausted");
        refine(a, b, col);
        const int n = a.size();
        std::map<int, std::pair<std::vector<int>, std::vector<int>>> cells;
        for (int v = 0; v < n; ++v) cells[col[v]].first.push_back(v);
        for (int v = 0; v < n; ++v) {
            auto it = cells.find(col[n + v]);
            if (it == cells.end()) return false;
            it->second.second.push_back(v);
        }
        const std::pair<std::vector<int>, std::vector<int>>* target = nullptr;
        for (auto& [c, cell] : cells) {
            if (cell.first.size() != cell.second.size()) return false;
            if (cell.first.size() > 1 && (!target || cell.first.size() < target->first.size())) target = &cell;
        }
        if (!target) {
            std::vector<int> map(n);
            for (auto& [c, cell] : cells) map[cell.first[0]] = cell.second[0];
            for (int v = 0; v < n; ++v)
                for (int u : a.adj[v])
                    if (!b.adjacent(map[v], map[u])) return false;
            if (accept && !accept(map)) return false;
            result = std::move(map);
            return true;
        }
        const int fresh = *std::max_element(col.begin(), col.end()) + 1;
        const int x = target->first[0];
        for (int y : target->second) {
            std::vector<int> next = col;
            next[x] = fresh;
            next[n + y] = fresh;
            if (run(std::move(next))) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> graded_isomorphism(const GradedGraph& a, const GradedGraph& b, const IsoAccept& accept) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
    const int n = a.size();
    std::vector<int> col(2 * n);
    std::map<std::pair<int, int>, int> ids;
    auto key = [](const GradedGraph& g, int v) { return std::make_pair(g.grade[v], static_cast<int>(g.adj[v].size())); };
    for (int v = 0; v < n; ++v) {
        ids.emplace(key(a, v), 0);
        ids.emplace(key(b, v), 0);
    }
    int id = 0;
    for (auto& [k, c] : ids) c = id++;
    for (int v = 0; v < n; ++v) {
        col[v] = ids.at(key(a, v));
        col[n + v] = ids.at(key(b, v));
    }
    Search s{a, b, accept, {}};
    if (!s.run(std::move(col))) return std::nullopt;
    return s.result;
}

std::optional<std::vector<int>> simplicial_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b,
                                                       bool graded) {
    if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size()) return std::nullopt;
    GradedGraph ga = graph_of(a), gb = graph_of(b);
    if (!graded) {
        std::fill(ga.grade.begin(), ga.grade.end(), 0);
        std::fill(gb.grade.begin(), gb.grade.end(), 0);
    }
    std::set<Simplex> target(b.facets().begin(), b.facets().end());
    IsoAccept check = [&](const std::vector<int>& m) {
        for (auto& f : a.facets()) {
            Simplex g;
            for (int v : f) g.push_back(m[v]);
            std::sort(g.begin(), g.end());
            if (!target.count(g)) return false;
        }
        return true;
    };
    return graded_isomorphism(ga, gb, check);
}

}  // namespace wl2
