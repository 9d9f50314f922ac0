#include "wl2/simplicial.hpp"

#include "wl2/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace wl2 {

SimplicialComplex::SimplicialComplex() : facets_{Simplex{}} {}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets, std::vector<std::string> labels,
                                     std::vector<int> grades, bool already_maximal)
    : labels_(std::move(labels)), grades_(std::move(grades)) {
    int n = static_cast<int>(labels_.size());
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (!f.empty()) n = std::max(n, f.back() + 1);
    }
    if (labels_.empty())
        for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    if (static_cast<int>(labels_.size()) != n) throw InputError("vertex id beyond label list");
    if (!grades_.empty() && static_cast<int>(grades_.size()) != n) throw InputError("grade list size mismatch");

    facets.erase(std::remove_if(facets.begin(), facets.end(), [](auto& f) { return f.empty(); }), facets.end());
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    if (!already_maximal) {
        std::vector<std::size_t> order(facets.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return facets[a].size() > facets[b].size(); });
        std::vector<std::vector<std::size_t>> by_vertex(n);
        std::vector<Simplex> kept;
        for (std::size_t i : order) {
            const Simplex& c = facets[i];
            bool covered = false;
            for (std::size_t k : by_vertex[c[0]])
                if (kept[k].size() > c.size() && std::includes(kept[k].begin(), kept[k].end(), c.begin(), c.end())) {
                    covered = true;
                    break;
                }
            if (covered) continue;
            for (int v : c) by_vertex[v].push_back(kept.size());
            kept.push_back(c);
        }
        facets = std::move(kept);
    }
    std::vector<bool> used(n, false);
    for (auto& f : facets)
        for (int v : f) used[v] = true;
    for (int v = 0; v < n; ++v)
        if (!used[v]) facets.push_back({v});
    std::sort(facets.begin(), facets.end());
    if (facets.empty()) facets.push_back({});
    facets_ = std::move(facets);
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces() const {
    int dim = dimension();
    std::vector<std::vector<Simplex>> out(std::max(dim + 1, 0));
    for (auto& f : facets_) {
        const int k = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Simplex s;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            out[s.size() - 1].push_back(std::move(s));
        }
    }
    for (auto& layer : out) {
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty()) return true;
    for (auto& f : facets_)
        if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
    return false;
}

std::vector<std::vector<int>> SimplicialComplex::adjacency() const {
    std::vector<std::set<int>> nb(num_vertices());
    for (auto& f : facets_)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                nb[f[i]].insert(f[j]);
                nb[f[j]].insert(f[i]);
            }
    std::vector<std::vector<int>> out;
    for (auto& s : nb) out.emplace_back(s.begin(), s.end());
    return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    for (auto& layer : faces()) f.push_back(static_cast<long long>(layer.size()));
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0, sign = 1;
    for (long long x : f_vector()) {
        chi += sign * x;
        sign = -sign;
    }
    return chi;
}

int SimplicialComplex::find_label(std::string_view l) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (labels_[v] == l) return v;
    return -1;
}

std::string SimplicialComplex::to_text() const {
    std::ostringstream out;
    out << "simp v1\nvertices:";
    for (auto& l : labels_) out << ' ' << l;
    out << '\n';
    if (graded()) {
        out << "grades:";
        for (int g : grades_) out << ' ' << g;
        out << '\n';
    }
    for (auto& f : facets_) {
        if (f.empty()) continue;
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << labels_[f[i]];
        out << '\n';
    }
    return out.str();
}

SimplicialComplex parse_simplicial(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = false;
    std::vector<std::string> labels;
    std::map<std::string, int> id;
    std::vector<int> grades;
    std::vector<Simplex> facets;
    bool declared = false;  // once a vertices: line is seen, facets may only use its labels
    auto vertex = [&](const std::string& l, bool declare) {
        auto it = id.find(l);
        if (it != id.end()) {
            if (declare) throw InputError("duplicate vertex label: " + l);
            return it->second;
        }
        if (!declare && declared) throw InputError("undeclared vertex: " + l);
        int v = static_cast<int>(labels.size());
        labels.push_back(l);
        id.emplace(l, v);
        return v;
    };
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!header) {
            std::string ver;
            ls >> ver;
            if (tok != "simp" || ver != "v1") throw InputError("expected header 'simp v1'");
            header = true;
            continue;
        }
        if (tok == "vertices:") {
            while (ls >> tok) vertex(tok, true);
            declared = true;
        } else if (tok == "grades:") {
            int g;
            while (ls >> g) grades.push_back(g);
        } else {
            Simplex f{vertex(tok, false)};
            while (ls >> tok) f.push_back(vertex(tok, false));
            facets.push_back(f);
        }
    }
    if (!header) throw InputError("empty simp file");
    return SimplicialComplex(std::move(facets), std::move(labels), std::move(grades));
}

bool is_flag(const SimplicialComplex& K) {
    auto adj = K.adjacency();
    const int n = K.num_vertices();
    std::vector<std::vector<bool>> A(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v)
        for (int u : adj[v]) A[v][u] = true;
    // Bron-Kerbosch with pivoting over maximal cliques.
    bool ok = true;
    std::function<void(Simplex&, std::vector<int>, std::vector<int>)> bk = [&](Simplex& R, std::vector<int> P,
                                                                               std::vector<int> X) {
        if (!ok) return;
        if (P.empty() && X.empty()) {
            Simplex s = R;
            std::sort(s.begin(), s.end());
            if (!K.contains(s)) ok = false;
            return;
        }
        int pivot = !P.empty() ? P[0] : X[0];
        std::vector<int> cand;
        for (int v : P)
            if (!A[pivot][v]) cand.push_back(v);
        for (int v : cand) {
            std::vector<int> P2, X2;
            for (int u : P)
                if (A[v][u]) P2.push_back(u);
            for (int u : X)
                if (A[v][u]) X2.push_back(u);
            R.push_back(v);
            bk(R, P2, X2);
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), v));
            X.push_back(v);
        }
    };
    Simplex R;
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    bk(R, all, {});
    return ok;
}

namespace {

// Re-indexes the vertices appearing in `facets` (in increasing old id order).
SimplicialComplex reindexed(const SimplicialComplex& K, std::vector<Simplex> facets, bool maximal) {
    std::vector<int> used;
    for (auto& f : facets) used.insert(used.end(), f.begin(), f.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<int> remap(K.num_vertices(), -1);
    std::vector<std::string> labels;
    std::vector<int> grades;
    for (std::size_t i = 0; i < used.size(); ++i) {
        remap[used[i]] = static_cast<int>(i);
        labels.push_back(K.label(used[i]));
        if (K.graded()) grades.push_back(K.grade(used[i]));
    }
    for (auto& f : facets)
        for (int& v : f) v = remap[v];
    return SimplicialComplex(std::move(facets), std::move(labels), std::move(grades), maximal);
}

}  // namespace

SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<int>& V) {
    std::vector<bool> in(K.num_vertices(), false);
    for (int v : V) {
        if (v < 0 || v >= K.num_vertices()) throw InputError("vertex outside complex");
        in[v] = true;
    }
    std::vector<Simplex> facets;
    for (auto& f : K.facets()) {
        Simplex g;
        for (int v : f)
            if (in[v]) g.push_back(v);
        if (!g.empty()) facets.push_back(std::move(g));
    }
    // Isolated members of V with no facet would be dropped by reindexing; keep them.
    for (int v : V) facets.push_back({v});
    return reindexed(K, std::move(facets), false);
}

SimplicialComplex link(const SimplicialComplex& K, const Simplex& s0) {
    Simplex s = s0;
    std::sort(s.begin(), s.end());
    if (!K.contains(s)) throw InputError("simplex not in complex");
    std::vector<Simplex> facets;
    for (auto& f : K.facets()) {
        if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
        Simplex g;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(g));
        facets.push_back(std::move(g));
    }
    return reindexed(K, std::move(facets), true);
}

SimplicialComplex star(const SimplicialComplex& K, const Simplex& s0) {
    Simplex s = s0;
    std::sort(s.begin(), s.end());
    if (!K.contains(s)) throw InputError("simplex not in complex");
    std::vector<Simplex> facets;
    for (auto& f : K.facets())
        if (std::includes(f.begin(), f.end(), s.begin(), s.end())) facets.push_back(f);
    return reindexed(K, std::move(facets), true);
}

SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B) {
    const int na = A.num_vertices();
    std::vector<std::string> labels = A.labels();
    labels.insert(labels.end(), B.labels().begin(), B.labels().end());
    std::vector<int> grades;
    if (A.graded() || B.graded()) {
        for (int v = 0; v < na; ++v) grades.push_back(A.grade(v));
        for (int v = 0; v < B.num_vertices(); ++v) grades.push_back(B.grade(v));
    }
    std::vector<Simplex> facets;
    for (auto& f : A.facets())
        for (auto& g : B.facets()) {
            Simplex h = f;
            for (int v : g) h.push_back(v + na);
            facets.push_back(std::move(h));
        }
    return SimplicialComplex(std::move(facets), std::move(labels), std::move(grades), true);
}

SimplicialComplex cone(const SimplicialComplex& K) {
    std::vector<std::string> labels{"apex"};
    SimplicialComplex apex({{0}}, labels);
    return join(K, apex);
}

SimplicialComplex skeleton(const SimplicialComplex& K, int k) {
    if (k < 0) return SimplicialComplex();
    auto faces = K.faces();
    std::vector<Simplex> facets;
    for (int d = 0; d <= std::min(k, K.dimension()); ++d)
        for (auto& s : faces[d]) facets.push_back(s);
    return SimplicialComplex(std::move(facets), K.labels(), K.grades());
}

SimplicialComplex simplex_complex(int n) {
    Simplex f;
    for (int v = 0; v <= n; ++v) f.push_back(v);
    return SimplicialComplex({f});
}

SimplicialComplex simplex_boundary(int n) {
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n; ++skip) {
        Simplex f;
        for (int v = 0; v <= n; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    std::vector<std::string> labels;
    for (int v = 0; v <= n; ++v) labels.push_back(std::to_string(v));
    return SimplicialComplex(std::move(facets), labels, {}, true);
}

bool Poset::less(int a, int b) const { return std::binary_search(above[a].begin(), above[a].end(), b); }

Poset Poset::restrict(const std::vector<int>& keep) const {
    std::vector<int> remap(n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
    Poset P;
    P.n = static_cast<int>(keep.size());
    P.above.resize(P.n);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (int j : above[keep[i]])
            if (remap[j] >= 0) P.above[i].push_back(remap[j]);
        std::sort(P.above[i].begin(), P.above[i].end());
        if (!labels.empty()) P.labels.push_back(labels[keep[i]]);
        if (!grades.empty()) P.grades.push_back(grades[keep[i]]);
    }
    return P;
}

SimplicialComplex order_complex(const Poset& P) {
    std::vector<std::vector<int>> covers(P.n);
    std::vector<bool> has_below(P.n, false);
    for (int i = 0; i < P.n; ++i) {
        for (int j : P.above[i]) {
            has_below[j] = true;
            bool cover = true;
            for (int k : P.above[i])
                if (k != j && P.less(k, j)) {
                    cover = false;
                    break;
                }
            if (cover) covers[i].push_back(j);
        }
    }
    std::vector<Simplex> chains;
    Simplex cur;
    std::function<void(int)> walk = [&](int i) {
        cur.push_back(i);
        if (covers[i].empty())
            chains.push_back(cur);
        else
            for (int j : covers[i]) walk(j);
        cur.pop_back();
    };
    for (int i = 0; i < P.n; ++i)
        if (!has_below[i]) walk(i);
    std::vector<std::string> labels = P.labels;
    if (labels.empty())
        for (int i = 0; i < P.n; ++i) labels.push_back(std::to_string(i));
    return SimplicialComplex(std::move(chains), std::move(labels), P.grades, true);
}

SimplicialComplex flag_poset_complement(int m, int k) {
    if (k < 1 || k > m) throw InputError("flag_poset_complement needs 1 <= k <= m");
    Poset P;
    std::vector<unsigned> sets;
    for (unsigned s = 1; s + 1 < (1u << m); ++s)
        if (__builtin_popcount(s) >= k) sets.push_back(s);
    P.n = static_cast<int>(sets.size());
    P.above.resize(P.n);
    for (int i = 0; i < P.n; ++i) {
        std::string l;
        for (int b = 0; b < m; ++b)
            if (sets[i] & (1u << b)) l += (l.empty() ? "" : ".") + std::to_string(b);
        P.labels.push_back(l);
        P.grades.push_back(__builtin_popcount(sets[i]) - 1);
        for (int j = 0; j < P.n; ++j)
            if (i != j && (sets[i] & sets[j]) == sets[i]) P.above[i].push_back(j);
    }
    return order_complex(P);
}

}  // namespace wl2
