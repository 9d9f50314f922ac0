#include "wl2/fixtures.hpp"

#include "wl2/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wl2 {

namespace {

std::vector<std::string> letters(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i)
        out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
    return out;
}

using Labels = std::vector<std::vector<int>>;

Labels all_labels(int n, int value) {
    Labels m(n, std::vector<int>(n, value));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void set_label(Labels& m, int a, int b, int v) { m[a][b] = m[b][a] = v; }

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("bad ") + what + " '" + s + "'");
}

}  // namespace

CoxeterSystem kgon_system(int k) {
    if (k < 4) throw InputError("k-gon fixtures need k >= 4");
    return right_angled_system(cycle_graph(k));
}

CoxeterSystem kn_system(int n, int m) {
    if (n < 1) throw InputError("K_n needs n >= 1");
    if (m < 2) throw InputError("labels must be at least 2");
    return CoxeterSystem(letters(n), all_labels(n, m));
}

CoxeterSystem dihedral_system(int m) {
    if (m == 1 || m < 0) throw InputError("dihedral label must be 0 (infinity) or >= 2");
    Labels L = all_labels(2, m);
    return CoxeterSystem(letters(2), L);
}

CoxeterSystem finite_type_system(const std::string& type) {
    if (type.size() >= 4 && type.rfind("I2(", 0) == 0 && type.back() == ')') {
        int m = parse_int(type.substr(3, type.size() - 4), "dihedral label");
        if (m < 2) throw InputError("I2(m) needs m >= 2");
        return dihedral_system(m);
    }
    if (type.size() < 2) throw InputError("unknown finite type '" + type + "'");
    char family = type[0];
    int n = parse_int(type.substr(1), "rank");
    Labels m = all_labels(std::max(n, 1), 2);
    auto chain = [&](int len) {
        for (int i = 0; i + 1 < len; ++i) set_label(m, i, i + 1, 3);
    };
    switch (family) {
    case 'A':
        if (n < 1) throw InputError("A_n needs n >= 1");
        chain(n);
        break;
    case 'B':
        if (n < 2) throw InputError("B_n needs n >= 2");
        chain(n);
        set_label(m, n - 2, n - 1, 4);
        break;
    case 'D':
        if (n < 4) throw InputError("D_n needs n >= 4");
        chain(n - 1);
        set_label(m, n - 3, n - 1, 3);
        break;
    case 'E':
        if (n < 6 || n > 8) throw InputError("E_n needs 6 <= n <= 8");
        chain(n - 1);
        set_label(m, 2, n - 1, 3);
        break;
    case 'F':
        if (n != 4) throw InputError("only F4 exists");
        chain(4);
        set_label(m, 1, 2, 4);
        break;
    case 'H':
        if (n != 3 && n != 4) throw InputError("only H3 and H4 exist");
        chain(n);
        set_label(m, 0, 1, 5);
        break;
    default:
        throw InputError("unknown finite type '" + type + "'");
    }
    return CoxeterSystem(letters(n), m);
}

CoxeterSystem right_angled_system(const SimplicialComplex& K) {
    const int n = K.num_vertices();
    Labels m = all_labels(n, kInfinity);
    auto adj = K.adjacency();
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) m[u][v] = 2;
    return CoxeterSystem(K.labels(), m);
}

CoxeterSystem uniform_graph_system(const SimplicialComplex& K, int label) {
    if (label < 2) throw InputError("labels must be at least 2");
    const int n = K.num_vertices();
    Labels m = all_labels(n, kInfinity);
    auto adj = K.adjacency();
    for (int u = 0; u < n; ++u)
        for (int v : adj[u]) m[u][v] = label;
    return CoxeterSystem(K.labels(), m);
}

LabeledGraph graph_of_complex(const SimplicialComplex& K, int label) {
    LabeledGraph g;
    g.names = K.labels();
    g.adj.resize(K.num_vertices());
    auto adj = K.adjacency();
    for (int u = 0; u < K.num_vertices(); ++u)
        for (int v : adj[u])
            if (u < v) g.add_edge(u, v, label);
    return g;
}

SimplicialComplex torus_grid(int a, int b) {
    if (a < 3 || b < 3) throw InputError("torus grid needs both sides >= 3");
    auto id = [&](int i, int j) { return ((i % a + a) % a) * b + ((j % b + b) % b); };
    std::vector<std::string> labels;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) labels.push_back("v" + std::to_string(i) + "_" + std::to_string(j));
    std::vector<Simplex> tris;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            Simplex s1{id(i, j), id(i + 1, j), id(i + 1, j + 1)};
            Simplex s2{id(i, j), id(i, j + 1), id(i + 1, j + 1)};
            std::sort(s1.begin(), s1.end());
            std::sort(s2.begin(), s2.end());
            tris.push_back(s1);
            tris.push_back(s2);
        }
    return SimplicialComplex(std::move(tris), std::move(labels));
}

SimplicialComplex petersen_graph() {
    std::vector<Simplex> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::vector<std::string> labels;
    for (int i = 0; i < 10; ++i) labels.push_back("p" + std::to_string(i));
    return SimplicialComplex(std::move(edges), std::move(labels));
}

SimplicialComplex cycle_graph(int k) {
    if (k < 3) throw InputError("cycle needs k >= 3");
    std::vector<Simplex> edges;
    for (int i = 0; i < k; ++i) {
        Simplex e{i, (i + 1) % k};
        std::sort(e.begin(), e.end());
        edges.push_back(e);
    }
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("s" + std::to_string(i));
    return SimplicialComplex(std::move(edges), std::move(labels));
}

SimplicialComplex complete_graph(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return SimplicialComplex(std::move(edges), letters(n));
}

RegularCWComplex cube_cw(int n, bool boundary_only) {
    if (n < 0 || n > 12) throw InputError("cube dimension must be between 0 and 12");
    // A face is a word over {0,1,*}; its dimension is the number of stars.
    std::vector<std::string> faces;
    std::string w(n, '0');
    std::function<void(int)> gen = [&](int i) {
        if (i == n) {
            faces.push_back(w);
            return;
        }
        for (char c : {'0', '1', '*'}) {
            w[i] = c;
            gen(i + 1);
        }
    };
    gen(0);
    auto dim = [](const std::string& f) { return static_cast<int>(std::count(f.begin(), f.end(), '*')); };
    std::stable_sort(faces.begin(), faces.end(), [&](const std::string& x, const std::string& y) {
        return dim(x) != dim(y) ? dim(x) < dim(y) : x < y;
    });
    std::map<std::string, int> index;
    std::vector<Cell> cells;
    for (auto& f : faces) {
        int d = dim(f);
        if (boundary_only && d == n) continue;
        Cell c{n == 0 ? std::string("pt") : f, d, {}};
        int j = 0;
        for (int i = 0; i < n; ++i) {
            if (f[i] != '*') continue;
            int sign = j % 2 ? -1 : 1;
            std::string lo = f, hi = f;
            lo[i] = '0';
            hi[i] = '1';
            c.boundary.emplace_back(index.at(hi), sign);
            c.boundary.emplace_back(index.at(lo), -sign);
            ++j;
        }
        index.emplace(f, static_cast<int>(cells.size()));
        cells.push_back(std::move(c));
    }
    return RegularCWComplex(std::move(cells), true);
}

RegularCWComplex cw_from_simplicial(const SimplicialComplex& K, bool pl_declared) {
    std::vector<Cell> cells;
    std::map<Simplex, int> index;
    auto faces = K.faces();
    for (std::size_t d = 0; d < faces.size(); ++d)
        for (auto& s : faces[d]) {
            if (s.empty()) continue;
            Cell c;
            c.dim = static_cast<int>(s.size()) - 1;
            for (std::size_t i = 0; i < s.size(); ++i) c.id += (i ? "." : "") + K.label(s[i]);
            if (s.size() > 1)
                for (std::size_t k = 0; k < s.size(); ++k) {
                    Simplex f;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != k) f.push_back(s[i]);
                    c.boundary.emplace_back(index.at(f), k % 2 ? -1 : 1);
                }
            index.emplace(s, static_cast<int>(cells.size()));
            cells.push_back(std::move(c));
        }
    return RegularCWComplex(std::move(cells), pl_declared);
}

RegularCWComplex simplex_cw(int n, bool boundary_only) {
    if (n < 0 || n > 12) throw InputError("simplex dimension must be between 0 and 12");
    if (boundary_only && n == 0) throw InputError("the boundary of a point is empty");
    return cw_from_simplicial(boundary_only ? simplex_boundary(n) : simplex_complex(n), true);
}

RegularCWComplex cross_polytope_boundary_cw(int n) {
    if (n < 1 || n > 10) throw InputError("cross-polytope dimension must be between 1 and 10");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
        labels.push_back("m" + std::to_string(i));
    }
    // Facets choose one of the two antipodal vertices in every coordinate.
    std::vector<Simplex> facets;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Simplex f;
        for (int i = 0; i < n; ++i) f.push_back(2 * i + ((mask >> i) & 1));
        facets.push_back(f);
    }
    return cw_from_simplicial(SimplicialComplex(std::move(facets), std::move(labels)), true);
}

std::vector<std::string> fixture_names() {
    return {"kgon", "kn", "dihedral", "finite", "torus-grid", "petersen", "cycle", "cube", "cube-boundary",
            "simplex", "simplex-boundary", "cross-polytope-boundary", "square"};
}

std::string fixture_text(const std::string& name, const std::vector<std::string>& p) {
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw InputError("fixture '" + name + "' takes " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
    };
    auto num = [&](std::size_t i) { return parse_int(p[i], "parameter"); };
    if (name == "kgon") return need(1), kgon_system(num(0)).to_text();
    if (name == "kn") return need(2), kn_system(num(0), num(1)).to_text();
    if (name == "dihedral") return need(1), dihedral_system(num(0)).to_text();
    if (name == "finite") return need(1), finite_type_system(p[0]).to_text();
    if (name == "torus-grid") {
        need(2);
        SimplicialComplex K = torus_grid(num(0), num(1));
        if (!is_flag(K)) throw InputError("torus grid " + p[0] + "x" + p[1] + " is not flag; use sides >= 4");
        return K.to_text();
    }
    if (name == "petersen") return need(0), petersen_graph().to_text();
    if (name == "cycle") return need(1), cycle_graph(num(0)).to_text();
    if (name == "cube") return need(1), cube_cw(num(0), false).to_text();
    if (name == "cube-boundary") {
        need(1);
        if (num(0) < 1) throw InputError("cube-boundary needs n >= 1");
        return cube_cw(num(0), true).to_text();
    }
    if (name == "simplex") return need(1), simplex_cw(num(0), false).to_text();
    if (name == "simplex-boundary") return need(1), simplex_cw(num(0), true).to_text();
    if (name == "cross-polytope-boundary") return need(1), cross_polytope_boundary_cw(num(0)).to_text();
    if (name == "square") return need(0), cube_cw(2, false).to_text();
    throw InputError("unknown fixture family '" + name + "'");
}

}  // namespace wl2
