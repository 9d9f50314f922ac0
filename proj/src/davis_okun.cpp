#include "wl2/davis_okun.hpp"

#include "wl2/homology.hpp"
#include "wl2/isomorphism.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace wl2 {

std::vector<int> removal_schedule(int n) {
    if (n == 6) return {4, 3, 1};
    if (n == 8) return {6, 4, 3};
    throw InputError("removal schedules exist for n = 6 and n = 8 only");
}

bool ReductionReport::ok() const {
    for (auto& s : steps)
        if (s.failed > 0 || !s.first_factor_sphere || !s.second_factor_sphere || !s.affecting_stable) return false;
    return expected_dim() < 0 || dim_T == expected_dim();
}

namespace {

struct VertexCheck {
    bool join_ok = false;
    bool first_sphere = false;
    bool second_sphere = false;
};

bool is_homology_sphere(const BettiVector& b, int d) { return b.concentrated_in(d) && b.at(d) == 1; }

std::vector<int> alive_part(const std::vector<int>& cells, const std::vector<char>& alive) {
    std::vector<int> out;
    for (int c : cells)
        if (alive[c]) out.push_back(c);
    return out;
}

// Link of v in the current full subcomplex against the expected join.
VertexCheck check_vertex(const RegularCWComplex& X, const Poset& P, const GradedGraph& G,
                         const std::vector<char>& alive, int v, int n, std::uint64_t seed) {
    VertexCheck r;
    const int k = X.cell(v).dim;
    const std::vector<int>& lower = X.below()[v];

    r.first_sphere = is_homology_sphere(homology(X.closure(lower), true), k - 1);
    r.second_sphere = is_homology_sphere(homology(order_complex(P.restrict(P.above[v])), true), n - 2 - k);

    GradedGraph current = induced_subgraph(G, alive_part(G.adj[v], alive));
    GradedGraph first = comparability_graph(P.restrict(lower));
    GradedGraph second = comparability_graph(P.restrict(alive_part(P.above[v], alive)));
    GradedGraph expected = shuffled(graph_join(first, second), seed ^ (0x9e3779b97f4a7c15ULL * (v + 1)));
    r.join_ok = current.size() == expected.size() && current.edge_count() == expected.edge_count() &&
                graded_isomorphism(current, expected).has_value();
    return r;
}

std::vector<VertexCheck> check_all(const RegularCWComplex& X, const Poset& P, const GradedGraph& G,
                                   const std::vector<char>& alive, const std::vector<int>& targets, int n,
                                   std::uint64_t seed, int threads) {
    std::vector<VertexCheck> out(targets.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < targets.size(); i = next++) {
            try {
                out[i] = check_vertex(X, P, G, alive, targets[i], n, seed);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<int> side(const GradedGraph& G, const std::vector<char>& alive, int w, bool below) {
    std::vector<int> out;
    for (int u : G.adj[w])
        if (alive[u] && (below ? G.grade[u] < G.grade[w] : G.grade[u] > G.grade[w])) out.push_back(u);
    return out;
}

}  // namespace

ReductionReport davis_okun_reduce(const RegularCWComplex& X, int n, std::uint64_t seed, int threads) {
    std::vector<int> schedule = removal_schedule(n);
    if (X.dimension() != n - 1)
        throw InputError("expected a complex of dimension " + std::to_string(n - 1) + ", got " +
                         std::to_string(X.dimension()));
    return reduce_by_schedule(X, schedule, seed, threads);
}

ReductionReport reduce_by_schedule(const RegularCWComplex& X, const std::vector<int>& schedule, std::uint64_t seed,
                                   int threads) {
    const int n = X.dimension() + 1;
    for (int k : schedule)
        if (k < 0 || k >= n) throw InputError("no cells of dimension " + std::to_string(k) + " to remove");
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());

    ReductionReport rep;
    rep.n = n;
    rep.pl_declared = X.pl_declared();
    Poset P = X.face_poset();
    GradedGraph G = comparability_graph(P);
    std::vector<char> alive(X.size(), 1);

    for (int k : schedule) {
        RemovalStep step;
        step.dim = k;
        std::vector<int> targets = X.cells_of_dim(k);
        // Vertices of one dimension are pairwise non-adjacent in bX, so removing
        // any of them leaves the links of the others untouched.
        auto checks = check_all(X, P, G, alive, targets, n, seed, threads);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const VertexCheck& c = checks[i];
            ++step.checked;
            step.first_factor_sphere = step.first_factor_sphere && c.first_sphere;
            step.second_factor_sphere = step.second_factor_sphere && c.second_sphere;
            if (!c.join_ok || !c.first_sphere || !c.second_sphere) {
                ++step.failed;
                std::string why = !c.join_ok ? "link is not the expected join"
                                  : !c.first_sphere ? "boundary is not a homology sphere"
                                                    : "link of the cell is not a homology sphere";
                step.failures.push_back(X.cell(targets[i]).id + ": " + why);
            }
        }
        // Removing v changes only the links of its neighbours. Lower neighbours
        // keep their first factor and upper neighbours their second.
        for (int v : targets) {
            std::vector<std::pair<int, std::vector<int>>> before;
            for (int w : G.adj[v])
                if (alive[w]) before.emplace_back(w, side(G, alive, w, G.grade[w] < k));
            alive[v] = 0;
            ++step.removed;
            for (auto& [w, s] : before) {
                if (side(G, alive, w, G.grade[w] < k) != s) {
                    step.affecting_stable = false;
                    step.failures.push_back(X.cell(w).id + ": factor changed when removing " + X.cell(v).id);
                }
            }
        }
        rep.steps.push_back(std::move(step));
    }

    std::set<int> dims;
    for (int c = 0; c < X.size(); ++c)
        if (alive[c]) {
            rep.surviving.push_back(c);
            dims.insert(X.cell(c).dim);
        }
    rep.surviving_dims.assign(dims.begin(), dims.end());

    // chains[c][j] counts chains of j+1 survivors whose top element is c.
    std::vector<int> order = rep.surviving;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return X.cell(a).dim < X.cell(b).dim; });
    std::vector<std::vector<long long>> chains(X.size());
    rep.f_vector.assign(n, 0);
    for (int c : order) {
        chains[c].assign(n, 0);
        chains[c][0] = 1;
        for (int u : X.below()[c])
            if (alive[u])
                for (int j = 0; j + 1 < n; ++j) chains[c][j + 1] += chains[u][j];
        for (int j = 0; j < n; ++j) rep.f_vector[j] += chains[c][j];
    }
    while (!rep.f_vector.empty() && rep.f_vector.back() == 0) rep.f_vector.pop_back();
    rep.dim_T = static_cast<int>(rep.f_vector.size()) - 1;
    return rep;
}

SimplicialComplex reduced_complex(const RegularCWComplex& X, const ReductionReport& r) {
    return order_complex(X.face_poset().restrict(r.surviving));
}

CertOutcome cert_davis_okun(const RegularCWComplex& X, int n, std::uint64_t seed) {
    CertOutcome out;
    if (!X.pl_declared()) {
        out.refusal = "the complex does not declare a PL structure";
        return out;
    }
    ReductionReport rep = davis_okun_reduce(X, n, seed);
    for (auto& s : rep.steps)
        if (!s.failures.empty()) {
            out.refusal = "dimension " + std::to_string(s.dim) + " step: " + s.failures.front();
            return out;
        }
    if (!rep.ok()) {
        out.refusal = "final complex has dimension " + std::to_string(rep.dim_T);
        return out;
    }

    VanishingCertificate& c = out.cert;
    c.theorem = n == 6 ? "davis-okun-6" : "davis-okun-8";
    c.system = fnv1a_hex(X.to_text());
    c.parameters = {{"n", std::to_string(n)}, {"pl", "declared"}, {"cells", std::to_string(X.size())},
                    {"seed", std::to_string(seed)}};
    for (auto& s : rep.steps) {
        Evidence e{"link-check", {}};
        e.add("dim", std::to_string(s.dim));
        e.add("removed", std::to_string(s.removed));
        e.add("checked", std::to_string(s.checked));
        e.add("failed", std::to_string(s.failed));
        e.add("first_factor", "S^" + std::to_string(s.dim - 1));
        e.add("first_factor_sphere", s.first_factor_sphere ? "yes" : "no");
        e.add("second_factor", "S^" + std::to_string(n - 2 - s.dim));
        e.add("second_factor_sphere", s.second_factor_sphere ? "yes" : "no");
        e.add("affecting_links", s.affecting_stable ? "stable" : "changed");
        c.evidence.push_back(e);
    }
    Evidence f{"final-complex", {}};
    std::string dims, fv;
    for (int d : rep.surviving_dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    for (long long x : rep.f_vector) fv += (fv.empty() ? "" : ",") + std::to_string(x);
    f.add("surviving_dims", dims);
    f.add("f_vector", fv);
    f.add("dim", std::to_string(rep.dim_T));
    f.add("expected_dim", std::to_string(rep.expected_dim()));
    c.evidence.push_back(f);
    c.conclusion = conclusion_for(c.theorem, c.parameters);
    out.issued = true;
    return out;
}

}  // namespace wl2
