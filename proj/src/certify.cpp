#include "wl2/certify.hpp"

#include "wl2/davis.hpp"
#include "wl2/fixtures.hpp"
#include "wl2/graph_aut.hpp"
#include "wl2/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace wl2 {

namespace {

std::string poly_fields(const UPoly& p) {
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) s += (i ? "," : "") + to_string(p.coeff(i));
    return s;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool even_permutation(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    return inversions % 2 == 0;
}

WeightVector restrict_weights(const CoxeterSystem& sys, const CoxeterSystem& sub, const WeightVector& q) {
    WeightVector out;
    for (int c = 0; c < sub.num_classes(); ++c)
        out.push_back(q[sys.class_of(sys.index(sub.name(sub.class_rep(c))))]);
    return out;
}

Evidence region_evidence(const CoxeterSystem& sys, GenSet T, GenSet star, RegionResult& r) {
    Evidence e{"region-margin", {}};
    e.add("T", sys.set_str(T));
    e.add("star", sys.set_str(star));
    e.add("s0", to_string(r.s0));
    std::string ray;
    for (std::size_t i = 0; i < r.ray.size(); ++i) ray += (i ? "," : "") + to_string(r.ray[i]);
    e.add("ray", ray);
    if (r.margin_infinite) {
        e.add("rho", "inf");
        e.add("margin", "inf");
        return e;
    }
    AlgebraicReal rho = *r.radius.rho;
    // The root exceeds s0, so (max(lo, s0), hi] still isolates it.
    if (!rho.is_rational() && rho.lo < r.s0) rho.lo = r.s0;
    e.add("rho", rho.preview(15));
    e.add("rho_poly", poly_fields(rho.poly));
    e.add("rho_lo", to_string(rho.lo));
    e.add("rho_hi", to_string(rho.hi));
    e.add("margin", "finite");
    e.add("margin_lo", to_string(rho.lo - r.s0));
    e.add("margin_hi", to_string(rho.hi - r.s0));
    return e;
}

std::vector<GenSet> subsets_of_size(const CoxeterSystem& sys, int k) {
    std::vector<GenSet> out;
    for (GenSet T : sys.spherical())
        if (std::popcount(T) == k) out.push_back(T);
    return out;
}

}  // namespace

std::string weights_str(const WeightVector& q) {
    std::string s;
    for (std::size_t i = 0; i < q.size(); ++i) s += (i ? "," : "") + to_string(q[i]);
    return s;
}

Evidence StarReport::evidence(const CoxeterSystem& sys) const {
    Evidence e{"star-transitivity", {}};
    e.add("t", sys.name(t));
    e.add("degree", std::to_string(degree));
    e.add("m", std::to_string(m));
    e.add("group", group);
    e.add("G_t", G_t.get_str());
    e.add("E_T", E_T.get_str());
    e.add("transitive", transitive ? "yes" : "no");
    e.add("lcm", lcm_lhs.get_str());
    e.add("lcm_formula", lcm_rhs.get_str());
    e.add("lcm_note", "as-stated");
    e.add("dim_C2", to_string(dim_C2));
    if (full_stabilizer >= 0) {
        e.add("aut_stabilizer", std::to_string(full_stabilizer));
        e.add("aut_edge_stabilizer", std::to_string(full_edge_stabilizer));
    }
    return e;
}

StarReport star_transitivity_report(const CoxeterSystem& sys, int t) {
    if (sys.spherical_dimension() > 1) throw InputError("the nerve is not a graph");
    StarReport r;
    r.t = t;
    std::vector<int> leaves, labels;
    for (int s = 0; s < sys.rank(); ++s)
        if (s != t && sys.m(s, t) != kInfinity) {
            leaves.push_back(s);
            labels.push_back(sys.m(s, t));
        }
    r.degree = static_cast<int>(leaves.size());
    const int d = r.degree;
    bool uniform = d > 0 && std::all_of(labels.begin(), labels.end(), [&](int l) { return l == labels[0]; });
    r.m = uniform ? labels[0] : 0;
    bool alternating = uniform && d >= 3;
    r.group = alternating ? "A" + std::to_string(d) : (uniform ? "S" + std::to_string(d) : "label-preserving");
    if (d == 0) throw InputError("generator " + sys.name(t) + " has an empty star");
    if (d <= 8) {
        std::vector<int> p(d);
        std::iota(p.begin(), p.end(), 0);
        std::set<int> orbit;
        r.G_t = 0;
        r.E_T = 0;
        do {
            bool keep = true;
            for (int i = 0; i < d && keep; ++i) keep = labels[p[i]] == labels[i];
            if (!keep || (alternating && !even_permutation(p))) continue;
            r.G_t += 1;
            orbit.insert(p[0]);
            if (p[0] == 0) r.E_T += 1;
        } while (std::next_permutation(p.begin(), p.end()));
        r.transitive = static_cast<int>(orbit.size()) == d;
    } else if (uniform) {
        r.G_t = factorial(d) / 2;
        r.E_T = factorial(d - 1) / 2;
        r.transitive = true;
    } else {
        r.G_t = 1;
        r.E_T = 1;
        std::map<int, int> count;
        for (int l : labels) ++count[l];
        for (auto& [l, c] : count) r.G_t *= factorial(c);
        r.E_T = r.G_t / count[labels[0]];
        r.transitive = false;
    }
    r.ratio_ok = r.G_t == Integer(d) * r.E_T;
    if (uniform) {
        r.divides = r.m % d == 0;
        r.lcm_lhs = lcm(2 * r.G_t, 2 * Integer(r.m) * r.E_T);
        r.lcm_rhs = 2 * r.G_t * r.m / d;
        r.lcm_ok = r.divides && r.lcm_lhs == r.lcm_rhs;
    }
    try {
        AutGroup G = graph_aut(labeled_nerve_graph(sys), 100000);
        r.full_stabilizer = G.stabilizer_order(t);
        r.full_edge_stabilizer = G.edge_stabilizer_order(t, leaves[0]);
    } catch (const ResourceError&) {
    }
    WeightVector one(sys.num_classes(), Rational(1));
    auto series = ruin_dimension_series(sys, one, bit(t));
    r.dim_C2 = series.size() > 2 ? series[2] : Rational(0);
    return r;
}

CertOutcome cert_vanishing_by_stars(const CoxeterSystem& sys, const WeightVector& q, int k) {
    if (k < 0) throw InputError("k must be nonnegative");
    if (static_cast<int>(q.size()) != sys.num_classes()) throw InputError("weight vector has the wrong length");
    CertOutcome out;
    VanishingCertificate& c = out.cert;
    c.theorem = "vanishing-by-stars";
    c.system = sys.hash();
    auto Ts = subsets_of_size(sys, k);
    c.parameters = {{"q", weights_str(q)}, {"k", std::to_string(k)}, {"subsets", std::to_string(Ts.size())}};
    for (GenSet T : Ts) {
        GenSet star = st_of(sys, T, sys.all());
        CoxeterSystem sub = sys.restrict(star);
        RegionResult r = in_region(sub, restrict_weights(sys, sub, q));
        if (!r.inside) {
            out.refusal = "q is outside the growth region of W_St(T) for T=" + sys.set_str(T) + " (St(T)=" +
                          sys.set_str(star) + "): s0=" + to_string(r.s0) + ", rho=" + r.radius.rho->preview(15);
            return out;
        }
        c.evidence.push_back(region_evidence(sys, T, star, r));
    }
    c.conclusion = conclusion_for(c.theorem, c.parameters);
    out.issued = true;
    return out;
}

StarBound star_radius_bound(const CoxeterSystem& sys, int k) {
    StarBound b;
    auto Ts = subsets_of_size(sys, k);
    b.subsets = static_cast<int>(Ts.size());
    for (GenSet T : Ts) {
        CoxeterSystem sub = sys.restrict(st_of(sys, T, sys.all()));
        RadiusResult r = radius_of_convergence(sub, std::vector<Rational>(sub.num_classes(), Rational(1)));
        if (!r.rho) continue;
        if (!b.bound || compare(*r.rho, *b.bound) < 0) {
            b.bound = r.rho;
            b.T = T;
        }
    }
    return b;
}

CertOutcome cert_atiyah_Kn(int n, int m) {
    if (n < 2) throw InputError("K_n needs n >= 2");
    if (m < 2) throw InputError("labels must be at least 2");
    CertOutcome out;
    VanishingCertificate& c = out.cert;
    CoxeterSystem sys = kn_system(n, m);
    c.theorem = "atiyah-Kn";
    c.system = sys.hash();
    if (m < n - 1) {
        out.refusal = "label m=" + std::to_string(m) + " is below n-1=" + std::to_string(n - 1);
        return out;
    }
    if (sys.spherical_dimension() > 1) {
        out.refusal = "the nerve of K_" + std::to_string(n) + " with label " + std::to_string(m) + " is not a graph";
        return out;
    }
    // The core case K_{m+1} with label m contains W_{K_n} as a special subgroup.
    CoxeterSystem core = kn_system(m + 1, m);
    if (core.spherical_dimension() > 1) {
        out.refusal = "the core nerve K_" + std::to_string(m + 1) + " is not a graph";
        return out;
    }
    c.parameters = {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"core_n", std::to_string(m + 1)}};
    Evidence u{"uniform-complete", {}};
    u.add("n", std::to_string(n));
    u.add("m", std::to_string(m));
    u.add("nerve", "graph");
    u.add("core_n", std::to_string(m + 1));
    u.add("core_m", std::to_string(m));
    u.add("reduction", m > n - 1 ? "special subgroup of the core system" : "core case");
    c.evidence.push_back(u);
    for (int t = 0; t < core.rank(); ++t) {
        StarReport r = star_transitivity_report(core, t);
        if (!r.passes()) {
            out.refusal = "star of " + core.name(t) + " in the core system fails the transitivity hypotheses";
            return out;
        }
        c.evidence.push_back(r.evidence(core));
    }
    c.conclusion = conclusion_for(c.theorem, c.parameters);
    out.issued = true;
    return out;
}

CertOutcome cert_atiyah_Kn(const CoxeterSystem& sys) {
    const int n = sys.rank();
    if (n < 2) throw InputError("K_n needs n >= 2");
    int m = sys.m(0, 1);
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (sys.m(s, t) == kInfinity) throw InputError("the nerve is not a complete graph");
            if (sys.m(s, t) != m) throw InputError("labels are not uniform");
        }
    return cert_atiyah_Kn(n, m);
}

CertOutcome cert_atiyah_trianglefree(const CoxeterSystem& sys) {
    int m = 0;
    for (int s = 0; s < sys.rank(); ++s)
        for (int t = s + 1; t < sys.rank(); ++t) {
            int l = sys.m(s, t);
            if (l == kInfinity) continue;
            if (m && l != m) throw InputError("labels are not uniform");
            m = l;
        }
    if (!m) throw InputError("the nerve has no edges");
    CertOutcome out;
    VanishingCertificate& c = out.cert;
    c.theorem = "atiyah-trianglefree";
    c.system = sys.hash();
    LabeledGraph g = labeled_nerve_graph(sys);
    long long triangles = 0;
    for (auto [u, v] : g.edges())
        for (int w = v + 1; w < g.size(); ++w) triangles += g.label(u, w) && g.label(v, w);
    Integer L = 1;
    std::string degrees;
    int stars = 0;
    for (int v = 0; v < g.size(); ++v) {
        degrees += (v ? "," : "") + std::to_string(g.degree(v));
        if (g.degree(v) > 0) {
            L = lcm(L, Integer(g.degree(v)));
            ++stars;
        }
    }
    c.parameters = {{"m", std::to_string(m)}, {"stars", std::to_string(stars)}};
    if (triangles > 0) {
        out.refusal = "the graph has " + std::to_string(triangles) + " 3-cycles";
        return out;
    }
    if (Integer(m) % L != 0) {
        out.refusal = "m=" + std::to_string(m) + " is not a multiple of lcm(deg)=" + L.get_str();
        return out;
    }
    Evidence tf{"triangle-free", {}};
    tf.add("vertices", std::to_string(g.size()));
    tf.add("edges", std::to_string(g.edges().size()));
    tf.add("triangles", "0");
    c.evidence.push_back(tf);
    Evidence dl{"degree-lcm", {}};
    dl.add("degrees", degrees);
    dl.add("lcm", L.get_str());
    dl.add("m", std::to_string(m));
    c.evidence.push_back(dl);
    for (int t = 0; t < sys.rank(); ++t) {
        if (g.degree(t) == 0) continue;
        StarReport r = star_transitivity_report(sys, t);
        if (!r.passes()) {
            out.refusal = "star of " + sys.name(t) + " fails the transitivity hypotheses";
            return out;
        }
        c.evidence.push_back(r.evidence(sys));
    }
    c.conclusion = conclusion_for(c.theorem, c.parameters);
    out.issued = true;
    return out;
}

CertOutcome cert_surface_interval(const SimplicialComplex& L) {
    if (L.dimension() != 2) throw InputError("expected a 2-dimensional triangulated surface");
    if (!is_flag(L)) throw InputError("the triangulation is not flag");
    int max_link = 0;
    for (int v = 0; v < L.num_vertices(); ++v) {
        SimplicialComplex lk = link(L, {v});
        auto adj = lk.adjacency();
        bool cycle = lk.dimension() == 1 && lk.num_vertices() >= 4 &&
                     std::all_of(adj.begin(), adj.end(), [](auto& a) { return a.size() == 2; }) &&
                     homology(lk, true).concentrated_in(1) && homology(lk, true).at(1) == 1;
        if (!cycle) throw InputError("the link of " + L.label(v) + " is not a cycle of length >= 4");
        max_link = std::max(max_link, lk.num_vertices());
    }
    BettiVector b = homology(L, false);
    if (b.at(0) != 1 || b.at(2) != 1) throw InputError("the surface is not connected, closed and orientable");
    const long f0 = L.num_vertices();
    const long chi = static_cast<long>(L.euler_characteristic());

    CoxeterSystem sys = right_angled_system(L);
    CertOutcome out;
    VanishingCertificate& c = out.cert;
    c.theorem = "surface-interval";
    c.system = sys.hash();

    // 1/W along t, times (1+t)^3, must be the cubic in f0 and chi.
    UPoly cubic(std::vector<Rational>{Rational(1), Rational(-(f0 - 3)), Rational(f0 + 3 - 3 * chi), Rational(-(chi - 1))});
    auto [num, den] = growth_rational(sys, uniform_variables(sys)).inverse().along_ray({Rational(1)});
    UPoly cube = pow(UPoly(std::vector<Rational>{Rational(1), Rational(1)}), 3);
    if (!(num * cube == cubic * den)) throw InputError("growth series does not match the surface cubic");

    RadiusResult rr = radius_of_convergence(sys, std::vector<Rational>(sys.num_classes(), Rational(1)));
    if (!rr.rho) throw InputError("growth series has infinite radius");
    AlgebraicReal rho = *rr.rho;
    StarBound sb = star_radius_bound(sys, 1);
    if (!sb.bound) throw InputError("stars have infinite radius");
    AlgebraicReal top = *sb.bound;
    int v0 = std::countr_zero(sb.T);
    int link_size = std::popcount(lk_of(sys, sb.T, sys.all()));
    if (link_size != max_link) throw InputError("the smallest star radius is not at a vertex of maximal degree");
    if (compare(rho, top) >= 0) {
        out.refusal = "rho is not below rho_Lk(v0)";
        return out;
    }
    // Rational sample strictly between the two endpoints.
    // compare() left the intervals disjoint or one of them rational; shrink
    // both until a gap opens. The width halves each round, so this stops.
    Rational width = std::max(rho.hi - rho.lo, top.hi - top.lo);
    while (rho.hi >= top.lo) {
        width /= 2;
        if (!rho.is_rational()) rho.refine(width);
        if (!top.is_rational()) top.refine(width);
    }
    Rational q = (rho.hi + top.lo) / 2;
    WeightVector qv(sys.num_classes(), q);
    RegionResult whole = in_region(sys, qv);
    if (whole.inside) throw InputError("internal: sample q lies inside the growth region");
    CertOutcome stars = cert_vanishing_by_stars(sys, qv, 1);
    if (!stars.issued) {
        out.refusal = "stars hypothesis fails at q=" + to_string(q) + ": " + stars.refusal;
        return out;
    }

    // Intervals recorded against the defining polynomials themselves.
    UPoly quad(std::vector<Rational>{Rational(1), Rational(-(link_size - 2)), Rational(1)});
    auto narrow = [](const UPoly& p, const AlgebraicReal& a) {
        AlgebraicReal r{p.primitive(), a.lo, a.hi};
        return r;
    };
    AlgebraicReal rho_c = narrow(cubic, rho), top_c = narrow(quad, top);
    c.parameters = {{"f0", std::to_string(f0)}, {"chi", std::to_string(chi)}, {"k", "1"},
                    {"sample_q", to_string(q)}, {"subsets", std::to_string(stars.cert.evidence.size())}};
    Evidence e{"surface-interval", {}};
    e.add("f0", std::to_string(f0));
    e.add("chi", std::to_string(chi));
    e.add("cubic", poly_fields(cubic));
    e.add("rho", rho_c.preview(15));
    e.add("rho_lo", to_string(rho_c.lo));
    e.add("rho_hi", to_string(rho_c.hi));
    e.add("v0", sys.name(v0));
    e.add("link_size", std::to_string(link_size));
    e.add("rho_lk", top_c.preview(15));
    e.add("rho_lk_lo", to_string(top_c.lo));
    e.add("rho_lk_hi", to_string(top_c.hi));
    e.add("sample_q", to_string(q));
    e.add("sample_outside_region", "yes");
    c.evidence.push_back(e);
    for (auto& r : stars.cert.evidence) c.evidence.push_back(r);
    c.conclusion = conclusion_for(c.theorem, c.parameters);
    out.issued = true;
    return out;
}

}  // namespace wl2
