// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
// Exit status is the number of failed criteria.

#include "wl2/certificate.hpp"
#include "wl2/certify.hpp"
#include "wl2/cw.hpp"
#include "wl2/davis.hpp"
#include "wl2/davis_okun.hpp"
#include "wl2/enumeration.hpp"
#include "wl2/fixtures.hpp"
#include "wl2/growth.hpp"
#include "wl2/hecke.hpp"
#include "wl2/homology.hpp"
#include "wl2/roots.hpp"
#include "wl2/simplicial.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace wl2;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Report {
    std::ostringstream log;
    bool ok = true;
    void check(bool cond, const std::string& what) {
        if (!cond) ok = false;
        log << "    " << (cond ? "ok   " : "FAIL ") << what << "\n";
    }
    void note(const std::string& what) { log << "    note " << what << "\n"; }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Report&)>& body) {
    Report r;
    auto t0 = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.check(false, std::string("exception: ") + e.what());
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.1fs)", seconds_since(t0));
    std::cout << (r.ok ? "PASS" : "FAIL") << " " << id << " " << title << buf << "\n" << r.log.str() << std::flush;
    if (!r.ok) ++failures;
}

UPoly up(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return UPoly(r);
}

std::string join_q(const std::vector<Rational>& v) {
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ",") + to_string(x);
    return s;
}

// ((k-2) - sqrt(k^2-4k)) / 2 to 256 bits.
mpf_class closed_form_rho(int k) {
    mpf_class d(k * k - 4 * k, 256), r(0, 256);
    r = (mpf_class(k - 2, 256) - sqrt(d)) / 2;
    return r;
}

mpf_class to_mpf(const Rational& q) { return mpf_class(q, 256); }

// 1 - (f0-3) t + (f0+3-3chi) t^2 - (chi-1) t^3
UPoly surface_cubic(long f0, long chi) { return up({1, -(f0 - 3), f0 + 3 - 3 * chi, -(chi - 1)}); }

Rational random_q(std::mt19937_64& rng) {
    Rational q(1 + rng() % 9, 1 + rng() % 7);
    q.canonicalize();
    return q;
}

WeightVector random_weights(const CoxeterSystem& sys, std::mt19937_64& rng) {
    std::vector<Rational> v;
    for (int c = 0; c < sys.num_classes(); ++c) v.push_back(random_q(rng));
    return make_weights(sys, v);
}

struct Named {
    std::string name;
    CoxeterSystem sys;
};

std::vector<Named> growth_fixtures() {
    std::vector<Named> out;
    for (int k = 4; k <= 8; ++k) out.push_back({"kgon " + std::to_string(k), kgon_system(k)});
    out.push_back({"kn 4 3", kn_system(4, 3)});
    out.push_back({"dihedral inf", dihedral_system(0)});
    out.push_back({"torus-grid 4 4", right_angled_system(torus_grid(4, 4))});
    return out;
}

// Systems with more than 8 classes use the one-variable specialization.
std::vector<int> variables_for(const CoxeterSystem& sys) {
    return sys.num_classes() > 8 ? uniform_variables(sys) : std::vector<int>{};
}

// Ball census by length. BFS until the element budget is reached; beyond
// that, right-angled systems are counted by the ShortLex transfer method,
// which must agree with BFS on every length both reach.
std::vector<Integer> ball_census(const CoxeterSystem& sys, int N, Report& r, const std::string& name) {
    Enumerator e(sys, sys.all(), 2000000);
    int reached = 0;
    try {
        e.extend_to(N);
        reached = N;
    } catch (const ResourceError&) {
        reached = e.built_length();
    }
    auto sizes = e.layer_sizes();
    std::vector<Integer> bfs;
    for (int l = 0; l <= std::min(N, reached); ++l)
        bfs.emplace_back(static_cast<unsigned long>(l < static_cast<int>(sizes.size()) ? sizes[l] : 0));
    if (reached >= N) return bfs;
    if (!sys.right_angled()) {
        r.check(false, name + ": BFS stopped at length " + std::to_string(reached));
        return bfs;
    }
    auto transfer = census_right_angled(sys, N);
    bool agree = true;
    for (std::size_t l = 0; l < bfs.size(); ++l) agree = agree && bfs[l] == transfer[l];
    r.check(agree, name + ": BFS lengths 0.." + std::to_string(reached) + " agree with the transfer count, which supplies " +
                       std::to_string(reached + 1) + ".." + std::to_string(N));
    return transfer;
}

}  // namespace

int main() {
    std::mt19937_64 rng(20261017);
    std::cout << "acceptance: 11 criteria\n";

    criterion(1, "growth series agree with ball census (12 coefficients)", [](Report& r) {
        auto t0 = Clock::now();
        auto fixtures = growth_fixtures();
        r.check(fixtures.size() >= 8, std::to_string(fixtures.size()) + " systems");
        for (auto& [name, sys] : fixtures) {
            auto vars = variables_for(sys);
            auto coeffs = series_coefficients(growth_rational(sys, vars), 11);
            auto census = ball_census(sys, 11, r, name);
            bool same = census.size() == coeffs.size();
            for (std::size_t i = 0; same && i < coeffs.size(); ++i) same = coeffs[i] == Rational(census[i]);
            std::string shown;
            for (auto& c : census) shown += (shown.empty() ? "" : ",") + c.get_str();
            r.check(same, name + (vars.empty() ? "" : " (one variable)") + ": " + shown);
        }
        double secs = seconds_since(t0);
        r.check(secs < 60, "runtime " + std::to_string(secs) + "s < 60s");
    });

    criterion(2, "torus growth reciprocal matches the surface cubic", [](Report& r) {
        int n = 0;
        for (auto [a, b] : {std::pair{4, 4}, std::pair{5, 5}, std::pair{4, 5}}) {
            auto L = torus_grid(a, b);
            r.check(is_flag(L), "torus " + std::to_string(a) + "x" + std::to_string(b) + " is flag");
            long f0 = L.num_vertices(), chi = L.euler_characteristic();
            auto sys = right_angled_system(L);
            auto [num, den] = growth_rational(sys, uniform_variables(sys)).inverse().along_ray({Rational(1)});
            UPoly cubic = surface_cubic(f0, chi);
            Rational c = cubic.coeff(0) / num.coeff(0);
            UPoly scaled_num = c * num, scaled_den = c * den;
            bool numerator = scaled_num == cubic;
            bool denominator = scaled_den == pow(up({1, 1}), 3);
            r.check(chi == 0 && numerator && denominator,
                    "f0=" + std::to_string(f0) + " chi=" + std::to_string(chi) + ": 1/W = (" + scaled_num.str() + ") / (" +
                        scaled_den.str() + ")");
            n += numerator && denominator;
        }
        r.check(n >= 2, std::to_string(n) + " torus triangulations");
        r.note("the cubic is the numerator of 1/W; the reduced denominator is (1+t)^3");
    });

    criterion(3, "rho of right-angled k-gons within 1e-12 of the closed form", [](Report& r) {
        for (int k = 5; k <= 8; ++k) {
            auto res = radius_of_convergence(kgon_system(k), {Rational(1)});
            if (!res.rho) {
                r.check(false, "k=" + std::to_string(k) + ": no finite radius");
                continue;
            }
            AlgebraicReal rho = *res.rho;
            rho.refine(Rational(1, 1000000) / Integer("1000000000000"));
            bool isolated = isolates_one_root(rho.poly, rho.lo, rho.hi);
            mpf_class exact = closed_form_rho(k);
            mpf_class lo_err = abs(to_mpf(rho.lo) - exact), hi_err = abs(to_mpf(rho.hi) - exact);
            bool close = lo_err < mpf_class(1e-12, 256) && hi_err < mpf_class(1e-12, 256);
            // exact: the closed form is a root of t^2 - (k-2) t + 1 and that root lies in the interval
            UPoly quad = up({1, -(k - 2), 1});
            bool brackets = quad.sign_at(rho.lo) * quad.sign_at(rho.hi) < 0;
            r.check(isolated && close && brackets, "k=" + std::to_string(k) + ": rho = " + rho.preview(15) + " in (" +
                                                       decimal(rho.lo, 16) + ", " + decimal(rho.hi, 16) + "]");
        }
    });

    criterion(4, "alternating sum over spherical subsets equals 1/W on every fixture", [](Report& r) {
        std::vector<Named> fixtures = growth_fixtures();
        fixtures.push_back({"kn 4 7", kn_system(4, 7)});
        fixtures.push_back({"petersen m=3", uniform_graph_system(petersen_graph(), 3)});
        fixtures.push_back({"cycle 4 m=2", uniform_graph_system(cycle_graph(4), 2)});
        fixtures.push_back({"dihedral 5", dihedral_system(5)});
        fixtures.push_back({"B3", finite_type_system("B3")});
        fixtures.push_back({"H3", finite_type_system("H3")});
        fixtures.push_back({"A4", finite_type_system("A4")});
        fixtures.push_back({"torus-grid 5 5", right_angled_system(torus_grid(5, 5))});
        int literal = 0;
        for (auto& [name, sys] : fixtures) {
            auto vars = variables_for(sys);
            bool ok = euler_identity_check(sys, vars);
            r.check(ok, name + (vars.empty() ? "" : " (one variable)") + ": sum (-1)^|T| / W_T(q^-1) = 1/W(q)");
            auto W = growth_rational(sys, vars);
            literal += same_function(alternating_growth_sum(sys, vars), W.inverse());
        }
        r.note("sum (-1)^|T| / W_T(q) = 1/W(q) holds on " + std::to_string(literal) + " of " +
               std::to_string(fixtures.size()) + " fixtures; weights enter through q^-1");
    });

    criterion(5, "Hecke idempotents: h^2 = h, self-adjoint, trace, rank", [&rng](Report& r) {
        std::vector<Named> systems = {{"B3", finite_type_system("B3")},     {"A3", finite_type_system("A3")},
                                      {"H3", finite_type_system("H3")},     {"D4", finite_type_system("D4")},
                                      {"dihedral 5", dihedral_system(5)}, {"kn 4 3", kn_system(4, 3)},
                                      {"kgon 5", kgon_system(5)},         {"kn 4 7", kn_system(4, 7)}};
        int subsets = 0, failed = 0;
        for (auto& [name, sys] : systems) {
            for (GenSet T : sys.spherical()) {
                Rational order = growth_poly_finite(sys, T).eval(std::vector<Rational>(sys.num_classes(), 1));
                if (order > 48) continue;
                for (int trial = 0; trial < 5; ++trial) {
                    auto q = random_weights(sys, rng);
                    HeckeShadow H(sys, T, q);
                    auto h = H.idempotent(T);
                    auto R = H.right_multiplication(h);
                    Rational inv_sum = 0;
                    for (auto& w : H.weights()) inv_sum += 1 / w;
                    bool ok = H.multiply(h, h) == h && H.self_adjoint(R) && H.trace(h) == 1 / inv_sum &&
                              H.trace(h) == hecke_dimension(sys, T, q) && rank(R) == H.image_intersection_dim(T);
                    ++subsets;
                    if (!ok) {
                        ++failed;
                        r.check(false, name + " T=" + sys.set_str(T) + " q=" + join_q(q));
                    }
                }
            }
        }
        r.check(failed == 0, std::to_string(subsets) + " (T, q) pairs with |W_T| <= 48, " + std::to_string(failed) +
                                 " failures");
    });

    criterion(6, "weighted chain calculus on truncated and full complexes", [&rng](Report& r) {
        std::vector<Named> infinite = {{"kgon 5", kgon_system(5)}, {"kn 4 3", kn_system(4, 3)},
                                       {"dihedral inf", dihedral_system(0)}};
        for (auto& [name, sys] : infinite) {
            auto q = random_weights(sys, rng);
            TruncatedDavisComplex X(sys, q, 5);
            auto adj = adjoint_check(X, 100, rng());
            r.check(X.chain_complex().squares_to_zero() && X.perturbed_chain_complex().squares_to_zero(),
                    name + " radius 5 q=" + join_q(q) + ": d^2 = 0 and (dq)^2 = 0");
            r.check(adj.pairs == 100 && adj.passed == 100,
                    name + ": <dq f, g> = <f, delta g> on " + std::to_string(adj.passed) + "/100 pairs");
        }
        std::vector<Named> finite = {{"A3", finite_type_system("A3")}, {"B3", finite_type_system("B3")},
                                     {"dihedral 5", dihedral_system(5)}};
        for (auto& [name, sys] : finite) {
            bool squares = true, adjoint = true, concentrated = true;
            for (int trial = 0; trial < 5; ++trial) {
                auto q = random_weights(sys, rng);
                TruncatedDavisComplex X(sys, q, 1000);
                squares = squares && X.full() && X.chain_complex().squares_to_zero() &&
                          X.perturbed_chain_complex().squares_to_zero();
                if (trial == 0) {
                    auto adj = adjoint_check(X, 100, rng());
                    adjoint = adj.pairs == 100 && adj.passed == 100;
                }
                auto b = homology(X.perturbed_chain_complex());
                concentrated = concentrated && b.concentrated_in(0) && b.at(0) == 1;
            }
            r.check(squares, name + " full complex, 5 q: d^2 = 0 and (dq)^2 = 0");
            r.check(adjoint, name + ": adjointness on 100 pairs");
            r.check(concentrated, name + ": homology of (C, dq) is Q in degree 0 for 5 q");
        }
    });

    criterion(7, "ruin bookkeeping", [&rng](Report& r) {
        std::vector<Named> systems = {{"kgon 5", kgon_system(5)},
                                      {"kn 4 3", kn_system(4, 3)},
                                      {"petersen m=3", uniform_graph_system(petersen_graph(), 3)},
                                      {"B3", finite_type_system("B3")}};
        int pairs = 0, bad = 0;
        for (auto& [name, sys] : systems) {
            // every spherical coset must fit in the ball, or its cells are truncated away
            int radius = 0;
            for (GenSet T : sys.spherical())
                radius = std::max(radius, growth_poly_finite(sys, T).along_ray(std::vector<Rational>(sys.num_classes(), 1)).degree());
            TruncatedDavisComplex X(sys, make_weights(sys, {Rational(1)}), radius);
            std::vector<GenSet> Us = {sys.all()};
            for (int i = 0; i < 3; ++i) Us.push_back((rng() & sys.all()) | bit(0));
            for (GenSet U : Us)
                for (GenSet T : sys.spherical()) {
                    if ((T & U) != T) continue;
                    auto R = ruin(X, U, T);
                    auto types = ruin_types(sys, U, T);
                    for (int d = 0; d < static_cast<int>(R.relative_types.size()); ++d) {
                        std::vector<GenSet> expected, got = R.relative_types[d];
                        for (GenSet S : types)
                            if (popcount(S) == d) expected.push_back(S);
                        std::sort(expected.begin(), expected.end());
                        std::sort(got.begin(), got.end());
                        ++pairs;
                        if (got != expected) {
                            ++bad;
                            r.check(false, name + " U=" + sys.set_str(U) + " T=" + sys.set_str(T) + " degree " +
                                               std::to_string(d));
                        }
                    }
                }
        }
        r.check(bad == 0, std::to_string(pairs) + " (U, T, degree) type sets equal the spherical T' between T and U");

        std::vector<std::pair<Named, int>> uniform = {{{"kn 4 3", kn_system(4, 3)}, 3},
                                                      {{"kn 4 7", kn_system(4, 7)}, 7},
                                                      {{"petersen m=3", uniform_graph_system(petersen_graph(), 3)}, 3},
                                                      {{"cycle 4 m=2", uniform_graph_system(cycle_graph(4), 2)}, 2},
                                                      {{"cycle 6 m=4", uniform_graph_system(cycle_graph(6), 4)}, 4}};
        for (auto& [fx, m] : uniform) {
            auto& sys = fx.sys;
            auto q = make_weights(sys, {Rational(1)});
            bool ok = true;
            std::string shown;
            for (int t = 0; t < sys.rank(); ++t) {
                int deg = 0;
                for (int s = 0; s < sys.rank(); ++s) deg += s != t && sys.m(s, t) != kInfinity;
                auto series = ruin_dimension_series(sys, q, bit(t));
                Rational expected(deg, 2 * m);
                expected.canonicalize();
                ok = ok && series[2] == expected;
                if (t == 0) shown = to_string(series[2]);
            }
            r.check(ok, fx.name + ": dim C_2 of the (S,t)-ruin = deg(t)/(2m) = " + shown + " for every t");
        }

        int triples = 0;
        bool all = true;
        std::string shown;
        while (triples < 10) {
            auto& [name, sys] = systems[rng() % systems.size()];
            const auto& sph = sys.spherical();
            GenSet T = sph[rng() % sph.size()];
            if (T == 0) continue;
            auto in_T = members(T);
            int s = in_T[rng() % in_T.size()];
            GenSet U = (rng() & sys.all()) | T;
            std::vector<Rational> values;
            auto q = random_weights(sys, rng);
            bool ok = ruin_additivity_check(sys, q, U, T, s);
            all = all && ok;
            if (!ok) r.check(false, name + " U=" + sys.set_str(U) + " T=" + sys.set_str(T) + " s=" + sys.name(s));
            ++triples;
        }
        r.check(all, "additivity on 10 random (U, T, s) triples with random q");
    });

    criterion(8, "skeleton and flag poset complement homology", [](Report& r) {
        auto binom = [](int n, int k) {
            long long v = 1;
            for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
            return k < 0 || k > n ? 0LL : v;
        };
        int cases = 0, bad = 0;
        for (int n = 2; n <= 6; ++n)
            for (int k = 1; k < n; ++k) {
                auto b = homology(skeleton(simplex_complex(n), k), true);
                ++cases;
                if (!(b.concentrated_in(k) && b.at(k) == binom(n, k + 1))) {
                    ++bad;
                    r.check(false, "skeleton n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        r.check(bad == 0, std::to_string(cases) + " skeleta: reduced H_k of rank C(n, k+1) only");
        cases = bad = 0;
        for (int m = 1; m <= 5; ++m)
            for (int k = 1; k <= m; ++k) {
                auto b = homology(flag_poset_complement(m, k), true);
                // the (k-2)-skeleton of the simplex on m vertices
                auto sk = k >= 2 ? skeleton(simplex_complex(m - 1), k - 2) : SimplicialComplex();
                long long expected = homology(sk, true).at(k - 2);
                ++cases;
                if (!(b.concentrated_in(m - k - 1) && b.at(m - k - 1) == expected)) {
                    ++bad;
                    r.check(false, "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + b.str());
                }
            }
        r.check(bad == 0, std::to_string(cases) + " (m, k) pairs concentrated in degree m-k-1 with the skeleton's rank");
    });

    criterion(9, "vertex links of subdivisions split as joins; neighbour factors stable", [](Report& r) {
        std::vector<std::pair<std::string, RegularCWComplex>> fixtures = {
            {"b(boundary cube^3)", cube_cw(3, true)},
            {"b(boundary simplex^4)", simplex_cw(4, true)},
            {"b(boundary cross-polytope^3)", cross_polytope_boundary_cw(3)}};
        for (auto& [name, X] : fixtures) {
            int bad = 0;
            for (int c = 0; c < X.size(); ++c) bad += !link_join_decomposition_check(X, c);
            r.check(bad == 0, name + ": " + std::to_string(X.size()) + " vertices, " + std::to_string(bad) + " failures");
            std::vector<int> schedule;
            for (int k = X.dimension() - 1; k >= 1; --k) schedule.push_back(k);
            auto rep = reduce_by_schedule(X, schedule, 9);
            bool stable = true, joins = true;
            int removed = 0;
            for (auto& s : rep.steps) {
                stable = stable && s.affecting_stable;
                joins = joins && s.failed == 0 && s.first_factor_sphere && s.second_factor_sphere;
                removed += s.removed;
            }
            r.check(stable && joins, name + ": " + std::to_string(removed) +
                                         " removals, every removed link a join and every neighbour factor unchanged");
        }
    });

    criterion(10, "Davis-Okun reduction", [](Report& r) {
        struct Case {
            std::string name;
            RegularCWComplex X;
            int n, dim;
        };
        std::vector<Case> cases = {{"boundary 6-cube", cube_cw(6, true), 6, 2},
                                   {"boundary 6-simplex", simplex_cw(6, true), 6, 2},
                                   {"boundary 8-cube", cube_cw(8, true), 8, 4}};
        for (auto& c : cases) {
            auto t0 = Clock::now();
            auto rep = davis_okun_reduce(c.X, c.n);
            double secs = seconds_since(t0);
            int checked = 0, failed = 0;
            bool spheres = true, stable = true;
            for (auto& s : rep.steps) {
                checked += s.checked;
                failed += s.failed;
                spheres = spheres && s.first_factor_sphere && s.second_factor_sphere;
                stable = stable && s.affecting_stable;
            }
            std::string fv;
            for (auto x : rep.f_vector) fv += (fv.empty() ? "" : ",") + std::to_string(x);
            r.check(rep.dim_T == c.dim && failed == 0 && spheres && stable,
                    c.name + ": dim T = " + std::to_string(rep.dim_T) + ", f = (" + fv + "), " + std::to_string(checked) +
                        " link checks, " + std::to_string(failed) + " failed");
            if (c.n == 8) r.check(secs < 600, c.name + " runtime " + std::to_string(secs) + "s < 600s");
        }
    });

    criterion(11, "certificates reproduce their evidence and verify", [](Report& r) {
        auto round_trip = [&r](const std::string& name, const CertOutcome& out) {
            if (!out.issued) {
                r.check(false, name + " refused: " + out.refusal);
                return;
            }
            auto v = verify_certificate(out.cert);
            auto from_text = verify_certificate(parse_certificate(out.cert.to_text()));
            auto from_json = verify_certificate(parse_certificate(out.cert.to_json()));
            r.check(v.ok && from_text.ok && from_json.ok, name + ": --verify round trip (text and JSON)");
        };
        auto star_evidence = [&r](const std::string& name, const VanishingCertificate& c) {
            int stars = 0;
            bool ok = true;
            for (auto& e : c.evidence) {
                if (e.kind != "star-transitivity") continue;
                ++stars;
                Integer G(e.get("G_t")), E(e.get("E_T")), deg(e.get("degree")), m(e.get("m"));
                Integer lhs = lcm(2 * G, 2 * m * E);
                Integer rhs = 2 * G * m / deg;
                ok = ok && G == deg * E && lhs == rhs && Integer(e.get("lcm")) == lhs &&
                     Integer(e.get("lcm_formula")) == rhs;
            }
            r.check(ok && stars > 0, name + ": " + std::to_string(stars) +
                                         " stars with |G_t|/|E_T| = deg(t) and lcm(2|G_t|, 2m|E_T|) = 2|G_t|m/deg(t)");
        };

        auto kn = cert_atiyah_Kn(4, 3);
        round_trip("K_4, m=3", kn);
        if (kn.issued) star_evidence("K_4, m=3", kn.cert);
        auto pet = cert_atiyah_trianglefree(uniform_graph_system(petersen_graph(), 3));
        round_trip("Petersen, m=3", pet);
        if (pet.issued) star_evidence("Petersen, m=3", pet.cert);

        auto L = torus_grid(4, 4);
        auto surf = cert_surface_interval(L);
        round_trip("torus 4x4 interval", surf);
        if (surf.issued) {
            auto& e = surf.cert.evidence.front();
            // rho: the smallest positive root of the criterion 2 cubic
            UPoly cubic = surface_cubic(L.num_vertices(), L.euler_characteristic());
            Rational lo(e.get("rho_lo")), hi(e.get("rho_hi"));
            lo.canonicalize();
            hi.canonicalize();
            auto root = smallest_positive_root(cubic);
            bool rho_ok = root && isolates_one_root(cubic, lo, hi) && compare(lo, *root) < 0 && compare(hi, *root) >= 0;
            r.check(rho_ok && e.get("cubic") == "1,-13,19,1",
                    "rho endpoint isolates the smallest root of " + cubic.str() + " in (" + decimal(lo, 15) + ", " +
                        decimal(hi, 15) + "]");
            // rho_Lk(v0): the hexagon link, closed form with k=6
            int k = std::stoi(e.get("link_size"));
            Rational llo(e.get("rho_lk_lo")), lhi(e.get("rho_lk_hi"));
            llo.canonicalize();
            lhi.canonicalize();
            mpf_class exact = closed_form_rho(k);
            bool lk_ok = to_mpf(llo) < exact && exact <= to_mpf(lhi) && to_mpf(lhi) - to_mpf(llo) < mpf_class(1e-12, 256);
            r.check(lk_ok, "rho_Lk(v0) endpoint (k=" + std::to_string(k) + ") contains ((k-2)-sqrt(k^2-4k))/2 with width < 1e-12");
            r.check(hi <= llo, "rho < rho_Lk(v0)");
        }

        auto dsimplex = cert_davis_okun(simplex_cw(6, true), 6);
        round_trip("boundary 6-simplex reduction", dsimplex);
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures;
}
