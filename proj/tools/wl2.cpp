#include "wl2/certify.hpp"
#include "wl2/davis.hpp"
#include "wl2/davis_okun.hpp"
#include "wl2/fixtures.hpp"
#include "wl2/formats.hpp"
#include "wl2/growth.hpp"
#include "wl2/homology.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace wl2;
using Json = nlohmann::ordered_json;

namespace {

// Exit codes.
constexpr int kOk = 0, kError = 1, kRefused = 2, kResource = 3, kUsage = 64;

struct Options {
    bool json = false;
    std::uint64_t seed = 1;
};

Options opt;

void emit(const Json& j, const std::string& text) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

CoxeterSystem load_system(const std::string& path) {
    std::string text = read_file(path);
    if (detect_kind(text) != FileKind::Coxeter) throw InputError(path + ": expected a coxeter v1 file");
    return parse_system(text);
}

WeightVector load_weights(const CoxeterSystem& sys, const std::string& q) {
    if (q.empty()) throw InputError("--q is required");
    return make_weights(sys, parse_rational_list(q));
}

std::string interval_str(const AlgebraicReal& r) { return "[" + to_string(r.lo) + ", " + to_string(r.hi) + "]"; }

// --- classify ---------------------------------------------------------------

int cmd_classify(const std::string& path) {
    AnyInput in = parse_any(read_file(path));
    Json j;
    std::ostringstream t;
    if (auto* sys = std::get_if<CoxeterSystem>(&in)) {
        std::vector<std::string> classes;
        for (int c = 0; c < sys->num_classes(); ++c) {
            GenSet C = 0;
            for (int s = 0; s < sys->rank(); ++s)
                if (sys->class_of(s) == c) C |= bit(s);
            classes.push_back(sys->set_str(C));
        }
        std::vector<long long> by_size(sys->spherical_dimension() + 2, 0);
        for (GenSet T : sys->spherical()) ++by_size[popcount(T)];
        std::vector<std::string> sizes;
        for (auto x : by_size) sizes.push_back(std::to_string(x));
        j["format"] = "coxeter v1";
        j["generators"] = sys->names();
        j["classes"] = classes;
        j["type"] = sys->finite_type(sys->all());
        j["right_angled"] = sys->right_angled();
        j["spherical_by_size"] = by_size;
        j["nerve_dimension"] = sys->spherical_dimension();
        t << "format: coxeter v1\n"
          << "generators: " << join(sys->names(), " ") << "\n"
          << "classes: " << join(classes, " ") << "\n"
          << "type: " << sys->finite_type(sys->all()) << "\n"
          << "right-angled: " << (sys->right_angled() ? "yes" : "no") << "\n"
          << "spherical subsets by size: " << join(sizes, " ") << "\n"
          << "nerve dimension: " << sys->spherical_dimension() << "\n";
    } else if (auto* K = std::get_if<SimplicialComplex>(&in)) {
        auto f = K->f_vector();
        std::vector<std::string> fs;
        for (auto x : f) fs.push_back(std::to_string(x));
        j["format"] = "simp v1";
        j["vertices"] = K->num_vertices();
        j["dimension"] = K->dimension();
        j["f_vector"] = f;
        j["euler_characteristic"] = K->euler_characteristic();
        j["flag"] = is_flag(*K);
        t << "format: simp v1\n"
          << "vertices: " << K->num_vertices() << "\n"
          << "dimension: " << K->dimension() << "\n"
          << "f-vector: " << join(fs, " ") << "\n"
          << "euler characteristic: " << K->euler_characteristic() << "\n"
          << "flag: " << (is_flag(*K) ? "yes" : "no") << "\n";
    } else {
        auto& X = std::get<RegularCWComplex>(in);
        std::vector<long long> counts(X.dimension() + 1, 0);
        long long chi = 0;
        for (auto& c : X.cells()) {
            ++counts[c.dim];
            chi += c.dim % 2 ? -1 : 1;
        }
        std::vector<std::string> cs;
        for (auto x : counts) cs.push_back(std::to_string(x));
        j["format"] = "cw v1";
        j["cells"] = X.size();
        j["dimension"] = X.dimension();
        j["cells_by_dim"] = counts;
        j["euler_characteristic"] = chi;
        j["pl_declared"] = X.pl_declared();
        t << "format: cw v1\n"
          << "cells: " << X.size() << "\n"
          << "dimension: " << X.dimension() << "\n"
          << "cells by dimension: " << join(cs, " ") << "\n"
          << "euler characteristic: " << chi << "\n"
          << "pl: " << (X.pl_declared() ? "declared" : "not declared") << "\n";
    }
    emit(j, t.str());
    return kOk;
}

// --- series -----------------------------------------------------------------

int cmd_growth(const std::string& path, bool multivariate) {
    CoxeterSystem sys = load_system(path);
    std::string line;
    if (multivariate) {
        line = format_inverse_growth(sys, inverse_growth(sys), true);
    } else {
        auto [num, den] = growth_along_ray(sys, std::vector<Rational>(sys.num_classes(), Rational(1)));
        line = format_inverse_growth(den, num);
    }
    Json j;
    j["inverse_growth"] = line.substr(6);
    j["multivariate"] = multivariate;
    emit(j, line + "\n");
    return kOk;
}

int cmd_rho(const std::string& path, const std::string& ray_text) {
    CoxeterSystem sys = load_system(path);
    std::vector<Rational> ray = ray_text.empty() ? std::vector<Rational>(sys.num_classes(), Rational(1))
                                                 : make_weights(sys, parse_rational_list(ray_text));
    RadiusResult r = radius_of_convergence(sys, ray);
    Json j;
    std::string text;
    if (!r.rho) {
        j["rho"] = "inf";
        text = "rho = inf\n";
    } else if (r.rho->is_rational()) {
        j["rho"] = to_string(r.rho->lo);
        text = "rho = " + to_string(r.rho->lo) + "\n";
    } else {
        std::string p = r.rho->preview(11);
        j["rho"] = p;
        j["lo"] = to_string(r.rho->lo);
        j["hi"] = to_string(r.rho->hi);
        j["polynomial"] = r.rho->poly.str();
        text = "rho = " + p + "... in " + interval_str(*r.rho) + "\n";
    }
    emit(j, text);
    return kOk;
}

int cmd_euler(const std::string& path, const std::string& q_text) {
    CoxeterSystem sys = load_system(path);
    Json j;
    std::ostringstream t;
    if (!q_text.empty()) {
        WeightVector q = load_weights(sys, q_text);
        std::vector<Rational> per_gen;
        for (int c = 0; c < sys.num_classes(); ++c) per_gen.push_back(q[c]);
        Rational chi = weighted_euler(sys, q);
        auto [num, den] = growth_along_ray(sys, per_gen);
        Rational n1 = num.eval(Rational(1)), d1 = den.eval(Rational(1));
        j["q"] = weights_str(q);
        j["chi_q"] = to_string(chi);
        t << "q = " << weights_str(q) << "\n" << "chi_q = " << to_string(chi) << "\n";
        if (n1 != 0) {
            j["inverse_growth_at_q"] = to_string(d1 / n1);
            t << "1/W(q) = " << to_string(d1 / n1) << "\n";
        }
    }
    // Past a handful of classes the multivariate check is out of reach, so
    // all class variables are identified with one t.
    bool uniform = sys.num_classes() > 8;
    bool ok = euler_identity_check(sys, uniform ? uniform_variables(sys) : std::vector<int>{});
    j["identity"] = ok;
    j["identity_variables"] = uniform ? "t" : "per class";
    t << "identity sum (-1)^|T| / W_T(q^-1) = 1/W(q)" << (uniform ? " in one variable t" : "") << ": "
      << (ok ? "holds" : "fails") << "\n";
    emit(j, t.str());
    return ok ? kOk : kRefused;
}

// --- certificates -------------------------------------------------------------

int print_outcome(const CertOutcome& o) {
    if (!o.issued) {
        Json j;
        j["refusal"] = o.refusal;
        emit(j, "refused: " + o.refusal + "\n");
        return kRefused;
    }
    std::cout << (opt.json ? o.cert.to_json() + "\n" : o.cert.to_text());
    return kOk;
}

int cmd_vanish_stars(const std::string& path, const std::string& q_text, int k) {
    CoxeterSystem sys = load_system(path);
    WeightVector q = load_weights(sys, q_text);
    return print_outcome(cert_vanishing_by_stars(sys, q, k));
}

int cmd_verify(const std::string& path) {
    VanishingCertificate c = parse_certificate(read_file(path));
    Verification v = verify_certificate(c);
    Json j;
    j["theorem"] = c.theorem;
    j["ok"] = v.ok;
    j["problems"] = v.problems;
    std::string text = std::string("verify: ") + (v.ok ? "ok" : "failed") + " (" + c.theorem + ")\n";
    for (auto& p : v.problems) text += "  " + p + "\n";
    emit(j, text);
    return v.ok ? kOk : kRefused;
}

// --- davis ------------------------------------------------------------------------

int cmd_ruin(const std::string& path, const std::string& T_text, const std::string& U_text, const std::string& q_text) {
    CoxeterSystem sys = load_system(path);
    WeightVector q = load_weights(sys, q_text);
    GenSet T = sys.parse_set(T_text);
    GenSet U = U_text.empty() ? sys.all() : sys.parse_set(U_text);
    if (T & ~U) throw InputError("T is not contained in U");
    std::vector<Rational> dims = ruin_dimension_series(sys, q, T, U);
    std::vector<GenSet> types = ruin_types(sys, U, T);
    Json j;
    std::ostringstream t;
    j["U"] = sys.set_str(U);
    j["T"] = sys.set_str(T);
    t << "U = " << sys.set_str(U) << "\nT = " << sys.set_str(T) << "\n";
    Json jd = Json::object();
    for (std::size_t d = 0; d < dims.size(); ++d) {
        std::vector<std::string> names;
        for (GenSet S : types)
            if (popcount(S) == static_cast<int>(d)) names.push_back(sys.set_str(S));
        if (names.empty()) continue;
        jd[std::to_string(d)] = {{"types", names}, {"dim", to_string(dims[d])}};
        t << "C_" << d << ": dim " << to_string(dims[d]) << " types " << join(names, " ") << "\n";
    }
    j["degrees"] = jd;
    bool all_ok = true;
    Json jadd = Json::object();
    for (int s : members(T)) {
        bool ok = ruin_additivity_check(sys, q, U, T, s);
        all_ok = all_ok && ok;
        jadd[sys.name(s)] = ok;
        t << "additivity at " << sys.name(s) << ": " << (ok ? "holds" : "fails") << "\n";
    }
    j["additivity"] = jadd;
    emit(j, t.str());
    return all_ok ? kOk : kRefused;
}

int cmd_davis_ball(const std::string& path, int radius, const std::string& q_text, bool adjoint, bool hom, int pairs) {
    CoxeterSystem sys = load_system(path);
    WeightVector q = load_weights(sys, q_text);
    TruncatedDavisComplex X(sys, q, radius);
    Json j;
    std::ostringstream t;
    std::vector<long long> counts;
    std::vector<std::string> cs;
    for (int d = 0; d <= X.dimension(); ++d) {
        counts.push_back(X.count(d));
        cs.push_back(std::to_string(X.count(d)));
    }
    bool sq = X.chain_complex().squares_to_zero();
    bool sqq = X.perturbed_chain_complex().squares_to_zero();
    j["radius"] = radius;
    j["q"] = weights_str(q);
    j["full"] = X.full();
    j["cells_by_dim"] = counts;
    j["boundary_squares_to_zero"] = sq;
    j["perturbed_squares_to_zero"] = sqq;
    t << "radius: " << radius << "\nq = " << weights_str(q) << "\nfull: " << (X.full() ? "yes" : "no")
      << "\ncells by dimension: " << join(cs, " ") << "\nd^2 = 0: " << (sq ? "yes" : "no")
      << "\ndq^2 = 0: " << (sqq ? "yes" : "no") << "\n";
    bool ok = sq && sqq;
    if (adjoint) {
        AdjointReport r = adjoint_check(X, pairs, opt.seed);
        j["adjoint_pairs"] = r.pairs;
        j["adjoint_passed"] = r.passed;
        t << "adjoint <dq f, g>_q = <f, delta g>_q: " << r.passed << "/" << r.pairs << " pairs\n";
        ok = ok && r.passed == r.pairs;
    }
    if (hom) {
        BettiVector b = homology(X.perturbed_chain_complex());
        j["homology"] = b.b;
        t << "homology of (C, dq)" << (X.full() ? "" : " (truncated ball)") << ":\n" << b.str();
    }
    emit(j, t.str());
    return ok ? kOk : kRefused;
}

// --- complexes --------------------------------------------------------------------

RegularCWComplex load_cw(const std::string& path) {
    std::string text = read_file(path);
    if (detect_kind(text) != FileKind::CW) throw InputError(path + ": expected a cw v1 file");
    return parse_cw(text);
}

int cmd_subdivide(const std::string& path) {
    SimplicialComplex b = barycentric_subdivision(load_cw(path));
    Json j;
    j["format"] = "simp v1";
    j["text"] = b.to_text();
    emit(j, b.to_text());
    return kOk;
}

int cmd_links(const std::string& path, const std::string& cell) {
    RegularCWComplex X = load_cw(path);
    std::vector<int> cells;
    if (!cell.empty()) {
        int i = X.index(cell);
        if (i < 0) throw InputError("unknown cell '" + cell + "'");
        cells.push_back(i);
    } else {
        for (int i = 0; i < X.size(); ++i) cells.push_back(i);
    }
    std::vector<std::string> failed;
    for (int i : cells)
        if (!link_join_decomposition_check(X, i)) failed.push_back(X.cell(i).id);
    Json j;
    j["checked"] = cells.size();
    j["failed"] = failed;
    std::string text = "link = b(boundary) * b(link) checked at " + std::to_string(cells.size()) + " vertices, " +
                       std::to_string(failed.size()) + " failed\n";
    for (auto& f : failed) text += "  failed: " + f + "\n";
    emit(j, text);
    return failed.empty() ? kOk : kRefused;
}

int cmd_homology(const std::string& path, bool reduced) {
    AnyInput in = parse_any(read_file(path));
    BettiVector b;
    if (auto* K = std::get_if<SimplicialComplex>(&in))
        b = homology(*K, reduced);
    else if (auto* X = std::get_if<RegularCWComplex>(&in))
        b = homology(*X, reduced);
    else
        b = homology(nerve(std::get<CoxeterSystem>(in)), reduced);
    Json j;
    j["reduced"] = reduced;
    j["lo"] = b.lo;
    j["betti"] = b.b;
    emit(j, b.str());
    return kOk;
}

int cmd_fixtures(const std::string& name, const std::vector<std::string>& params, const std::string& out) {
    if (name.empty() || name == "list") {
        Json j = fixture_names();
        emit(j, join(fixture_names(), "\n") + "\n");
        return kOk;
    }
    std::string text = fixture_text(name, params);
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw InputError("cannot write " + out);
        f << text;
        return kOk;
    }
    Json j;
    j["format"] = kind_name(detect_kind(text));
    j["text"] = text;
    emit(j, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coxeter group growth, Davis complex chain data and vanishing certificates"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "JSON output");
    app.add_option("--seed", opt.seed, "Seed for randomized checks");

    std::string file, q, ray, Tset, Uset, cell, out, verify_path;
    int k = 0, radius = 2, pairs = 100, n = 0, m = 0;
    bool multivariate = false, adjoint = false, hom = false, reduced = false;
    std::string fixture;
    std::vector<std::string> params;
    std::function<int()> action;

    auto* classify = app.add_subcommand("classify", "Describe a coxeter, simp or cw file");
    classify->add_option("file", file)->required();
    classify->callback([&] { action = [&] { return cmd_classify(file); }; });

    auto* growth = app.add_subcommand("growth", "Reciprocal growth series 1/W");
    growth->add_option("file", file)->required();
    growth->add_flag("--multivariate", multivariate, "One variable per conjugacy class");
    growth->callback([&] { action = [&] { return cmd_growth(file, multivariate); }; });

    auto* rho = app.add_subcommand("rho", "Radius of convergence of the growth series");
    rho->add_option("file", file)->required();
    rho->add_option("--ray", ray, "Direction, one positive rational per class");
    rho->callback([&] { action = [&] { return cmd_rho(file, ray); }; });

    auto* euler = app.add_subcommand("euler", "Weighted Euler characteristic and the identity with 1/W");
    euler->add_option("file", file)->required();
    euler->add_option("--q", q, "Weights, one rational or one per class");
    euler->callback([&] { action = [&] { return cmd_euler(file, q); }; });

    auto* stars = app.add_subcommand("vanish-stars", "Check q against the growth regions of the stars");
    stars->add_option("file", file)->required();
    stars->add_option("--q", q)->required();
    stars->add_option("--k", k)->required();
    stars->callback([&] { action = [&] { return cmd_vanish_stars(file, q, k); }; });

    auto* ruin_cmd = app.add_subcommand("ruin", "Chain dimensions of the ruin (U, T)");
    ruin_cmd->add_option("file", file)->required();
    ruin_cmd->add_option("--T", Tset)->required();
    ruin_cmd->add_option("--U", Uset);
    ruin_cmd->add_option("--q", q)->required();
    ruin_cmd->callback([&] { action = [&] { return cmd_ruin(file, Tset, Uset, q); }; });

    auto* ball = app.add_subcommand("davis-ball", "Truncated Coxeter cellulation with weights");
    ball->add_option("file", file)->required();
    ball->add_option("--radius", radius)->required()->check(CLI::NonNegativeNumber);
    ball->add_option("--q", q)->required();
    ball->add_flag("--check-adjoint", adjoint);
    ball->add_option("--pairs", pairs)->check(CLI::PositiveNumber);
    ball->add_flag("--homology", hom);
    ball->callback([&] { action = [&] { return cmd_davis_ball(file, radius, q, adjoint, hom, pairs); }; });

    auto* sub = app.add_subcommand("subdivide", "Barycentric subdivision of a cw file");
    sub->add_option("file", file)->required();
    sub->callback([&] { action = [&] { return cmd_subdivide(file); }; });

    auto* links = app.add_subcommand("links", "Join decomposition of vertex links in the subdivision");
    links->add_option("file", file)->required();
    links->add_option("--cell", cell, "Check only this cell");
    links->callback([&] { action = [&] { return cmd_links(file, cell); }; });

    auto* homol = app.add_subcommand("homology", "Rational Betti numbers");
    homol->add_option("file", file)->required();
    homol->add_flag("--reduced", reduced);
    homol->callback([&] { action = [&] { return cmd_homology(file, reduced); }; });

    auto* cert = app.add_subcommand("cert", "Emit or verify a vanishing certificate");
    cert->add_option("--verify", verify_path, "Re-check a certificate file");
    cert->require_subcommand(0, 1);
    cert->callback([&] {
        if (!action) {
            if (verify_path.empty()) throw CLI::RequiredError("cert needs a subcommand or --verify");
            action = [&] { return cmd_verify(verify_path); };
        }
    });
    auto* c_stars = cert->add_subcommand("stars", "Every |T| = k star contains q in its growth region");
    c_stars->add_option("file", file)->required();
    c_stars->add_option("--q", q)->required();
    c_stars->add_option("--k", k)->required();
    c_stars->callback([&] { action = [&] { return cmd_vanish_stars(file, q, k); }; });
    auto* c_kn = cert->add_subcommand("kn", "Complete nerve with a uniform label");
    c_kn->add_option("file", file, "coxeter file (instead of --n/--m)");
    c_kn->add_option("--n", n);
    c_kn->add_option("--m", m);
    c_kn->callback([&] {
        action = [&] {
            if (!file.empty()) return print_outcome(cert_atiyah_Kn(load_system(file)));
            if (n <= 0 || m <= 0) throw InputError("give a coxeter file or --n and --m");
            return print_outcome(cert_atiyah_Kn(n, m));
        };
    });
    auto* c_tf = cert->add_subcommand("trianglefree", "Triangle-free nerve with a uniform label");
    c_tf->add_option("file", file)->required();
    c_tf->add_option("--m", m, "Label, when the file is a graph (simp v1)");
    c_tf->callback([&] {
        action = [&] {
            AnyInput in = parse_any(read_file(file));
            if (auto* K = std::get_if<SimplicialComplex>(&in)) {
                if (m <= 0) throw InputError("--m is required for a graph file");
                return print_outcome(cert_atiyah_trianglefree(uniform_graph_system(*K, m)));
            }
            if (auto* sys = std::get_if<CoxeterSystem>(&in)) return print_outcome(cert_atiyah_trianglefree(*sys));
            throw InputError("expected a coxeter or simp file");
        };
    });
    auto* c_do = cert->add_subcommand("do-reduce", "Vertex removal schedule on the subdivision of a manifold cellulation");
    c_do->add_option("file", file)->required();
    c_do->add_option("--n", n)->required()->check(CLI::IsMember({6, 8}));
    c_do->callback([&] { action = [&] { return print_outcome(cert_davis_okun(load_cw(file), n, opt.seed)); }; });
    auto* c_surf = cert->add_subcommand("surface", "Interval between rho and rho of a vertex link on a flag surface");
    c_surf->add_option("file", file)->required();
    c_surf->callback([&] {
        action = [&] {
            std::string text = read_file(file);
            if (detect_kind(text) != FileKind::Simplicial) throw InputError(file + ": expected a simp v1 file");
            return print_outcome(cert_surface_interval(parse_simplicial(text)));
        };
    });

    auto* fix = app.add_subcommand("fixtures", "Print a built-in fixture");
    fix->add_option("name", fixture, "Family name, or 'list'");
    fix->add_option("params", params);
    fix->add_option("-o,--output", out, "Write to a file");
    fix->callback([&] { action = [&] { return cmd_fixtures(fixture, params, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
