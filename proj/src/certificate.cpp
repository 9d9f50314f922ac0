#include "wl2/certificate.hpp"

#include "wl2/davis_okun.hpp"

#include "wl2/rational.hpp"
#include "wl2/roots.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wl2 {

using json = nlohmann::ordered_json;

bool Evidence::has(const std::string& key) const {
    return std::any_of(fields.begin(), fields.end(), [&](auto& f) { return f.first == key; });
}

const std::string& Evidence::get(const std::string& key) const {
    for (auto& f : fields)
        if (f.first == key) return f.second;
    throw InputError("evidence '" + kind + "' lacks field '" + key + "'");
}

const std::string& VanishingCertificate::param(const std::string& key) const {
    for (auto& f : parameters)
        if (f.first == key) return f.second;
    throw InputError("certificate lacks parameter '" + key + "'");
}

static const char* kStatus = "hypotheses verified; conclusion applies";

std::string VanishingCertificate::to_text() const {
    std::ostringstream out;
    out << "certificate v1\n";
    out << "theorem: " << theorem << "\n";
    out << "system: " << system << "\n";
    for (auto& [k, v] : parameters) out << "param " << k << ": " << v << "\n";
    for (auto& e : evidence) {
        out << "evidence " << e.kind << "\n";
        for (auto& [k, v] : e.fields) out << "  " << k << ": " << v << "\n";
    }
    out << "status: " << kStatus << "\n";
    out << "conclusion: " << conclusion << "\n";
    return out.str();
}

std::string VanishingCertificate::to_json() const {
    json j;
    j["certificate"] = "v1";
    j["theorem"] = theorem;
    j["system"] = system;
    json p = json::object();
    for (auto& [k, v] : parameters) p[k] = v;
    j["parameters"] = p;
    json ev = json::array();
    for (auto& e : evidence) {
        json r;
        r["kind"] = e.kind;
        json f = json::object();
        for (auto& [k, v] : e.fields) f[k] = v;
        r["fields"] = f;
        ev.push_back(r);
    }
    j["evidence"] = ev;
    j["status"] = kStatus;
    j["conclusion"] = conclusion;
    return j.dump(2) + "\n";
}

namespace {

VanishingCertificate from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("certificate JSON: ") + e.what());
    }
    try {
        if (j.at("certificate") != "v1") throw InputError("unsupported certificate version");
        VanishingCertificate c;
        c.theorem = j.at("theorem").get<std::string>();
        c.system = j.at("system").get<std::string>();
        for (auto& [k, v] : j.at("parameters").items()) c.parameters.emplace_back(k, v.get<std::string>());
        for (auto& r : j.at("evidence")) {
            Evidence e;
            e.kind = r.at("kind").get<std::string>();
            for (auto& [k, v] : r.at("fields").items()) e.add(k, v.get<std::string>());
            c.evidence.push_back(std::move(e));
        }
        if (j.at("status") != kStatus) throw InputError("certificate status is not the verified status");
        c.conclusion = j.at("conclusion").get<std::string>();
        return c;
    } catch (const json::exception& e) {
        throw InputError(std::string("certificate JSON: ") + e.what());
    }
}

std::pair<std::string, std::string> split_field(const std::string& line, int lineno) {
    auto pos = line.find(": ");
    if (pos == std::string::npos) throw InputError("line " + std::to_string(lineno) + ": expected 'key: value'");
    return {line.substr(0, pos), line.substr(pos + 2)};
}

}  // namespace

VanishingCertificate parse_certificate(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return from_json(text);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    VanishingCertificate c;
    bool header = false, status = false, done = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (done) throw InputError("line " + std::to_string(lineno) + ": text after the conclusion");
        if (!header) {
            if (line != "certificate v1") throw InputError("expected header 'certificate v1'");
            header = true;
            continue;
        }
        if (line.rfind("  ", 0) == 0) {
            if (c.evidence.empty()) throw InputError("line " + std::to_string(lineno) + ": field outside evidence");
            auto [k, v] = split_field(line.substr(2), lineno);
            c.evidence.back().add(k, v);
            continue;
        }
        if (line.rfind("evidence ", 0) == 0) {
            c.evidence.push_back({line.substr(9), {}});
            continue;
        }
        if (line.rfind("param ", 0) == 0) {
            c.parameters.push_back(split_field(line.substr(6), lineno));
            continue;
        }
        auto [k, v] = split_field(line, lineno);
        if (k == "theorem")
            c.theorem = v;
        else if (k == "system")
            c.system = v;
        else if (k == "status") {
            if (v != kStatus) throw InputError("certificate status is not the verified status");
            status = true;
        } else if (k == "conclusion") {
            c.conclusion = v;
            done = true;
        } else
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + k + "'");
    }
    if (!header || !status || !done) throw InputError("incomplete certificate");
    return c;
}

std::string conclusion_for(const std::string& theorem, const Fields& parameters) {
    auto param = [&](const std::string& key) -> std::string {
        for (auto& [k, v] : parameters)
            if (k == key) return v;
        throw InputError("certificate lacks parameter '" + key + "'");
    };
    if (theorem == "vanishing-by-stars") return "L²_q H_n(Σ)=0 for n>" + param("k");
    if (theorem == "atiyah-Kn" || theorem == "atiyah-trianglefree") return "L²_q H₂(Σ)=0 for q≤1";
    if (theorem == "surface-interval") return "L²_q H_*(Σ) concentrated in degree 1 for ρ<q<ρ_Lk(v₀)";
    if (theorem == "davis-okun-6") return "b_i^q(bL)=0 for i>3";
    if (theorem == "davis-okun-8") return "b_i^q(bL)=0 for i>4";
    throw InputError("unknown theorem id '" + theorem + "'");
}

namespace {

Integer to_int(const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw InputError("expected an integer, got '" + s + "'");
    return z;
}

UPoly parse_poly(const std::string& s) { return UPoly(parse_rational_list(s)); }

struct Checker {
    Verification& v;
    const Evidence& e;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            v.ok = false;
            v.problems.push_back(e.kind + ": " + what);
        }
    }
};

// The recorded interval isolates the smallest positive root of the recorded polynomial.
bool smallest_root_interval(const UPoly& p, const Rational& lo, const Rational& hi) {
    if (lo <= 0 || hi < lo || p.degree() < 1) return false;
    auto seq = sturm_sequence(p);
    if (lo == hi) return p.sign_at(lo) == 0 && sturm_count(seq, Rational(0), lo) == 1;
    return sturm_count(seq, Rational(0), lo) == 0 && sturm_count(seq, lo, hi) == 1;
}

void check_region_margin(Checker& c) {
    const Evidence& e = c.e;
    Rational s0 = parse_rational(e.get("s0"));
    c.require(s0 > 0, "s0 must be positive");
    if (e.get("rho") == "inf") {
        c.require(e.get("margin") == "inf", "infinite radius must carry an infinite margin");
        return;
    }
    UPoly p = parse_poly(e.get("rho_poly"));
    Rational lo = parse_rational(e.get("rho_lo")), hi = parse_rational(e.get("rho_hi"));
    c.require(smallest_root_interval(p, lo, hi), "interval does not isolate the smallest positive root");
    c.require(lo == hi ? lo > s0 : lo >= s0, "radius does not exceed s0");
    c.require(parse_rational(e.get("margin_lo")) == lo - s0 && parse_rational(e.get("margin_hi")) == hi - s0,
              "margin interval does not match rho - s0");
}

void check_star(Checker& c) {
    const Evidence& e = c.e;
    Integer deg = to_int(e.get("degree")), m = to_int(e.get("m"));
    Integer g = to_int(e.get("G_t")), et = to_int(e.get("E_T"));
    c.require(e.get("transitive") == "yes", "G_t is not transitive on the edges at t");
    c.require(deg > 0 && g == deg * et, "|G_t|/|E_T| differs from deg(t)");
    c.require(m % deg == 0, "deg(t) does not divide m");
    Integer lhs = lcm(2 * g, 2 * m * et);
    c.require(to_int(e.get("lcm")) == lhs, "recorded lcm(2|G_t|, 2m|E_T|) is wrong");
    c.require(lhs * deg == 2 * g * m, "lcm(2|G_t|, 2m|E_T|) differs from 2|G_t|m/deg(t)");
    c.require(to_int(e.get("lcm_formula")) * deg == 2 * g * m, "recorded 2|G_t|m/deg(t) is wrong");
    Rational c2(m), d(deg);
    c.require(parse_rational(e.get("dim_C2")) == d / (2 * c2), "dim C_2 differs from deg(t)/(2m)");
}

}  // namespace

Verification verify_certificate(const VanishingCertificate& cert) {
    Verification v;
    auto fail = [&](const std::string& what) {
        v.ok = false;
        v.problems.push_back(what);
    };
    std::map<std::string, int> kinds;
    std::vector<int> removal_dims;
    for (auto& e : cert.evidence) {
        ++kinds[e.kind];
        Checker c{v, e};
        try {
            if (e.kind == "region-margin")
                check_region_margin(c);
            else if (e.kind == "star-transitivity")
                check_star(c);
            else if (e.kind == "uniform-complete") {
                Integer n = to_int(e.get("n")), m = to_int(e.get("m"));
                c.require(m >= n - 1, "label below n-1");
                c.require(to_int(e.get("core_n")) == m + 1 && to_int(e.get("core_m")) == m, "core case is not K_{m+1}");
                c.require(e.get("nerve") == "graph", "nerve is not a graph");
            } else if (e.kind == "triangle-free") {
                c.require(e.get("triangles") == "0", "the graph has 3-cycles");
            } else if (e.kind == "degree-lcm") {
                Integer l = 1;
                std::istringstream in(e.get("degrees"));
                std::string tok;
                while (std::getline(in, tok, ','))
                    if (to_int(tok) > 0) l = lcm(l, to_int(tok));
                c.require(to_int(e.get("lcm")) == l, "recorded degree lcm is wrong");
                c.require(to_int(e.get("m")) % l == 0, "m is not a multiple of the degree lcm");
            } else if (e.kind == "surface-interval") {
                Integer f0 = to_int(e.get("f0")), chi = to_int(e.get("chi"));
                UPoly cubic = parse_poly(e.get("cubic"));
                UPoly expect(std::vector<Rational>{Rational(1), Rational(-(f0 - 3)), Rational(f0 + 3 - 3 * chi),
                                                   Rational(-(chi - 1))});
                c.require(cubic == expect, "cubic does not match 1-(f0-3)t+(f0+3-3chi)t^2-(chi-1)t^3");
                Rational lo = parse_rational(e.get("rho_lo")), hi = parse_rational(e.get("rho_hi"));
                c.require(smallest_root_interval(cubic.primitive(), lo, hi), "rho interval does not isolate the smallest root of the cubic");
                Integer k = to_int(e.get("link_size"));
                UPoly quad(std::vector<Rational>{Rational(1), Rational(-(k - 2)), Rational(1)});
                Rational llo = parse_rational(e.get("rho_lk_lo")), lhi = parse_rational(e.get("rho_lk_hi"));
                c.require(smallest_root_interval(quad, llo, lhi), "link interval does not isolate ((k-2)-sqrt(k^2-4k))/2");
                c.require(hi <= llo, "interval (rho, rho_Lk) is not certified nonempty");
                Rational q = parse_rational(e.get("sample_q"));
                c.require(hi < q && q <= llo, "sample q is not inside the interval");
            } else if (e.kind == "link-check") {
                removal_dims.push_back(static_cast<int>(to_int(e.get("dim")).get_si()));
                c.require(e.get("failed") == "0", "some link checks failed");
                c.require(to_int(e.get("checked")) == to_int(e.get("removed")), "not every removed vertex was checked");
                c.require(e.get("first_factor_sphere") == "yes" && e.get("second_factor_sphere") == "yes",
                          "link factors are not homology spheres");
                c.require(e.get("affecting_links") == "stable", "link factors changed under removal");
            } else if (e.kind == "final-complex") {
                c.require(to_int(e.get("dim")) == to_int(e.get("expected_dim")), "final dimension differs");
                c.require(to_int(e.get("expected_dim")) == (cert.theorem == "davis-okun-6" ? 2 : 4),
                          "expected dimension does not match the schedule");
                const std::string& fv = e.get("f_vector");
                c.require(static_cast<long>(std::count(fv.begin(), fv.end(), ',')) == to_int(e.get("dim")),
                          "f-vector length differs from dim");
            } else
                fail("unknown evidence kind '" + e.kind + "'");
        } catch (const std::exception& ex) {
            fail(e.kind + ": " + ex.what());
        }
    }
    try {
        if (cert.conclusion != conclusion_for(cert.theorem, cert.parameters)) fail("conclusion does not match the theorem");
        auto need = [&](const std::string& kind, int count) {
            if (kinds[kind] < count) fail("missing evidence '" + kind + "'");
        };
        if (cert.theorem == "vanishing-by-stars") {
            need("region-margin", static_cast<int>(to_int(cert.param("subsets")).get_si()));
        } else if (cert.theorem == "atiyah-Kn") {
            need("uniform-complete", 1);
            need("star-transitivity", static_cast<int>(to_int(cert.param("core_n")).get_si()));
        } else if (cert.theorem == "atiyah-trianglefree") {
            need("triangle-free", 1);
            need("degree-lcm", 1);
            need("star-transitivity", static_cast<int>(to_int(cert.param("stars")).get_si()));
        } else if (cert.theorem == "surface-interval") {
            need("surface-interval", 1);
            need("region-margin", static_cast<int>(to_int(cert.param("subsets")).get_si()));
        } else if (cert.theorem == "davis-okun-6" || cert.theorem == "davis-okun-8") {
            need("link-check", 3);
            need("final-complex", 1);
            if (removal_dims != removal_schedule(cert.theorem == "davis-okun-6" ? 6 : 8))
                fail("link checks do not follow the removal schedule");
        }
    } catch (const std::exception& ex) {
        fail(ex.what());
    }
    return v;
}

}  // namespace wl2
