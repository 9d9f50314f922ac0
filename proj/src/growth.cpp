#include "wl2/growth.hpp"

#include "wl2/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

namespace wl2 {

WeightVector make_weights(const CoxeterSystem& sys, const std::vector<Rational>& values) {
    WeightVector q;
    if (values.size() == 1)
        q.assign(sys.num_classes(), values[0]);
    else if (static_cast<int>(values.size()) == sys.num_classes())
        q = values;
    else
        throw InputError("expected 1 or " + std::to_string(sys.num_classes()) + " weights (one per conjugacy class)");
    for (auto& x : q) {
        x.canonicalize();
        if (x <= 0) throw InputError("weights must be positive");
    }
    return q;
}

std::vector<Rational> expand_ray(int n, const std::vector<Rational>& ray) {
    std::vector<Rational> out;
    if (ray.size() == 1)
        out.assign(n, ray[0]);
    else if (static_cast<int>(ray.size()) == n)
        out = ray;
    else
        throw InputError("expected a ray with 1 or " + std::to_string(n) + " entries");
    for (auto& r : out) {
        r.canonicalize();
        if (r <= 0) throw InputError("ray entries must be positive");
    }
    return out;
}

Rational weight_of(const CoxeterSystem&, const WeightVector& q, const Exponent& e) {
    Rational r = 1;
    for (std::size_t c = 0; c < e.size(); ++c)
        for (int i = 0; i < e[c]; ++i) r *= q[c];
    return r;
}

PolyQ growth_poly_finite(const CoxeterSystem& sys, GenSet T) {
    if (!sys.is_finite(T)) throw InputError("subset " + sys.set_str(T) + " is not spherical");
    Enumerator& e = sys.enumerator(T);
    e.extend_to(1 << 20);
    PolyQ p(sys.num_classes());
    for (std::size_t w = 0; w < e.size(); ++w) p.add_term(e.class_exponent(static_cast<Elem>(w)), 1);
    return p;
}

PolyQ InverseGrowth::denominator() const {
    PolyQ d = PolyQ::constant(num.nvars(), 1);
    for (auto& [a, k] : atoms) d = d * pow(a, k);
    return d;
}

namespace {

int gcd_all(const Exponent& e) {
    int g = 0;
    for (int x : e) g = std::gcd(g, x);
    return g;
}

// Exponent vectors over `vars` with total degree in [1, maxdeg].
void monomials(const std::vector<int>& vars, int nvars, int maxdeg, std::vector<Exponent>& out) {
    Exponent e(nvars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == vars.size()) {
            int d = std::accumulate(e.begin(), e.end(), 0);
            if (d >= 1 && gcd_all(e) == 1) out.push_back(e);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[vars[i]] = a;
            rec(i + 1, left - a);
        }
        e[vars[i]] = 0;
    };
    rec(0, maxdeg);
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
        int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a > b;
    });
}

}  // namespace

std::vector<std::pair<PolyQ, int>> cyclotomic_atoms(const PolyQ& p) {
    std::vector<std::pair<PolyQ, int>> out;
    const int n = p.nvars();
    PolyQ rest = p;
    int deg = rest.total_degree();
    if (deg <= 0) return out;
    std::vector<int> vars;
    Exponent mx = rest.max_exponents();
    for (int i = 0; i < n; ++i)
        if (mx[i] > 0) vars.push_back(i);
    std::vector<Exponent> monos;
    if (vars.size() <= 3) monomials(vars, n, deg, monos);
    // Cheap necessary test: divisibility must survive a univariate specialization.
    std::vector<Rational> probe(n);
    for (int i = 0; i < n; ++i) probe[i] = 2 * i + 1;
    for (auto& mu : monos) {
        int dmu = std::accumulate(mu.begin(), mu.end(), 0);
        for (int e = 2; e <= rest.total_degree() / dmu + 1; ++e) {
            UPoly phi = cyclotomic(e);
            if (phi.degree() * dmu > rest.total_degree()) continue;
            PolyQ atom = compose_monomial(phi, mu);
            int k = 0;
            PolyQ q;
            for (;;) {
                if (rest.total_degree() <= 0) break;
                UPoly uq, ur;
                UPoly::divmod(rest.along_ray(probe), atom.along_ray(probe), uq, ur);
                if (!ur.is_zero() || !rest.divide_exact(atom, q)) break;
                rest = q;
                ++k;
            }
            if (k) out.push_back({atom, k});
        }
        if (rest.total_degree() <= 0) break;
    }
    if (rest.total_degree() > 0) {
        Rational c = rest.constant_term();
        if (c == 0) c = 1;
        out.push_back({Rational(1 / c) * rest, 1});
    }
    return out;
}

std::vector<int> uniform_variables(const CoxeterSystem& sys) { return std::vector<int>(sys.num_classes(), 0); }

namespace {

int variable_count(const CoxeterSystem& sys, const std::vector<int>& variables) {
    if (variables.empty()) return sys.num_classes();
    if (static_cast<int>(variables.size()) != sys.num_classes())
        throw InputError("expected one variable index per conjugacy class");
    int nv = 0;
    for (int v : variables) {
        if (v < 0) throw InputError("variable indices must be nonnegative");
        nv = std::max(nv, v + 1);
    }
    return nv;
}

Exponent specialize(const Exponent& e, const std::vector<int>& variables, int nv) {
    if (variables.empty()) return e;
    Exponent out(nv, 0);
    for (std::size_t c = 0; c < e.size(); ++c) out[variables[c]] += e[c];
    return out;
}

PolyQ specialize(const PolyQ& p, const std::vector<int>& variables, int nv) {
    if (variables.empty()) return p;
    PolyQ out(nv);
    for (auto& [e, c] : p.terms()) out.add_term(specialize(e, variables, nv), c);
    return out;
}

}  // namespace

PolyQ specialize(const CoxeterSystem& sys, const PolyQ& p, const std::vector<int>& variables) {
    return specialize(p, variables, variable_count(sys, variables));
}

InverseGrowth inverse_growth(const CoxeterSystem& sys, const std::vector<int>& variables) {
    const int nv = variable_count(sys, variables);
    InverseGrowth g;
    if (sys.is_finite(sys.all())) {
        g.num = PolyQ::constant(nv, 1);
        g.atoms = cyclotomic_atoms(specialize(growth_poly_finite(sys, sys.all()), variables, nv));
        return g;
    }
    // 1/W(t) = sum over spherical T of (-1)^|T| t_{w0(T)} / W_T(t).
    std::map<GenSet, std::vector<std::pair<PolyQ, int>>> comp_atoms;
    std::map<PolyQ, int> need;
    std::vector<std::map<PolyQ, int>> per_T;
    std::vector<Exponent> w0;
    for (GenSet T : sys.spherical()) {
        std::map<PolyQ, int> mult;
        Exponent e(nv, 0);
        for (GenSet C : sys.components(T)) {
            auto it = comp_atoms.find(C);
            if (it == comp_atoms.end())
                it = comp_atoms.emplace(C, cyclotomic_atoms(specialize(growth_poly_finite(sys, C), variables, nv))).first;
            for (auto& [a, k] : it->second) mult[a] += k;
            Enumerator& en = sys.enumerator(C);
            Exponent ec = specialize(en.class_exponent(en.longest()), variables, nv);
            for (int i = 0; i < nv; ++i) e[i] += ec[i];
        }
        for (auto& [a, k] : mult) need[a] = std::max(need[a], k);
        per_T.push_back(std::move(mult));
        w0.push_back(e);
    }
    PolyQ num(nv);
    for (std::size_t i = 0; i < sys.spherical().size(); ++i) {
        int sign = popcount(sys.spherical()[i]) % 2 ? -1 : 1;
        PolyQ term = PolyQ::monomial(w0[i], sign);
        for (auto& [a, k] : need) {
            auto it = per_T[i].find(a);
            int have = it == per_T[i].end() ? 0 : it->second;
            term = term * pow(a, k - have);
        }
        num = num + term;
    }
    for (auto& [a, k] : need) {
        PolyQ q;
        while (k > 0 && num.divide_exact(a, q)) {
            num = q;
            --k;
        }
        if (k > 0) g.atoms.push_back({a, k});
    }
    g.num = num;
    return g;
}

RationalFunctionQ growth_rational(const CoxeterSystem& sys, const std::vector<int>& variables) {
    if (sys.is_finite(sys.all()))
        return RationalFunctionQ::from_poly(specialize(growth_poly_finite(sys, sys.all()), variables,
                                                       variable_count(sys, variables)));
    InverseGrowth g = inverse_growth(sys, variables);
    return {g.denominator(), g.num};
}

static std::string factor_str(const std::string& base, int k) {
    return "(" + base + ")" + (k > 1 ? "^" + std::to_string(k) : "");
}

std::string format_inverse_growth(const UPoly& n, const UPoly& d) {
    std::string num, den;
    // Make the displayed denominator a product of cyclotomic factors with constant term 1.
    auto split = split_cyclotomic(d);
    Rational scale = split.rest.coeff(0) == 0 ? Rational(1) : split.rest.coeff(0);
    for (auto& [e, k] : split.factors) {
        if (!den.empty()) den += " * ";
        den += factor_str(cyclotomic(e).str(), k);
        if (e == 1 && k % 2) scale = -scale;
    }
    if (split.rest.degree() > 0) {
        if (!den.empty()) den += " * ";
        den += "(" + (Rational(1 / scale) * split.rest).str() + ")";
    }
    num = (Rational(1 / scale) * n).str();
    if (den.empty()) return "1/W = " + num;
    return "1/W = (" + num + ") / " + den;
}

std::string format_inverse_growth(const CoxeterSystem& sys, const InverseGrowth& g, bool multivariate) {
    std::string num, den;
    if (multivariate) {
        auto names = sys.class_names();
        num = g.num.str(names);
        for (auto& [a, k] : g.atoms) {
            if (!den.empty()) den += " * ";
            den += factor_str(a.str(names), k);
        }
    } else {
        std::vector<Rational> ones(sys.num_classes(), 1);
        auto [n, d] = RationalFunctionQ{g.num, g.denominator()}.along_ray(ones);
        return format_inverse_growth(n, d);
    }
    if (den.empty()) return "1/W = " + num;
    return "1/W = (" + num + ") / " + den;
}

std::vector<Integer> census_bfs(const CoxeterSystem& sys, int N) {
    Enumerator& e = sys.enumerator();
    e.extend_to(N);
    std::vector<Integer> out;
    for (int l = 0; l <= N; ++l)
        out.push_back(l <= e.built_length() ? Integer(static_cast<unsigned long>(e.layer_end(l) - e.layer_begin(l))) : Integer(0));
    return out;
}

std::vector<Integer> census_right_angled(const CoxeterSystem& sys, int N) {
    if (!sys.right_angled()) throw InputError("transfer census needs a right-angled system");
    const int n = sys.rank();
    std::vector<GenSet> commute(n, 0), below(n, 0);
    for (int a = 0; a < n; ++a)
        for (int s = 0; s < n; ++s) {
            if (s != a && sys.m(a, s) == 2) commute[a] |= bit(s);
            if (s < a) below[a] |= bit(s);
        }
    // State of a ShortLex normal form u: its right descent set D, and the set B of
    // letters s that may not be appended because the maximal suffix of u commuting
    // with s contains a letter greater than s.
    struct KeyHash {
        std::size_t operator()(const std::pair<GenSet, GenSet>& k) const {
            return std::hash<GenSet>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
        }
    };
    using Layer = std::unordered_map<std::pair<GenSet, GenSet>, Integer, KeyHash>;
    Layer cur{{{0, 0}, Integer(1)}};
    std::vector<Integer> out{1};
    for (int l = 1; l <= N; ++l) {
        Layer next;
        Integer total = 0;
        for (auto& [st, count] : cur) {
            auto [D, B] = st;
            for (int a = 0; a < n; ++a) {
                if ((D | B) & bit(a)) continue;
                GenSet D2 = bit(a) | (D & commute[a]);
                GenSet B2 = commute[a] & (B | below[a]);
                next[{D2, B2}] += count;
                total += count;
            }
        }
        out.push_back(total);
        cur = std::move(next);
    }
    return out;
}

std::vector<Integer> census(const CoxeterSystem& sys, int N) {
    if (sys.right_angled()) return census_right_angled(sys, N);
    return census_bfs(sys, N);
}

std::vector<Rational> series_coefficients(const RationalFunctionQ& f, int N) {
    std::vector<Rational> ones(std::max(f.num.nvars(), f.den.nvars()), 1);
    UPoly n = f.num.along_ray(ones), d = f.den.along_ray(ones);
    return series_coefficients(n, d, N);
}

static RadiusResult radius_from_denominator(const UPoly& d, const std::vector<Rational>& ray) {
    RadiusResult out;
    out.ray = ray;
    out.denominator = d;
    out.rho = smallest_positive_root(d);
    if (out.rho) out.rho->refine(Rational(1, Integer(1) << 80));
    return out;
}

RadiusResult radius_of_convergence(const RationalFunctionQ& W, const std::vector<Rational>& ray) {
    auto full = expand_ray(std::max(W.num.nvars(), W.den.nvars()), ray);
    return radius_from_denominator(W.along_ray(full).second, full);
}

std::pair<UPoly, UPoly> growth_along_ray(const CoxeterSystem& sys, const std::vector<Rational>& direction) {
    auto ray = expand_ray(sys.num_classes(), direction);
    if (sys.is_finite(sys.all())) return {growth_poly_finite(sys, sys.all()).along_ray(ray), UPoly::constant(1)};
    // Same alternating sum as inverse_growth, but in one variable so that
    // systems with many classes stay cheap.
    std::map<GenSet, UPoly> comp_poly;
    UPoly num = UPoly::constant(0), den = UPoly::constant(1);
    for (GenSet T : sys.spherical()) {
        UPoly wt = UPoly::constant(1);
        UPoly top = UPoly::constant(popcount(T) % 2 ? -1 : 1);
        for (GenSet C : sys.components(T)) {
            auto it = comp_poly.find(C);
            if (it == comp_poly.end()) it = comp_poly.emplace(C, growth_poly_finite(sys, C).along_ray(ray)).first;
            wt = wt * it->second;
            Enumerator& en = sys.enumerator(C);
            top = top * PolyQ::monomial(en.class_exponent(en.longest())).along_ray(ray);
        }
        // num/den + top/wt, kept in lowest terms.
        UPoly g = gcd(den, wt), qd, qw, r;
        UPoly::divmod(den, g, qd, r);
        UPoly::divmod(wt, g, qw, r);
        num = num * qw + top * qd;
        den = den * qw;
        UPoly h = gcd(num, den);
        if (!h.is_zero() && h.degree() > 0) {
            UPoly a, b;
            UPoly::divmod(num, h, a, r);
            UPoly::divmod(den, h, b, r);
            num = a;
            den = b;
        }
    }
    // W = den / num with a monic denominator.
    Rational lead = num.lead();
    return {Rational(1 / lead) * den, Rational(1 / lead) * num};
}

RadiusResult radius_of_convergence(const CoxeterSystem& sys, const std::vector<Rational>& ray) {
    auto full = expand_ray(sys.num_classes(), ray);
    return radius_from_denominator(growth_along_ray(sys, full).second, full);
}

RegionResult in_region(const CoxeterSystem& sys, const WeightVector& q) {
    RegionResult r;
    r.s0 = *std::max_element(q.begin(), q.end());
    for (auto& x : q) r.ray.push_back(x / r.s0);
    if (sys.is_finite(sys.all())) {
        r.inside = true;
        r.margin_infinite = true;
        r.radius.ray = r.ray;
        return r;
    }
    r.radius = radius_of_convergence(sys, r.ray);
    if (!r.radius.rho) {
        r.inside = true;
        r.margin_infinite = true;
        return r;
    }
    AlgebraicReal& rho = *r.radius.rho;
    r.inside = compare(r.s0, rho) < 0;
    r.margin_lo = rho.lo - r.s0;
    r.margin_hi = rho.hi - r.s0;
    return r;
}

}  // namespace wl2
