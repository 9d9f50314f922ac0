#include "wl2/davis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

namespace wl2 {

SimplicialComplex nerve(const CoxeterSystem& sys) {
    std::vector<Simplex> facets;
    for (GenSet T : sys.maximal_spherical())
        if (T) facets.push_back(members(T));
    return SimplicialComplex(std::move(facets), sys.names());
}

std::vector<int> MirroredChamber::mirror(int s) const {
    std::vector<int> out;
    for (std::size_t x = 0; x < vertex_type.size(); ++x)
        if (vertex_type[x] & bit(s)) out.push_back(static_cast<int>(x));
    return out;
}

MirroredChamber mirrored(const SimplicialComplex& K, const std::vector<std::vector<int>>& mirrors) {
    MirroredChamber X{K, std::vector<GenSet>(K.num_vertices(), 0)};
    for (std::size_t s = 0; s < mirrors.size(); ++s)
        for (int x : mirrors[s]) {
            if (x < 0 || x >= K.num_vertices()) throw InputError("mirror vertex out of range");
            X.vertex_type[x] |= bit(static_cast<int>(s));
        }
    return X;
}

MirroredChamber davis_chamber(const CoxeterSystem& sys) {
    const auto& sph = sys.spherical();
    Poset P;
    P.n = static_cast<int>(sph.size());
    P.above.resize(P.n);
    for (int i = 0; i < P.n; ++i) {
        P.labels.push_back(sys.set_str(sph[i]));
        P.grades.push_back(std::popcount(sph[i]));
        for (int j = 0; j < P.n; ++j)
            if (i != j && (sph[i] & sph[j]) == sph[i]) P.above[i].push_back(j);
    }
    MirroredChamber X{order_complex(P), std::vector<GenSet>(sph.begin(), sph.end())};
    return X;
}

SimplicialComplex basic_construction(const CoxeterSystem& sys, const MirroredChamber& X, const std::vector<Elem>& ball) {
    Enumerator& en = sys.enumerator();
    std::set<Elem> members_of(ball.begin(), ball.end());
    for (Elem w : ball)
        for (int s : members(en.descents(w)))
            if (!members_of.count(en.mul_known(w, s)))
                throw InputError("ball is not closed under prefixes: missing " + sys.word_str(en.normal_form(en.mul_known(w, s))));
    std::map<std::pair<Elem, int>, int> vertex;
    std::vector<std::string> labels;
    auto vid = [&](Elem w, int x) {
        Elem r = en.min_coset_rep(w, X.vertex_type[x]);
        auto [it, fresh] = vertex.emplace(std::make_pair(r, x), static_cast<int>(labels.size()));
        if (fresh) {
            Word nf = en.normal_form(r);
            labels.push_back((nf.empty() ? std::string("1") : sys.word_str(nf)) + "|" + X.K.label(x));
        }
        return it->second;
    };
    std::vector<Simplex> facets;
    for (Elem w : ball)
        for (auto& f : X.K.facets()) {
            Simplex g;
            for (int x : f) g.push_back(vid(w, x));
            std::sort(g.begin(), g.end());
            facets.push_back(std::move(g));
        }
    return SimplicialComplex(std::move(facets), std::move(labels));
}

TruncatedDavisComplex::TruncatedDavisComplex(const CoxeterSystem& sys, const WeightVector& q, int radius)
    : sys_(&sys), q_(q), radius_(radius) {
    if (radius < 0) throw InputError("radius must be nonnegative");
    if (static_cast<int>(q.size()) != sys.num_classes()) throw InputError("weight vector has the wrong length");
    Enumerator& en = sys.enumerator();
    en.extend_to(radius);
    int top = 0;
    for (GenSet T : sys.spherical()) {
        Enumerator& et = sys.enumerator(T);
        et.extend_to(1 << 20);
        top_length_[T] = et.length(et.longest());
        top = std::max(top, std::popcount(T));
    }
    full_ = en.complete() && en.length(en.longest()) <= radius;
    by_dim_.assign(top + 1, {});
    index_.assign(top + 1, {});
    mu_.assign(top + 1, {});
    for (Elem u = 0; u < static_cast<Elem>(en.size()) && en.length(u) <= radius; ++u)
        for (GenSet T : sys.spherical()) {
            if (en.descents(u) & T) continue;
            if (en.length(u) + top_length_[T] > radius) continue;
            int d = std::popcount(T);
            index_[d].emplace(std::make_pair(u, T), static_cast<int>(by_dim_[d].size()));
            by_dim_[d].push_back({u, T, d});
            mu_[d].push_back(weight_of(sys, q, en.class_exponent(u)));
        }
    while (by_dim_.size() > 1 && by_dim_.back().empty()) {
        by_dim_.pop_back();
        index_.pop_back();
        mu_.pop_back();
    }
    for (int k = 1; k <= dimension(); ++k) {
        SparseMatrix D(count(k - 1), count(k));
        SparseMatrix Q(count(k - 1), count(k));
        for (int j = 0; j < count(k); ++j) {
            const DavisCell& c = by_dim_[k][j];
            Enumerator& et = sys.enumerator(c.T);
            for (int s : members(c.T)) {
                GenSet F = c.T & ~bit(s);
                for (Elem v = 0; v < static_cast<Elem>(et.size()); ++v) {
                    if (et.descents(v) & F) continue;
                    Elem w = c.u;
                    for (int letter : et.normal_form(v)) w = en.mul(w, letter);
                    int row = find(w, F);
                    if (row < 0) throw InputError("internal: face missing from truncated complex");
                    int sign = sign_of(c.u, c.T, w, s);
                    D.set(row, j, sign);
                    Q.set(row, j, Rational(sign) * mu_[k][j] / mu_[k - 1][row]);
                }
            }
        }
        D.normalize();
        Q.normalize();
        bd_.push_back(std::move(D));
        pq_.push_back(std::move(Q));
    }
    interior_.assign(dimension() + 1, {});
    for (int d = 0; d <= dimension(); ++d)
        for (auto& c : by_dim_[d]) {
            bool inside = true;
            for (int s = 0; s < sys.rank() && inside; ++s) {
                if (c.T & bit(s)) continue;
                GenSet T = c.T | bit(s);
                if (!sys.is_spherical(T)) continue;
                Elem u = en.min_coset_rep(c.u, T);
                inside = en.length(u) + top_length_.at(T) <= radius;
            }
            interior_[d].push_back(inside);
        }
}

int TruncatedDavisComplex::find(Elem u, GenSet T) const {
    int d = std::popcount(T);
    if (d >= static_cast<int>(index_.size())) return -1;
    auto it = index_[d].find({u, T});
    return it == index_[d].end() ? -1 : it->second;
}

int TruncatedDavisComplex::sign_of(Elem u, GenSet T, Elem w, int s) const {
    Enumerator& en = sys_->enumerator();
    int lv = en.length(w) - en.length(u);
    int j = std::popcount(T & (bit(s) - 1));
    return (lv + j) % 2 ? -1 : 1;
}

ChainComplexQ TruncatedDavisComplex::chain_complex() const {
    ChainComplexQ C;
    for (int d = 0; d <= dimension(); ++d) C.dims.push_back(count(d));
    C.d = bd_;
    return C;
}

ChainComplexQ TruncatedDavisComplex::perturbed_chain_complex() const {
    ChainComplexQ C = chain_complex();
    C.d = pq_;
    return C;
}

SparseVec TruncatedDavisComplex::coboundary_from_group(int k, const SparseVec& g) const {
    Enumerator& en = sys_->enumerator();
    std::map<int, Rational> acc;
    for (auto& [i, coeff] : g) {
        const DavisCell& a = by_dim_[k - 1][i];
        if (!interior_[k - 1][i]) throw InputError("chain is not supported on interior cells");
        for (int s = 0; s < sys_->rank(); ++s) {
            if (a.T & bit(s)) continue;
            GenSet T = a.T | bit(s);
            if (!sys_->is_spherical(T)) continue;
            Elem u = en.min_coset_rep(a.u, T);
            int col = find(u, T);
            if (col < 0) throw InputError("internal: coface missing for an interior cell");
            acc[col] += Rational(sign_of(u, T, a.u, s)) * coeff;
        }
    }
    SparseVec out;
    for (auto& [i, v] : acc)
        if (v != 0) out.emplace_back(i, v);
    return out;
}

Rational TruncatedDavisComplex::inner(int d, const SparseVec& f, const SparseVec& g) const { return dot(f, g, mu_[d]); }

AdjointReport adjoint_check(const TruncatedDavisComplex& X, int pairs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> degrees;
    std::vector<std::vector<int>> inner_cells(X.dimension() + 1);
    for (int d = 0; d <= X.dimension(); ++d)
        for (int i = 0; i < X.count(d); ++i)
            if (X.interior(d, i)) inner_cells[d].push_back(i);
    for (int k = 1; k <= X.dimension(); ++k)
        if (X.count(k) > 0 && !inner_cells[k - 1].empty()) degrees.push_back(k);
    AdjointReport rep;
    if (degrees.empty()) return rep;
    auto coeff = [&] {
        std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
        int p = num(rng);
        Rational c(p == 0 ? 1 : p, den(rng));
        c.canonicalize();
        return c;
    };
    auto chain = [&](const std::vector<int>& pool) {
        std::map<int, Rational> acc;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int j = 0; j < 3; ++j) acc[pool[pick(rng)]] += coeff();
        SparseVec v;
        for (auto& [i, c] : acc)
            if (c != 0) v.emplace_back(i, c);
        return v;
    };
    std::uniform_int_distribution<std::size_t> pick_degree(0, degrees.size() - 1);
    for (int p = 0; p < pairs; ++p) {
        int k = degrees[pick_degree(rng)];
        std::vector<int> all(X.count(k));
        std::iota(all.begin(), all.end(), 0);
        SparseVec f = chain(all), g = chain(inner_cells[k - 1]);
        Rational lhs = X.inner(k - 1, X.perturbed(k).apply(f), g);
        Rational rhs = X.inner(k, f, X.coboundary_from_group(k, g));
        ++rep.pairs;
        if (lhs == rhs) ++rep.passed;
    }
    return rep;
}

GenSet st_of(const CoxeterSystem& sys, GenSet T, GenSet V) {
    if (!sys.is_spherical(T)) throw InputError("subset " + sys.set_str(T) + " is not spherical");
    if (T == 0) return V;
    GenSet out = 0;
    for (GenSet U : sys.spherical())
        if ((U & ~V) == 0 && sys.is_spherical(U | T)) out |= U;
    return out;
}

GenSet lk_of(const CoxeterSystem& sys, GenSet T, GenSet V) { return st_of(sys, T, V) & ~T; }

std::vector<GenSet> ruin_types(const CoxeterSystem& sys, GenSet U, GenSet T) {
    std::vector<GenSet> out;
    for (GenSet S : sys.spherical())
        if ((T & ~S) == 0 && (S & ~U) == 0) out.push_back(S);
    return out;
}

RuinPair ruin(const TruncatedDavisComplex& X, GenSet U, GenSet T) {
    const CoxeterSystem& sys = X.system();
    if (T & ~U) throw InputError("T is not contained in U");
    if (!sys.is_spherical(T)) throw InputError("subset " + sys.set_str(T) + " is not spherical");
    std::vector<GenSet> types = ruin_types(sys, U, T);
    std::set<GenSet> typeset(types.begin(), types.end());
    const int top = X.dimension();
    std::vector<std::vector<bool>> in(top + 1);
    for (int d = 0; d <= top; ++d) {
        in[d].assign(X.count(d), false);
        for (int i = 0; i < X.count(d); ++i) in[d][i] = typeset.count(X.cell(d, i).T) > 0;
    }
    for (int d = top; d >= 1; --d)
        for (int j = 0; j < X.count(d); ++j)
            if (in[d][j])
                for (auto& [r, v] : X.boundary(d).col[j]) in[d - 1][r] = true;
    RuinPair R;
    R.U = U;
    R.T = T;
    R.omega.resize(top + 1);
    R.frontier.resize(top + 1);
    R.relative_types.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        std::set<GenSet> seen;
        for (int i = 0; i < X.count(d); ++i) {
            if (!in[d][i]) continue;
            R.omega[d].push_back(i);
            if (typeset.count(X.cell(d, i).T))
                seen.insert(X.cell(d, i).T);
            else
                R.frontier[d].push_back(i);
        }
        R.relative_types[d].assign(seen.begin(), seen.end());
    }
    return R;
}

ChainComplexQ relative_chain_complex(const TruncatedDavisComplex& X, const RuinPair& R) {
    const int top = X.dimension();
    std::vector<std::vector<int>> pos(top + 1);
    ChainComplexQ C;
    for (int d = 0; d <= top; ++d) {
        pos[d].assign(X.count(d), -1);
        int n = 0;
        std::set<int> front(R.frontier[d].begin(), R.frontier[d].end());
        for (int i : R.omega[d])
            if (!front.count(i)) pos[d][i] = n++;
        C.dims.push_back(n);
    }
    for (int d = 1; d <= top; ++d) {
        SparseMatrix D(C.dims[d - 1], C.dims[d]);
        const SparseMatrix& B = X.boundary(d);
        for (int j = 0; j < X.count(d); ++j) {
            if (pos[d][j] < 0) continue;
            for (auto& [r, v] : B.col[j])
                if (pos[d - 1][r] >= 0) D.set(pos[d - 1][r], pos[d][j], v);
        }
        D.normalize();
        C.d.push_back(std::move(D));
    }
    return C;
}

Rational hecke_dimension(const CoxeterSystem& sys, GenSet T, const WeightVector& q) {
    std::vector<Rational> inv;
    for (auto& x : q) inv.push_back(1 / x);
    return 1 / growth_poly_finite(sys, T).eval(inv);
}

std::vector<Rational> ruin_dimension_series(const CoxeterSystem& sys, const WeightVector& q, GenSet T, GenSet U) {
    if (!sys.is_spherical(T)) throw InputError("subset " + sys.set_str(T) + " is not spherical");
    std::vector<Rational> out(sys.spherical_dimension() + 2, 0);
    for (GenSet S : ruin_types(sys, U, T)) out[std::popcount(S)] += hecke_dimension(sys, S, q);
    return out;
}

std::vector<Rational> ruin_dimension_series(const CoxeterSystem& sys, const WeightVector& q, GenSet T) {
    return ruin_dimension_series(sys, q, T, sys.all());
}

bool ruin_additivity_check(const CoxeterSystem& sys, const WeightVector& q, GenSet U, GenSet T, int s) {
    if (!(T & bit(s))) throw InputError("generator is not in T");
    GenSet T1 = T & ~bit(s), U1 = U & ~bit(s);
    auto whole = ruin_dimension_series(sys, q, T1, U);
    auto part = ruin_dimension_series(sys, q, T1, U1);
    auto rest = ruin_dimension_series(sys, q, T, U);
    for (std::size_t d = 0; d < whole.size(); ++d)
        if (whole[d] != part[d] + rest[d]) return false;
    return true;
}

Rational weighted_euler(const CoxeterSystem& sys, const WeightVector& q) {
    Rational chi = 0;
    for (GenSet T : sys.spherical()) {
        Rational h = hecke_dimension(sys, T, q);
        chi += std::popcount(T) % 2 ? -h : h;
    }
    return chi;
}

namespace {

// Sums sign * num / den over spherical T, grouping equal denominators first.
RationalFunctionQ grouped_sum(const CoxeterSystem& sys, bool invert_variables, const std::vector<int>& variables) {
    std::map<PolyQ, PolyQ> groups;
    int nv = specialize(sys, PolyQ::constant(sys.num_classes(), 1), variables).nvars();
    for (GenSet T : sys.spherical()) {
        PolyQ W = specialize(sys, growth_poly_finite(sys, T), variables);
        PolyQ num = PolyQ::constant(nv, std::popcount(T) % 2 ? -1 : 1);
        PolyQ den = W;
        if (invert_variables) {
            // 1/W_T(1/t) = t^m / (t^m W_T(1/t)) with m the top exponent.
            Exponent m = W.max_exponents();
            num = num * PolyQ::monomial(m);
            den = W.reversed(m);
        }
        auto it = groups.find(den);
        if (it == groups.end())
            groups.emplace(den, num);
        else
            it->second = it->second + num;
    }
    RationalFunctionQ sum{PolyQ::constant(nv, 0), PolyQ::constant(nv, 1)};
    for (auto& [den, num] : groups) sum = sum + RationalFunctionQ{num, den};
    return sum;
}

}  // namespace

RationalFunctionQ weighted_euler_function(const CoxeterSystem& sys, const std::vector<int>& variables) {
    return grouped_sum(sys, true, variables);
}

RationalFunctionQ alternating_growth_sum(const CoxeterSystem& sys, const std::vector<int>& variables) {
    return grouped_sum(sys, false, variables);
}

bool euler_identity_check(const CoxeterSystem& sys, const std::vector<int>& variables) {
    return same_function(weighted_euler_function(sys, variables), growth_rational(sys, variables).inverse());
}

}  // namespace wl2
