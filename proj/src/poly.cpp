#include "wl2/poly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wl2 {

// ---- univariate ----------------------------------------------------------

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int UPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    Rational l = lead();
    std::vector<Rational> v(c_);
    for (auto& x : v) x /= l;
    return UPoly(std::move(v));
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    Integer den = 1, num = 0;
    for (auto& x : c_) den = lcm(den, x.get_den());
    std::vector<Rational> v;
    for (auto& x : c_) {
        Rational y = x * den;
        v.push_back(y);
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), y.get_num().get_mpz_t());
    }
    if (v.back() < 0) num = -num;
    for (auto& x : v) x /= num;
    return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
    std::vector<Rational> v(a.c_);
    for (auto& x : v) x *= s;
    return UPoly(std::move(v));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.c_);
    int db = b.degree();
    int dq = a.degree() - db;
    std::vector<Rational> quo(std::max(dq + 1, 0));
    for (int i = dq; i >= 0; --i) {
        Rational f = rem[i + db] / b.lead();
        quo[i] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[i + j] -= f * b.c_[j];
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

static std::string coeff_prefix(const Rational& c, bool first, bool has_monomial) {
    std::string out;
    Rational a = abs(c);
    if (first) {
        if (c < 0) out += "-";
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (!has_monomial) return out + to_string(a);
    if (a != 1) out += to_string(a) + "*";
    return out;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        out += coeff_prefix(c_[i], first, i > 0);
        if (i == 1) out += var;
        if (i > 1) out += var + "^" + std::to_string(i);
        first = false;
    }
    return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly q, r;
        UPoly::divmod(x, y, q, r);
        x = std::move(y);
        y = r.primitive();
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : UPoly::constant(1);
    UPoly g = gcd(p, p.derivative());
    UPoly q, r;
    UPoly::divmod(p, g, q, r);
    return q.monic();
}

UPoly pow(const UPoly& p, int e) {
    UPoly out = UPoly::constant(1);
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

UPoly cyclotomic(int n) {
    static std::mutex mu;
    static std::map<int, UPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    UPoly p = UPoly::monomial(1, n) - UPoly::constant(1);
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        UPoly q, r;
        UPoly::divmod(p, cyclotomic(d), q, r);
        p = q;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

CyclotomicSplit split_cyclotomic(const UPoly& p, int max_order) {
    CyclotomicSplit out;
    out.unit = p.lead();
    UPoly rest = p.monic();
    for (int e = 1; e <= max_order && rest.degree() > 0; ++e) {
        UPoly phi = cyclotomic(e);
        if (phi.degree() > rest.degree()) continue;
        int k = 0;
        for (;;) {
            UPoly q, r;
            UPoly::divmod(rest, phi, q, r);
            if (!r.is_zero()) break;
            rest = q;
            ++k;
        }
        if (k) out.factors.push_back({e, k});
    }
    out.rest = rest;
    return out;
}

std::vector<Rational> series_coefficients(const UPoly& num, const UPoly& den, int n) {
    if (den.coeff(0) == 0) throw InputError("denominator has zero constant term");
    std::vector<Rational> a(n + 1);
    Rational d0 = den.coeff(0);
    for (int k = 0; k <= n; ++k) {
        Rational acc = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den.coeff(j) * a[k - j];
        a[k] = acc / d0;
    }
    return a;
}

// ---- multivariate --------------------------------------------------------

PolyQ PolyQ::constant(int nvars, const Rational& c) {
    PolyQ p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

PolyQ PolyQ::monomial(const Exponent& e, const Rational& c) {
    PolyQ p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

PolyQ PolyQ::variable(int nvars, int i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

void PolyQ::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational PolyQ::constant_term() const {
    auto it = terms_.find(Exponent(n_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int PolyQ::total_degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Exponent PolyQ::max_exponents() const {
    Exponent m(n_, 0);
    for (auto& [e, c] : terms_)
        for (int i = 0; i < n_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

static Rational rpow(const Rational& x, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

Rational PolyQ::eval(const std::vector<Rational>& point) const {
    Rational acc = 0;
    for (auto& [e, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < n_; ++i) m *= rpow(point[i], e[i]);
        acc += m;
    }
    return acc;
}

UPoly PolyQ::along_ray(const std::vector<Rational>& ray) const {
    if (static_cast<int>(ray.size()) < n_) throw InputError("ray has fewer entries than variables");
    std::vector<Rational> v(std::max(total_degree() + 1, 0));
    for (auto& [e, c] : terms_) {
        Rational m = c;
        int d = 0;
        for (int i = 0; i < n_; ++i) {
            m *= rpow(ray[i], e[i]);
            d += e[i];
        }
        v[d] += m;
    }
    return UPoly(std::move(v));
}

PolyQ PolyQ::reversed(const Exponent& m) const {
    PolyQ out(n_);
    for (auto& [e, c] : terms_) {
        Exponent f(n_);
        for (int i = 0; i < n_; ++i) f[i] = m[i] - e[i];
        out.add_term(f, c);
    }
    return out;
}

PolyQ PolyQ::operator-() const {
    PolyQ out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    PolyQ out(a);
    out.n_ = std::max(a.n_, b.n_);
    for (auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    PolyQ out(std::max(a.n_, b.n_));
    Exponent e(out.n_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < out.n_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

PolyQ operator*(const Rational& s, const PolyQ& a) {
    if (s == 0) return PolyQ(a.n_);
    PolyQ out(a);
    for (auto& [e, c] : out.terms_) c *= s;
    return out;
}

bool PolyQ::divide_exact(const PolyQ& d, PolyQ& q) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    q = PolyQ(n_);
    PolyQ rem(*this);
    const auto& [dl, dc] = *d.terms_.rbegin();
    Exponent f(n_);
    while (!rem.is_zero()) {
        const auto& [rl, rc] = *rem.terms_.rbegin();
        for (int i = 0; i < n_; ++i) {
            f[i] = rl[i] - dl[i];
            if (f[i] < 0) return false;
        }
        Rational coef = rc / dc;
        PolyQ t = PolyQ::monomial(f, coef);
        q.add_term(f, coef);
        rem = rem - t * d;
    }
    return true;
}

std::string PolyQ::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](auto& x, auto& y) {
        int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
        int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
        if (dx != dy) return dx < dy;
        return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (auto& [e, c] : ordered) {
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        out += coeff_prefix(c, first, !mono.empty()) + mono;
        first = false;
    }
    return out;
}

PolyQ pow(const PolyQ& p, int e) {
    PolyQ out = PolyQ::constant(p.nvars(), 1);
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

PolyQ compose_monomial(const UPoly& f, const Exponent& mono) {
    PolyQ out(static_cast<int>(mono.size()));
    Exponent e(mono.size());
    for (int k = 0; k <= f.degree(); ++k) {
        for (std::size_t i = 0; i < mono.size(); ++i) e[i] = mono[i] * k;
        out.add_term(e, f.coeff(k));
    }
    return out;
}

// ---- rational functions --------------------------------------------------

RationalFunctionQ RationalFunctionQ::from_poly(const PolyQ& p) {
    return {p, PolyQ::constant(p.nvars(), 1)};
}

Rational RationalFunctionQ::eval(const std::vector<Rational>& point) const {
    Rational d = den.eval(point);
    if (d == 0) throw std::domain_error("rational function pole");
    return num.eval(point) / d;
}

std::pair<UPoly, UPoly> RationalFunctionQ::along_ray(const std::vector<Rational>& ray) const {
    UPoly n = num.along_ray(ray), d = den.along_ray(ray);
    if (d.is_zero()) throw std::domain_error("denominator vanishes along ray");
    UPoly g = gcd(n, d);
    UPoly q, r;
    if (!n.is_zero() && g.degree() > 0) {
        UPoly::divmod(n, g, q, r);
        n = q;
        UPoly::divmod(d, g, q, r);
        d = q;
    }
    Rational l = d.lead();
    return {Rational(1 / l) * n, d.monic()};
}

RationalFunctionQ RationalFunctionQ::inverse() const {
    if (num.is_zero()) throw std::domain_error("inverse of zero");
    return {den, num};
}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a + RationalFunctionQ{-b.num, b.den};
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return {a.num * b.num, a.den * b.den};
}

bool same_function(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a.num * b.den == b.num * a.den;
}

}  // namespace wl2
