#include "wl2/roots.hpp"

namespace wl2 {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
    std::vector<UPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        UPoly q, r;
        UPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
        // Scale by a positive constant only, keeping the sign of -r.
        UPoly next = -r;
        if (!next.is_zero()) {
            UPoly prim = next.primitive();
            if (sgn(prim.lead()) != sgn(next.lead())) prim = -prim;
            next = prim;
        }
        seq.push_back(next);
    }
    seq.pop_back();
    return seq;
}

static int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
    int changes = 0, prev = 0;
    for (auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int sturm_count(const std::vector<UPoly>& seq, const Rational& a, const Rational& b) {
    return sign_changes(seq, a) - sign_changes(seq, b);
}

Rational cauchy_bound(const UPoly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.lead())));
    return m + 1;
}

std::optional<AlgebraicReal> smallest_positive_root(const UPoly& p) {
    if (p.degree() <= 0) return std::nullopt;
    UPoly sf = squarefree_part(p);
    while (sf.coeff(0) == 0) {
        UPoly q, r;
        UPoly::divmod(sf, UPoly::monomial(1, 1), q, r);
        sf = q;
    }
    sf = sf.primitive();
    if (sf.degree() <= 0) return std::nullopt;
    auto seq = sturm_sequence(sf);
    Rational lo = 0, hi = cauchy_bound(sf);
    if (sturm_count(seq, lo, hi) == 0) return std::nullopt;
    while (sturm_count(seq, lo, hi) > 1) {
        Rational mid = (lo + hi) / 2;
        if (sturm_count(seq, lo, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    AlgebraicReal r{sf, lo, hi};
    if (sf.sign_at(hi) == 0) r.lo = hi;
    return r;
}

void AlgebraicReal::refine(const Rational& width) {
    if (is_rational()) return;
    int slo = poly.sign_at(lo);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int sm = poly.sign_at(mid);
        if (sm == 0) {
            lo = hi = mid;
            return;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    if (poly.sign_at(hi) == 0) lo = hi;
}

std::string AlgebraicReal::preview(int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 3));
    refine(Rational(1, scale));
    return decimal((lo + hi) / 2, digits);
}

int compare(const Rational& x, AlgebraicReal& r) {
    if (r.is_rational()) return sgn(x - r.lo);
    if (x <= r.lo) return -1;
    if (x > r.hi) return 1;
    int sx = r.poly.sign_at(x);
    if (sx == 0) return 0;
    // No sign change on (lo, x] means the root lies to the right of x.
    return sx == r.poly.sign_at(r.lo) ? -1 : 1;
}

int compare(AlgebraicReal& a, AlgebraicReal& b) {
    for (int iter = 0; iter < 4000; ++iter) {
        if (a.is_rational()) return compare(a.lo, b);
        if (b.is_rational()) return -compare(b.lo, a);
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return 1;
        UPoly g = gcd(a.poly, b.poly);
        if (g.degree() > 0) {
            // A common root inside a's interval is a itself; equality holds when it
            // also lies inside b's interval.
            auto seq = sturm_sequence(g);
            Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
            if (sturm_count(seq, a.lo, a.hi) == 1 && sturm_count(seq, lo, hi) == 1) return 0;
        }
        a.refine((a.hi - a.lo) / 2);
        b.refine((b.hi - b.lo) / 2);
    }
    throw std::runtime_error("algebraic comparison did not separate");
}

bool isolates_one_root(const UPoly& poly, const Rational& lo, const Rational& hi) {
    if (poly.is_zero() || lo > hi) return false;
    if (lo == hi) return poly.sign_at(lo) == 0;
    UPoly sf = squarefree_part(poly);
    return sturm_count(sturm_sequence(sf), lo, hi) == 1;
}

}  // namespace wl2
