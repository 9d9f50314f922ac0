#pragma once

#include "wl2/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wl2 {

// A real algebraic number: the unique root of `poly` in (lo, hi], or the
// rational lo when lo == hi. `poly` is square-free with integer coefficients.
struct AlgebraicReal {
    UPoly poly;
    Rational lo, hi;

    bool is_rational() const { return lo == hi; }
    void refine(const Rational& width);
    std::string preview(int digits = 12);
};

std::vector<UPoly> sturm_sequence(const UPoly& p);
// Number of distinct real roots in (a, b].
int sturm_count(const std::vector<UPoly>& seq, const Rational& a, const Rational& b);
Rational cauchy_bound(const UPoly& p);

// Smallest root in (0, +inf), or nullopt when there is none.
std::optional<AlgebraicReal> smallest_positive_root(const UPoly& p);

// Exact sign of (x - r).
int compare(const Rational& x, AlgebraicReal& r);
// Exact sign of (a - b); refines both as needed.
int compare(AlgebraicReal& a, AlgebraicReal& b);

// Checks that the interval data isolates exactly one root of poly.
bool isolates_one_root(const UPoly& poly, const Rational& lo, const Rational& hi);

}  // namespace wl2
