#pragma once

#include "wl2/coxeter.hpp"
#include "wl2/poly.hpp"
#include "wl2/roots.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wl2 {

// Positive rationals, one per conjugacy class of generators.
using WeightVector = std::vector<Rational>;

// A single rational broadcasts to every class; otherwise one entry per class.
WeightVector make_weights(const CoxeterSystem& sys, const std::vector<Rational>& values);
// A single entry broadcasts to all n variables; entries must be positive.
std::vector<Rational> expand_ray(int n, const std::vector<Rational>& ray);

// q_w for a word, as a product over its letters.
Rational weight_of(const CoxeterSystem& sys, const WeightVector& q, const Exponent& class_exponent);

// Sum of t_w over W_T, one variable per conjugacy class of the ambient system.
PolyQ growth_poly_finite(const CoxeterSystem& sys, GenSet T);

// 1/W(t) = num / prod(atoms[i]^mult[i]), with num coprime to every atom.
struct InverseGrowth {
    PolyQ num;
    std::vector<std::pair<PolyQ, int>> atoms;
    PolyQ denominator() const;
};

// `variables` optionally maps each conjugacy class to a variable index, so
// classes sharing an index share a variable (all zeros gives W(t) in one
// variable t). Empty means one variable per class. The one-variable form
// stays cheap when there are many classes.
InverseGrowth inverse_growth(const CoxeterSystem& sys, const std::vector<int>& variables = {});
// W(t) itself; for finite W the polynomial over 1.
RationalFunctionQ growth_rational(const CoxeterSystem& sys, const std::vector<int>& variables = {});
std::vector<int> uniform_variables(const CoxeterSystem& sys);
// Rewrites a polynomial in the class variables into the shared variables.
PolyQ specialize(const CoxeterSystem& sys, const PolyQ& p, const std::vector<int>& variables);

// W along t_c = s * ray_c as (num, den) in lowest terms, den monic. Avoids the
// multivariate form, so it is the one to use for systems with many classes.
std::pair<UPoly, UPoly> growth_along_ray(const CoxeterSystem& sys, const std::vector<Rational>& ray);

// Splits a polynomial into factors of the form Phi_e(monomial) and a remainder.
std::vector<std::pair<PolyQ, int>> cyclotomic_atoms(const PolyQ& p);

// Text form "1/W = num / den" in the uniform variable t, or per class when multivariate.
std::string format_inverse_growth(const CoxeterSystem& sys, const InverseGrowth& g, bool multivariate);
// The same text for 1/W = num / den in one variable.
std::string format_inverse_growth(const UPoly& num, const UPoly& den);

// Number of elements of each length 0..N.
std::vector<Integer> census_bfs(const CoxeterSystem& sys, int N);
// Transfer count over ShortLex normal forms; right-angled systems only.
std::vector<Integer> census_right_angled(const CoxeterSystem& sys, int N);
std::vector<Integer> census(const CoxeterSystem& sys, int N);

// Taylor coefficients of f along the all-ones ray (t_c = t for every class).
std::vector<Rational> series_coefficients(const RationalFunctionQ& f, int N);

struct RadiusResult {
    std::optional<AlgebraicReal> rho;  // empty means +infinity
    std::vector<Rational> ray;
    UPoly denominator;                 // reduced specialized denominator of W
};

RadiusResult radius_of_convergence(const RationalFunctionQ& W, const std::vector<Rational>& ray);
RadiusResult radius_of_convergence(const CoxeterSystem& sys, const std::vector<Rational>& ray);

struct RegionResult {
    bool inside = false;
    Rational s0;
    std::vector<Rational> ray;
    RadiusResult radius;
    bool margin_infinite = false;
    Rational margin_lo, margin_hi;  // rho - s0 lies in (margin_lo, margin_hi]
};

RegionResult in_region(const CoxeterSystem& sys, const WeightVector& q);

}  // namespace wl2
