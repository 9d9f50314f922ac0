#pragma once

#include "wl2/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wl2 {

// Dense univariate polynomial over Q, coefficients in ascending degree.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    // Positive integer multiple with coprime integer coefficients and positive leading term.
    UPoly primitive() const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rational& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic, or zero
UPoly squarefree_part(const UPoly& p);      // monic
UPoly cyclotomic(int n);
UPoly pow(const UPoly& p, int e);

// Splits p = c * prod Phi_e(t)^k * rest, with rest free of cyclotomic factors
// of order <= max_order. Returns the (e, k) pairs in ascending e.
struct CyclotomicSplit {
    Rational unit;
    std::vector<std::pair<int, int>> factors;
    UPoly rest;  // monic
};
CyclotomicSplit split_cyclotomic(const UPoly& p, int max_order = 60);

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over Q with a fixed number of variables.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(int nvars) : n_(nvars) {}
    static PolyQ constant(int nvars, const Rational& c);
    static PolyQ monomial(const Exponent& e, const Rational& c = 1);
    static PolyQ variable(int nvars, int i);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational constant_term() const;
    int total_degree() const;
    Exponent max_exponents() const;

    void add_term(const Exponent& e, const Rational& c);
    Rational eval(const std::vector<Rational>& point) const;
    // Substitutes t_i := s * ray_i.
    UPoly along_ray(const std::vector<Rational>& ray) const;
    // t^m * P(1/t) where m is max_exponents().
    PolyQ reversed(const Exponent& m) const;

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const Rational& s, const PolyQ& a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator<(const PolyQ& a, const PolyQ& b) { return a.terms_ < b.terms_; }

    // Exact division; returns false (leaving q unspecified) when d does not divide *this.
    bool divide_exact(const PolyQ& d, PolyQ& q) const;

    // Ascending total degree, then lexicographic exponent order.
    std::string str(const std::vector<std::string>& names) const;

private:
    int n_ = 0;
    std::map<Exponent, Rational> terms_;
};

PolyQ pow(const PolyQ& p, int e);
PolyQ compose_monomial(const UPoly& f, const Exponent& mono);  // f(t^mono)

struct RationalFunctionQ {
    PolyQ num, den;

    static RationalFunctionQ from_poly(const PolyQ& p);
    Rational eval(const std::vector<Rational>& point) const;
    // Univariate specialization reduced to lowest terms, denominator monic.
    std::pair<UPoly, UPoly> along_ray(const std::vector<Rational>& ray) const;
    RationalFunctionQ inverse() const;

    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
};

// Equality of rational functions via cross multiplication.
bool same_function(const RationalFunctionQ& a, const RationalFunctionQ& b);

// Taylor coefficients at 0 of a univariate rational function num/den.
std::vector<Rational> series_coefficients(const UPoly& num, const UPoly& den, int n);

}  // namespace wl2
