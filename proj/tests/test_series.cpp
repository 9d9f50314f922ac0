#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wl2/enumeration.hpp"
#include "wl2/fixtures.hpp"
#include "wl2/growth.hpp"
#include "wl2/roots.hpp"

#include <cmath>

using namespace wl2;

namespace {

UPoly up(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return UPoly(r);
}

std::vector<Rational> census_q(const CoxeterSystem& sys, int N) {
    std::vector<Rational> out;
    for (auto& c : census(sys, N)) out.emplace_back(c);
    return out;
}

double closed_form_rho(int k) { return ((k - 2) - std::sqrt(double(k * k - 4 * k))) / 2; }

}  // namespace

TEST_CASE("univariate polynomial arithmetic") {
    UPoly a = up({-1, 0, 1}), b = up({1, 1});
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    CHECK(q == up({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, up({-1, 1})) == up({-1, 1}));
    CHECK(cyclotomic(6) == up({1, -1, 1}));
    CHECK(squarefree_part(pow(b, 3) * up({2, 1})) == b * up({2, 1}));
    auto split = split_cyclotomic(pow(up({1, 1}), 2) * up({1, 1, 1}) * up({1, -3, 1}));
    CHECK(split.factors == std::vector<std::pair<int, int>>{{2, 2}, {3, 1}});
    CHECK(split.rest == up({1, -3, 1}));
}

TEST_CASE("series coefficients") {
    auto c = series_coefficients(up({1}), up({1, -1}), 3);
    CHECK(c == std::vector<Rational>{1, 1, 1, 1});
    c = series_coefficients(up({1, 2, 1}), up({1}), 2);
    CHECK(c == std::vector<Rational>{1, 2, 1});
    CHECK(series_coefficients(growth_rational(kgon_system(5)), 2) == std::vector<Rational>{1, 5, 15});
}

TEST_CASE("growth polynomials of finite groups") {
    auto d3 = dihedral_system(3);
    CHECK(growth_poly_finite(d3, 0) == PolyQ::constant(1, 1));
    CHECK(growth_poly_finite(d3, d3.all()).along_ray({Rational(1)}) == up({1, 2, 2, 1}));
    auto d2 = dihedral_system(2);
    PolyQ a = PolyQ::variable(2, 0), b = PolyQ::variable(2, 1), one = PolyQ::constant(2, 1);
    CHECK(growth_poly_finite(d2, d2.all()) == (one + a) * (one + b));
    // the Poincare polynomial of A3 is [2][3][4]
    auto a3 = finite_type_system("A3");
    CHECK(growth_poly_finite(a3, a3.all()).along_ray({Rational(1)}) ==
          up({1, 1}) * up({1, 1, 1}) * up({1, 1, 1, 1}));
}

TEST_CASE("pentagon growth series") {
    auto g = inverse_growth(kgon_system(5), uniform_variables(kgon_system(5)));
    CHECK(format_inverse_growth(kgon_system(5), g, false) == "1/W = (1 - 3*t + t^2) / (1 + t)^2");
}

TEST_CASE("growth series match the ball census") {
    std::vector<CoxeterSystem> systems = {kgon_system(4), kgon_system(5), kgon_system(7), kn_system(4, 3),
                                          kn_system(4, 5), dihedral_system(0), dihedral_system(5),
                                          finite_type_system("B3"), finite_type_system("H3")};
    for (auto& sys : systems) {
        auto coeffs = series_coefficients(growth_rational(sys), 11);
        CHECK(coeffs == census_q(sys, 11));
        auto [num, den] = growth_along_ray(sys, std::vector<Rational>(sys.num_classes(), 1));
        CHECK(series_coefficients(num, den, 11) == coeffs);
    }
    auto pet = uniform_graph_system(petersen_graph(), 3);
    CHECK(series_coefficients(growth_rational(pet), 6) == census_q(pet, 6));
}

TEST_CASE("transfer census for right-angled systems") {
    for (auto sys : {kgon_system(5), kgon_system(6), right_angled_system(petersen_graph()),
                     right_angled_system(torus_grid(4, 4))})
        CHECK(census_right_angled(sys, 5) == census_bfs(sys, 5));
    CHECK_THROWS_AS(census_right_angled(kn_system(4, 3), 3), InputError);
}

TEST_CASE("specialized growth of a torus nerve") {
    auto sys = right_angled_system(torus_grid(4, 4));
    auto f = growth_rational(sys, uniform_variables(sys));
    CHECK(f.num.nvars() == 1);
    CHECK(series_coefficients(f, 11) == census_q(sys, 11));
}

TEST_CASE("radius of convergence of k-gon systems") {
    for (int k = 5; k <= 8; ++k) {
        auto r = radius_of_convergence(kgon_system(k), {Rational(1)});
        REQUIRE(r.rho.has_value());
        r.rho->refine(Rational(1, 1000000000) / 1000000);
        CHECK(std::abs(r.rho->lo.get_d() - closed_form_rho(k)) < 1e-12);
        CHECK(isolates_one_root(r.rho->poly, r.rho->lo, r.rho->hi));
    }
    // the square is Euclidean: rho = 1
    auto sq = radius_of_convergence(kgon_system(4), {Rational(1)});
    REQUIRE(sq.rho.has_value());
    CHECK(compare(Rational(1), *sq.rho) == 0);
    CHECK_FALSE(radius_of_convergence(finite_type_system("A3"), {Rational(1)}).rho.has_value());
}

TEST_CASE("growth region membership") {
    auto pent = kgon_system(5);
    auto r = in_region(pent, make_weights(pent, {Rational(1, 4)}));
    CHECK(r.inside);
    CHECK(r.margin_lo > 0);
    CHECK_FALSE(in_region(pent, make_weights(pent, {Rational(1)})).inside);
    auto fin = finite_type_system("B3");
    auto f = in_region(fin, make_weights(fin, {Rational(100)}));
    CHECK(f.inside);
    CHECK(f.margin_infinite);
}

TEST_CASE("root isolation") {
    // (t - 1/2)(t - 2)(t^2 - 2)
    UPoly p = up({-1, 2}) * up({-2, 1}) * up({-2, 0, 1});
    auto seq = sturm_sequence(p);
    CHECK(sturm_count(seq, Rational(-10), Rational(10)) == 4);
    CHECK(sturm_count(seq, Rational(0), Rational(1)) == 1);
    CHECK(sturm_count(seq, Rational(1), Rational(3, 2)) == 1);
    auto r = smallest_positive_root(p);
    REQUIRE(r.has_value());
    CHECK(compare(Rational(1, 2), *r) == 0);
    auto s = smallest_positive_root(up({-2, 0, 1}));
    REQUIRE(s.has_value());
    s->refine(Rational(Integer(1), Integer("1000000000000")));
    CHECK(std::abs(s->lo.get_d() - std::sqrt(2.0)) < 1e-11);
    CHECK(compare(Rational(141421, 100000), *s) < 0);
    CHECK_FALSE(smallest_positive_root(up({1, 1})).has_value());
    CHECK(cauchy_bound(p) >= 2);
}
