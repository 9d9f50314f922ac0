#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wl2/davis.hpp"
#include "wl2/enumeration.hpp"
#include "wl2/fixtures.hpp"
#include "wl2/growth.hpp"
#include "wl2/hecke.hpp"
#include "wl2/homology.hpp"

#include <random>

using namespace wl2;

namespace {

std::vector<Elem> ball_elements(const CoxeterSystem& sys, int L) {
    Enumerator& e = sys.enumerator();
    e.extend_to(L);
    std::vector<Elem> out;
    for (std::size_t w = 0; w < e.size() && e.length(static_cast<Elem>(w)) <= L; ++w) out.push_back(static_cast<Elem>(w));
    return out;
}

// W(q) for finite W, summed element by element.
Rational direct_growth(const CoxeterSystem& sys, const WeightVector& q) {
    Enumerator& e = sys.enumerator();
    e.extend_to(1000);
    Rational sum = 0;
    for (std::size_t w = 0; w < e.size(); ++w) sum += weight_of(sys, q, e.class_exponent(static_cast<Elem>(w)));
    return sum;
}

Rational random_q(std::mt19937_64& rng) {
    Rational q(1 + rng() % 9, 1 + rng() % 7);
    q.canonicalize();
    return q;
}

std::vector<Rational> basis(int n, int i) {
    std::vector<Rational> v(n, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("nerve and chamber") {
    auto pent = kgon_system(5);
    CHECK(nerve(pent).facets().size() == 5);
    CHECK(davis_chamber(pent).K.num_vertices() == 11);
    auto one = CoxeterSystem({"s"}, {{1}});
    CHECK(nerve(one).num_vertices() == 1);
    CHECK(davis_chamber(one).K.facets().size() == 1);
    auto k4 = nerve(kn_system(4, 3));
    CHECK(k4.dimension() == 1);
    CHECK(k4.facets().size() == 6);
}

TEST_CASE("basic construction") {
    auto one = CoxeterSystem({"s"}, {{1}});
    auto seg = basic_construction(one, davis_chamber(one), ball_elements(one, 1));
    CHECK(seg.facets().size() == 2);
    CHECK(homology(seg, true).all_zero());

    auto d3 = dihedral_system(3);
    auto disc = basic_construction(d3, davis_chamber(d3), ball_elements(d3, 3));
    CHECK(disc.euler_characteristic() == 1);
    CHECK(homology(disc, true).all_zero());

    auto dinf = dihedral_system(0);
    auto path = basic_construction(dinf, davis_chamber(dinf), ball_elements(dinf, 3));
    CHECK(path.dimension() == 1);
    CHECK(path.facets().size() == 14);  // 7 chambers, each a cone on two mirror points
    CHECK(homology(path, true).all_zero());

    auto pent = kgon_system(5);
    auto patch = basic_construction(pent, davis_chamber(pent), ball_elements(pent, 2));
    CHECK(homology(patch, true).all_zero());
}

TEST_CASE("truncated complexes are chain complexes") {
    std::mt19937_64 rng(23);
    for (auto sys : {kgon_system(5), kn_system(4, 3), dihedral_system(0), finite_type_system("B3")}) {
        for (int trial = 0; trial < 2; ++trial) {
            auto q = make_weights(sys, {random_q(rng)});
            TruncatedDavisComplex X(sys, q, 4);
            CHECK(X.chain_complex().squares_to_zero());
            CHECK(X.perturbed_chain_complex().squares_to_zero());
        }
    }
}

TEST_CASE("full complexes of finite groups") {
    std::mt19937_64 rng(29);
    for (auto sys : {finite_type_system("A3"), finite_type_system("I2(5)"), finite_type_system("B3")}) {
        auto q = make_weights(sys, {random_q(rng)});
        TruncatedDavisComplex X(sys, q, 100);
        REQUIRE(X.full());
        // cells of type T correspond to cosets of W_T
        Rational order = direct_growth(sys, make_weights(sys, {Rational(1)}));
        for (GenSet T : sys.spherical()) {
            int cells = 0;
            for (int i = 0; i < X.count(popcount(T)); ++i) cells += X.cell(popcount(T), i).T == T;
            Rational sub = growth_poly_finite(sys, T).eval(std::vector<Rational>(sys.num_classes(), 1));
            CHECK(Rational(cells) == order / sub);
        }
        auto b = homology(X.perturbed_chain_complex());
        CHECK(b.concentrated_in(0));
        CHECK(b.at(0) == 1);
    }
}

TEST_CASE("perturbed boundary is adjoint to the coboundary") {
    for (auto sys : {kgon_system(5), kn_system(4, 3), dihedral_system(0)}) {
        TruncatedDavisComplex X(sys, make_weights(sys, {Rational(2, 3)}), 5);
        auto r = adjoint_check(X, 40, 1);
        CHECK(r.pairs == 40);
        CHECK(r.passed == r.pairs);
    }
}

TEST_CASE("weighted Euler characteristic of finite groups") {
    std::mt19937_64 rng(31);
    for (auto sys : {finite_type_system("A3"), finite_type_system("B3"), finite_type_system("H3"), dihedral_system(6)}) {
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Rational> values;
            for (int c = 0; c < sys.num_classes(); ++c) values.push_back(random_q(rng));
            auto q = make_weights(sys, values);
            CHECK(weighted_euler(sys, q) == 1 / direct_growth(sys, q));
        }
    }
}

TEST_CASE("weighted Euler identity as rational functions") {
    for (auto sys : {kgon_system(5), kgon_system(6), kn_system(4, 3), kn_system(4, 7), dihedral_system(0),
                     finite_type_system("B3"), uniform_graph_system(petersen_graph(), 3)})
        CHECK(euler_identity_check(sys));
    auto pent = kgon_system(5);
    auto q = make_weights(pent, {Rational(1, 5)});
    auto W = growth_rational(pent);
    CHECK(weighted_euler(pent, q) == 1 / W.eval(q));
}

TEST_CASE("Hecke shadow") {
    std::mt19937_64 rng(37);
    for (auto sys : {finite_type_system("B3"), finite_type_system("A3"), dihedral_system(5)}) {
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<Rational> values;
            for (int c = 0; c < sys.num_classes(); ++c) values.push_back(random_q(rng));
            auto q = make_weights(sys, values);
            HeckeShadow H(sys, sys.all(), q);
            const int n = H.dim();

            // quadratic relation and associativity on basis triples
            for (int s = 0; s < sys.rank(); ++s) {
                auto es = basis(n, sys.enumerator(sys.all()).mul(0, s));
                auto sq = H.multiply(es, es);
                Rational qs = q[sys.class_of(s)];
                auto expected = basis(n, 0);
                expected[0] = qs;
                for (int i = 0; i < n; ++i) expected[i] += (qs - 1) * es[i];
                CHECK(sq == expected);
            }
            for (int k = 0; k < 20; ++k) {
                auto a = basis(n, rng() % n), b = basis(n, rng() % n), c = basis(n, rng() % n);
                CHECK(H.multiply(H.multiply(a, b), c) == H.multiply(a, H.multiply(b, c)));
            }

            for (GenSet T : sys.spherical()) {
                auto h = H.idempotent(T);
                CHECK(H.multiply(h, h) == h);
                CHECK(H.self_adjoint(H.right_multiplication(h)));
                Rational inv_sum = 0;
                HeckeShadow sub(sys, T, q);
                for (auto& w : sub.weights()) inv_sum += 1 / w;
                CHECK(H.trace(h) == 1 / inv_sum);
                CHECK(H.trace(h) == hecke_dimension(sys, T, q));
                int r = rank(H.right_multiplication(h));
                CHECK(r == H.image_intersection_dim(T));
                CHECK(Rational(r) * sub.dim() == n);  // one dimension per coset of W_T
            }
        }
    }
}

TEST_CASE("stars and links of subsets") {
    auto pent = kgon_system(5);
    CHECK(st_of(pent, bit(0), pent.all()) == (bit(0) | bit(1) | bit(4)));
    CHECK(lk_of(pent, bit(0), pent.all()) == (bit(1) | bit(4)));
    CHECK(st_of(pent, 0, 0b10110) == 0b10110);
    auto k4 = kn_system(4, 3);
    CHECK(st_of(k4, 0b11, k4.all()) == 0b11);
}

TEST_CASE("ruins") {
    auto pent = kgon_system(5);
    auto q = make_weights(pent, {Rational(1)});
    TruncatedDavisComplex X(pent, q, 4);

    auto R0 = ruin(X, pent.all(), 0);
    for (auto& f : R0.frontier) CHECK(f.empty());

    for (GenSet T : pent.spherical()) {
        auto R = ruin(X, pent.all(), T);
        auto types = ruin_types(pent, pent.all(), T);
        for (int d = 0; d < static_cast<int>(R.relative_types.size()); ++d) {
            std::vector<GenSet> expected;
            for (GenSet S : types)
                if (popcount(S) == d) expected.push_back(S);
            std::sort(expected.begin(), expected.end());
            auto got = R.relative_types[d];
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
        }
        if (popcount(T) == 2) {
            auto C = relative_chain_complex(X, R);
            for (int i = 0; i < static_cast<int>(C.dims.size()); ++i)
                if (C.lo + i < 2) CHECK(C.dims[i] == 0);
        }
    }

    GenSet maximal = 0b11;
    auto series = ruin_dimension_series(pent, q, maximal);
    CHECK(series[2] == hecke_dimension(pent, maximal, q));
    CHECK(series[0] == 0);
    CHECK(series[1] == 0);

    CHECK(ruin_additivity_check(pent, q, pent.all(), bit(0), 0));
    auto k4 = kn_system(4, 3);
    CHECK(ruin_additivity_check(k4, make_weights(k4, {Rational(1, 2)}), k4.all(), 0b11, 0));
    CHECK(ruin_additivity_check(pent, q, bit(2), bit(2), 2));
}
