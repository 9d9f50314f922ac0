#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wl2/enumeration.hpp"
#include "wl2/fixtures.hpp"
#include "wl2/growth.hpp"
#include "wl2/words.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

using namespace wl2;

namespace {

// Tits' geometric representation in doubles: an independent, faithful model
// of W used to decide equality of words.
using Mat = std::vector<double>;

Mat reflection(const CoxeterSystem& sys, int s) {
    const int n = sys.rank();
    Mat B(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int m = sys.m(i, j);
            B[i * n + j] = i == j ? 1.0 : m == kInfinity ? -1.0 : -std::cos(std::numbers::pi / m);
        }
    // sigma_s(e_j) = e_j - 2 B(e_s, e_j) e_s
    Mat R(n * n, 0.0);
    for (int i = 0; i < n; ++i) R[i * n + i] = 1.0;
    for (int j = 0; j < n; ++j) R[s * n + j] -= 2.0 * B[s * n + j];
    return R;
}

Mat word_matrix(const CoxeterSystem& sys, const Word& w) {
    const int n = sys.rank();
    Mat M(n * n, 0.0);
    for (int i = 0; i < n; ++i) M[i * n + i] = 1.0;
    for (int s : w) {
        Mat R = reflection(sys, s), P(n * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) P[i * n + j] += M[i * n + k] * R[k * n + j];
        M = P;
    }
    return M;
}

bool close(const Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > 1e-8) return false;
    return true;
}

Word random_word(std::mt19937_64& rng, int rank, int len) {
    Word w(len);
    for (int& x : w) x = static_cast<int>(rng() % rank);
    return w;
}

// Every word of length <= L, reduced to normal form, grouped by length.
std::vector<std::size_t> rewriting_census(const CoxeterSystem& sys, int L) {
    TitsRewriter tr(sys);
    std::set<Word> seen{Word{}};
    std::vector<Word> frontier{Word{}};
    for (int l = 1; l <= L; ++l) {
        std::vector<Word> next;
        for (auto& w : frontier)
            for (int s = 0; s < sys.rank(); ++s) {
                Word x = w;
                x.push_back(s);
                Word nf = tr.normal_form(x);
                if (seen.insert(nf).second) next.push_back(nf);
            }
        frontier = std::move(next);
    }
    std::vector<std::size_t> out(L + 1, 0);
    for (auto& w : seen) ++out[w.size()];
    return out;
}

}  // namespace

TEST_CASE("conjugacy classes follow odd labels") {
    CHECK(dihedral_system(3).num_classes() == 1);
    CHECK(dihedral_system(2).num_classes() == 2);
    CHECK(dihedral_system(6).num_classes() == 2);
    CHECK(kgon_system(5).num_classes() == 5);
    CHECK(kn_system(4, 3).num_classes() == 1);
    CHECK(finite_type_system("B3").num_classes() == 2);
}

TEST_CASE("spherical subsets") {
    auto pent = kgon_system(5);
    std::map<int, int> by_size;
    for (GenSet T : pent.spherical()) ++by_size[popcount(T)];
    CHECK(by_size == std::map<int, int>{{0, 1}, {1, 5}, {2, 5}});

    auto k4 = kn_system(4, 3);
    by_size.clear();
    for (GenSet T : k4.spherical()) ++by_size[popcount(T)];
    CHECK(by_size == std::map<int, int>{{0, 1}, {1, 4}, {2, 6}});

    auto one = CoxeterSystem({"s"}, {{1}});
    CHECK(one.spherical().size() == 2);

    CHECK(pent.is_finite(0));
    CHECK_FALSE(dihedral_system(0).is_finite(0b11));
    CHECK_FALSE(kn_system(3, 3).is_finite(0b111));
}

TEST_CASE("spherical family is downward closed and matches is_finite") {
    for (auto sys : {kgon_system(6), kn_system(4, 3), finite_type_system("A3"), kn_system(4, 5)}) {
        std::set<GenSet> S(sys.spherical().begin(), sys.spherical().end());
        for (GenSet T = 0; T <= sys.all(); ++T) {
            CHECK(sys.is_finite(T) == (S.count(T) == 1));
            if (S.count(T))
                for (int s : members(T)) CHECK(S.count(T & ~bit(s)) == 1);
        }
    }
}

TEST_CASE("is_finite agrees with enumeration") {
    std::vector<CoxeterSystem> systems = {kn_system(3, 3), kn_system(4, 3), dihedral_system(7),
                                          finite_type_system("B3"), finite_type_system("H3"), kgon_system(5),
                                          CoxeterSystem({"a", "b", "c"}, {{1, 3, 2}, {3, 1, 5}, {2, 5, 1}}),
                                          CoxeterSystem({"a", "b", "c"}, {{1, 4, 2}, {4, 1, 4}, {2, 4, 1}})};
    for (auto& sys : systems)
        for (GenSet T = 0; T <= sys.all(); ++T) {
            Enumerator e(sys, T, 10000);
            if (sys.is_finite(T)) {
                e.extend_to(1000);
                REQUIRE(e.complete());
                Rational at_one = growth_poly_finite(sys, T).eval(std::vector<Rational>(sys.num_classes(), 1));
                CHECK(Rational(static_cast<long>(e.size())) == at_one);
            } else {
                // BFS never terminates: the budget of 10^4 elements runs out
                CHECK_THROWS_AS(e.extend_to(20000), ResourceError);
            }
        }
}

TEST_CASE("finite types have the expected orders") {
    std::map<std::string, std::size_t> order = {{"A3", 24}, {"B3", 48}, {"D4", 192}, {"H3", 120}, {"F4", 1152},
                                                {"I2(5)", 10}, {"A4", 120}};
    for (auto& [type, n] : order) {
        auto sys = finite_type_system(type);
        CHECK(ball(sys, 100).size() == n);
        CHECK(sys.finite_type(sys.all()) == type);
    }
}

TEST_CASE("ball") {
    CHECK(ball(dihedral_system(3), 3).size() == 6);
    CHECK(ball(kgon_system(5), 0) == std::vector<Word>{Word{}});
    // 5 commuting pairs give one element each, 5 non-commuting pairs two
    CHECK(ball(kgon_system(5), 2).size() == 1 + 5 + 15);
    CHECK_THROWS_AS(ball(kgon_system(5), -1), InputError);

    // BFS order: lengths never decrease and no element repeats
    auto b = ball(kn_system(4, 3), 6);
    std::set<Word> distinct(b.begin(), b.end());
    CHECK(distinct.size() == b.size());
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1].size() <= b[i].size());
}

TEST_CASE("normal forms") {
    auto d3 = dihedral_system(3);
    CHECK(normal_form(d3, {0, 0}).empty());
    CHECK(normal_form(d3, {0, 1, 0}) == normal_form(d3, {1, 0, 1}));
    CHECK(normal_form(d3, {1, 0, 1}) == Word{0, 1, 0});
    CHECK(normal_form(dihedral_system(2), {1, 0}) == Word{0, 1});
}

TEST_CASE("rewriting census matches the enumerator") {
    for (auto sys : {kgon_system(5), kn_system(4, 3), dihedral_system(5), finite_type_system("A3")}) {
        const int L = sys.rank() >= 4 ? 5 : 7;
        sys.enumerator().extend_to(L);
        auto sizes = sys.enumerator().layer_sizes();
        auto census = rewriting_census(sys, L);
        for (int l = 0; l <= L; ++l) {
            std::size_t expected = l < static_cast<int>(sizes.size()) ? sizes[l] : 0;
            CHECK(census[l] == expected);
        }
    }
}

TEST_CASE("normal forms decide equality as in the reflection representation") {
    std::mt19937_64 rng(7);
    for (auto sys : {dihedral_system(5), kn_system(4, 3), kgon_system(5), finite_type_system("B3")}) {
        TitsRewriter tr(sys);
        for (int trial = 0; trial < 300; ++trial) {
            Word a = random_word(rng, sys.rank(), 1 + rng() % 8);
            Word b = random_word(rng, sys.rank(), 1 + rng() % 8);
            if (trial % 3 == 0) {
                // a braid-equivalent copy of a, padded with ss
                b = tr.normal_form(a);
                int s = static_cast<int>(rng() % sys.rank());
                b.insert(b.begin() + rng() % (b.size() + 1), {s, s});
            }
            bool equal_nf = tr.normal_form(a) == tr.normal_form(b);
            CHECK(equal_nf == close(word_matrix(sys, a), word_matrix(sys, b)));
            // idempotent, and the enumerator agrees
            CHECK(tr.normal_form(tr.normal_form(a)) == tr.normal_form(a));
            Enumerator& e = sys.enumerator();
            CHECK(e.normal_form(e.element(a)) == tr.normal_form(a));
        }
    }
}

TEST_CASE("braid classes are constant under normal form") {
    auto sys = finite_type_system("A3");
    TitsRewriter tr(sys);
    sys.enumerator().extend_to(100);
    Word w0 = sys.enumerator().normal_form(sys.enumerator().longest());
    auto cls = tr.braid_class(w0);
    CHECK(cls.size() == 16);  // reduced words of the longest element of S_4
    for (auto& w : cls) CHECK(tr.normal_form(w) == w0);
}

TEST_CASE("minimal coset representatives") {
    auto d2 = dihedral_system(2);
    CHECK(min_coset_rep(d2, {1}, bit(1)).empty());
    CHECK(min_coset_rep(d2, {0, 1}, bit(1)) == Word{0});

    // brute force over the coset {w, wt} in the dihedral group of order 8
    auto d4 = dihedral_system(4);
    TitsRewriter tr(d4);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = random_word(rng, 2, rng() % 9);
        Word wt = w;
        wt.push_back(1);
        Word a = tr.normal_form(w), b = tr.normal_form(wt);
        Word best = a.size() < b.size() ? a : b;
        Word u = min_coset_rep(d4, w, bit(1));
        CHECK(u == best);
        Word ut = u;
        ut.push_back(1);
        CHECK(tr.length(ut) > tr.length(u));
    }
}

TEST_CASE("minimal coset representatives over larger parabolics") {
    auto sys = finite_type_system("B3");
    TitsRewriter tr(sys);
    std::mt19937_64 rng(3);
    for (GenSet T : sys.spherical()) {
        auto sub = ball(sys.restrict(T), 100);
        auto local = members(T);
        for (int trial = 0; trial < 10; ++trial) {
            Word w = random_word(rng, 3, rng() % 10);
            std::size_t best = 1000;
            Word best_word;
            for (auto& v : sub) {
                Word x = w;
                for (int s : v) x.push_back(local[s]);
                Word nf = tr.normal_form(x);
                if (nf.size() < best) best = nf.size(), best_word = nf;
            }
            Word u = min_coset_rep(sys, w, T);
            CHECK(u == best_word);
        }
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_system("coxeter v1\ngenerators: a b\nm: a b 1\n"), InputError);
    CHECK_THROWS_AS(parse_system("coxeter v1\ngenerators: a b\nm: a c 3\n"), InputError);
    CHECK_THROWS_AS(parse_system("nonsense"), InputError);
    auto sys = parse_system(kgon_system(5).to_text());
    CHECK(sys.to_text() == kgon_system(5).to_text());
    CHECK(sys.hash() == kgon_system(5).hash());
}
