#pragma once

#include "wl2/certificate.hpp"
#include "wl2/coxeter.hpp"
#include "wl2/growth.hpp"
#include "wl2/roots.hpp"
#include "wl2/simplicial.hpp"

#include <optional>
#include <string>

namespace wl2 {

// Edge-transitivity data for the star of a generator t in a 1-dimensional nerve.
// G_t is the alternating group on the deg(t) leaves when the star is
// label-uniform and deg(t) >= 3, otherwise every label-preserving permutation
// of the leaves. E_T is the stabilizer in G_t of one edge at t.
struct StarReport {
    int t = 0;
    int degree = 0;
    int m = 0;  // common label, 0 when the labels at t differ
    std::string group;
    Integer G_t, E_T;
    bool transitive = false;
    bool ratio_ok = false;    // |G_t| / |E_T| = deg(t)
    bool divides = false;     // deg(t) | m
    Integer lcm_lhs, lcm_rhs; // lcm(2|G_t|, 2m|E_T|) and 2|G_t| m / deg(t)
    bool lcm_ok = false;
    long long full_stabilizer = -1;       // stabilizer of t in Aut(nerve), -1 if not computed
    long long full_edge_stabilizer = -1;
    Rational dim_C2;  // top chain dimension of the (S,t)-ruin at q = 1

    bool passes() const { return m > 0 && transitive && ratio_ok && divides && lcm_ok; }
    Evidence evidence(const CoxeterSystem& sys) const;
};

// Throws InputError when the nerve is not a graph.
StarReport star_transitivity_report(const CoxeterSystem& sys, int t);

struct CertOutcome {
    bool issued = false;
    VanishingCertificate cert;
    std::string refusal;
};

std::string weights_str(const WeightVector& q);

// Every T of size k must have q inside the growth region of W_St(T).
CertOutcome cert_vanishing_by_stars(const CoxeterSystem& sys, const WeightVector& q, int k);

// Minimum over |T| = k of the radius of W_St(T) along the all-ones ray.
struct StarBound {
    std::optional<AlgebraicReal> bound;  // empty: no finite bound
    GenSet T = 0;
    int subsets = 0;
};
StarBound star_radius_bound(const CoxeterSystem& sys, int k);

CertOutcome cert_atiyah_Kn(int n, int m);
// Checks that the nerve is K_n with one label everywhere, then defers to (n, m).
CertOutcome cert_atiyah_Kn(const CoxeterSystem& sys);
// Uniform label on a graph nerve; throws InputError on mixed labels.
CertOutcome cert_atiyah_trianglefree(const CoxeterSystem& sys);
// Flag triangulation of a closed orientable surface.
CertOutcome cert_surface_interval(const SimplicialComplex& L);

}  // namespace wl2
