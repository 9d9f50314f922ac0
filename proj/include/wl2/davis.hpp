#pragma once

#include "wl2/coxeter.hpp"
#include "wl2/enumeration.hpp"
#include "wl2/growth.hpp"
#include "wl2/homology.hpp"
#include "wl2/linalg.hpp"
#include "wl2/simplicial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace wl2 {

// Nerve: vertices are generators, simplices the nonempty spherical subsets.
SimplicialComplex nerve(const CoxeterSystem& sys);

// A simplicial complex with a mirror (closed full subcomplex) per generator.
// vertex_type[x] is the set of generators whose mirror contains vertex x.
struct MirroredChamber {
    SimplicialComplex K;
    std::vector<GenSet> vertex_type;

    std::vector<int> mirror(int s) const;
};

// Builds the mirror structure from one vertex list per generator.
MirroredChamber mirrored(const SimplicialComplex& K, const std::vector<std::vector<int>>& mirrors);
// Order complex of the spherical poset (including the empty set); the vertex
// for T lies in the mirrors of the generators in T.
MirroredChamber davis_chamber(const CoxeterSystem& sys);

// Copies of X indexed by the ball, glued along mirrors. Ball elements index
// sys.enumerator(); the ball must contain w*s whenever s is a descent of w.
SimplicialComplex basic_construction(const CoxeterSystem& sys, const MirroredChamber& X,
                                     const std::vector<Elem>& ball);

// Cell u*c_T of the Coxeter cellulation, with u minimal in u W_T.
struct DavisCell {
    Elem u;
    GenSet T;
    int dim;
};

// Cells u*c_T with every element of u W_T of length <= radius, with the
// q-weighted structure: mu(u, T) = q_u, boundary d, coboundary d^T and
// perturbed boundary dq = M^{-1} d M (the adjoint of d^T for the weighted
// inner product).
class TruncatedDavisComplex {
public:
    TruncatedDavisComplex(const CoxeterSystem& sys, const WeightVector& q, int radius);

    const CoxeterSystem& system() const { return *sys_; }
    const WeightVector& weights() const { return q_; }
    int radius() const { return radius_; }
    // True when W is finite and the radius covers all of it.
    bool full() const { return full_; }

    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    int count(int d) const { return d >= 0 && d <= dimension() ? static_cast<int>(by_dim_[d].size()) : 0; }
    const DavisCell& cell(int d, int i) const { return by_dim_[d][i]; }
    int find(Elem u, GenSet T) const;  // position within its dimension, -1 if absent
    const Rational& mu(int d, int i) const { return mu_[d][i]; }

    // d_k maps C_k to C_{k-1}; k runs from 1 to dimension().
    const SparseMatrix& boundary(int k) const { return bd_[k - 1]; }
    const SparseMatrix& perturbed(int k) const { return pq_[k - 1]; }
    SparseMatrix coboundary(int k) const { return bd_[k - 1].transpose(); }  // C_{k-1} -> C_k

    ChainComplexQ chain_complex() const;
    ChainComplexQ perturbed_chain_complex() const;

    // A cell is interior when every coface it has in the untruncated complex
    // is present, so the truncated coboundary agrees with the true one there.
    bool interior(int d, int i) const { return interior_[d][i]; }

    // Coboundary evaluated from the group directly (cofaces enumerated by
    // minimal coset representatives), for chains supported on interior cells.
    SparseVec coboundary_from_group(int k, const SparseVec& g) const;
    Rational inner(int d, const SparseVec& f, const SparseVec& g) const;

private:
    int sign_of(Elem u, GenSet T, Elem w, int s) const;

    const CoxeterSystem* sys_;
    WeightVector q_;
    int radius_;
    bool full_ = false;
    std::map<GenSet, int> top_length_;  // length of the longest element of W_T
    std::vector<std::vector<DavisCell>> by_dim_;
    std::vector<std::map<std::pair<Elem, GenSet>, int>> index_;
    std::vector<std::vector<Rational>> mu_;
    std::vector<SparseMatrix> bd_, pq_;
    std::vector<std::vector<bool>> interior_;
};

// Seeded random pairs f in C_k, g in C_{k-1} (g on interior cells, small
// rational coefficients): counts the pairs with <dq f, g>_q = <f, delta g>_q,
// delta taken from the group rather than from the truncated matrix.
struct AdjointReport {
    int pairs = 0;
    int passed = 0;
};
AdjointReport adjoint_check(const TruncatedDavisComplex& X, int pairs, std::uint64_t seed);

// Star and link of T inside V: the union of all U in V with U u T spherical.
GenSet st_of(const CoxeterSystem& sys, GenSet T, GenSet V);
GenSet lk_of(const CoxeterSystem& sys, GenSet T, GenSet V);

// Spherical T' with T in T' and T' in U (the types of the relative cells).
std::vector<GenSet> ruin_types(const CoxeterSystem& sys, GenSet U, GenSet T);

// Omega(U,T): closed cells whose type lies in ruin_types(U,T), with their faces.
// The frontier consists of the cells of Omega whose type is not a ruin type.
struct RuinPair {
    GenSet U = 0, T = 0;
    std::vector<std::vector<int>> omega;     // per dimension, cell positions
    std::vector<std::vector<int>> frontier;  // subset of omega
    // Distinct types of the cells of Omega minus frontier, per degree.
    std::vector<std::vector<GenSet>> relative_types;
};

RuinPair ruin(const TruncatedDavisComplex& X, GenSet U, GenSet T);
// Relative chain complex of (Omega, frontier).
ChainComplexQ relative_chain_complex(const TruncatedDavisComplex& X, const RuinPair& R);

// 1/W_T(q^{-1}) for spherical T (q per class of the ambient system).
Rational hecke_dimension(const CoxeterSystem& sys, GenSet T, const WeightVector& q);
// Entry d: sum of 1/W_{T'}(q^{-1}) over ruin types T' of size d.
std::vector<Rational> ruin_dimension_series(const CoxeterSystem& sys, const WeightVector& q, GenSet T, GenSet U);
std::vector<Rational> ruin_dimension_series(const CoxeterSystem& sys, const WeightVector& q, GenSet T);
// Degreewise dim C(U, T-s) = dim C(U-s, T-s) + dim C(U, T).
bool ruin_additivity_check(const CoxeterSystem& sys, const WeightVector& q, GenSet U, GenSet T, int s);

// Alternating sum of chain dimensions: sum over spherical T of (-1)^|T| / W_T(q^{-1}).
Rational weighted_euler(const CoxeterSystem& sys, const WeightVector& q);
// The same sum as a rational function in the class variables.
// `variables` as in growth_rational: classes sharing an index share a variable.
RationalFunctionQ weighted_euler_function(const CoxeterSystem& sys, const std::vector<int>& variables = {});
// The unmodified alternating sum of 1/W_T(t).
RationalFunctionQ alternating_growth_sum(const CoxeterSystem& sys, const std::vector<int>& variables = {});
// weighted_euler_function equals 1/W(t) as rational functions.
bool euler_identity_check(const CoxeterSystem& sys, const std::vector<int>& variables = {});

}  // namespace wl2
