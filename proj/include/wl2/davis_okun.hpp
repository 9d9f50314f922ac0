#pragma once

#include "wl2/certify.hpp"
#include "wl2/cw.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wl2 {

// Cell dimensions removed from bX, in order, for n = 6 and n = 8.
std::vector<int> removal_schedule(int n);

struct RemovalStep {
    int dim = 0;
    int removed = 0;
    int checked = 0;
    int failed = 0;
    bool first_factor_sphere = true;   // b(boundary of sigma) has the homology of S^(k-1)
    bool second_factor_sphere = true;  // b(link of sigma) has the homology of S^(n-2-k)
    bool affecting_stable = true;      // unchanged factors of neighbouring links
    std::vector<std::string> failures;  // cell ids with the reason
};

struct ReductionReport {
    int n = 0;
    bool pl_declared = false;
    std::vector<RemovalStep> steps;
    std::vector<int> surviving;       // cell indices of the remaining vertices of bX
    std::vector<int> surviving_dims;  // distinct dimensions among them
    int dim_T = -1;
    std::vector<long long> f_vector;  // of T
    int expected_dim() const { return n == 6 ? 2 : n == 8 ? 4 : -1; }
    bool ok() const;
};

// Removes the scheduled vertices from bX one dimension class at a time. Every
// removed vertex has its current link compared with b(boundary) * (surviving
// part of b(link)) up to graded isomorphism, the two factors of its original
// link are checked to be homology spheres, and the neighbours' factors are
// compared before and after each removal. Throws InputError when n is not
// 6 or 8 or X does not have dimension n-1.
ReductionReport davis_okun_reduce(const RegularCWComplex& X, int n, std::uint64_t seed = 0, int threads = 0);

// The same removal procedure for an arbitrary schedule on a complex of any
// dimension; n is taken to be dim X + 1.
ReductionReport reduce_by_schedule(const RegularCWComplex& X, const std::vector<int>& schedule,
                                   std::uint64_t seed = 0, int threads = 0);

// T as a simplicial complex: the full subcomplex of bX on the survivors.
SimplicialComplex reduced_complex(const RegularCWComplex& X, const ReductionReport& r);

// Requires the PL declaration in X and a clean reduction.
CertOutcome cert_davis_okun(const RegularCWComplex& X, int n, std::uint64_t seed = 0);

}  // namespace wl2
