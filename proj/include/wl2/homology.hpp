#pragma once

#include "wl2/linalg.hpp"
#include "wl2/simplicial.hpp"

#include <string>
#include <vector>

namespace wl2 {

// Chain complex C_lo <- ... <- C_hi; d[i] maps degree lo+i+1 to lo+i.
struct ChainComplexQ {
    int lo = 0;
    std::vector<int> dims;  // dims[i] = dim C_{lo+i}
    std::vector<SparseMatrix> d;

    bool squares_to_zero() const;
};

struct BettiVector {
    int lo = 0;  // degree of b[0]; -1 for reduced homology
    std::vector<long long> b;
    bool reduced = false;
    bool relative = false;

    long long at(int degree) const;
    int top_degree() const { return lo + static_cast<int>(b.size()) - 1; }
    // True when every Betti number vanishes except in `degree`.
    bool concentrated_in(int degree) const;
    bool all_zero() const;
    std::string str() const;  // "H_i = rank" lines
};

BettiVector homology(const ChainComplexQ& C);

ChainComplexQ chain_complex(const SimplicialComplex& K, bool reduced);
BettiVector homology(const SimplicialComplex& K, bool reduced);
// Homology of the pair (K, A); A's vertices are matched to K's by label.
BettiVector relative_homology(const SimplicialComplex& K, const SimplicialComplex& A);

}  // namespace wl2
