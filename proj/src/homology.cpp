#include "wl2/homology.hpp"

#include <algorithm>
#include <sstream>

namespace wl2 {

bool ChainComplexQ::squares_to_zero() const {
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (!(d[i] * d[i + 1]).is_zero()) return false;
    return true;
}

long long BettiVector::at(int degree) const {
    int i = degree - lo;
    return i >= 0 && i < static_cast<int>(b.size()) ? b[i] : 0;
}

bool BettiVector::concentrated_in(int degree) const {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0 && lo + static_cast<int>(i) != degree) return false;
    return true;
}

bool BettiVector::all_zero() const {
    return std::all_of(b.begin(), b.end(), [](long long x) { return x == 0; });
}

std::string BettiVector::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < b.size(); ++i) out << "H_" << lo + static_cast<int>(i) << " = " << b[i] << "\n";
    return out.str();
}

BettiVector homology(const ChainComplexQ& C) {
    BettiVector out;
    out.lo = C.lo;
    const int n = static_cast<int>(C.dims.size());
    std::vector<int> r(n + 1, 0);  // r[i] = rank of the map out of degree lo+i
    for (int i = 0; i + 1 < n; ++i) r[i + 1] = rank(C.d[i]);
    for (int i = 0; i < n; ++i) {
        long long out_rank = r[i];                    // d: C_i -> C_{i-1}
        long long in_rank = i + 1 < n ? r[i + 1] : 0;  // d: C_{i+1} -> C_i
        out.b.push_back(C.dims[i] - out_rank - in_rank);
    }
    return out;
}

namespace {

int index_of(const std::vector<Simplex>& layer, const Simplex& s) {
    auto it = std::lower_bound(layer.begin(), layer.end(), s);
    return it != layer.end() && *it == s ? static_cast<int>(it - layer.begin()) : -1;
}

// Boundary matrices over the listed simplices; faces missing from the lists
// (the relative part) are dropped.
ChainComplexQ build(const std::vector<std::vector<Simplex>>& cells, bool augmented) {
    ChainComplexQ C;
    C.lo = augmented ? -1 : 0;
    if (augmented) C.dims.push_back(1);
    for (auto& layer : cells) C.dims.push_back(static_cast<int>(layer.size()));
    if (augmented) {
        SparseMatrix eps(1, cells.empty() ? 0 : static_cast<int>(cells[0].size()));
        if (!cells.empty())
            for (std::size_t j = 0; j < cells[0].size(); ++j) eps.set(0, static_cast<int>(j), 1);
        C.d.push_back(std::move(eps));
    }
    for (std::size_t d = 1; d < cells.size(); ++d) {
        SparseMatrix D(static_cast<int>(cells[d - 1].size()), static_cast<int>(cells[d].size()));
        for (std::size_t j = 0; j < cells[d].size(); ++j) {
            const Simplex& s = cells[d][j];
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex f;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != k) f.push_back(s[i]);
                int row = index_of(cells[d - 1], f);
                if (row >= 0) D.set(row, static_cast<int>(j), k % 2 ? -1 : 1);
            }
        }
        D.normalize();
        C.d.push_back(std::move(D));
    }
    return C;
}

}  // namespace

ChainComplexQ chain_complex(const SimplicialComplex& K, bool reduced) { return build(K.faces(), reduced); }

BettiVector homology(const SimplicialComplex& K, bool reduced) {
    BettiVector b = homology(chain_complex(K, reduced));
    b.reduced = reduced;
    return b;
}

BettiVector relative_homology(const SimplicialComplex& K, const SimplicialComplex& A) {
    std::vector<int> to_k(A.num_vertices());
    for (int v = 0; v < A.num_vertices(); ++v) {
        to_k[v] = K.find_label(A.label(v));
        if (to_k[v] < 0) throw InputError("subcomplex vertex " + A.label(v) + " not in complex");
    }
    auto kf = K.faces();
    auto af = A.faces();
    std::vector<std::vector<Simplex>> rel(kf.size());
    for (std::size_t d = 0; d < kf.size(); ++d) {
        std::vector<Simplex> sub;
        if (d < af.size())
            for (auto s : af[d]) {
                for (int& v : s) v = to_k[v];
                std::sort(s.begin(), s.end());
                if (!K.contains(s)) throw InputError("subcomplex simplex not in complex");
                sub.push_back(s);
            }
        std::sort(sub.begin(), sub.end());
        std::set_difference(kf[d].begin(), kf[d].end(), sub.begin(), sub.end(), std::back_inserter(rel[d]));
    }
    BettiVector b = homology(build(rel, false));
    b.relative = true;
    return b;
}

}  // namespace wl2
