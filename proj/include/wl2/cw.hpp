#pragma once

#include "wl2/homology.hpp"
#include "wl2/simplicial.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wl2 {

struct Cell {
    std::string id;
    int dim = 0;
    std::vector<std::pair<int, int>> boundary;  // (cell index, +1 or -1)
};

// Regular CW complex given by cells and signed incidences.
class RegularCWComplex {
public:
    RegularCWComplex() = default;
    // Cells must be listed so that boundary cells precede the cells they bound.
    explicit RegularCWComplex(std::vector<Cell> cells, bool pl_declared = false);

    int size() const { return static_cast<int>(cells_.size()); }
    const Cell& cell(int i) const { return cells_[i]; }
    const std::vector<Cell>& cells() const { return cells_; }
    int dimension() const;
    int index(std::string_view id) const;  // -1 when absent
    bool pl_declared() const { return pl_; }
    std::vector<int> cells_of_dim(int d) const;

    // Strict face order: below(i) lists every cell properly contained in cell i.
    const std::vector<std::vector<int>>& below() const { return below_; }
    Poset face_poset() const;
    ChainComplexQ chain_complex(bool reduced) const;
    // The closed subcomplex generated by the given cells (re-indexed).
    RegularCWComplex closure(const std::vector<int>& cells) const;

    std::string to_text() const;  // cw v1
    friend bool operator==(const RegularCWComplex& a, const RegularCWComplex& b);

private:
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> below_;
    bool pl_ = false;
};

RegularCWComplex parse_cw(std::string_view text);
BettiVector homology(const RegularCWComplex& X, bool reduced);
// Order complex of the face poset; vertices are labelled by cell ids and
// graded by cell dimension.
SimplicialComplex barycentric_subdivision(const RegularCWComplex& X);
// Link of vertex v of bX compared with b(boundary of sigma_v) * b(link of sigma_v)
// up to a grade-preserving isomorphism.
bool link_join_decomposition_check(const RegularCWComplex& X, int cell);

}  // namespace wl2
