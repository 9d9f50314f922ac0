#include "wl2/cw.hpp"

#include "wl2/isomorphism.hpp"
#include "wl2/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wl2 {

RegularCWComplex::RegularCWComplex(std::vector<Cell> cells, bool pl_declared) : cells_(std::move(cells)), pl_(pl_declared) {
    std::map<std::string, int> seen;
    below_.resize(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        Cell& c = cells_[i];
        if (c.id.empty()) throw InputError("cell with empty id");
        if (!seen.emplace(c.id, static_cast<int>(i)).second) throw InputError("duplicate cell id '" + c.id + "'");
        if (c.dim < 0) throw InputError("cell '" + c.id + "' has negative dimension");
        if (c.dim == 0 && !c.boundary.empty()) throw InputError("0-cell '" + c.id + "' has a boundary");
        if (c.dim > 0 && c.boundary.empty()) throw InputError("cell '" + c.id + "' has empty boundary");
        std::sort(c.boundary.begin(), c.boundary.end());
        std::vector<int>& under = below_[i];
        for (std::size_t k = 0; k < c.boundary.size(); ++k) {
            auto [j, sign] = c.boundary[k];
            if (j < 0 || j >= static_cast<int>(i))
                throw InputError("cell '" + c.id + "' refers to a cell that is not listed before it");
            if (k > 0 && c.boundary[k - 1].first == j) throw InputError("cell '" + c.id + "' repeats a boundary cell");
            if (sign != 1 && sign != -1) throw InputError("incidence of cell '" + c.id + "' is not +1 or -1");
            if (cells_[j].dim != c.dim - 1) throw InputError("boundary of cell '" + c.id + "' has wrong dimension");
            under.push_back(j);
            under.insert(under.end(), below_[j].begin(), below_[j].end());
        }
        std::sort(under.begin(), under.end());
        under.erase(std::unique(under.begin(), under.end()), under.end());
        if (c.dim == 1) {
            if (c.boundary.size() != 2 || c.boundary[0].second + c.boundary[1].second != 0)
                throw InputError("1-cell '" + c.id + "' must have two end points of opposite sign");
        }
    }
    if (!chain_complex(false).squares_to_zero()) throw InputError("incidences do not square to zero");
}

int RegularCWComplex::dimension() const {
    int d = -1;
    for (auto& c : cells_) d = std::max(d, c.dim);
    return d;
}

int RegularCWComplex::index(std::string_view id) const {
    for (int i = 0; i < size(); ++i)
        if (cells_[i].id == id) return i;
    return -1;
}

std::vector<int> RegularCWComplex::cells_of_dim(int d) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (cells_[i].dim == d) out.push_back(i);
    return out;
}

Poset RegularCWComplex::face_poset() const {
    Poset P;
    P.n = size();
    P.above.resize(P.n);
    for (int i = 0; i < P.n; ++i) {
        for (int j : below_[i]) P.above[j].push_back(i);
        P.labels.push_back(cells_[i].id);
        P.grades.push_back(cells_[i].dim);
    }
    for (auto& a : P.above) std::sort(a.begin(), a.end());
    return P;
}

ChainComplexQ RegularCWComplex::chain_complex(bool reduced) const {
    const int top = dimension();
    std::vector<int> pos(size());
    std::vector<int> count(std::max(top + 1, 0), 0);
    for (int i = 0; i < size(); ++i) pos[i] = count[cells_[i].dim]++;
    ChainComplexQ C;
    C.lo = reduced ? -1 : 0;
    if (reduced) {
        C.dims.push_back(1);
        SparseMatrix eps(1, top >= 0 ? count[0] : 0);
        for (int j = 0; j < eps.cols; ++j) eps.set(0, j, 1);
        C.d.push_back(std::move(eps));
    }
    for (int d = 0; d <= top; ++d) C.dims.push_back(count[d]);
    for (int d = 1; d <= top; ++d) C.d.emplace_back(count[d - 1], count[d]);
    const int shift = reduced ? 1 : 0;
    for (int i = 0; i < size(); ++i) {
        const Cell& c = cells_[i];
        if (c.dim == 0) continue;
        SparseMatrix& D = C.d[c.dim - 1 + shift];
        for (auto [j, sign] : c.boundary) D.set(pos[j], pos[i], sign);
    }
    for (auto& D : C.d) D.normalize();
    return C;
}

RegularCWComplex RegularCWComplex::closure(const std::vector<int>& generators) const {
    std::vector<bool> keep(size(), false);
    for (int g : generators) {
        keep[g] = true;
        for (int j : below_[g]) keep[j] = true;
    }
    std::vector<int> remap(size(), -1);
    std::vector<Cell> out;
    for (int i = 0; i < size(); ++i) {
        if (!keep[i]) continue;
        remap[i] = static_cast<int>(out.size());
        Cell c = cells_[i];
        for (auto& b : c.boundary) b.first = remap[b.first];
        out.push_back(std::move(c));
    }
    return RegularCWComplex(std::move(out), pl_);
}

std::string RegularCWComplex::to_text() const {
    std::ostringstream out;
    out << "cw v1\n";
    if (pl_) out << "pl: yes\n";
    for (auto& c : cells_) {
        out << c.id << ' ' << c.dim;
        for (auto [j, sign] : c.boundary) out << ' ' << (sign > 0 ? '+' : '-') << cells_[j].id;
        out << '\n';
    }
    return out.str();
}

bool operator==(const RegularCWComplex& a, const RegularCWComplex& b) {
    if (a.size() != b.size() || a.pl_ != b.pl_) return false;
    for (int i = 0; i < a.size(); ++i) {
        const Cell &x = a.cells_[i], &y = b.cells_[i];
        if (x.id != y.id || x.dim != y.dim || x.boundary != y.boundary) return false;
    }
    return true;
}

RegularCWComplex parse_cw(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool header = false, pl = false;
    std::vector<Cell> cells;
    std::map<std::string, int> ids;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string first;
        if (!(words >> first)) continue;
        auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
        if (!header) {
            std::string version;
            words >> version;
            if (first != "cw" || version != "v1") fail("expected header 'cw v1'");
            header = true;
            continue;
        }
        if (first == "pl:") {
            std::string v;
            words >> v;
            if (v != "yes" && v != "no") fail("pl: expects yes or no");
            pl = v == "yes";
            continue;
        }
        Cell c;
        c.id = first;
        std::string dim;
        if (!(words >> dim)) fail("missing dimension for cell '" + first + "'");
        try {
            std::size_t used = 0;
            c.dim = std::stoi(dim, &used);
            if (used != dim.size()) throw std::invalid_argument(dim);
        } catch (const std::exception&) {
            fail("bad dimension '" + dim + "'");
        }
        std::string ref;
        while (words >> ref) {
            if (ref.size() < 2 || (ref[0] != '+' && ref[0] != '-')) fail("boundary entry must look like +id or -id");
            auto it = ids.find(ref.substr(1));
            if (it == ids.end()) fail("unknown or later cell '" + ref.substr(1) + "'");
            c.boundary.emplace_back(it->second, ref[0] == '+' ? 1 : -1);
        }
        if (ids.count(c.id)) fail("duplicate cell id '" + c.id + "'");
        ids.emplace(c.id, static_cast<int>(cells.size()));
        cells.push_back(std::move(c));
    }
    if (!header) throw InputError("empty input: expected header 'cw v1'");
    return RegularCWComplex(std::move(cells), pl);
}

BettiVector homology(const RegularCWComplex& X, bool reduced) {
    BettiVector b = homology(X.chain_complex(reduced));
    b.reduced = reduced;
    return b;
}

SimplicialComplex barycentric_subdivision(const RegularCWComplex& X) { return order_complex(X.face_poset()); }

bool link_join_decomposition_check(const RegularCWComplex& X, int cell) {
    Poset P = X.face_poset();
    SimplicialComplex bX = order_complex(P);
    SimplicialComplex lk = link(bX, {cell});
    std::vector<int> up = P.above[cell];
    SimplicialComplex lower = order_complex(P.restrict(X.below()[cell]));
    SimplicialComplex upper = order_complex(P.restrict(up));
    return simplicial_isomorphism(lk, join(lower, upper), true).has_value();
}

}  // namespace wl2
