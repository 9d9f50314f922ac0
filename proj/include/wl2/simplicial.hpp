#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wl2 {

using Simplex = std::vector<int>;  // sorted vertex ids

// Finite abstract simplicial complex stored by its maximal simplices.
// Always contains the empty simplex; a complex whose only simplex is the
// empty one has a single empty facet and no vertices.
class SimplicialComplex {
public:
    SimplicialComplex();
    // Vertices are 0..n-1 with n = labels.size() (or one more than the largest
    // id used when labels are omitted). Vertices in no facet become facets.
    SimplicialComplex(std::vector<Simplex> facets, std::vector<std::string> labels = {},
                      std::vector<int> grades = {}, bool already_maximal = false);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    bool graded() const { return !grades_.empty(); }
    const std::vector<int>& grades() const { return grades_; }
    int grade(int v) const { return grades_.empty() ? -1 : grades_[v]; }
    int dimension() const;
    bool is_void_of_vertices() const { return labels_.empty(); }

    // faces()[d] lists the d-simplices in lexicographic order.
    std::vector<std::vector<Simplex>> faces() const;
    bool contains(const Simplex& s) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;
    int find_label(std::string_view l) const;  // -1 when absent

    std::string to_text() const;  // simp v1
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_ && a.labels_ == b.labels_ && a.grades_ == b.grades_;
    }

private:
    std::vector<Simplex> facets_;
    std::vector<std::string> labels_;
    std::vector<int> grades_;
};

SimplicialComplex parse_simplicial(std::string_view text);

bool is_flag(const SimplicialComplex& K);
SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<int>& V);
SimplicialComplex link(const SimplicialComplex& K, const Simplex& s);
SimplicialComplex star(const SimplicialComplex& K, const Simplex& s);
SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B);
SimplicialComplex cone(const SimplicialComplex& K);
SimplicialComplex skeleton(const SimplicialComplex& K, int k);
SimplicialComplex simplex_complex(int n);   // the full n-simplex
SimplicialComplex simplex_boundary(int n);  // boundary of the n-simplex

// Finite poset given by its strict order: above[i] lists every j with i < j.
struct Poset {
    int n = 0;
    std::vector<std::vector<int>> above;
    std::vector<std::string> labels;
    std::vector<int> grades;

    bool less(int a, int b) const;
    Poset restrict(const std::vector<int>& keep) const;
};

// Simplices are the chains of P; vertices carry P's labels and grades.
SimplicialComplex order_complex(const Poset& P);
// Full subcomplex of the subdivided boundary of the (m-1)-simplex on the
// barycentres of faces with at least k vertices.
SimplicialComplex flag_poset_complement(int m, int k);

}  // namespace wl2
