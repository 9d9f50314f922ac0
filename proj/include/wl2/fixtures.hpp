#pragma once

#include "wl2/coxeter.hpp"
#include "wl2/cw.hpp"
#include "wl2/graph_aut.hpp"
#include "wl2/simplicial.hpp"

#include <string>
#include <vector>

namespace wl2 {

// Right-angled system whose nerve is the k-cycle (k >= 4).
CoxeterSystem kgon_system(int k);
// Complete graph K_n with every label equal to m.
CoxeterSystem kn_system(int n, int m);
// Two generators with label m (0 for the infinite dihedral group).
CoxeterSystem dihedral_system(int m);
// Irreducible finite types: A_n, B_n, D_n, E6-E8, F4, H3, H4, I2(m).
CoxeterSystem finite_type_system(const std::string& type);
// Right-angled system on the vertices of K: edges of K get label 2, all other
// pairs infinity. Its nerve is the flag completion of K.
CoxeterSystem right_angled_system(const SimplicialComplex& K);
// Generators = vertices of K, label m on the edges of K and infinity elsewhere.
CoxeterSystem uniform_graph_system(const SimplicialComplex& K, int m);
LabeledGraph graph_of_complex(const SimplicialComplex& K, int label);

// Grid triangulation of the torus with a*b vertices; flag for a, b >= 4.
SimplicialComplex torus_grid(int a, int b);
SimplicialComplex petersen_graph();
SimplicialComplex cycle_graph(int k);
SimplicialComplex complete_graph(int n);

// Cubes, simplices and cross-polytopes as regular CW complexes.
RegularCWComplex cube_cw(int n, bool boundary_only);
RegularCWComplex simplex_cw(int n, bool boundary_only);
RegularCWComplex cross_polytope_boundary_cw(int n);
// Every simplex becomes a cell; incidences from the usual alternating signs.
RegularCWComplex cw_from_simplicial(const SimplicialComplex& K, bool pl_declared = false);

// Text of a named fixture (coxeter v1, simp v1 or cw v1). Names:
// kgon k, kn n m, dihedral m, finite TYPE, torus-grid a b, petersen, cycle k,
// cube n, cube-boundary n, simplex n, simplex-boundary n,
// cross-polytope-boundary n, square.
std::string fixture_text(const std::string& name, const std::vector<std::string>& params);
std::vector<std::string> fixture_names();

}  // namespace wl2
