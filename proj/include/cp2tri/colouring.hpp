#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cp2tri/complex.hpp"

namespace cp2 {

// Canonical discrete connection: (Q psi)_sigma = sum of psi over the vertices
// of sigma, one entry per facet in facets() order. Missing vertices throw
// IncompleteMap.
std::vector<double> connection_apply(const SimplicialComplex& k, const std::map<VertexLabel, double>& psi);

struct EvenCheck {
  bool ok = true;
  Simplex face;  // codimension-2 face with an odd number of facets around it
  std::size_t degree = 0;
};
EvenCheck is_even(const SimplicialComplex& k);

// Facet colours 0 (black) / 1 (white), aligned with facets(); facet 0 is black.
std::optional<std::vector<int>> chess_colouring(const SimplicialComplex& k);

// Vertex colours 0..dim, aligned with vertices(); the vertices of facet 0 get
// 0..dim in vertex order and colours spread across shared ridges.
std::optional<std::vector<int>> regular_colouring(const SimplicialComplex& k);
bool is_regular_colouring(const SimplicialComplex& k, const std::vector<int>& colours);

/// Holonomy of the canonical connection along the fundamental cycles of a
/// breadth-first spanning tree of the dual graph.
///
/// Facet slots are numbered 0..dim by the base facet's vertex order and
/// carried across ridges (shared vertices keep their slot, the opposite
/// vertex takes over the slot of the one it replaces). Each non-tree edge
/// closes a loop whose slot permutation is one generator.
struct HolonomyData {
  int base = 0;
  std::vector<std::vector<int>> generators;  // one per non-tree dual edge
  std::vector<std::pair<int, int>> cycle_edges;
  std::size_t group_order = 1;
  bool rho1_trivial = true;  // every generator even
  bool rho2_trivial = true;  // every loop preserves a transported orientation
  bool rho3_trivial = true;  // every loop has even length (meaningful in T_even)
  bool rho3_defined = true;  // false outside T_even
  bool relation_holds = true;  // rho1 * rho2 == rho3 on every generator
};
HolonomyData projectivity_group(const SimplicialComplex& k, int base = 0);

struct ClassReport {
  bool even = false;
  bool bw = false;
  bool colour = false;
  bool relation_holds = false;
  bool rho3_defined = false;
};
ClassReport class_report(const SimplicialComplex& k);

struct SuspensionClass {
  int colour = -1;
  VertexLabel apex1;
  VertexLabel apex2;
};
// First colour class of size 2 whose two vertices make k the suspension of
// the full subcomplex on the remaining vertices. Throws InvalidColouring.
std::optional<SuspensionClass> suspension_colour_class(const SimplicialComplex& k, const std::vector<int>& colours);

}  // namespace cp2
