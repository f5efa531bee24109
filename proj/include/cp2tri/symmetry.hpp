#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cp2tri/complex.hpp"

namespace cp2 {

/// Element (theta, kappa) of S4 x S3, both stored by their images of 1..n.
/// Products compose right to left: (g*h)(x) = g(h(x)).
struct GroupElement {
  std::array<int, 4> theta = {1, 2, 3, 4};
  std::array<int, 3> kappa = {1, 2, 3};

  GroupElement operator*(const GroupElement& h) const;
  GroupElement inverse() const;
  bool theta_odd() const;
  bool kappa_odd() const;
  std::string to_string() const;
  auto operator<=>(const GroupElement&) const = default;
};

// theta.nu = theta nu theta^-1, theta.(a,b) = (theta(a),b), kappa.(a,b) =
// (a,kappa(b)), Mid vertices like their edges. Throws OutOfRange for labels
// the group does not act on.
VertexLabel act(const GroupElement& g, const VertexLabel& s);
Simplex act(const GroupElement& g, const Simplex& s);

// All 144 elements: theta in lexicographic one-line order, then kappa.
const std::vector<GroupElement>& s4xs3_elements();

// Vertex map of k induced by g; throws OutOfRange if g moves a vertex outside k.
VertexMap induced_map(const SimplicialComplex& k, const GroupElement& g);
bool is_automorphism(const SimplicialComplex& k, const VertexMap& m);
Face apply_map(const VertexMap& m, const Face& f);

// All automorphisms in lexicographic order of their vertex maps.
std::vector<VertexMap> automorphism_group(const SimplicialComplex& k);
// A facet-preserving bijection from a's vertices to b's, or nullopt.
std::optional<VertexMap> are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

struct ActionCheck {
  bool all_automorphisms = false;
  bool faithful = false;
  bool exhausts = false;  // no automorphism outside the image of S4 x S3
  std::size_t aut_order = 0;
  bool ok() const { return all_automorphisms && faithful && exhausts; }
};
ActionCheck verify_S4xS3_action(const SimplicialComplex& x);

struct Orbit {
  Face representative;  // least member
  std::vector<Face> members;
};
// Orbits of k-faces under a list of automorphisms (which should be closed
// under composition). Throws NotAnAutomorphism.
std::vector<Orbit> orbits(const SimplicialComplex& k, const std::vector<VertexMap>& group, int dim);
std::vector<VertexMap> induced_group(const SimplicialComplex& k);

// Vertex correspondence X -> Y:
//   (12)(34), (13)(24), (14)(23) -> u(sigma_0), u(sigma_1), u(sigma_2)
//   (4,b) -> u((012)^b)
//   (a,b) -> u(-a-b, -a+b) for a = 1, 2, 3, indices mod 3
std::map<VertexLabel, VertexLabel> x_to_y_map();

}  // namespace cp2
