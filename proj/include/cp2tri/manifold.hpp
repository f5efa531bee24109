#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cp2tri/complex.hpp"

namespace cp2 {

struct PseudomanifoldCheck {
  bool ok = true;
  std::string reason;
  Simplex ridge;  // offending ridge, empty when the failure is connectivity
};
// Every ridge in exactly two facets and a connected dual graph. Throws NotPure.
PseudomanifoldCheck is_closed_pseudomanifold(const SimplicialComplex& k);

// Facet signs (+1/-1, aligned with facets()) making boundary contributions of
// every ridge cancel, or nullopt. Throws Precondition unless k is a closed
// pseudomanifold.
std::optional<std::vector<int>> orientation(const SimplicialComplex& k);

struct HomologyProfile {
  std::vector<std::int64_t> betti;                 // unreduced, dimensions 0..dim
  std::vector<std::vector<std::int64_t>> torsion;  // invariant factors > 1
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

// Nonzero invariant factors of an integer matrix, each dividing the next.
// Elimination runs on int64 and restarts on arbitrary precision if an entry
// would overflow.
std::vector<std::int64_t> smith_invariants(const IntMatrix& m);
HomologyProfile homology(const SimplicialComplex& k);

enum class SphereStatus { Certified, Inconclusive };

struct SphereCertificate {
  SphereStatus status = SphereStatus::Inconclusive;
  std::uint64_t moves = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string method;  // "bistellar" or "classification"
  std::string reason;
  // Applied moves as (A, B) pairs of local vertex ids; ids >= num_vertices()
  // are vertices created by 1 -> (d+1) moves.
  std::vector<std::pair<Face, Face>> trace;
};

/// Working copy of a closed pseudomanifold for bistellar moves.
///
/// A move (A, B) with |A| + |B| = d + 2 is legal when the facets containing A
/// are exactly A u (B \ {b}) for b in B and B is not already a face; it
/// replaces them by B u (A \ {a}) for a in A. The inverse of (A, B) is (B, A).
class FlipComplex {
 public:
  explicit FlipComplex(const SimplicialComplex& k);

  int dim() const { return dim_; }
  const std::set<Face>& facets() const { return facets_; }
  std::size_t num_vertices() const;
  int fresh_vertex() const { return next_vertex_; }

  bool is_face(const Face& f) const;
  // B completing A to a legal move, or nullopt. For A a facet, B is a new vertex.
  std::optional<Face> partner(const Face& a) const;
  bool legal(const Face& a, const Face& b) const;
  void apply(const Face& a, const Face& b);

  // All faces with exactly `size` vertices.
  std::vector<Face> faces_of_size(std::size_t size) const;
  bool is_simplex_boundary() const;

 private:
  int dim_ = -1;
  int next_vertex_ = 0;
  std::set<Face> facets_;
};

// Greedy vertex-removing moves, then facet-count-reducing moves, with random
// (seeded) neutral or increasing moves to escape local minima. Certified means
// the boundary of a simplex was reached. Throws UnsupportedDimension if dim > 3.
SphereCertificate bistellar_is_sphere(const SimplicialComplex& k, std::uint64_t budget = 100000,
                                      std::uint64_t seed = 0);

// Closed connected surface with circle vertex links and Euler characteristic 2.
SphereCertificate classify_2sphere(const SimplicialComplex& k);

struct ManifoldReport {
  SphereStatus verdict = SphereStatus::Inconclusive;
  // Checked vertices (one per orbit when a group is supplied), in vertex order.
  std::vector<std::pair<VertexLabel, SphereCertificate>> links;
};

// Two-dimensional vertex links go through classify_2sphere, the others
// (dimension <= 3) through bistellar_is_sphere. With a group, only the
// least vertex of each orbit is examined.
ManifoldReport is_combinatorial_manifold(const SimplicialComplex& k, std::uint64_t budget = 100000,
                                         std::uint64_t seed = 0, const std::vector<VertexMap>* group = nullptr);

const char* to_string(SphereStatus s);

}  // namespace cp2
