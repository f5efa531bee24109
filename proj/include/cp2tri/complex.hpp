#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cp2tri/label.hpp"

namespace cp2 {

// A face as strictly increasing indices into SimplicialComplex::vertices().
using Face = std::vector<int>;
// A simplex as strictly increasing vertex labels.
using Simplex = std::vector<VertexLabel>;
// Vertex bijection by index: image of vertex i is map[i].
using VertexMap = std::vector<int>;

Simplex make_simplex(std::vector<VertexLabel> labels);

/// Pure or impure abstract simplicial complex stored by its facets.
///
/// Vertices are kept in canonical label order, so a Face (index vector) and
/// the corresponding Simplex (label vector) are sorted the same way. The face
/// lattice is computed on first use and shared between copies; a complex is
/// never mutated after construction.
class SimplicialComplex {
 public:
  // The void complex: no vertices and no facets.
  SimplicialComplex();

  // Reduces containment to maximal facets. Throws MalformedInput on an empty
  // facet or a repeated vertex inside one facet.
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

  std::span<const VertexLabel> vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const VertexLabel& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  std::optional<int> find_vertex(const VertexLabel& label) const;
  int index_of(const VertexLabel& label) const;  // throws NotAFace if absent

  // -1 for the void complex.
  int dim() const { return dim_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_pure() const;

  // All k-faces in lexicographic order; empty when k is out of range.
  const std::vector<Face>& faces(int k) const;
  bool has_face(std::span<const int> face) const;
  bool has_simplex(const Simplex& simplex) const;
  // Position of a face inside faces(face.size() - 1); throws NotAFace.
  std::size_t face_index(std::span<const int> face) const;

  Simplex labels(std::span<const int> face) const;
  Face face_of(const Simplex& simplex) const;  // throws NotAFace for unknown labels

  std::vector<std::size_t> f_vector() const;
  std::int64_t euler_characteristic() const;

  // Number of facets containing the given face.
  std::size_t facet_degree(std::span<const int> face) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  struct FaceCache;
  const FaceCache& cache() const;

  std::vector<VertexLabel> vertices_;
  std::vector<Face> facets_;
  int dim_ = -1;
  std::shared_ptr<FaceCache> cache_;
};

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);
SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<VertexLabel>& labels);

// Adjacency over facets(), one edge per shared ridge.
struct DualGraph {
  std::vector<std::vector<int>> adjacency;
  std::size_t num_edges() const;
  bool connected() const;
};
DualGraph dual_graph(const SimplicialComplex& k);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& k, const VertexLabel& apex);
SimplicialComplex suspension(const SimplicialComplex& k, const VertexLabel& north, const VertexLabel& south);
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
// Union of complexes that may share vertices.
SimplicialComplex union_of(const std::vector<SimplicialComplex>& parts);
// Ridges lying in exactly one facet. Throws NotPure.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

// Vertex labels must map injectively; unmapped labels are kept.
SimplicialComplex relabel(const SimplicialComplex& k, const std::map<VertexLabel, VertexLabel>& mapping);
// Relabels every vertex to Int(offset + index).
SimplicialComplex relabel_to_integers(const SimplicialComplex& k, std::int64_t offset = 0);

// Vertices are Int(i) for the i-th nonempty face of k, faces ordered by
// dimension then lexicographically.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

struct SimplicialMapCheck {
  bool ok = true;
  Simplex violating;  // source facet whose image is not a face
};
SimplicialMapCheck is_simplicial_map(const SimplicialComplex& source, const SimplicialComplex& target,
                                     const std::map<VertexLabel, VertexLabel>& vertex_map);

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  int& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  int operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Rows: (k-1)-faces, columns: k-faces, both in faces() order. Removing the
// i-th vertex contributes (-1)^i. Valid for 1 <= k <= dim.
IntMatrix boundary_matrix(const SimplicialComplex& k, int dimension);

}  // namespace cp2
