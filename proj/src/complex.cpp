#include "cp2tri/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>

#include "cp2tri/error.hpp"

namespace cp2 {

Simplex make_simplex(std::vector<VertexLabel> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw Error(ErrorKind::MalformedInput, "repeated vertex " +
                                               std::adjacent_find(labels.begin(), labels.end())->to_string() +
                                               " inside a simplex");
  }
  return labels;
}

struct SimplicialComplex::FaceCache {
  std::once_flag once;
  std::vector<std::vector<Face>> faces;                 // by dimension
  std::vector<std::vector<std::size_t>> facet_degrees;  // aligned with faces
};

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
  SimplicialComplex k;
  std::vector<VertexLabel> all;
  for (const auto& f : facets) {
    if (f.empty()) throw Error(ErrorKind::MalformedInput, "empty facet");
    all.insert(all.end(), f.begin(), f.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  k.vertices_ = std::move(all);

  std::vector<Face> raw;
  raw.reserve(facets.size());
  for (const auto& f : facets) {
    Face face;
    face.reserve(f.size());
    for (const auto& l : f) {
      face.push_back(static_cast<int>(std::lower_bound(k.vertices_.begin(), k.vertices_.end(), l) -
                                      k.vertices_.begin()));
    }
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) {
      throw Error(ErrorKind::MalformedInput,
                  "duplicate vertex " + k.vertices_[*std::adjacent_find(face.begin(), face.end())].to_string() +
                      " inside a facet");
    }
    raw.push_back(std::move(face));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::size_t min_size = SIZE_MAX;
  std::size_t max_size = 0;
  for (const auto& f : raw) {
    min_size = std::min(min_size, f.size());
    max_size = std::max(max_size, f.size());
  }
  if (min_size != max_size) {
    // Drop facets contained in a strictly larger one.
    std::vector<std::vector<int>> incidence(k.vertices_.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      for (int v : raw[i]) incidence[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    std::vector<Face> kept;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const auto& c = raw[i];
      std::vector<int> candidates = incidence[static_cast<std::size_t>(c[0])];
      for (std::size_t j = 1; j < c.size() && !candidates.empty(); ++j) {
        const auto& next = incidence[static_cast<std::size_t>(c[j])];
        std::vector<int> merged;
        std::set_intersection(candidates.begin(), candidates.end(), next.begin(), next.end(),
                              std::back_inserter(merged));
        candidates = std::move(merged);
      }
      const bool absorbed = std::any_of(candidates.begin(), candidates.end(), [&](int other) {
        return raw[static_cast<std::size_t>(other)].size() > c.size();
      });
      if (!absorbed) kept.push_back(c);
    }
    raw = std::move(kept);
  }
  k.facets_ = std::move(raw);
  k.dim_ = k.facets_.empty() ? -1 : static_cast<int>(max_size) - 1;
  return k;
}

std::optional<int> SimplicialComplex::find_vertex(const VertexLabel& label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

int SimplicialComplex::index_of(const VertexLabel& label) const {
  auto i = find_vertex(label);
  if (!i) throw Error(ErrorKind::NotAFace, "vertex " + label.to_string() + " is not in the complex");
  return *i;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return static_cast<int>(f.size()) == dim_ + 1; });
}

const SimplicialComplex::FaceCache& SimplicialComplex::cache() const {
  std::call_once(cache_->once, [this] {
    auto& c = *cache_;
    c.faces.assign(static_cast<std::size_t>(dim_ + 1), {});
    c.facet_degrees.assign(static_cast<std::size_t>(dim_ + 1), {});
    std::vector<std::vector<Face>> raw(static_cast<std::size_t>(dim_ + 1));
    for (const auto& f : facets_) {
      const auto n = f.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Face sub;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::uint64_t{1} << i)) sub.push_back(f[i]);
        raw[sub.size() - 1].push_back(std::move(sub));
      }
    }
    for (std::size_t d = 0; d < raw.size(); ++d) {
      auto& r = raw[d];
      std::sort(r.begin(), r.end());
      for (std::size_t i = 0; i < r.size();) {
        std::size_t j = i;
        while (j < r.size() && r[j] == r[i]) ++j;
        c.faces[d].push_back(r[i]);
        c.facet_degrees[d].push_back(j - i);
        i = j;
      }
    }
  });
  return *cache_;
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
  static const std::vector<Face> kEmpty;
  if (k < 0 || k > dim_) return kEmpty;
  return cache().faces[static_cast<std::size_t>(k)];
}

bool SimplicialComplex::has_face(std::span<const int> face) const {
  if (face.empty()) return true;
  const auto& list = faces(static_cast<int>(face.size()) - 1);
  Face key(face.begin(), face.end());
  return std::binary_search(list.begin(), list.end(), key);
}

bool SimplicialComplex::has_simplex(const Simplex& simplex) const {
  Face face;
  face.reserve(simplex.size());
  for (const auto& l : simplex) {
    auto i = find_vertex(l);
    if (!i) return false;
    face.push_back(*i);
  }
  std::sort(face.begin(), face.end());
  return has_face(face);
}

std::size_t SimplicialComplex::face_index(std::span<const int> face) const {
  const auto& list = faces(static_cast<int>(face.size()) - 1);
  Face key(face.begin(), face.end());
  auto it = std::lower_bound(list.begin(), list.end(), key);
  if (it == list.end() || *it != key) throw Error(ErrorKind::NotAFace, "not a face of the complex");
  return static_cast<std::size_t>(it - list.begin());
}

std::size_t SimplicialComplex::facet_degree(std::span<const int> face) const {
  if (face.empty()) return facets_.size();
  return cache().facet_degrees[face.size() - 1][face_index(face)];
}

Simplex SimplicialComplex::labels(std::span<const int> face) const {
  Simplex s;
  s.reserve(face.size());
  for (int v : face) s.push_back(vertices_[static_cast<std::size_t>(v)]);
  return s;
}

Face SimplicialComplex::face_of(const Simplex& simplex) const {
  Face f;
  f.reserve(simplex.size());
  for (const auto& l : simplex) f.push_back(index_of(l));
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dim_; ++d) out.push_back(faces(d).size());
  return out;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  std::int64_t sign = 1;
  for (auto f : f_vector()) {
    chi += sign * static_cast<std::int64_t>(f);
    sign = -sign;
  }
  return chi;
}

namespace {

std::vector<Simplex> facet_labels(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  out.reserve(k.facets().size());
  for (const auto& f : k.facets()) out.push_back(k.labels(f));
  return out;
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.has_simplex(sigma)) throw Error(ErrorKind::NotAFace, "link of a simplex that is not a face");
  const Face s = k.face_of(sigma);
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
    Face rest;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
    if (!rest.empty()) facets.push_back(k.labels(rest));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma) {
  if (!k.has_simplex(sigma)) throw Error(ErrorKind::NotAFace, "star of a simplex that is not a face");
  const Face s = k.face_of(sigma);
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) facets.push_back(k.labels(f));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<VertexLabel>& labels) {
  std::vector<int> keep;
  for (const auto& l : labels) {
    if (auto i = k.find_vertex(l)) keep.push_back(*i);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    Face inter;
    std::set_intersection(f.begin(), f.end(), keep.begin(), keep.end(), std::back_inserter(inter));
    if (!inter.empty()) facets.push_back(k.labels(inter));
  }
  return SimplicialComplex::from_facets(facets);
}

std::size_t DualGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& a : adjacency) n += a.size();
  return n / 2;
}

bool DualGraph::connected() const {
  if (adjacency.empty()) return true;
  std::vector<bool> seen(adjacency.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adjacency[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++count;
        q.push(v);
      }
    }
  }
  return count == adjacency.size();
}

DualGraph dual_graph(const SimplicialComplex& k) {
  if (!k.is_pure()) throw Error(ErrorKind::NotPure, "dual graph of a non-pure complex");
  std::map<Face, std::vector<int>> ridges;
  const auto& facets = k.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& f = facets[i];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face r;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) r.push_back(f[j]);
      ridges[r].push_back(static_cast<int>(i));
    }
  }
  DualGraph g;
  g.adjacency.assign(facets.size(), {});
  for (const auto& [ridge, around] : ridges) {
    if (ridge.empty()) continue;  // zero-dimensional complexes have no ridges
    for (std::size_t a = 0; a < around.size(); ++a) {
      for (std::size_t b = a + 1; b < around.size(); ++b) {
        g.adjacency[static_cast<std::size_t>(around[a])].push_back(around[b]);
        g.adjacency[static_cast<std::size_t>(around[b])].push_back(around[a]);
      }
    }
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const auto& l : a.vertices()) {
    if (b.find_vertex(l)) throw Error(ErrorKind::LabelCollision, "join operands share vertex " + l.to_string());
  }
  if (a.facets().empty()) return b;
  if (b.facets().empty()) return a;
  std::vector<Simplex> facets;
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) {
      Simplex s = a.labels(fa);
      const auto sb = b.labels(fb);
      s.insert(s.end(), sb.begin(), sb.end());
      facets.push_back(make_simplex(std::move(s)));
    }
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cone(const SimplicialComplex& k, const VertexLabel& apex) {
  return join(k, SimplicialComplex::from_facets({{apex}}));
}

SimplicialComplex suspension(const SimplicialComplex& k, const VertexLabel& north, const VertexLabel& south) {
  return join(k, SimplicialComplex::from_facets({{north}, {south}}));
}

SimplicialComplex union_of(const std::vector<SimplicialComplex>& parts) {
  std::vector<Simplex> facets;
  for (const auto& p : parts) {
    auto more = facet_labels(p);
    facets.insert(facets.end(), more.begin(), more.end());
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
  if (!k.is_pure()) throw Error(ErrorKind::NotPure, "boundary of a non-pure complex");
  std::vector<Simplex> out;
  if (k.dim() < 1) return SimplicialComplex::from_facets(out);
  for (const auto& r : k.faces(k.dim() - 1))
    if (k.facet_degree(r) == 1) out.push_back(k.labels(r));
  return SimplicialComplex::from_facets(out);
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const auto& l : a.vertices()) {
    if (b.find_vertex(l)) throw Error(ErrorKind::LabelCollision, "union operands share vertex " + l.to_string());
  }
  auto facets = facet_labels(a);
  auto more = facet_labels(b);
  facets.insert(facets.end(), more.begin(), more.end());
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::map<VertexLabel, VertexLabel>& mapping) {
  std::set<VertexLabel> images;
  for (const auto& l : k.vertices()) {
    auto it = mapping.find(l);
    const auto& img = it == mapping.end() ? l : it->second;
    if (!images.insert(img).second) {
      throw Error(ErrorKind::LabelCollision, "relabelling is not injective at " + img.to_string());
    }
  }
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    Simplex s;
    for (int v : f) {
      const auto& l = k.vertex(v);
      auto it = mapping.find(l);
      s.push_back(it == mapping.end() ? l : it->second);
    }
    facets.push_back(make_simplex(std::move(s)));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex relabel_to_integers(const SimplicialComplex& k, std::int64_t offset) {
  std::map<VertexLabel, VertexLabel> m;
  for (std::size_t i = 0; i < k.num_vertices(); ++i) {
    m[k.vertices()[i]] = VertexLabel::integer(offset + static_cast<std::int64_t>(i));
  }
  return relabel(k, m);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  std::vector<std::size_t> offset(static_cast<std::size_t>(k.dim() + 2), 0);
  for (int d = 0; d <= k.dim(); ++d) {
    offset[static_cast<std::size_t>(d + 1)] = offset[static_cast<std::size_t>(d)] + k.faces(d).size();
  }
  std::vector<Simplex> facets;
  for (const auto& f : k.facets()) {
    Face order = f;
    do {
      Simplex chain;
      Face prefix;
      for (int v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        const auto id = offset[prefix.size() - 1] + k.face_index(prefix);
        chain.push_back(VertexLabel::integer(static_cast<std::int64_t>(id)));
      }
      facets.push_back(make_simplex(std::move(chain)));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialMapCheck is_simplicial_map(const SimplicialComplex& source, const SimplicialComplex& target,
                                     const std::map<VertexLabel, VertexLabel>& vertex_map) {
  for (const auto& l : source.vertices()) {
    if (!vertex_map.count(l)) throw Error(ErrorKind::IncompleteMap, "vertex " + l.to_string() + " is unmapped");
  }
  SimplicialMapCheck out;
  for (const auto& f : source.facets()) {
    std::vector<VertexLabel> image;
    for (int v : f) image.push_back(vertex_map.at(source.vertex(v)));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (!target.has_simplex(image)) {
      out.ok = false;
      out.violating = source.labels(f);
      return out;
    }
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorKind::OutOfRange, "matrix shapes do not match");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int dimension) {
  if (dimension < 1 || dimension > k.dim()) {
    throw Error(ErrorKind::OutOfRange, "boundary_matrix: dimension " + std::to_string(dimension) +
                                           " outside 1.." + std::to_string(k.dim()));
  }
  const auto& rows = k.faces(dimension - 1);
  const auto& cols = k.faces(dimension);
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& f = cols[j];
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face r;
      for (std::size_t t = 0; t < f.size(); ++t)
        if (t != i) r.push_back(f[t]);
      m(k.face_index(r), j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace cp2
