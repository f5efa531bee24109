#include "cp2tri/colouring.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "cp2tri/error.hpp"

namespace cp2 {

std::vector<double> connection_apply(const SimplicialComplex& k, const std::map<VertexLabel, double>& psi) {
  std::vector<double> values(k.num_vertices(), 0.0);
  for (std::size_t v = 0; v < k.num_vertices(); ++v) {
    auto it = psi.find(k.vertices()[v]);
    if (it == psi.end()) {
      throw Error(ErrorKind::IncompleteMap, "psi has no value at " + k.vertices()[v].to_string());
    }
    values[v] = it->second;
  }
  std::vector<double> out;
  out.reserve(k.facets().size());
  for (const auto& f : k.facets()) {
    double s = 0.0;
    for (int v : f) s += values[static_cast<std::size_t>(v)];
    out.push_back(s);
  }
  return out;
}

EvenCheck is_even(const SimplicialComplex& k) {
  EvenCheck out;
  if (k.dim() < 1) return out;
  if (k.dim() == 1) {
    out.degree = k.facets().size();
    out.ok = out.degree % 2 == 0;
    return out;
  }
  for (const auto& f : k.faces(k.dim() - 2)) {
    const auto deg = k.facet_degree(f);
    if (deg % 2 != 0) {
      out.ok = false;
      out.face = k.labels(f);
      out.degree = deg;
      return out;
    }
  }
  return out;
}

namespace {

// Vertex of `a` missing from `b`.
int opposite(const Face& a, const Face& b) {
  for (int v : a)
    if (!std::binary_search(b.begin(), b.end(), v)) return v;
  return -1;
}

int boundary_sign_without(const Face& facet, int removed) {
  const auto pos = std::find(facet.begin(), facet.end(), removed) - facet.begin();
  return pos % 2 == 0 ? 1 : -1;
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      sign = -sign;
    }
  }
  return sign;
}

struct BfsTree {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> order;
};

BfsTree bfs_tree(const DualGraph& g, int base) {
  BfsTree t;
  const auto n = g.adjacency.size();
  t.parent.assign(n, -2);
  t.depth.assign(n, 0);
  std::queue<int> q;
  q.push(base);
  t.parent[static_cast<std::size_t>(base)] = -1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    t.order.push_back(u);
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      if (t.parent[static_cast<std::size_t>(v)] != -2) continue;
      t.parent[static_cast<std::size_t>(v)] = u;
      t.depth[static_cast<std::size_t>(v)] = t.depth[static_cast<std::size_t>(u)] + 1;
      q.push(v);
    }
  }
  return t;
}

void require_connected(const SimplicialComplex& k, const DualGraph& g, const char* what) {
  if (k.facets().empty() || !g.connected()) {
    throw Error(ErrorKind::Precondition, std::string(what) + " needs a nonempty complex with connected dual graph");
  }
}

}  // namespace

std::optional<std::vector<int>> chess_colouring(const SimplicialComplex& k) {
  const auto g = dual_graph(k);
  std::vector<int> colour(k.facets().size(), -1);
  for (std::size_t s = 0; s < colour.size(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
        auto& cv = colour[static_cast<std::size_t>(v)];
        if (cv == -1) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_regular_colouring(const SimplicialComplex& k, const std::vector<int>& colours) {
  if (colours.size() != k.num_vertices() || !k.is_pure()) return false;
  const int n = k.dim();
  for (int c : colours)
    if (c < 0 || c > n) return false;
  for (const auto& f : k.facets()) {
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    for (int v : f) {
      const auto c = static_cast<std::size_t>(colours[static_cast<std::size_t>(v)]);
      if (seen[c]) return false;
      seen[c] = true;
    }
  }
  return true;
}

std::optional<std::vector<int>> regular_colouring(const SimplicialComplex& k) {
  const auto g = dual_graph(k);
  require_connected(k, g, "regular colouring");
  const auto& facets = k.facets();
  std::vector<int> colour(k.num_vertices(), -1);
  for (std::size_t i = 0; i < facets[0].size(); ++i) colour[static_cast<std::size_t>(facets[0][i])] = static_cast<int>(i);
  const auto t = bfs_tree(g, 0);
  for (int u : t.order) {
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      const auto& fu = facets[static_cast<std::size_t>(u)];
      const auto& fv = facets[static_cast<std::size_t>(v)];
      const int x = opposite(fu, fv);
      const int y = opposite(fv, fu);
      auto& cy = colour[static_cast<std::size_t>(y)];
      if (cy == -1) {
        cy = colour[static_cast<std::size_t>(x)];
      } else if (cy != colour[static_cast<std::size_t>(x)]) {
        return std::nullopt;
      }
    }
  }
  if (!is_regular_colouring(k, colour)) return std::nullopt;
  return colour;
}

HolonomyData projectivity_group(const SimplicialComplex& k, int base) {
  const auto g = dual_graph(k);
  require_connected(k, g, "projectivity group");
  const auto& facets = k.facets();
  if (base < 0 || static_cast<std::size_t>(base) >= facets.size()) {
    throw Error(ErrorKind::OutOfRange, "base facet index out of range");
  }
  HolonomyData h;
  h.base = base;
  const auto t = bfs_tree(g, base);
  const auto n = facets.size();

  // slots[s][i]: vertex of facet s sitting in slot i; eps[s]: orientation
  // sign relative to the sorted vertex order, transported coherently.
  std::vector<std::vector<int>> slots(n);
  std::vector<int> eps(n, 0);
  slots[static_cast<std::size_t>(base)] = facets[static_cast<std::size_t>(base)];
  eps[static_cast<std::size_t>(base)] = 1;
  auto carry = [&](int from, int to) {
    const auto& ff = facets[static_cast<std::size_t>(from)];
    const auto& ft = facets[static_cast<std::size_t>(to)];
    const int x = opposite(ff, ft);
    const int y = opposite(ft, ff);
    auto s = slots[static_cast<std::size_t>(from)];
    for (auto& v : s)
      if (v == x) v = y;
    const int e = -eps[static_cast<std::size_t>(from)] * boundary_sign_without(ff, x) * boundary_sign_without(ft, y);
    return std::pair{s, e};
  };
  for (int u : t.order) {
    if (u == base) continue;
    auto [s, e] = carry(t.parent[static_cast<std::size_t>(u)], u);
    slots[static_cast<std::size_t>(u)] = std::move(s);
    eps[static_cast<std::size_t>(u)] = e;
  }

  const bool even = is_even(k).ok;
  h.rho3_defined = even;
  for (std::size_t u = 0; u < n; ++u) {
    for (int v : g.adjacency[u]) {
      if (static_cast<std::size_t>(v) <= u) continue;
      if (t.parent[u] == v || t.parent[static_cast<std::size_t>(v)] == static_cast<int>(u)) continue;
      auto [psi, e] = carry(static_cast<int>(u), v);
      const auto& target = slots[static_cast<std::size_t>(v)];
      std::vector<int> perm(psi.size());
      for (std::size_t i = 0; i < psi.size(); ++i) {
        perm[i] = static_cast<int>(std::find(target.begin(), target.end(), psi[i]) - target.begin());
      }
      const int rho1 = permutation_sign(perm);
      const int rho2 = e == eps[static_cast<std::size_t>(v)] ? 1 : -1;
      const int rho3 = (t.depth[u] + t.depth[static_cast<std::size_t>(v)] + 1) % 2 == 0 ? 1 : -1;
      h.rho1_trivial = h.rho1_trivial && rho1 == 1;
      h.rho2_trivial = h.rho2_trivial && rho2 == 1;
      h.rho3_trivial = h.rho3_trivial && rho3 == 1;
      h.relation_holds = h.relation_holds && rho1 * rho2 == rho3;
      h.generators.push_back(std::move(perm));
      h.cycle_edges.emplace_back(static_cast<int>(u), v);
    }
  }
  if (!even) h.rho3_trivial = false;

  std::set<std::vector<int>> group;
  std::vector<int> id(static_cast<std::size_t>(k.dim() + 1));
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  group.insert(id);
  std::queue<std::vector<int>> q;
  q.push(id);
  while (!q.empty()) {
    const auto p = q.front();
    q.pop();
    for (const auto& gen : h.generators) {
      std::vector<int> r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) r[i] = gen[static_cast<std::size_t>(p[i])];
      if (group.insert(r).second) q.push(std::move(r));
    }
  }
  h.group_order = group.size();
  return h;
}

ClassReport class_report(const SimplicialComplex& k) {
  ClassReport r;
  r.even = is_even(k).ok;
  r.bw = chess_colouring(k).has_value();
  r.colour = regular_colouring(k).has_value();
  const auto h = projectivity_group(k);
  r.relation_holds = h.relation_holds;
  r.rho3_defined = h.rho3_defined;
  return r;
}

std::optional<SuspensionClass> suspension_colour_class(const SimplicialComplex& k, const std::vector<int>& colours) {
  if (!is_regular_colouring(k, colours)) {
    throw Error(ErrorKind::InvalidColouring, "colouring is not regular");
  }
  for (int c = 0; c <= k.dim(); ++c) {
    std::vector<int> cls;
    for (std::size_t v = 0; v < colours.size(); ++v)
      if (colours[v] == c) cls.push_back(static_cast<int>(v));
    if (cls.size() != 2) continue;
    std::vector<VertexLabel> rest;
    for (std::size_t v = 0; v < colours.size(); ++v)
      if (colours[v] != c) rest.push_back(k.vertices()[v]);
    const auto a1 = k.vertex(cls[0]);
    const auto a2 = k.vertex(cls[1]);
    const auto base = full_subcomplex(k, rest);
    if (suspension(base, a1, a2) == k) return SuspensionClass{c, a1, a2};
  }
  return std::nullopt;
}

}  // namespace cp2
