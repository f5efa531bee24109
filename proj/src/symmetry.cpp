#include "cp2tri/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cp2tri/error.hpp"

namespace cp2 {

namespace {

template <std::size_t N>
std::array<int, N> compose(const std::array<int, N>& p, const std::array<int, N>& q) {
  std::array<int, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = p[static_cast<std::size_t>(q[i] - 1)];
  return r;
}

template <std::size_t N>
std::array<int, N> invert(const std::array<int, N>& p) {
  std::array<int, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

template <std::size_t N>
bool odd(const std::array<int, N>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) inv += p[i] > p[j];
  return inv % 2 == 1;
}

template <std::size_t N>
std::string one_line(const std::array<int, N>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < N; ++i) s += static_cast<char>('0' + p[i]);
  return s + "]";
}

}  // namespace

GroupElement GroupElement::operator*(const GroupElement& h) const {
  return {compose(theta, h.theta), compose(kappa, h.kappa)};
}

GroupElement GroupElement::inverse() const { return {invert(theta), invert(kappa)}; }
bool GroupElement::theta_odd() const { return odd(theta); }
bool GroupElement::kappa_odd() const { return odd(kappa); }
std::string GroupElement::to_string() const { return "(" + one_line(theta) + "," + one_line(kappa) + ")"; }

VertexLabel act(const GroupElement& g, const VertexLabel& s) {
  auto th = [&](int a) { return g.theta[static_cast<std::size_t>(a - 1)]; };
  auto ka = [&](int b) { return g.kappa[static_cast<std::size_t>(b - 1)]; };
  switch (s.kind()) {
    case LabelKind::Perm: {
      // theta nu theta^-1 sends theta(1) to theta(nu(1)).
      const auto nu = s.perm_images();
      const auto conj = compose(compose(g.theta, nu), invert(g.theta));
      return VertexLabel::perm(conj[0]);
    }
    case LabelKind::Pair: return VertexLabel::pair(th(s.a()), ka(s.b()));
    case LabelKind::Mid: return VertexLabel::mid(th(s.a1()), th(s.a2()), ka(s.b()));
    default: throw Error(ErrorKind::OutOfRange, "S4 x S3 does not act on " + s.to_string());
  }
}

Simplex act(const GroupElement& g, const Simplex& s) {
  std::vector<VertexLabel> out;
  out.reserve(s.size());
  for (const auto& l : s) out.push_back(act(g, l));
  return make_simplex(std::move(out));
}

const std::vector<GroupElement>& s4xs3_elements() {
  static const std::vector<GroupElement> all = [] {
    std::vector<GroupElement> out;
    std::array<int, 4> t = {1, 2, 3, 4};
    do {
      std::array<int, 3> k = {1, 2, 3};
      do out.push_back({t, k});
      while (std::next_permutation(k.begin(), k.end()));
    } while (std::next_permutation(t.begin(), t.end()));
    return out;
  }();
  return all;
}

VertexMap induced_map(const SimplicialComplex& k, const GroupElement& g) {
  VertexMap m(k.num_vertices());
  for (std::size_t v = 0; v < k.num_vertices(); ++v) {
    const auto img = act(g, k.vertices()[v]);
    auto i = k.find_vertex(img);
    if (!i) throw Error(ErrorKind::OutOfRange, "image " + img.to_string() + " is not a vertex");
    m[v] = *i;
  }
  return m;
}

Face apply_map(const VertexMap& m, const Face& f) {
  Face out;
  out.reserve(f.size());
  for (int v : f) out.push_back(m[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const SimplicialComplex& k, const VertexMap& m) {
  if (m.size() != k.num_vertices()) return false;
  std::vector<bool> hit(m.size(), false);
  for (int v : m) {
    if (v < 0 || static_cast<std::size_t>(v) >= m.size() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  const std::set<Face> facets(k.facets().begin(), k.facets().end());
  return std::all_of(k.facets().begin(), k.facets().end(),
                     [&](const Face& f) { return facets.count(apply_map(m, f)) > 0; });
}

namespace {

// Per-vertex invariant: link f-vector followed by the sorted f-vectors of the
// links of incident edges.
std::vector<std::vector<std::size_t>> vertex_signatures(const SimplicialComplex& k) {
  std::vector<std::vector<std::size_t>> sig(k.num_vertices());
  for (std::size_t v = 0; v < k.num_vertices(); ++v) {
    auto fv = link(k, {k.vertices()[v]}).f_vector();
    sig[v] = fv;
    sig[v].push_back(SIZE_MAX);
  }
  std::vector<std::vector<std::vector<std::size_t>>> edge_links(k.num_vertices());
  for (const auto& e : k.faces(1)) {
    const auto fv = link(k, k.labels(e)).f_vector();
    edge_links[static_cast<std::size_t>(e[0])].push_back(fv);
    edge_links[static_cast<std::size_t>(e[1])].push_back(fv);
  }
  for (std::size_t v = 0; v < k.num_vertices(); ++v) {
    auto& el = edge_links[v];
    std::sort(el.begin(), el.end());
    for (const auto& fv : el) {
      sig[v].insert(sig[v].end(), fv.begin(), fv.end());
      sig[v].push_back(SIZE_MAX - 1);
    }
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const SimplicialComplex& a, const SimplicialComplex& b, bool find_all)
      : a_(a), b_(b), all_(find_all), n_(a.num_vertices()) {}

  std::vector<VertexMap> run() {
    if (a_.num_vertices() != b_.num_vertices() || a_.f_vector() != b_.f_vector()) return {};
    if (n_ == 0) return {VertexMap{}};
    const auto sa = vertex_signatures(a_);
    const auto sb = vertex_signatures(b_);
    auto msa = sa;
    auto msb = sb;
    std::sort(msa.begin(), msa.end());
    std::sort(msb.begin(), msb.end());
    if (msa != msb) return {};
    candidates_.assign(n_, {});
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w)
        if (sa[v] == sb[w]) candidates_[v].push_back(static_cast<int>(w));
    adj_a_ = adjacency(a_);
    adj_b_ = adjacency(b_);
    b_facets_.insert(b_.facets().begin(), b_.facets().end());
    incident_.assign(n_, {});
    for (std::size_t f = 0; f < a_.facets().size(); ++f)
      for (int v : a_.facets()[f]) incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
    choose_order();
    map_.assign(n_, -1);
    used_.assign(n_, false);
    pos_.assign(n_, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[static_cast<std::size_t>(order_[i])] = i;
    extend(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  static std::vector<std::vector<char>> adjacency(const SimplicialComplex& k) {
    std::vector<std::vector<char>> adj(k.num_vertices(), std::vector<char>(k.num_vertices(), 0));
    for (const auto& e : k.faces(1)) {
      adj[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = 1;
      adj[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = 1;
    }
    return adj;
  }

  // Fewest candidates first, then prefer vertices adjacent to many already
  // ordered ones.
  void choose_order() {
    std::vector<bool> taken(n_, false);
    for (std::size_t step = 0; step < n_; ++step) {
      int best = -1;
      std::size_t best_links = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        if (taken[v]) continue;
        std::size_t links = 0;
        for (int u : order_) links += adj_a_[v][static_cast<std::size_t>(u)];
        if (best == -1 || links > best_links ||
            (links == best_links && candidates_[v].size() < candidates_[static_cast<std::size_t>(best)].size())) {
          best = static_cast<int>(v);
          best_links = links;
        }
      }
      taken[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
  }

  bool consistent(std::size_t depth, int v, int w) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const auto u = static_cast<std::size_t>(order_[i]);
      if (adj_a_[static_cast<std::size_t>(v)][u] != adj_b_[static_cast<std::size_t>(w)][static_cast<std::size_t>(map_[u])]) {
        return false;
      }
    }
    // Facets completed by v must land on facets.
    for (int f : incident_[static_cast<std::size_t>(v)]) {
      const auto& face = a_.facets()[static_cast<std::size_t>(f)];
      bool complete = true;
      Face img;
      for (int x : face) {
        if (x == v) {
          img.push_back(w);
        } else if (pos_[static_cast<std::size_t>(x)] < depth) {
          img.push_back(map_[static_cast<std::size_t>(x)]);
        } else {
          complete = false;
          break;
        }
      }
      if (!complete) continue;
      std::sort(img.begin(), img.end());
      if (!b_facets_.count(img)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) {
      found_.push_back(map_);
      return !all_;
    }
    const int v = order_[depth];
    for (int w : candidates_[static_cast<std::size_t>(v)]) {
      if (used_[static_cast<std::size_t>(w)] || !consistent(depth, v, w)) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const SimplicialComplex& a_;
  const SimplicialComplex& b_;
  bool all_;
  std::size_t n_;
  std::vector<std::vector<int>> candidates_;
  std::vector<std::vector<char>> adj_a_;
  std::vector<std::vector<char>> adj_b_;
  std::set<Face> b_facets_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> order_;
  std::vector<std::size_t> pos_;
  VertexMap map_;
  std::vector<bool> used_;
  std::vector<VertexMap> found_;
};

}  // namespace

std::vector<VertexMap> automorphism_group(const SimplicialComplex& k) { return IsoSearch(k, k, true).run(); }

std::optional<VertexMap> are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto found = IsoSearch(a, b, false).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

ActionCheck verify_S4xS3_action(const SimplicialComplex& x) {
  ActionCheck c;
  std::set<VertexMap> images;
  c.all_automorphisms = true;
  for (const auto& g : s4xs3_elements()) {
    VertexMap m;
    try {
      m = induced_map(x, g);
    } catch (const Error&) {
      c.all_automorphisms = false;
      continue;
    }
    if (!is_automorphism(x, m)) c.all_automorphisms = false;
    images.insert(std::move(m));
  }
  c.faithful = images.size() == s4xs3_elements().size();
  const auto aut = automorphism_group(x);
  c.aut_order = aut.size();
  c.exhausts = std::all_of(aut.begin(), aut.end(), [&](const VertexMap& m) { return images.count(m) > 0; });
  return c;
}

std::vector<VertexMap> induced_group(const SimplicialComplex& k) {
  std::vector<VertexMap> out;
  for (const auto& g : s4xs3_elements()) out.push_back(induced_map(k, g));
  return out;
}

std::vector<Orbit> orbits(const SimplicialComplex& k, const std::vector<VertexMap>& group, int dim) {
  for (const auto& g : group) {
    if (!is_automorphism(k, g)) throw Error(ErrorKind::NotAnAutomorphism, "group element is not an automorphism");
  }
  const auto& faces = k.faces(dim);
  std::vector<bool> seen(faces.size(), false);
  std::vector<Orbit> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (seen[i]) continue;
    Orbit o;
    o.representative = faces[i];
    std::set<Face> members = {faces[i]};
    for (const auto& g : group) members.insert(apply_map(g, faces[i]));
    for (const auto& m : members) seen[k.face_index(m)] = true;
    o.members.assign(members.begin(), members.end());
    out.push_back(std::move(o));
  }
  return out;
}

std::map<VertexLabel, VertexLabel> x_to_y_map() {
  auto sigma = [](int a) {
    std::array<int, 3> p = {0, 1, 2};
    std::swap(p[static_cast<std::size_t>((a + 1) % 3)], p[static_cast<std::size_t>((a + 2) % 3)]);
    return p;
  };
  auto mod3 = [](int x) { return ((x % 3) + 3) % 3; };
  std::map<VertexLabel, VertexLabel> m;
  for (int a = 0; a < 3; ++a) m[VertexLabel::perm(a + 2)] = VertexLabel::perm_u(sigma(a));
  for (int b = 1; b <= 3; ++b) {
    // (012)^b sends x to x + b.
    m[VertexLabel::pair(4, b)] = VertexLabel::perm_u({mod3(b), mod3(1 + b), mod3(2 + b)});
  }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) m[VertexLabel::pair(a, b)] = VertexLabel::grid(mod3(-a - b), mod3(-a + b));
  return m;
}

}  // namespace cp2
