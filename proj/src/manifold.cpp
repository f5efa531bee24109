#include "cp2tri/manifold.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include <boost/multiprecision/cpp_int.hpp>

#include "cp2tri/error.hpp"

namespace cp2 {

using boost::multiprecision::cpp_int;

const char* to_string(SphereStatus s) { return s == SphereStatus::Certified ? "Certified" : "Inconclusive"; }

PseudomanifoldCheck is_closed_pseudomanifold(const SimplicialComplex& k) {
  if (!k.is_pure()) throw Error(ErrorKind::NotPure, "pseudomanifold check on a non-pure complex");
  PseudomanifoldCheck out;
  if (k.dim() < 0) {
    out.ok = false;
    out.reason = "void complex";
    return out;
  }
  if (k.dim() == 0) {
    out.ok = k.num_vertices() == 2;
    if (!out.ok) out.reason = "a closed 0-pseudomanifold has exactly two points";
    return out;
  }
  const auto& ridges = k.faces(k.dim() - 1);
  for (const auto& r : ridges) {
    const auto deg = k.facet_degree(r);
    if (deg != 2) {
      out.ok = false;
      out.reason = "ridge lies in " + std::to_string(deg) + (deg == 1 ? " facet" : " facets");
      out.ridge = k.labels(r);
      return out;
    }
  }
  if (!dual_graph(k).connected()) {
    out.ok = false;
    out.reason = "dual graph is disconnected";
  }
  return out;
}

namespace {

// Coefficient of ridge `facet minus facet[i]` in the boundary of `facet`.
int boundary_sign(const Face& facet, const Face& ridge) {
  for (std::size_t i = 0; i < facet.size(); ++i) {
    if (i == facet.size() - 1 || facet[i] != ridge[i]) return i % 2 == 0 ? 1 : -1;
  }
  return 1;
}

Face common_ridge(const Face& a, const Face& b) {
  Face r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

std::optional<std::vector<int>> orientation(const SimplicialComplex& k) {
  if (!is_closed_pseudomanifold(k).ok) {
    throw Error(ErrorKind::Precondition, "orientation needs a closed pseudomanifold");
  }
  const auto& facets = k.facets();
  if (k.dim() == 0) return std::vector<int>{1, -1};
  const auto g = dual_graph(k);
  std::vector<int> sign(facets.size(), 0);
  sign[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    const auto& fu = facets[static_cast<std::size_t>(u)];
    for (int v : g.adjacency[static_cast<std::size_t>(u)]) {
      const auto& fv = facets[static_cast<std::size_t>(v)];
      const auto r = common_ridge(fu, fv);
      const int want = -sign[static_cast<std::size_t>(u)] * boundary_sign(fu, r) * boundary_sign(fv, r);
      if (sign[static_cast<std::size_t>(v)] == 0) {
        sign[static_cast<std::size_t>(v)] = want;
        q.push(v);
      } else if (sign[static_cast<std::size_t>(v)] != want) {
        return std::nullopt;
      }
    }
  }
  return sign;
}

namespace {

struct Overflow {};

template <class T>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;
  T& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

inline std::int64_t sub_mul(std::int64_t x, std::int64_t q, std::int64_t y) {
  std::int64_t t = 0;
  if (__builtin_mul_overflow(q, y, &t) || __builtin_sub_overflow(x, t, &t)) throw Overflow{};
  return t;
}
inline cpp_int sub_mul(const cpp_int& x, const cpp_int& q, const cpp_int& y) { return x - q * y; }

template <class T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Unimodular reduction to a diagonal; returns |diagonal| entries that are nonzero.
template <class T>
std::vector<T> diagonalize(Dense<T> m) {
  std::vector<T> diag;
  const std::size_t n = std::min(m.rows, m.cols);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t pi = m.rows;
    std::size_t pj = m.cols;
    T best = 0;
    for (std::size_t i = r; i < m.rows && best != 1; ++i) {
      for (std::size_t j = r; j < m.cols; ++j) {
        const T& x = m.at(i, j);
        if (x == 0) continue;
        const T ax = abs_value(x);
        if (best == 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    }
    if (best == 0) break;
    for (;;) {
      if (pi != r)
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pi, j));
      if (pj != r)
        for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, r), m.at(i, pj));
      const T p = m.at(r, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.rows; ++i) {
        if (m.at(i, r) == 0) continue;
        const T q = m.at(i, r) / p;
        if (q != 0)
          for (std::size_t j = r; j < m.cols; ++j)
            if (m.at(r, j) != 0) m.at(i, j) = sub_mul(m.at(i, j), q, m.at(r, j));
        if (m.at(i, r) != 0) clean = false;
      }
      for (std::size_t j = r + 1; j < m.cols; ++j) {
        if (m.at(r, j) == 0) continue;
        const T q = m.at(r, j) / p;
        if (q != 0)
          for (std::size_t i = r; i < m.rows; ++i)
            if (m.at(i, r) != 0) m.at(i, j) = sub_mul(m.at(i, j), q, m.at(i, r));
        if (m.at(r, j) != 0) clean = false;
      }
      if (clean) break;
      // A remainder survived: move the smallest one to the pivot and repeat.
      best = 0;
      pi = r;
      pj = r;
      for (std::size_t i = r + 1; i < m.rows; ++i) {
        const T& x = m.at(i, r);
        if (x != 0 && (best == 0 || abs_value(x) < best)) best = abs_value(x), pi = i, pj = r;
      }
      for (std::size_t j = r + 1; j < m.cols; ++j) {
        const T& x = m.at(r, j);
        if (x != 0 && (best == 0 || abs_value(x) < best)) best = abs_value(x), pi = r, pj = j;
      }
    }
    diag.push_back(abs_value(m.at(r, r)));
  }
  return diag;
}

template <class T>
Dense<T> to_dense(const IntMatrix& m) {
  Dense<T> d;
  d.rows = m.rows;
  d.cols = m.cols;
  d.a.reserve(m.data.size());
  for (int x : m.data) d.a.emplace_back(x);
  return d;
}

}  // namespace

std::vector<std::int64_t> smith_invariants(const IntMatrix& m) {
  std::vector<cpp_int> diag;
  try {
    for (auto x : diagonalize(to_dense<std::int64_t>(m))) diag.emplace_back(x);
  } catch (const Overflow&) {
    diag = diagonalize(to_dense<cpp_int>(m));
  }
  // diag(a, b) ~ diag(gcd, lcm); a pairwise sweep yields the divisor chain.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i] == 1) break;
      const cpp_int g = boost::multiprecision::gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      const cpp_int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  std::vector<std::int64_t> out;
  out.reserve(diag.size());
  for (const auto& d : diag) {
    if (d > std::numeric_limits<std::int64_t>::max()) {
      throw Error(ErrorKind::OutOfRange, "invariant factor does not fit in 64 bits");
    }
    out.push_back(static_cast<std::int64_t>(d));
  }
  return out;
}

HomologyProfile homology(const SimplicialComplex& k) {
  HomologyProfile h;
  const int d = k.dim();
  if (d < 0) return h;
  std::vector<std::int64_t> rank(static_cast<std::size_t>(d + 2), 0);
  std::vector<std::vector<std::int64_t>> invariants(static_cast<std::size_t>(d + 2));
  for (int j = 1; j <= d; ++j) {
    invariants[static_cast<std::size_t>(j)] = smith_invariants(boundary_matrix(k, j));
    rank[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(invariants[static_cast<std::size_t>(j)].size());
  }
  const auto f = k.f_vector();
  for (int j = 0; j <= d; ++j) {
    h.betti.push_back(static_cast<std::int64_t>(f[static_cast<std::size_t>(j)]) - rank[static_cast<std::size_t>(j)] -
                      rank[static_cast<std::size_t>(j + 1)]);
    std::vector<std::int64_t> t;
    for (auto x : invariants[static_cast<std::size_t>(j + 1)])
      if (x > 1) t.push_back(x);
    h.torsion.push_back(std::move(t));
  }
  return h;
}

FlipComplex::FlipComplex(const SimplicialComplex& k) : dim_(k.dim()) {
  facets_.insert(k.facets().begin(), k.facets().end());
  next_vertex_ = static_cast<int>(k.num_vertices());
}

std::size_t FlipComplex::num_vertices() const {
  std::set<int> v;
  for (const auto& f : facets_) v.insert(f.begin(), f.end());
  return v.size();
}

bool FlipComplex::is_face(const Face& f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& g) { return std::includes(g.begin(), g.end(), f.begin(), f.end()); });
}

std::optional<Face> FlipComplex::partner(const Face& a) const {
  const std::size_t d = static_cast<std::size_t>(dim_);
  if (a.empty() || a.size() > d + 1) return std::nullopt;
  if (a.size() == d + 1) {
    if (!facets_.count(a)) return std::nullopt;
    return Face{next_vertex_};
  }
  std::size_t count = 0;
  Face b;
  for (const auto& f : facets_) {
    if (!std::includes(f.begin(), f.end(), a.begin(), a.end())) continue;
    ++count;
    Face rest;
    std::set_difference(f.begin(), f.end(), a.begin(), a.end(), std::back_inserter(rest));
    Face merged;
    std::set_union(b.begin(), b.end(), rest.begin(), rest.end(), std::back_inserter(merged));
    b = std::move(merged);
  }
  const std::size_t want = d + 2 - a.size();
  if (count != want || b.size() != want) return std::nullopt;
  if (is_face(b)) return std::nullopt;
  return b;
}

bool FlipComplex::legal(const Face& a, const Face& b) const {
  auto p = partner(a);
  return p && *p == b;
}

void FlipComplex::apply(const Face& a, const Face& b) {
  for (int x : b) {
    Face f = a;
    for (int y : b)
      if (y != x) f.push_back(y);
    std::sort(f.begin(), f.end());
    facets_.erase(f);
  }
  for (int x : a) {
    Face f = b;
    for (int y : a)
      if (y != x) f.push_back(y);
    std::sort(f.begin(), f.end());
    facets_.insert(std::move(f));
  }
  for (int v : b) next_vertex_ = std::max(next_vertex_, v + 1);
}

std::vector<Face> FlipComplex::faces_of_size(std::size_t size) const {
  std::set<Face> out;
  for (const auto& f : facets_) {
    if (size > f.size()) continue;
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      Face s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (pick[i]) s.push_back(f[i]);
      out.insert(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

bool FlipComplex::is_simplex_boundary() const {
  const auto n = static_cast<std::size_t>(dim_ + 2);
  return facets_.size() == n && num_vertices() == n;
}

namespace {

SphereCertificate precheck(const SimplicialComplex& k, const char* method) {
  SphereCertificate c;
  c.method = method;
  if (k.dim() < 0) {
    c.reason = "void complex";
    return c;
  }
  if (!k.is_pure()) {
    c.reason = "not pure";
    return c;
  }
  const auto pm = is_closed_pseudomanifold(k);
  if (!pm.ok) {
    c.reason = "not a closed pseudomanifold: " + pm.reason;
    return c;
  }
  const std::int64_t want = k.dim() % 2 == 0 ? 2 : 0;
  if (k.euler_characteristic() != want) {
    c.reason = "Euler characteristic " + std::to_string(k.euler_characteristic()) + ", a " + std::to_string(k.dim()) +
               "-sphere has " + std::to_string(want);
    return c;
  }
  c.status = SphereStatus::Certified;  // provisional: caller decides
  return c;
}

}  // namespace

SphereCertificate bistellar_is_sphere(const SimplicialComplex& k, std::uint64_t budget, std::uint64_t seed) {
  if (k.dim() > 3) {
    throw Error(ErrorKind::UnsupportedDimension,
                "bistellar sphere recognition supports dimension <= 3, got " + std::to_string(k.dim()));
  }
  auto cert = precheck(k, "bistellar");
  cert.seed = seed;
  cert.budget = budget;
  if (cert.status != SphereStatus::Certified) return cert;
  cert.status = SphereStatus::Inconclusive;

  FlipComplex fc(k);
  std::mt19937_64 rng(seed);
  const std::size_t d = static_cast<std::size_t>(k.dim());
  std::vector<std::pair<Face, Face>> cand;
  auto collect = [&](std::size_t size, std::size_t partner_size) {
    cand.clear();
    for (const auto& a : fc.faces_of_size(size)) {
      auto b = fc.partner(a);
      if (b && b->size() == partner_size) cand.emplace_back(a, std::move(*b));
    }
    return !cand.empty();
  };
  for (;;) {
    if (fc.is_simplex_boundary()) {
      cert.status = SphereStatus::Certified;
      return cert;
    }
    if (cert.moves >= budget) {
      cert.reason = "move budget exhausted";
      return cert;
    }
    // Vertex removal first, then moves removing facets, then neutral or
    // facet-adding moves as escapes.
    bool found = collect(1, d + 1);
    if (!found && d >= 2) found = collect(2, d);
    if (!found && d == 3) found = collect(3, 2);
    if (!found) {
      cert.reason = "no legal move";
      return cert;
    }
    const auto& [a, b] = cand[static_cast<std::size_t>(rng() % cand.size())];
    fc.apply(a, b);
    cert.trace.emplace_back(a, b);
    ++cert.moves;
  }
}

SphereCertificate classify_2sphere(const SimplicialComplex& k) {
  if (k.dim() != 2) {
    throw Error(ErrorKind::UnsupportedDimension, "surface classification needs a 2-dimensional complex");
  }
  auto cert = precheck(k, "classification");
  if (cert.status != SphereStatus::Certified) return cert;
  for (std::size_t v = 0; v < k.num_vertices(); ++v) {
    const auto l = link(k, {k.vertex(static_cast<int>(v))});
    const auto pm = l.dim() == 1 ? is_closed_pseudomanifold(l) : PseudomanifoldCheck{false, "", {}};
    if (!pm.ok) {
      cert.status = SphereStatus::Inconclusive;
      cert.reason = "link of " + k.vertex(static_cast<int>(v)).to_string() + " is not a circle";
      return cert;
    }
  }
  return cert;
}

ManifoldReport is_combinatorial_manifold(const SimplicialComplex& k, std::uint64_t budget, std::uint64_t seed,
                                         const std::vector<VertexMap>* group) {
  if (!is_closed_pseudomanifold(k).ok) {
    throw Error(ErrorKind::Precondition, "combinatorial manifold check needs a closed pseudomanifold");
  }
  const auto n = k.num_vertices();
  std::vector<bool> is_rep(n, true);
  if (group) {
    for (std::size_t v = 0; v < n; ++v) {
      for (const auto& g : *group) {
        if (g.size() != n) throw Error(ErrorKind::NotAnAutomorphism, "group element has the wrong size");
        if (static_cast<std::size_t>(g[v]) < v) {
          is_rep[v] = false;
          break;
        }
      }
    }
  }
  ManifoldReport report;
  report.verdict = SphereStatus::Certified;
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_rep[v]) continue;
    const auto& label = k.vertex(static_cast<int>(v));
    const auto l = link(k, {label});
    auto cert = l.dim() == 2 ? classify_2sphere(l) : bistellar_is_sphere(l, budget, seed);
    if (cert.status != SphereStatus::Certified) report.verdict = SphereStatus::Inconclusive;
    report.links.emplace_back(label, std::move(cert));
  }
  return report;
}

}  // namespace cp2
