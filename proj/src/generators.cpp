#include "cp2tri/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "cp2tri/error.hpp"

namespace cp2 {

namespace {

using Perm3 = std::array<int, 3>;

const std::array<int, 3> kPartners = {2, 3, 4};

int nu_image(int partner, int a) { return VertexLabel::perm(partner).perm_images()[static_cast<std::size_t>(a - 1)]; }

std::vector<VertexLabel> x_vertices() {
  std::vector<VertexLabel> v;
  for (int p : kPartners) v.push_back(VertexLabel::perm(p));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b) v.push_back(VertexLabel::pair(a, b));
  return v;
}

// Facets of X as (partner, b1..b4).
struct XFacet {
  int partner;
  std::array<int, 4> b;
};

std::vector<XFacet> x_facets() {
  std::vector<XFacet> out;
  for (int p : kPartners) {
    std::array<int, 4> b{};
    for (b[0] = 1; b[0] <= 3; ++b[0])
      for (b[1] = 1; b[1] <= 3; ++b[1])
        for (b[2] = 1; b[2] <= 3; ++b[2])
          for (b[3] = 1; b[3] <= 3; ++b[3]) {
            bool ok = true;
            for (int a = 1; a <= 4; ++a) ok = ok && b[static_cast<std::size_t>(nu_image(p, a) - 1)] != b[static_cast<std::size_t>(a - 1)];
            if (ok) out.push_back({p, b});
          }
  }
  return out;
}

Simplex from_subset(const std::vector<VertexLabel>& verts, std::uint32_t mask) {
  Simplex s;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (mask & (1u << i)) s.push_back(verts[i]);
  return make_simplex(std::move(s));
}

// Keeps the subsets avoiding every forbidden set; maximal ones become facets.
SimplicialComplex from_forbidden(const std::vector<VertexLabel>& verts, const std::vector<std::uint32_t>& forbidden) {
  std::vector<std::uint32_t> faces;
  const std::uint32_t n = static_cast<std::uint32_t>(verts.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const bool bad = std::any_of(forbidden.begin(), forbidden.end(),
                                 [&](std::uint32_t f) { return (mask & f) == f; });
    if (!bad) faces.push_back(mask);
  }
  std::vector<Simplex> facets;
  for (auto m : faces) {
    bool maximal = true;
    for (std::uint32_t i = 0; i < n && maximal; ++i) {
      if (m & (1u << i)) continue;
      const auto bigger = m | (1u << i);
      maximal = !std::binary_search(faces.begin(), faces.end(), bigger);
    }
    if (maximal) facets.push_back(from_subset(verts, m));
  }
  return SimplicialComplex::from_facets(facets);
}

Perm3 compose3(const Perm3& p, const Perm3& q) { return {p[static_cast<std::size_t>(q[0])], p[static_cast<std::size_t>(q[1])], p[static_cast<std::size_t>(q[2])]}; }

// Transposition of the two elements of Z_3 other than a.
Perm3 sigma(int a) {
  Perm3 p = {0, 1, 2};
  const int x = (a + 1) % 3;
  const int y = (a + 2) % 3;
  p[static_cast<std::size_t>(x)] = y;
  p[static_cast<std::size_t>(y)] = x;
  return p;
}

std::vector<Perm3> all_perm3() {
  std::vector<Perm3> out;
  Perm3 p = {0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

VertexLabel U(int a, int b) { return VertexLabel::grid(a, b); }
VertexLabel K(const Perm3& k) { return VertexLabel::perm_u(k); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int parse_int_param(std::string_view name, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::UnknownName, "bad parameter '" + std::string(text) + "' in '" + std::string(name) + "'");
  }
  return v;
}

}  // namespace

SimplicialComplex gen_X() {
  std::vector<Simplex> facets;
  for (const auto& f : x_facets()) {
    Simplex s = {VertexLabel::perm(f.partner)};
    for (int a = 1; a <= 4; ++a) s.push_back(VertexLabel::pair(a, f.b[static_cast<std::size_t>(a - 1)]));
    facets.push_back(make_simplex(std::move(s)));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_X_oracle() {
  const auto verts = x_vertices();
  auto bit = [&](const VertexLabel& l) {
    return 1u << static_cast<unsigned>(std::find(verts.begin(), verts.end(), l) - verts.begin());
  };
  std::vector<std::uint32_t> forbidden;
  for (int a = 1; a <= 4; ++a)
    for (int b1 = 1; b1 <= 3; ++b1)
      for (int b2 = b1 + 1; b2 <= 3; ++b2) forbidden.push_back(bit(VertexLabel::pair(a, b1)) | bit(VertexLabel::pair(a, b2)));
  for (int p1 : kPartners)
    for (int p2 : kPartners)
      if (p1 < p2) forbidden.push_back(bit(VertexLabel::perm(p1)) | bit(VertexLabel::perm(p2)));
  for (int b = 1; b <= 3; ++b)
    for (int a1 = 1; a1 <= 4; ++a1)
      for (int a2 = a1 + 1; a2 <= 4; ++a2)
        for (int a3 = a2 + 1; a3 <= 4; ++a3)
          forbidden.push_back(bit(VertexLabel::pair(a1, b)) | bit(VertexLabel::pair(a2, b)) | bit(VertexLabel::pair(a3, b)));
  for (int p : kPartners)
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 3; ++b)
        forbidden.push_back(bit(VertexLabel::perm(p)) | bit(VertexLabel::pair(a, b)) |
                            bit(VertexLabel::pair(nu_image(p, a), b)));
  return from_forbidden(verts, forbidden);
}

SimplicialComplex gen_Xbar() {
  std::vector<Simplex> facets;
  for (const auto& f : x_facets()) {
    std::vector<Simplex> pieces = {{VertexLabel::perm(f.partner)}};
    for (int a = 1; a <= 4; ++a) {
      for (auto& s : pieces) s.push_back(VertexLabel::pair(a, f.b[static_cast<std::size_t>(a - 1)]));
    }
    for (int a1 = 1; a1 <= 4; ++a1) {
      for (int a2 = a1 + 1; a2 <= 4; ++a2) {
        const int b = f.b[static_cast<std::size_t>(a1 - 1)];
        if (b != f.b[static_cast<std::size_t>(a2 - 1)]) continue;
        const auto mid = VertexLabel::mid(a1, a2, b);
        std::vector<Simplex> next;
        for (const auto& s : pieces) {
          for (const auto& drop : {VertexLabel::pair(a1, b), VertexLabel::pair(a2, b)}) {
            Simplex t;
            for (const auto& l : s)
              if (l != drop) t.push_back(l);
            t.push_back(mid);
            next.push_back(std::move(t));
          }
        }
        pieces = std::move(next);
      }
    }
    for (auto& s : pieces) facets.push_back(make_simplex(std::move(s)));
  }
  return SimplicialComplex::from_facets(facets);
}

Simplex carrier_facet(const Simplex& xbar_facet) {
  std::vector<VertexLabel> out;
  for (const auto& l : xbar_facet) {
    if (l.kind() == LabelKind::Mid) {
      out.push_back(VertexLabel::pair(l.a1(), l.b()));
      out.push_back(VertexLabel::pair(l.a2(), l.b()));
    } else {
      out.push_back(l);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  static const SimplicialComplex x = gen_X();
  if (out.size() != 5 || !x.has_simplex(out)) {
    throw Error(ErrorKind::NotAFace, "carrier of a simplex that is not an Xbar facet");
  }
  return out;
}

int x_facet_type(const Simplex& x_facet) {
  std::set<int> bs;
  for (const auto& l : x_facet)
    if (l.kind() == LabelKind::Pair) bs.insert(l.b());
  return static_cast<int>(bs.size());
}

std::vector<Simplex> gen_Y_family(int family) {
  if (family < 1 || family > 6) throw Error(ErrorKind::OutOfRange, "Y has families 1..6");
  std::set<Simplex> out;
  for (const auto& k : all_perm3()) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        Simplex s = {K(k)};
        if (family <= 2) {
          if (a == b) continue;
          if (family == 1) {
            s.push_back(K(compose3(sigma(b), k)));
            for (int c = 0; c < 3; ++c) s.push_back(U(a, c));
          } else {
            s.push_back(K(compose3(k, sigma(b))));
            for (int c = 0; c < 3; ++c) s.push_back(U(c, a));
          }
        } else {
          if (a == k[static_cast<std::size_t>(b)]) continue;
          s.push_back(K(family <= 4 ? compose3(sigma(a), k) : compose3(k, sigma(b))));
          s.push_back(U(a + 1, b + 1));
          if (family == 3 || family == 5) {
            s.push_back(U(a + 2, b + 1));
          } else {
            s.push_back(U(a + 1, b + 2));
          }
          s.push_back(U(a + 2, b + 2));
        }
        out.insert(make_simplex(std::move(s)));
      }
    }
  }
  return {out.begin(), out.end()};
}

SimplicialComplex gen_Y() {
  std::vector<Simplex> facets;
  for (int f = 1; f <= 6; ++f) {
    auto fam = gen_Y_family(f);
    facets.insert(facets.end(), fam.begin(), fam.end());
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_torus_36pq(int p, int q) {
  if (p < 0 || q < 0 || p + q < 3) {
    throw Error(ErrorKind::DegenerateQuotient,
                "{3,6}_{" + std::to_string(p) + "," + std::to_string(q) + "} needs p, q >= 0 and p + q >= 3");
  }
  // Lattice basis columns (p,q) and (-q,p+q); det = p^2 + pq + q^2.
  const std::int64_t n = std::int64_t{p} * p + std::int64_t{p} * q + std::int64_t{q} * q;
  auto reduce = [&](std::int64_t x, std::int64_t y) {
    // Coefficients of (x,y) in the basis, times n, then floor.
    const std::int64_t s = floor_div((p + q) * x + q * y, n);
    const std::int64_t t = floor_div(-q * x + p * y, n);
    return std::pair<std::int64_t, std::int64_t>{x - (s * p - t * q), y - (s * q + t * (p + q))};
  };
  std::set<std::pair<std::int64_t, std::int64_t>> reps;
  const std::int64_t span = 2 * (p + q) + 2;
  for (std::int64_t x = -span; x <= span; ++x)
    for (std::int64_t y = -span; y <= span; ++y) reps.insert(reduce(x, y));
  if (static_cast<std::int64_t>(reps.size()) != n) {
    throw Error(ErrorKind::Inconsistent, "torus quotient has " + std::to_string(reps.size()) +
                                             " classes, expected " + std::to_string(n));
  }
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> id;
  for (const auto& r : reps) id.emplace(r, static_cast<std::int64_t>(id.size()));
  auto label = [&](std::int64_t x, std::int64_t y) { return VertexLabel::integer(id.at(reduce(x, y))); };
  std::vector<Simplex> facets;
  for (const auto& [x, y] : reps) {
    facets.push_back(make_simplex({label(x, y), label(x + 1, y), label(x, y + 1)}));
    facets.push_back(make_simplex({label(x + 1, y), label(x, y + 1), label(x + 1, y + 1)}));
  }
  auto k = SimplicialComplex::from_facets(facets);
  if (static_cast<std::int64_t>(k.facets().size()) != 2 * n) {
    throw Error(ErrorKind::DegenerateQuotient, "torus quotient is not simplicial");
  }
  return k;
}

std::int64_t literal_sublattice_index(int p, int q) {
  const std::int64_t a = p - q;
  const std::int64_t b = 2 * p + q;
  const std::int64_t c = 2 * p + q;
  const std::int64_t d = p + 2 * q;
  return std::llabs(a * d - b * c);
}

TorusLayer subcomplex_T_P(const SimplicialComplex& x) {
  const auto n12 = VertexLabel::perm(2);
  const auto n13 = VertexLabel::perm(3);
  const auto n14 = VertexLabel::perm(4);
  auto build = [&](std::vector<VertexLabel> apexes) {
    std::vector<Simplex> keep;
    for (int d = 0; d <= x.dim(); ++d) {
      for (const auto& f : x.faces(d)) {
        auto s = x.labels(f);
        bool ok = true;
        for (const auto& nu : apexes) {
          if (std::find(s.begin(), s.end(), nu) != s.end()) {
            ok = false;
            break;
          }
          auto t = s;
          t.push_back(nu);
          if (!x.has_simplex(make_simplex(std::move(t)))) {
            ok = false;
            break;
          }
        }
        if (ok) keep.push_back(std::move(s));
      }
    }
    return SimplicialComplex::from_facets(keep);
  };
  return {build({n12, n13, n14}), build({n12, n13}), build({n12, n14}), build({n13, n14})};
}

SimplicialComplex gen_boundary_simplex(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "boundary-simplex needs n >= 1");
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n; ++skip) {
    Simplex s;
    for (int v = 0; v <= n; ++v)
      if (v != skip) s.push_back(VertexLabel::integer(v));
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_cross_polytope(int n) {
  if (n < 1 || n > 16) throw Error(ErrorKind::OutOfRange, "cross needs 1 <= n <= 16");
  std::vector<Simplex> facets;
  for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
    Simplex s;
    for (int j = 0; j < n; ++j) s.push_back(VertexLabel::integer(2 * j + ((signs >> j) & 1u)));
    facets.push_back(std::move(s));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_cycle(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "cycle needs n >= 3");
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i) facets.push_back(make_simplex({VertexLabel::integer(i), VertexLabel::integer((i + 1) % n)}));
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_rp2_6() {
  static const int tri[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                 {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
  std::vector<Simplex> facets;
  for (const auto& t : tri)
    facets.push_back(make_simplex({VertexLabel::integer(t[0]), VertexLabel::integer(t[1]), VertexLabel::integer(t[2])}));
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_torus_7() {
  std::vector<Simplex> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back(make_simplex({VertexLabel::integer(i), VertexLabel::integer((i + 1) % 7), VertexLabel::integer((i + 3) % 7)}));
    facets.push_back(make_simplex({VertexLabel::integer(i), VertexLabel::integer((i + 2) % 7), VertexLabel::integer((i + 3) % 7)}));
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_torus_9() {
  std::vector<Simplex> facets;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      facets.push_back(make_simplex({U(i, j), U(i + 1, j), U(i + 1, j + 1)}));
      facets.push_back(make_simplex({U(i, j), U(i, j + 1), U(i + 1, j + 1)}));
    }
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_triangle() {
  return SimplicialComplex::from_facets({{VertexLabel::integer(0), VertexLabel::integer(1), VertexLabel::integer(2)}});
}

SimplicialComplex gen_sd_triangle() { return barycentric_subdivision(gen_triangle()); }

std::vector<std::string> generator_names() {
  return {"X", "X-oracle", "Xbar", "Y", "T", "P1", "P2", "P3", "torus:p,q", "boundary-simplex:n",
          "cross:n", "cycle:n", "rp2-6", "torus-7", "torus-9", "triangle", "sd-triangle"};
}

SimplicialComplex generate(std::string_view name) {
  const auto colon = name.find(':');
  const auto head = name.substr(0, colon);
  const auto params = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  auto no_params = [&] {
    if (colon != std::string_view::npos) {
      throw Error(ErrorKind::UnknownName, "generator '" + std::string(head) + "' takes no parameters");
    }
  };
  auto one_param = [&] {
    if (params.empty()) throw Error(ErrorKind::UnknownName, "generator '" + std::string(head) + "' needs ':n'");
    return parse_int_param(name, params);
  };
  if (head == "X") return no_params(), gen_X();
  if (head == "X-oracle") return no_params(), gen_X_oracle();
  if (head == "Xbar") return no_params(), gen_Xbar();
  if (head == "Y") return no_params(), gen_Y();
  if (head == "T") return no_params(), subcomplex_T_P(gen_X()).T;
  if (head == "P1") return no_params(), subcomplex_T_P(gen_X()).P1;
  if (head == "P2") return no_params(), subcomplex_T_P(gen_X()).P2;
  if (head == "P3") return no_params(), subcomplex_T_P(gen_X()).P3;
  if (head == "rp2-6") return no_params(), gen_rp2_6();
  if (head == "torus-7") return no_params(), gen_torus_7();
  if (head == "torus-9") return no_params(), gen_torus_9();
  if (head == "triangle") return no_params(), gen_triangle();
  if (head == "sd-triangle") return no_params(), gen_sd_triangle();
  if (head == "boundary-simplex") return gen_boundary_simplex(one_param());
  if (head == "cross") return gen_cross_polytope(one_param());
  if (head == "cycle") return gen_cycle(one_param());
  if (head == "torus") {
    const auto comma = params.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorKind::UnknownName, "torus needs ':p,q'");
    return gen_torus_36pq(parse_int_param(name, params.substr(0, comma)), parse_int_param(name, params.substr(comma + 1)));
  }
  throw Error(ErrorKind::UnknownName, "unknown generator '" + std::string(name) + "'");
}

}  // namespace cp2
