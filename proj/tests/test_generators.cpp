#include <doctest.h>

#include <set>

#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/manifold.hpp"
#include "cp2tri/symmetry.hpp"

using namespace cp2;

namespace {

// Independent oracle: scan all 5-subsets of the 15 vertices and keep those
// with one involution nu and one (a, b_a) for each a, b_{nu(a)} != b_a.
std::set<Simplex> brute_force_X() {
  std::vector<VertexLabel> v = {VertexLabel::perm(2), VertexLabel::perm(3), VertexLabel::perm(4)};
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b) v.push_back(VertexLabel::pair(a, b));
  std::set<Simplex> out;
  const int n = static_cast<int>(v.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 5) continue;
    std::vector<VertexLabel> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(v[static_cast<std::size_t>(i)]);
    int perms = 0;
    std::array<int, 5> b{};
    std::array<int, 4> nu{};
    bool ok = true;
    for (const auto& l : s) {
      if (l.kind() == LabelKind::Perm) {
        ++perms;
        nu = l.perm_images();
      } else if (b[static_cast<std::size_t>(l.a())] != 0) {
        ok = false;
      } else {
        b[static_cast<std::size_t>(l.a())] = l.b();
      }
    }
    if (!ok || perms != 1) continue;
    for (int a = 1; a <= 4; ++a) ok = ok && b[static_cast<std::size_t>(nu[static_cast<std::size_t>(a - 1)])] != b[static_cast<std::size_t>(a)];
    if (ok) out.insert(make_simplex(s));
  }
  return out;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("X against a brute-force scan") {
    const auto x = gen_X();
    const auto want = brute_force_X();
    CHECK(want.size() == 108);
    std::set<Simplex> got;
    for (const auto& f : x.facets()) got.insert(x.labels(f));
    CHECK(got == want);
    CHECK(gen_X_oracle() == x);
  }

  TEST_CASE("facet types of X") {
    const auto x = gen_X();
    int t2 = 0, t3 = 0;
    for (const auto& f : x.facets()) (x_facet_type(x.labels(f)) == 3 ? t2 : t3)++;
    CHECK(t2 == 72);
    CHECK(t3 == 36);
  }

  TEST_CASE("Xbar") {
    const auto xb = gen_Xbar();
    CHECK(xb.f_vector() == std::vector<std::size_t>{33, 234, 636, 720, 288});
    CHECK(xb.euler_characteristic() == 3);
    CHECK(homology(xb) == homology(gen_X()));
    const auto f = xb.labels(xb.facets().front());
    CHECK(gen_X().has_simplex(carrier_facet(f)));
  }

  TEST_CASE("Y families") {
    std::set<Simplex> all;
    for (int i = 1; i <= 6; ++i) {
      const auto fam = gen_Y_family(i);
      CHECK(fam.size() == 18);
      all.insert(fam.begin(), fam.end());
    }
    CHECK(all.size() == 108);
    CHECK(gen_Y().f_vector() == gen_X().f_vector());
    CHECK_THROWS_AS(gen_Y_family(7), Error);
  }

  TEST_CASE("regular tori {3,6}_{p,q}") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 0}, {3, 1}, {4, 2}}) {
      CAPTURE(p);
      CAPTURE(q);
      const auto t = gen_torus_36pq(p, q);
      const auto n = static_cast<std::size_t>(p * p + p * q + q * q);
      CHECK(t.num_vertices() == n);
      CHECK(t.facets().size() == 2 * n);
      CHECK(t.euler_characteristic() == 0);
      // Every vertex has degree 6.
      for (const auto& v : t.vertices()) CHECK(link(t, {v}).num_vertices() == 6);
    }
    CHECK(are_isomorphic(gen_torus_36pq(2, 1), gen_torus_7()).has_value());
    CHECK(are_isomorphic(gen_torus_36pq(3, 0), gen_torus_9()).has_value());
    CHECK_THROWS_AS(gen_torus_36pq(1, 1), Error);
    CHECK_THROWS_AS(gen_torus_36pq(-1, 4), Error);
  }

  TEST_CASE("literal sublattice index is three times p^2+pq+q^2") {
    for (int p = 0; p <= 5; ++p)
      for (int q = 0; q <= 5; ++q) CHECK(literal_sublattice_index(p, q) == 3 * (p * p + p * q + q * q));
  }

  TEST_CASE("torus layer inside X") {
    const auto l = subcomplex_T_P(gen_X());
    CHECK(l.T.f_vector() == std::vector<std::size_t>{12, 36, 24});
    CHECK(are_isomorphic(l.T, gen_torus_36pq(2, 2)).has_value());
    for (const auto* p : {&l.P1, &l.P2, &l.P3}) {
      CHECK(p->dim() == 3);
      CHECK(boundary_complex(*p) == l.T);
      CHECK(homology(*p).betti == std::vector<std::int64_t>{1, 1, 0, 0});
    }
  }

  TEST_CASE("small complexes") {
    CHECK(gen_boundary_simplex(4).f_vector() == std::vector<std::size_t>{5, 10, 10, 5});
    CHECK(gen_cross_polytope(4).f_vector() == std::vector<std::size_t>{8, 24, 32, 16});
    CHECK(gen_rp2_6().f_vector() == std::vector<std::size_t>{6, 15, 10});
    CHECK(gen_torus_7().f_vector() == std::vector<std::size_t>{7, 21, 14});
    CHECK(gen_torus_9().f_vector() == std::vector<std::size_t>{9, 27, 18});
  }

  TEST_CASE("generate by name") {
    for (const auto& n : generator_names()) {
      if (n.find(':') != std::string::npos) continue;
      CAPTURE(n);
      CHECK_NOTHROW(generate(n));
    }
    CHECK(generate("cycle:5").facets().size() == 5);
    CHECK(generate("torus:2,2").num_vertices() == 12);
    CHECK_THROWS_AS(generate("nonsense"), Error);
    CHECK_THROWS_AS(generate("cross:x"), Error);
    CHECK_THROWS_AS(generate("X:3"), Error);
  }
}
