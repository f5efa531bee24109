#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/manifold.hpp"
#include "cp2tri/symmetry.hpp"

using namespace cp2;
using boost::multiprecision::cpp_rational;

namespace {

// Rank over Q by exact Gaussian elimination.
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<cpp_rational>> a(m.rows, std::vector<cpp_rational>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t p = rank;
    while (p < m.rows && a[p][c] == 0) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const cpp_rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> rational_betti(const SimplicialComplex& k) {
  const auto fv = k.f_vector();
  std::vector<std::size_t> rk(static_cast<std::size_t>(k.dim() + 2), 0);
  for (int d = 1; d <= k.dim(); ++d) rk[static_cast<std::size_t>(d)] = rational_rank(boundary_matrix(k, d));
  std::vector<std::int64_t> b;
  for (int d = 0; d <= k.dim(); ++d) {
    const auto i = static_cast<std::size_t>(d);
    b.push_back(static_cast<std::int64_t>(fv[i] - rk[i] - rk[i + 1]));
  }
  return b;
}

}  // namespace

TEST_SUITE("manifold") {
  TEST_CASE("closed pseudomanifolds") {
    CHECK(is_closed_pseudomanifold(gen_X()).ok);
    CHECK(is_closed_pseudomanifold(gen_rp2_6()).ok);
    const auto tri = is_closed_pseudomanifold(gen_triangle());
    CHECK_FALSE(tri.ok);
    CHECK_FALSE(tri.ridge.empty());
    const auto two = disjoint_union(gen_cycle(3), relabel_to_integers(gen_cycle(3), 10));
    CHECK_FALSE(is_closed_pseudomanifold(two).ok);
  }

  TEST_CASE("orientation") {
    CHECK(orientation(gen_X()).has_value());
    CHECK(orientation(gen_Xbar()).has_value());
    CHECK(orientation(gen_torus_7()).has_value());
    CHECK_FALSE(orientation(gen_rp2_6()).has_value());
    CHECK_THROWS_AS(orientation(gen_triangle()), Error);
  }

  TEST_CASE("Betti numbers agree with a rational rank computation") {
    for (const char* name : {"X", "Y", "rp2-6", "torus-7", "cross:4", "P1", "T"}) {
      CAPTURE(name);
      const auto k = generate(name);
      CHECK(homology(k).betti == rational_betti(k));
    }
  }

  TEST_CASE("homology profiles") {
    const auto x = homology(gen_X());
    CHECK(x.betti == std::vector<std::int64_t>{1, 0, 1, 0, 1});
    for (const auto& t : x.torsion) CHECK(t.empty());
    const auto rp = homology(gen_rp2_6());
    CHECK(rp.betti == std::vector<std::int64_t>{1, 0, 0});
    CHECK(rp.torsion[1] == std::vector<std::int64_t>{2});
    CHECK(homology(gen_torus_7()).betti == std::vector<std::int64_t>{1, 2, 1});
    CHECK(homology(gen_boundary_simplex(4)).betti == std::vector<std::int64_t>{1, 0, 0, 1});
  }

  TEST_CASE("Smith invariants") {
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 4;
    m(1, 0) = 6;
    m(1, 1) = 8;
    CHECK(smith_invariants(m) == std::vector<std::int64_t>{2, 4});
    IntMatrix z(3, 2);
    CHECK(smith_invariants(z).empty());
    IntMatrix d(3, 3);
    d(0, 0) = 6;
    d(1, 1) = 10;
    d(2, 2) = 15;
    CHECK(smith_invariants(d) == std::vector<std::int64_t>{1, 30, 30});
  }

  TEST_CASE("bistellar moves are involutions") {
    const auto l = link(gen_X(), {VertexLabel::perm(2)});
    FlipComplex fc(l);
    const auto before = fc.facets();
    // A 1 -> 4 subdivision followed by its inverse.
    const Face a = *before.begin();
    const auto b = fc.partner(a);
    REQUIRE(b.has_value());
    fc.apply(a, *b);
    CHECK(fc.facets().size() == before.size() + 3);
    REQUIRE(fc.legal(*b, a));
    fc.apply(*b, a);
    CHECK(fc.facets() == before);
    // A triangle-for-edge move and its inverse.
    bool found = false;
    for (const auto& e : fc.faces_of_size(3)) {
      const auto p = fc.partner(e);
      if (!p) continue;
      fc.apply(e, *p);
      REQUIRE(fc.legal(*p, e));
      fc.apply(*p, e);
      CHECK(fc.facets() == before);
      found = true;
      break;
    }
    CHECK(found);
  }

  TEST_CASE("bistellar search is reproducible for a fixed seed") {
    const auto l = link(gen_Xbar(), {VertexLabel::perm(2)});
    const auto a = bistellar_is_sphere(l, 100000, 7);
    const auto b = bistellar_is_sphere(l, 100000, 7);
    CHECK(a.status == SphereStatus::Certified);
    CHECK(a.trace == b.trace);
    CHECK(a.seed == 7);
  }

  TEST_CASE("sphere recognition") {
    CHECK(bistellar_is_sphere(gen_cross_polytope(4)).status == SphereStatus::Certified);
    CHECK(bistellar_is_sphere(gen_boundary_simplex(3)).status == SphereStatus::Certified);
    const auto t = bistellar_is_sphere(gen_torus_7());
    CHECK(t.status == SphereStatus::Inconclusive);
    CHECK_FALSE(t.reason.empty());
    CHECK(classify_2sphere(gen_cross_polytope(3)).status == SphereStatus::Certified);
    CHECK(classify_2sphere(gen_rp2_6()).status == SphereStatus::Inconclusive);
    CHECK_THROWS_AS(bistellar_is_sphere(gen_boundary_simplex(5)), Error);
  }

  TEST_CASE("combinatorial manifold check") {
    const auto x = gen_X();
    const auto g = induced_group(x);
    const auto r = is_combinatorial_manifold(x, 100000, 0, &g);
    CHECK(r.verdict == SphereStatus::Certified);
    CHECK(r.links.size() == 2);
    CHECK(is_combinatorial_manifold(gen_torus_7()).verdict == SphereStatus::Certified);
    CHECK(is_combinatorial_manifold(gen_rp2_6()).links.size() == 6);
    // Suspension of a torus: the apex links are tori.
    const auto st = suspension(gen_torus_7(), VertexLabel::integer(100), VertexLabel::integer(101));
    CHECK(is_combinatorial_manifold(st).verdict == SphereStatus::Inconclusive);
  }
}
