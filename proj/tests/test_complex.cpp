#include <doctest.h>

#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/symmetry.hpp"

using namespace cp2;

namespace {

VertexLabel I(int n) { return VertexLabel::integer(n); }

std::vector<std::size_t> join_fvector(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  // f-polynomials with the empty face prepended multiply under join.
  std::vector<std::size_t> fa = {1}, fb = {1};
  fa.insert(fa.end(), a.begin(), a.end());
  fb.insert(fb.end(), b.begin(), b.end());
  std::vector<std::size_t> c(fa.size() + fb.size() - 1, 0);
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j) c[i + j] += fa[i] * fb[j];
  return {c.begin() + 1, c.end()};
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("facets are reduced to maximal faces") {
    const auto k = SimplicialComplex::from_facets({{I(0), I(1), I(2)}, {I(0), I(1)}, {I(3)}});
    CHECK(k.facets().size() == 2);
    CHECK_FALSE(k.is_pure());
    CHECK(k.f_vector() == std::vector<std::size_t>{4, 3, 1});
    CHECK(k.has_simplex({I(1), I(2)}));
    CHECK_FALSE(k.has_simplex({I(2), I(3)}));
  }

  TEST_CASE("f-vector and Euler characteristic of X") {
    const auto x = gen_X();
    CHECK(x.f_vector() == std::vector<std::size_t>{15, 90, 240, 270, 108});
    CHECK(x.euler_characteristic() == 3);
    CHECK(x.is_pure());
    CHECK(x.dim() == 4);
  }

  TEST_CASE("boundary of boundary vanishes") {
    for (const char* name : {"X", "Xbar", "cross:4", "rp2-6"}) {
      CAPTURE(name);
      const auto k = generate(name);
      for (int d = 2; d <= k.dim(); ++d) {
        const auto p = multiply(boundary_matrix(k, d - 1), boundary_matrix(k, d));
        CHECK(std::all_of(p.data.begin(), p.data.end(), [](int v) { return v == 0; }));
      }
    }
    CHECK_THROWS_AS(boundary_matrix(gen_X(), 5), Error);
  }

  TEST_CASE("join multiplies f-polynomials") {
    const auto a = gen_cycle(5);
    const auto b = relabel_to_integers(gen_boundary_simplex(2), 10);
    const auto j = join(a, b);
    CHECK(j.f_vector() == join_fvector(a.f_vector(), b.f_vector()));
    CHECK_THROWS_AS(join(a, a), Error);
  }

  TEST_CASE("cone and suspension") {
    const auto c = gen_cycle(4);
    CHECK(cone(c, I(9)).f_vector() == std::vector<std::size_t>{5, 8, 4});
    const auto s = suspension(c, I(8), I(9));
    CHECK(are_isomorphic(s, gen_cross_polytope(3)).has_value());
  }

  TEST_CASE("barycentric subdivision preserves Euler characteristic") {
    for (const char* name : {"rp2-6", "torus-7", "cross:3", "triangle"}) {
      CAPTURE(name);
      const auto k = generate(name);
      CHECK(barycentric_subdivision(k).euler_characteristic() == k.euler_characteristic());
    }
    CHECK(gen_sd_triangle().f_vector() == std::vector<std::size_t>{7, 12, 6});
  }

  TEST_CASE("links and stars") {
    const auto x = gen_X();
    const auto l = link(x, {VertexLabel::perm(2)});
    CHECK(l.f_vector() == std::vector<std::size_t>{12, 48, 72, 36});
    CHECK(star(x, {VertexLabel::perm(2)}).facets().size() == 36);
    CHECK_THROWS_AS(link(x, {VertexLabel::perm(2), VertexLabel::perm(3)}), Error);
  }

  TEST_CASE("full subcomplex and boundary") {
    const auto t = gen_triangle();
    CHECK(boundary_complex(t) == gen_cycle(3));
    CHECK(boundary_complex(gen_cross_polytope(3)).facets().empty());
    const auto x = gen_X();
    CHECK(full_subcomplex(x, {VertexLabel::perm(2), VertexLabel::perm(3)}).f_vector() == std::vector<std::size_t>{2});
  }

  TEST_CASE("dual graph") {
    const auto g = dual_graph(gen_X());
    CHECK(g.connected());
    CHECK(g.num_edges() == 270);
    CHECK_THROWS_AS(dual_graph(SimplicialComplex::from_facets({{I(0), I(1), I(2)}, {I(3), I(4)}})), Error);
  }

  TEST_CASE("simplicial map check") {
    const auto c6 = gen_cycle(6);
    const auto c3 = gen_cycle(3);
    std::map<VertexLabel, VertexLabel> wrap;
    for (int i = 0; i < 6; ++i) wrap[I(i)] = I(i % 3);
    CHECK(is_simplicial_map(c6, c3, wrap).ok);
    std::map<VertexLabel, VertexLabel> bad = wrap;
    bad[I(5)] = I(5);
    CHECK_FALSE(is_simplicial_map(c6, c3, bad).ok);
  }

  TEST_CASE("relabel") {
    const auto c = gen_cycle(4);
    const auto r = relabel(c, {{I(0), I(10)}});
    CHECK(r.find_vertex(I(10)).has_value());
    CHECK_FALSE(r.find_vertex(I(0)).has_value());
    CHECK_THROWS_AS(relabel(c, {{I(0), I(1)}}), Error);
  }
}
