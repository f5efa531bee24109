#include <doctest.h>

#include "cp2tri/colouring.hpp"
#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"

using namespace cp2;

TEST_SUITE("colouring") {
  TEST_CASE("connection sums vertex values over each facet") {
    const auto t = gen_boundary_simplex(2);
    std::map<VertexLabel, double> psi = {{VertexLabel::integer(0), 1.0}, {VertexLabel::integer(1), 2.0}, {VertexLabel::integer(2), 4.0}};
    const auto q = connection_apply(t, psi);
    CHECK(q.size() == 3);
    double total = 0;
    for (double v : q) total += v;
    CHECK(total == doctest::Approx(14.0));
    psi.erase(VertexLabel::integer(2));
    CHECK_THROWS_AS(connection_apply(t, psi), Error);
  }

  TEST_CASE("class table of the small corpus") {
    struct Row {
      const char* name;
      bool even, bw, colour;
    };
    for (const auto& r : {Row{"X", true, true, true}, Row{"torus-7", true, true, false}, Row{"torus-9", true, true, true},
                          Row{"rp2-6", false, false, false}, Row{"cross:4", true, true, true}, Row{"boundary-simplex:3", false, false, false}}) {
      CAPTURE(r.name);
      const auto c = class_report(generate(r.name));
      CHECK(c.even == r.even);
      CHECK(c.bw == r.bw);
      CHECK(c.colour == r.colour);
    }
  }

  TEST_CASE("odd face is reported") {
    const auto e = is_even(gen_rp2_6());
    CHECK_FALSE(e.ok);
    CHECK(e.face.size() == 1);
    CHECK(e.degree % 2 == 1);
  }

  TEST_CASE("chess colouring of X") {
    const auto x = gen_X();
    const auto c = chess_colouring(x);
    REQUIRE(c.has_value());
    CHECK(std::count(c->begin(), c->end(), 0) == 54);
    CHECK((*c)[0] == 0);
    const auto g = dual_graph(x);
    for (std::size_t u = 0; u < g.adjacency.size(); ++u)
      for (int v : g.adjacency[u]) CHECK((*c)[u] != (*c)[static_cast<std::size_t>(v)]);
  }

  TEST_CASE("regular colouring of X separates nu and the four rows") {
    const auto x = gen_X();
    const auto c = regular_colouring(x);
    REQUIRE(c.has_value());
    CHECK(is_regular_colouring(x, *c));
    for (std::size_t v = 0; v < x.num_vertices(); ++v) {
      const auto& l = x.vertices()[v];
      for (std::size_t w = 0; w < x.num_vertices(); ++w) {
        const auto& m = x.vertices()[w];
        const bool same = (l.kind() == LabelKind::Perm && m.kind() == LabelKind::Perm) ||
                          (l.kind() == LabelKind::Pair && m.kind() == LabelKind::Pair && l.a() == m.a());
        CHECK(((*c)[v] == (*c)[w]) == same);
      }
    }
    auto bad = *c;
    bad[0] = bad[3];
    CHECK_FALSE(is_regular_colouring(x, bad));
  }

  TEST_CASE("projectivity groups") {
    const auto x = projectivity_group(gen_X());
    CHECK(x.group_order == 1);
    CHECK(x.rho1_trivial);
    CHECK(x.rho2_trivial);
    CHECK(x.relation_holds);
    CHECK(x.generators.size() == 270 - 108 + 1);
    const auto t7 = projectivity_group(gen_torus_7());
    CHECK(t7.group_order == 3);
    CHECK(t7.relation_holds);
    const auto rp = projectivity_group(gen_rp2_6());
    CHECK_FALSE(rp.rho3_defined);
    CHECK_FALSE(rp.rho2_trivial);
    CHECK(projectivity_group(gen_torus_9()).group_order == 1);
    CHECK_THROWS_AS(projectivity_group(gen_X(), 500), Error);
  }

  TEST_CASE("suspension colour class") {
    const auto cp = gen_cross_polytope(4);
    const auto c = regular_colouring(cp);
    REQUIRE(c.has_value());
    const auto s = suspension_colour_class(cp, *c);
    REQUIRE(s.has_value());
    CHECK(s->apex1 != s->apex2);
    const auto x = gen_X();
    CHECK_FALSE(suspension_colour_class(x, *regular_colouring(x)).has_value());
    CHECK_THROWS_AS(suspension_colour_class(x, std::vector<int>(15, 0)), Error);
  }
}
