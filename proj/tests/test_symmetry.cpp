#include <doctest.h>

#include <set>

#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/symmetry.hpp"

using namespace cp2;

namespace {

std::multiset<std::size_t> sizes(const SimplicialComplex& k, const std::vector<VertexMap>& g, int dim) {
  std::multiset<std::size_t> out;
  for (const auto& o : orbits(k, g, dim)) out.insert(o.members.size());
  return out;
}

}  // namespace

TEST_SUITE("symmetry") {
  TEST_CASE("group elements") {
    const auto& all = s4xs3_elements();
    CHECK(all.size() == 144);
    CHECK(std::set<GroupElement>(all.begin(), all.end()).size() == 144);
    CHECK(std::is_sorted(all.begin(), all.end()));
    const GroupElement g{{2, 3, 1, 4}, {3, 1, 2}};
    const GroupElement h{{1, 2, 4, 3}, {2, 1, 3}};
    CHECK((g * g.inverse()) == GroupElement{});
    CHECK((g * h).theta == std::array<int, 4>{2, 3, 4, 1});
    CHECK(g.theta_odd() == false);
    CHECK(h.theta_odd() == true);
  }

  TEST_CASE("action on labels") {
    const GroupElement t12{{2, 1, 3, 4}, {1, 2, 3}};
    CHECK(act(t12, VertexLabel::perm(3)) == VertexLabel::perm(4));  // (12)(13)(24)(12) = (14)(23)
    CHECK(act(t12, VertexLabel::perm(2)) == VertexLabel::perm(2));
    CHECK(act(t12, VertexLabel::pair(1, 3)) == VertexLabel::pair(2, 3));
    const GroupElement k{{1, 2, 3, 4}, {2, 3, 1}};
    CHECK(act(k, VertexLabel::mid(1, 4, 3)) == VertexLabel::mid(1, 4, 1));
    CHECK_THROWS_AS(act(k, VertexLabel::integer(0)), Error);
  }

  TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group(gen_X()).size() == 144);
    CHECK(automorphism_group(gen_boundary_simplex(4)).size() == 120);
    CHECK(automorphism_group(gen_cross_polytope(4)).size() == 384);
    CHECK(automorphism_group(gen_cycle(6)).size() == 12);
    CHECK(automorphism_group(gen_torus_7()).size() == 42);
    CHECK(automorphism_group(gen_rp2_6()).size() == 60);
    for (const auto& m : automorphism_group(gen_torus_9())) CHECK(is_automorphism(gen_torus_9(), m));
  }

  TEST_CASE("S4 x S3 acts faithfully and exhausts Aut(X)") {
    const auto c = verify_S4xS3_action(gen_X());
    CHECK(c.ok());
    CHECK(c.aut_order == 144);
  }

  TEST_CASE("orbits on X") {
    const auto x = gen_X();
    const auto g = induced_group(x);
    CHECK(sizes(x, g, 0) == std::multiset<std::size_t>{3, 12});
    CHECK(sizes(x, g, 1) == std::multiset<std::size_t>{18, 36, 36});
    CHECK(sizes(x, g, 2) == std::multiset<std::size_t>{24, 36, 36, 72, 72});
    CHECK(sizes(x, g, 4) == std::multiset<std::size_t>{36, 72});
    for (const auto& o : orbits(x, g, 1)) CHECK(o.representative == o.members.front());
  }

  TEST_CASE("facet orbits on Xbar") {
    const auto xb = gen_Xbar();
    CHECK(automorphism_group(xb).size() == 144);
    CHECK(sizes(xb, induced_group(xb), 4) == std::multiset<std::size_t>{72, 72, 144});
  }

  TEST_CASE("orbits reject non-automorphisms") {
    const auto x = gen_X();
    VertexMap m(x.num_vertices());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
    std::swap(m[0], m[5]);
    CHECK_THROWS_AS(orbits(x, {m}, 0), Error);
  }

  TEST_CASE("isomorphism search") {
    CHECK(are_isomorphic(gen_X(), gen_Y()).has_value());
    CHECK_FALSE(are_isomorphic(gen_X(), gen_Xbar()).has_value());
    CHECK_FALSE(are_isomorphic(gen_torus_7(), gen_rp2_6()).has_value());
    const auto m = are_isomorphic(gen_torus_9(), gen_torus_36pq(3, 0));
    REQUIRE(m.has_value());
  }

  TEST_CASE("explicit map from X to Y") {
    const auto m = x_to_y_map();
    CHECK(m.size() == 15);
    CHECK(relabel(gen_X(), m) == gen_Y());
  }
}
