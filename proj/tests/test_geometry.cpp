#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/geometry.hpp"

using namespace cp2;

namespace {

const double kPi = std::numbers::pi;
const cplx w = std::polar(1.0, 2 * kPi / 3);

BarycentricPoint on_chart(Chart c, const std::array<double, 5>& p) {
  // Chart order -> sorted facet order.
  const auto& rep = chart_vertices(c);
  BarycentricPoint pt{make_simplex(rep), std::vector<double>(5, 0.0)};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto j = std::find(pt.facet.begin(), pt.facet.end(), rep[i]) - pt.facet.begin();
    pt.coords[static_cast<std::size_t>(j)] = p[i];
  }
  return pt;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("projective equality is scale invariant") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    for (int n = 0; n < 100; ++n) {
      ProjectivePoint z{cplx(g(rng), g(rng)), cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
      const cplx lambda(g(rng), g(rng));
      ProjectivePoint s = z;
      for (auto& c : s) c *= lambda;
      CHECK(projectively_equal(z, s));
      CHECK(projectively_equal(s, z));
      CHECK(projective_distance(z, s) < 1e-12);
    }
    CHECK_FALSE(projectively_equal({1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}));
    CHECK_THROWS_AS(projective_distance({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}), Error);
  }

  TEST_CASE("representation on generators") {
    const auto e = rep_R(GroupElement{});
    CHECK_FALSE(e.antilinear);
    CHECK(e.equivalent(ProjectiveOperator::identity()));
    const auto r12 = rep_R(GroupElement{{2, 1, 3, 4}, {1, 2, 3}});
    CHECK(r12.antilinear);
    ProjectiveOperator want{{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}, true};
    CHECK(r12.equivalent(want));
    const auto r34 = rep_R(GroupElement{{1, 2, 4, 3}, {1, 2, 3}});
    CHECK(r34.equivalent(ProjectiveOperator{{{{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}}, true}));
    const auto k = rep_R(GroupElement{{1, 2, 3, 4}, {2, 3, 1}});
    CHECK_FALSE(k.antilinear);
    CHECK(k.equivalent(ProjectiveOperator{{{{1, 0, 0}, {0, w, 0}, {0, 0, w * w}}}, false}));
    CHECK(rep_R(GroupElement{{1, 2, 3, 4}, {2, 1, 3}}).equivalent(ProjectiveOperator::conjugation()));
  }

  TEST_CASE("representation is a faithful homomorphism") {
    const auto& g = s4xs3_elements();
    std::mt19937_64 rng(0);
    for (int n = 0; n < 200; ++n) {
      const auto& a = g[rng() % g.size()];
      const auto& b = g[rng() % g.size()];
      CHECK((rep_R(a) * rep_R(b)).equivalent(rep_R(a * b)));
    }
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) CHECK_FALSE(rep_R(g[i]).equivalent(rep_R(g[j])));
    for (const auto& h : g) CHECK(rep_R(h).antilinear == (h.theta_odd() != h.kappa_odd()));
  }

  TEST_CASE("vertex points") {
    CHECK(projectively_equal(vertex_point(VertexLabel::perm(2)), {0.0, 0.0, 1.0}));
    CHECK(projectively_equal(vertex_point(VertexLabel::pair(1, 2)), {-1.0, w * w, w}));
    CHECK(projectively_equal(vertex_point(VertexLabel::mid(1, 4, 3)), {0.0, 1.0, 1.0}));
    CHECK(projectively_equal(vertex_point(VertexLabel::mid(1, 2, 1)), {1.0, -w, 0.0}));
    CHECK_THROWS_AS(vertex_point(VertexLabel::integer(3)), Error);
  }

  TEST_CASE("equivariance of vertex points") {
    CHECK(check_equivariance() < 1e-9);
    const auto r = rep_R(GroupElement{{2, 1, 3, 4}, {1, 2, 3}});
    const auto img = r(vertex_point(VertexLabel::pair(1, 1)));
    CHECK(projectively_equal(img, {1.0, -w, w * w}));
    CHECK(projectively_equal(img, vertex_point(VertexLabel::pair(2, 1))));
  }

  TEST_CASE("chart formulas at fixtures") {
    const auto c1 = formula_sigma1({0.2, 0.2, 0.2, 0.2, 0.2});
    CHECK(std::abs(c1[0] - std::polar(0.2, kPi / 3)) < 1e-15);
    CHECK(std::abs(c1[1] - cplx(0.3)) < 1e-15);
    CHECK(std::abs(c1[2] - cplx(0.5)) < 1e-15);
    const auto c2 = formula_delta2({0.2, 0.2, 0.2, 0.2, 0.2});
    CHECK(std::abs(c2[0]) < 1e-15);
    CHECK(std::abs(c2[1] - std::polar(0.4, kPi / 12)) < 1e-15);
    CHECK(std::abs(c2[2] - std::polar(0.6, -kPi / 12)) < 1e-15);
  }

  TEST_CASE("f on sigma1 and Delta1") {
    const auto& r = realization();
    CHECK(projectively_equal(r.f(on_chart(Chart::Sigma1, {1, 0, 0, 0, 0})), {0.0, 0.0, 1.0}));
    CHECK(projectively_equal(r.f(on_chart(Chart::Sigma1, {0, 1, 0, 0, 0})), {0.0, 0.5, 0.5}));
    CHECK(projectively_equal(r.f_x(on_chart(Chart::Delta1, {0, 0, 1, 0, 0})), {1.0, -w, w * w}));
    const auto centroid = r.f(on_chart(Chart::Sigma1, {0.2, 0.2, 0.2, 0.2, 0.2}));
    CHECK(projectively_equal(centroid, formula_sigma1({0.2, 0.2, 0.2, 0.2, 0.2})));
    const auto d2 = r.f_x(on_chart(Chart::Delta2, {0.2, 0.2, 0.2, 0.2, 0.2}));
    CHECK(projectively_equal(d2, {0.0, std::polar(0.4, kPi / 12), std::polar(0.6, -kPi / 12)}));
  }

  TEST_CASE("f rejects bad input") {
    const auto& r = realization();
    auto pt = on_chart(Chart::Sigma1, {0.2, 0.2, 0.2, 0.2, 0.2});
    pt.coords[0] = 0.5;
    CHECK_THROWS_AS(r.f(pt), Error);
    CHECK_THROWS_AS(r.f(on_chart(Chart::Delta1, {0.2, 0.2, 0.2, 0.2, 0.2})), Error);
    CHECK_THROWS_AS(r.f_x(on_chart(Chart::Sigma1, {0.2, 0.2, 0.2, 0.2, 0.2})), Error);
  }

  TEST_CASE("transport coverage") {
    const auto& r = realization();
    int sigma1 = 0, sigma2 = 0, carrier = 0;
    for (const auto& f : r.xbar().facets()) {
      const auto t = r.xbar_transport(r.xbar().labels(f));
      if (!t) ++carrier;
      else (t->chart == Chart::Sigma1 ? sigma1 : sigma2)++;
    }
    CHECK(sigma1 == 144);
    CHECK(sigma2 == 72);
    CHECK(carrier == 72);
    const auto d1 = make_simplex(chart_vertices(Chart::Delta1));
    CHECK(r.x_transport(d1).h == GroupElement{});
    CHECK(r.all_transports(d1, false).size() == 2);
  }

  TEST_CASE("continuity toward the singular loci") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (Chart c : {Chart::Sigma1, Chart::Sigma2, Chart::Delta1, Chart::Delta2}) {
      for (int n = 0; n < 20; ++n) {
        std::array<double, 4> rest{};
        double s = 0;
        for (auto& x : rest) s += (x = u(rng));
        for (double eps : {1e-4, 1e-7, 1e-10}) {
          std::array<double, 5> p{1 - eps};
          for (std::size_t i = 0; i < 4; ++i) p[i + 1] = eps * rest[i] / s;
          const ProjectivePoint z = c == Chart::Sigma1   ? formula_sigma1(p)
                                    : c == Chart::Sigma2 ? formula_sigma2(p)
                                    : c == Chart::Delta1 ? formula_delta1(p)
                                                         : formula_delta2(p);
          CHECK(projective_distance(z, {0.0, 0.0, 1.0}) < 10 * eps);
        }
      }
    }
  }

  TEST_CASE("gluing sweeps") {
    CHECK(check_vertices().max_deviation < 1e-12);
    CHECK(check_midpoints().max_deviation < 1e-12);
    CHECK(check_face_consistency(0).max_deviation < 1e-9);
    CHECK(check_stabilizer(0).max_deviation < 1e-9);
    CHECK(check_equivariance_composite(0).max_deviation < 1e-9);
    CHECK(check_refinement(0).max_deviation < 1e-9);
  }

  TEST_CASE("moment maps") {
    const auto m = moment_mu({1.0, 0.0, 0.0});
    CHECK(m == MomentValue{1.0, 0.0, 0.0});
    const auto t = moment_mu_tilde({1.0, 1.0, 1.0});
    for (double x : t) CHECK(x == doctest::Approx(1.0 / 3));
    CHECK(moment_mu_tilde({cplx(0, 2), -2.0, 2.0})[0] == doctest::Approx(1.0 / 3));
    CHECK_THROWS_AS(moment_mu({0.0, 0.0, 0.0}), Error);
    CHECK(g_map({0.0, 4.0, 1.0})[0] == cplx(0.0));
    CHECK(g_map({0.0, 4.0, 1.0})[1] == cplx(2.0));
    CHECK(check_mu_tilde_factorization(0).max_deviation < 1e-12);
  }

  TEST_CASE("simplicial map m") {
    CHECK(m_vertex(VertexLabel::mid(1, 2, 2)) == MomentValue{0.5, 0.5, 0.0});
    CHECK(m_vertex(VertexLabel::mid(3, 4, 1)) == MomentValue{0.5, 0.5, 0.0});
    CHECK(m_vertex(VertexLabel::perm(4)) == MomentValue{1.0, 0.0, 0.0});
    for (int a = 1; a <= 4; ++a) CHECK(m_vertex(VertexLabel::pair(a, 2)) == MomentValue{1.0 / 3, 1.0 / 3, 1.0 / 3});
    const auto s2 = make_simplex(chart_vertices(Chart::Sigma2));
    BarycentricPoint c{s2, std::vector<double>(5, 0.2)};
    MomentValue mean{};
    for (const auto& v : s2)
      for (std::size_t j = 0; j < 3; ++j) mean[j] += m_vertex(v)[j] / 5;
    const auto got = m_map(c);
    for (std::size_t j = 0; j < 3; ++j) CHECK(got[j] == doctest::Approx(mean[j]));
    const auto& xb = realization().xbar();
    CHECK(is_simplicial_map(xb, gen_sd_triangle(), m_vertex_map()).ok);
    const auto pre = barycenter_preimage();
    CHECK(pre.size() == 12);
    CHECK(full_subcomplex(xb, pre) == subcomplex_T_P(gen_X()).T);
  }

  TEST_CASE("moment triangulation") {
    const auto s = check_moment_triangulation(0, 20);
    CHECK(s.samples == 288 * 26);
    CHECK(s.max_deviation < 1e-9);
  }
}
