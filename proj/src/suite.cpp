#include "cp2tri/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cp2tri/colouring.hpp"
#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/geometry.hpp"
#include "cp2tri/manifold.hpp"
#include "cp2tri/symmetry.hpp"

namespace cp2 {

namespace {

struct Acc {
  ClaimRow& row;
  void check(bool ok, const std::string& what) {
    row.pass = row.pass && ok;
    row.checks.push_back(ok ? what : "FAIL " + what);
  }
};

template <class T>
std::string join_values(const std::vector<T>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

std::string sci(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

std::vector<std::size_t> orbit_sizes(const SimplicialComplex& k, const std::vector<VertexMap>& g, int dim) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits(k, g, dim)) out.push_back(o.members.size());
  return out;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool iso(const SimplicialComplex& a, const SimplicialComplex& b) { return are_isomorphic(a, b).has_value(); }

SimplicialComplex two_hexagons() { return join(gen_cycle(6), relabel_to_integers(gen_cycle(6), 6)); }

SimplicialComplex hexagon_suspension() {
  return suspension(gen_cycle(6), VertexLabel::integer(6), VertexLabel::integer(7));
}

void claim1(Acc& a, const SuiteOptions&) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fv = gen_X().f_vector();
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  a.check(fv == std::vector<std::size_t>{15, 90, 240, 270, 108}, "f(X)=" + join_values(fv));
  a.check(dt < 1.0, "built and counted in under 1s");
}

void claim2(Acc& a, const SuiteOptions&) {
  const auto x = gen_X();
  const auto o = gen_X_oracle();
  a.check(x == o, "gen_X facets == forbidden-set rebuild (" + std::to_string(x.facets().size()) + " vs " +
                      std::to_string(o.facets().size()) + ")");
}

void claim3(Acc& a, const SuiteOptions&) {
  const auto xb = gen_Xbar();
  const auto x = gen_X();
  const auto fv = xb.f_vector();
  a.check(fv.front() == 33 && fv.back() == 288, "f0,f4 = " + std::to_string(fv.front()) + "," + std::to_string(fv.back()));
  a.check(fv == std::vector<std::size_t>{33, 234, 636, 720, 288}, "f(Xbar)=" + join_values(fv));
  std::map<Simplex, std::size_t> pieces;
  bool carrier_ok = true;
  for (const auto& f : xb.facets()) {
    try {
      ++pieces[carrier_facet(xb.labels(f))];
    } catch (const Error&) {
      carrier_ok = false;
    }
  }
  a.check(carrier_ok && pieces.size() == x.facets().size(), "every Xbar facet has a carrier facet in X, all 108 used");
  std::size_t two = 0, four = 0;
  bool type_ok = true;
  for (const auto& [c, n] : pieces) {
    two += n == 2;
    four += n == 4;
    type_ok = type_ok && ((n == 2 && x_facet_type(c) == 3) || (n == 4 && x_facet_type(c) == 2));
  }
  a.check(two == 72 && four == 36 && type_ok, "split counts 72x2 + 36x4 (got " + std::to_string(two) + "x2 + " +
                                                  std::to_string(four) + "x4)");
}

void claim4(Acc& a, const SuiteOptions&) {
  const auto x = gen_X();
  const auto c = verify_S4xS3_action(x);
  a.check(c.aut_order == 144, "|Aut(X)|=" + std::to_string(c.aut_order));
  a.check(c.all_automorphisms, "all 144 elements act as automorphisms");
  a.check(c.faithful, "action is faithful");
  a.check(c.exhausts, "every automorphism comes from S4xS3");
  const auto n = automorphism_group(gen_boundary_simplex(4)).size();
  a.check(n == 120, "|Aut(boundary 4-simplex)|=" + std::to_string(n));
}

void claim5(Acc& a, const SuiteOptions&) {
  const auto x = gen_X();
  const auto g = induced_group(x);
  const auto v = orbit_sizes(x, g, 0);
  const auto e = orbit_sizes(x, g, 1);
  const auto t = orbit_sizes(x, g, 2);
  a.check(sorted(v) == sorted({3, 12}), "vertex orbits " + join_values(v));
  a.check(sorted(e) == sorted({18, 36, 36}), "edge orbits " + join_values(e));
  a.check(sorted(t) == sorted({36, 36, 72, 72, 24}), "2-simplex orbits " + join_values(t));
  const auto xb = gen_Xbar();
  const auto fb = orbit_sizes(xb, induced_group(xb), 4);
  a.check(sorted(fb) == sorted({144, 144}), "Xbar facet orbits " + join_values(fb) + ", expected (144,144)");
}

void claim6(Acc& a, const SuiteOptions&) {
  const auto x = gen_X();
  const auto g = induced_group(x);
  a.check(iso(link(x, {VertexLabel::perm(2)}), two_hexagons()), "link((12)(34)) ~ join of two hexagons");

  // Edge links: octahedron, suspended hexagon, and one more 2-sphere.
  const auto octa = gen_cross_polytope(3);
  const auto susp = hexagon_suspension();
  int n_octa = 0, n_susp = 0, n_other = 0;
  std::vector<std::string> kinds;
  for (const auto& o : orbits(x, g, 1)) {
    const auto l = link(x, x.labels(o.representative));
    const bool sphere = classify_2sphere(l).status == SphereStatus::Certified;
    if (iso(l, octa)) {
      ++n_octa;
      kinds.push_back("octahedron");
    } else if (iso(l, susp)) {
      ++n_susp;
      kinds.push_back("suspended hexagon");
    } else if (sphere && l.euler_characteristic() == 2 && dual_graph(l).connected()) {
      ++n_other;
      kinds.push_back("2-sphere f0=" + std::to_string(l.num_vertices()));
    } else {
      kinds.push_back("not a 2-sphere");
    }
  }
  std::string ks;
  for (const auto& k : kinds) ks += (ks.empty() ? "" : "; ") + k;
  a.check(n_octa == 1 && n_susp == 1 && n_other == 1, "edge-orbit links: " + ks);

  const auto orb = orbits(x, g, 2);
  std::vector<std::size_t> cyc;
  for (const auto& o : orb) {
    const auto l = link(x, x.labels(o.representative));
    cyc.push_back(iso(l, gen_cycle(6)) ? 6 : iso(l, gen_cycle(4)) ? 4 : 0);
  }
  a.check(cyc == std::vector<std::size_t>{6, 4, 4, 4, 6},
          "2-simplex orbit links (cycle lengths, orbits sized " + join_values(orbit_sizes(x, g, 2)) + ") " + join_values(cyc));
  bool deg_ok = true;
  for (const auto& f : x.faces(2)) {
    const auto d = x.facet_degree(f);
    deg_ok = deg_ok && (d == 4 || d == 6);
  }
  a.check(deg_ok, "every 2-simplex lies in 4 or 6 facets");
}

void claim7(Acc& a, const SuiteOptions& opt) {
  auto run = [&](const char* name, const SimplicialComplex& k, const std::vector<VertexMap>& group) {
    const auto r = is_combinatorial_manifold(k, opt.budget, opt.seed, &group);
    std::uint64_t moves = 0;
    for (const auto& [v, c] : r.links) moves += c.moves;
    a.check(r.verdict == SphereStatus::Certified,
            std::string(name) + ": " + to_string(r.verdict) + ", " + std::to_string(r.links.size()) + " links checked, " +
                std::to_string(moves) + " moves, seed " + std::to_string(opt.seed) + ", budget " + std::to_string(opt.budget));
    return r.links.size();
  };
  const auto x = gen_X();
  const auto n = run("X", x, induced_group(x));
  a.check(n == 2, "X orbit-reduced to " + std::to_string(n) + " links");
  const auto y = gen_Y();
  run("Y", y, automorphism_group(y));
  const auto xb = gen_Xbar();
  run("Xbar", xb, induced_group(xb));
}

void claim8(Acc& a, const SuiteOptions&) {
  const auto x = gen_X();
  const auto h = homology(x);
  const bool no_torsion = std::all_of(h.torsion.begin(), h.torsion.end(), [](const auto& t) { return t.empty(); });
  a.check(h.betti == std::vector<std::int64_t>{1, 0, 1, 0, 1} && no_torsion, "H(X) betti " + join_values(h.betti) +
                                                                                 (no_torsion ? ", no torsion" : ", torsion"));
  a.check(x.euler_characteristic() == 3, "chi(X)=" + std::to_string(x.euler_characteristic()));
  a.check(orientation(x).has_value(), "X orientable");
  const auto s = homology(gen_boundary_simplex(4));
  a.check(s.betti == std::vector<std::int64_t>{1, 0, 0, 1}, "H(boundary 4-simplex) betti " + join_values(s.betti));
  const auto rp = homology(gen_rp2_6());
  a.check(rp.betti == std::vector<std::int64_t>{1, 0, 0} && rp.torsion.size() > 1 &&
              rp.torsion[1] == std::vector<std::int64_t>{2},
          "H1(RP2_6) = Z/2");
}

void claim9(Acc& a, const SuiteOptions&) {
  const auto x = gen_X();
  const auto r = class_report(x);
  a.check(r.even && r.bw && r.colour, "X in T_even, T_bw, T_colour");
  const auto col = regular_colouring(x);
  if (col) {
    std::map<int, std::set<VertexLabel>> classes;
    for (std::size_t v = 0; v < col->size(); ++v) classes[(*col)[v]].insert(x.vertices()[v]);
    std::set<std::set<VertexLabel>> got;
    for (auto& [c, s] : classes) got.insert(s);
    std::set<std::set<VertexLabel>> want = {{VertexLabel::perm(2), VertexLabel::perm(3), VertexLabel::perm(4)}};
    for (int i = 1; i <= 4; ++i) want.insert({VertexLabel::pair(i, 1), VertexLabel::pair(i, 2), VertexLabel::pair(i, 3)});
    a.check(got == want, "colour classes are {nu} and {(a,.)} for a = 1..4");
  } else {
    a.check(false, "X has a regular colouring");
  }
  const auto chess = chess_colouring(x);
  const auto black = chess ? std::count(chess->begin(), chess->end(), 0) : 0;
  a.check(chess && black == 54 && chess->size() - static_cast<std::size_t>(black) == 54,
          "chess classes " + std::to_string(black) + "/" + std::to_string(chess ? chess->size() - static_cast<std::size_t>(black) : 0));
  auto row = [&](const char* name, const SimplicialComplex& k, bool e, bool b, bool c) {
    const auto cr = class_report(k);
    auto tf = [](bool v) { return v ? "T" : "F"; };
    a.check(cr.even == e && cr.bw == b && cr.colour == c,
            std::string(name) + " (" + tf(cr.even) + "," + tf(cr.bw) + "," + tf(cr.colour) + ")");
  };
  row("7-vertex torus", gen_torus_7(), true, true, false);
  row("9-vertex grid torus", gen_torus_9(), true, true, true);
  row("6-vertex RP2", gen_rp2_6(), false, false, false);
  const auto h = projectivity_group(x);
  a.check(h.group_order == 1, "projectivity group of X has order " + std::to_string(h.group_order));
  a.check(h.relation_holds, "rho1 rho2 = rho3 on every generator");
}

void claim10(Acc& a, const SuiteOptions&) {
  const auto cp = gen_cross_polytope(4);
  const auto cc = regular_colouring(cp);
  const auto sc = cc ? suspension_colour_class(cp, *cc) : std::nullopt;
  a.check(sc.has_value(), "cross-polytope: size-2 colour class spans a suspension");
  const auto x = gen_X();
  const auto xc = regular_colouring(x);
  bool no_pair = xc.has_value();
  if (xc) {
    std::map<int, int> sizes;
    for (int c : *xc) ++sizes[c];
    for (auto [c, n] : sizes) no_pair = no_pair && n != 2;
  }
  a.check(no_pair && xc && !suspension_colour_class(x, *xc), "X: no colour class of size 2");
  a.check(x.num_vertices() == 3 * 4 + 3, "f0(X) = 15 = 3*4 + 3");
}

void claim11(Acc& a, const SuiteOptions&) {
  std::vector<std::size_t> sizes;
  for (int i = 1; i <= 6; ++i) sizes.push_back(gen_Y_family(i).size());
  const auto y = gen_Y();
  a.check(sizes == std::vector<std::size_t>(6, 18) && y.facets().size() == 108,
          "Y families " + join_values(sizes) + ", " + std::to_string(y.facets().size()) + " facets");
  const auto x = gen_X();
  a.check(iso(x, y), "X and Y isomorphic (search)");
  const auto m = x_to_y_map();
  bool ok = m.size() == 15;
  try {
    ok = ok && relabel(x, m) == y;
  } catch (const Error&) {
    ok = false;
  }
  a.check(ok, "explicit vertex map X -> Y is an isomorphism");
}

void claim12(Acc& a, const SuiteOptions&) {
  a.check(iso(gen_torus_36pq(2, 1), gen_torus_7()), "torus {3,6}_{2,1} ~ 7-vertex torus");
  const auto x = gen_X();
  const auto l = subcomplex_T_P(x);
  a.check(iso(gen_torus_36pq(2, 2), l.T), "torus {3,6}_{2,2} ~ T in X");
  a.check(boundary_complex(l.P1) == l.T && boundary_complex(l.P2) == l.T && boundary_complex(l.P3) == l.T,
          "boundary of P1, P2, P3 is T");
  const auto n12 = VertexLabel::perm(2);
  const auto n13 = VertexLabel::perm(3);
  const auto n14 = VertexLabel::perm(4);
  const auto rebuilt = union_of({l.P1, l.P2, l.P3, cone(union_of({l.P1, l.P2}), n12), cone(union_of({l.P1, l.P3}), n13),
                                 cone(union_of({l.P2, l.P3}), n14)});
  a.check(rebuilt == x, "X = P1 u P2 u P3 plus cones from the three nu vertices");
}

void claim13(Acc& a, const SuiteOptions& opt) {
  const double d = check_equivariance();
  a.check(d < opt.tol, "max projdist(R(h)v_s, v_{h.s}) over 144x33 = " + sci(d));
  const auto& g = s4xs3_elements();
  std::vector<ProjectiveOperator> ops;
  for (const auto& h : g) ops.push_back(rep_R(h));
  bool distinct = true;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) distinct = distinct && !ops[i].equivalent(ops[j], opt.tol);
  a.check(distinct, "R is faithful: 144 distinct operators");
  std::mt19937_64 rng(opt.seed);
  bool hom = true;
  for (int n = 0; n < 200; ++n) {
    const auto& p = g[rng() % g.size()];
    const auto& q = g[rng() % g.size()];
    hom = hom && (rep_R(p) * rep_R(q)).equivalent(rep_R(p * q), opt.tol);
  }
  a.check(hom, "R(g)R(h) = R(gh) up to a unit scalar on 200 pairs");
}

void claim14(Acc& a, const SuiteOptions& opt) {
  const auto fc = check_face_consistency(opt.seed);
  a.check(fc.max_deviation < opt.tol, "ridge agreement max " + sci(fc.max_deviation) + " over " + std::to_string(fc.samples));
  const auto st = check_stabilizer(opt.seed);
  a.check(st.max_deviation < opt.tol, "stabilizer consistency max " + sci(st.max_deviation));
  const auto eq = check_equivariance_composite(opt.seed);
  a.check(eq.max_deviation < opt.tol, "f(h.x) vs R(h)f(x) max " + sci(eq.max_deviation));
  const auto v = check_vertices();
  a.check(v.max_deviation < opt.exact_tol, "f(vertex) = v_s max " + sci(v.max_deviation));
  const auto mid = check_midpoints();
  a.check(mid.max_deviation < opt.exact_tol, "edge midpoints of X map to midpoint vertices, max " + sci(mid.max_deviation));
  const auto rf = check_refinement(opt.seed);
  a.check(rf.max_deviation < opt.tol, "sigma charts = Delta charts after substitution, max " + sci(rf.max_deviation));
}

void claim15(Acc& a, const SuiteOptions& opt) {
  const auto m = check_moment_triangulation(opt.seed, opt.samples);
  a.check(m.max_deviation < opt.tol, "max |m(x) - mu~(f(x))| = " + sci(m.max_deviation) + " over " +
                                         std::to_string(m.samples) + " points, seed " + std::to_string(opt.seed));
  const auto g = check_mu_tilde_factorization(opt.seed, 1000);
  a.check(g.max_deviation < opt.exact_tol, "max |mu~ - mu o g| = " + sci(g.max_deviation) + " on 1000 points");
  const auto pre = barycenter_preimage();
  const bool pairs = pre.size() == 12 && std::all_of(pre.begin(), pre.end(), [](const VertexLabel& l) {
                       return l.kind() == LabelKind::Pair;
                     });
  const auto& xb = realization().xbar();
  a.check(pairs && full_subcomplex(xb, pre) == subcomplex_T_P(gen_X()).T,
          "m^-1(barycenter) = the 12 (a,b) vertices, spanning T");
  a.check(is_simplicial_map(xb, gen_sd_triangle(), m_vertex_map()).ok, "m is simplicial into the subdivided triangle");
}

const std::vector<std::pair<std::string, std::function<void(Acc&, const SuiteOptions&)>>>& claims() {
  static const std::vector<std::pair<std::string, std::function<void(Acc&, const SuiteOptions&)>>> all = {
      {"f-vector of X", claim1},
      {"X equals its forbidden-set oracle", claim2},
      {"subdivision Xbar", claim3},
      {"automorphisms", claim4},
      {"orbits", claim5},
      {"link catalogue", claim6},
      {"combinatorial manifold", claim7},
      {"homology", claim8},
      {"colouring classes", claim9},
      {"suspension class and vertex bound", claim10},
      {"crystallographic complex Y", claim11},
      {"torus layers", claim12},
      {"geometry: equivariance", claim13},
      {"geometry: gluing", claim14},
      {"moment triangulation", claim15},
  };
  return all;
}

}  // namespace

ClaimRow run_claim(int id, const SuiteOptions& opt) {
  if (id < 1 || id > kClaimCount) throw Error(ErrorKind::OutOfRange, "claim id out of range");
  const auto& [title, fn] = claims()[static_cast<std::size_t>(id - 1)];
  ClaimRow row;
  row.id = id;
  row.title = title;
  row.pass = true;
  Acc acc{row};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn(acc, opt);
  } catch (const std::exception& e) {
    acc.check(false, std::string("exception: ") + e.what());
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<ClaimRow> run_suite(const SuiteOptions& opt, const std::vector<int>& only) {
  std::vector<ClaimRow> out;
  for (int id = 1; id <= kClaimCount; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    out.push_back(run_claim(id, opt));
  }
  return out;
}

}  // namespace cp2
