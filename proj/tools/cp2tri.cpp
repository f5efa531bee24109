// Command-line front end. Exit codes: 0 ok, 1 a checked property fails,
// 2 usage or input error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cp2tri/colouring.hpp"
#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/geometry.hpp"
#include "cp2tri/io.hpp"
#include "cp2tri/manifold.hpp"
#include "cp2tri/suite.hpp"
#include "cp2tri/symmetry.hpp"

using namespace cp2;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
  double tol = kGeometryTol;
  std::size_t samples = 20;
  std::string input;
  std::string input2;
  std::string name;
  int dim = 0;
  std::string group = "aut";
  bool list = false;
  bool orbit_reduce = false;
  std::vector<int> only;
};

struct Report {
  json j = json::object();
  std::ostringstream text;
  int code = 0;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// "-" reads stdin, "gen:NAME" builds a generator, anything else is a path.
SimplicialComplex load(const std::string& src) {
  if (src == "-") return read_complex(std::cin);
  if (src.rfind("gen:", 0) == 0) return generate(src.substr(4));
  std::ifstream in(src);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + src);
  try {
    return read_complex(in);
  } catch (const Error& e) {
    throw Error(e.kind(), src + ": " + e.what());
  }
}

json simplex_json(const Simplex& s) {
  json a = json::array();
  for (const auto& l : s) a.push_back(l.to_string());
  return a;
}

void cmd_generate(const Options& o, Report& r) {
  const auto k = generate(o.name);
  if (o.format == "json") {
    r.j["complex"] = to_json(k);
  } else {
    r.text << serialize(k);
  }
}

void cmd_fvector(const Options& o, Report& r) {
  const auto k = load(o.input);
  const auto fv = k.f_vector();
  r.j["f_vector"] = fv;
  r.j["euler_characteristic"] = k.euler_characteristic();
  for (std::size_t i = 0; i < fv.size(); ++i) r.text << (i ? " " : "") << fv[i];
  r.text << "\n";
}

void cmd_links(const Options& o, Report& r) {
  const auto k = load(o.input);
  json rows = json::array();
  for (const auto& f : k.faces(o.dim)) {
    const auto s = k.labels(f);
    const auto l = link(k, s);
    rows.push_back({{"face", simplex_json(s)}, {"f_vector", l.f_vector()}, {"euler_characteristic", l.euler_characteristic()}});
    r.text << to_string(s) << " f=";
    const auto fv = l.f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i) r.text << (i ? "," : "") << fv[i];
    r.text << " chi=" << l.euler_characteristic() << "\n";
  }
  r.j["dim"] = o.dim;
  r.j["links"] = rows;
}

void cmd_verify(const Options& o, Report& r) {
  const auto k = load(o.input);
  r.j["seed"] = o.seed;
  r.j["budget"] = o.budget;
  PseudomanifoldCheck pm;
  try {
    pm = is_closed_pseudomanifold(k);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPure) throw;
    pm.ok = false;
    pm.reason = "complex is not pure";
  }
  r.j["pseudomanifold"] = pm.ok;
  r.text << "pseudomanifold=" << (pm.ok ? "true" : "false");
  if (!pm.ok) {
    r.j["reason"] = pm.reason;
    if (!pm.ridge.empty()) r.j["ridge"] = simplex_json(pm.ridge);
    r.text << " (" << pm.reason << (pm.ridge.empty() ? "" : " at " + to_string(pm.ridge)) << ")\n";
    r.code = 1;
    return;
  }
  const bool orientable = orientation(k).has_value();
  r.j["orientable"] = orientable;
  r.text << " orientable=" << (orientable ? "true" : "false");
  std::vector<VertexMap> group;
  if (o.orbit_reduce) group = automorphism_group(k);
  const auto m = is_combinatorial_manifold(k, o.budget, o.seed, o.orbit_reduce ? &group : nullptr);
  r.j["manifold"] = to_string(m.verdict);
  r.text << " manifold=" << to_string(m.verdict) << " seed=" << o.seed << " budget=" << o.budget << "\n";
  json links = json::array();
  for (const auto& [v, c] : m.links) {
    links.push_back({{"vertex", v.to_string()}, {"status", to_string(c.status)}, {"method", c.method}, {"moves", c.moves},
                     {"reason", c.reason}});
    r.text << "  link " << v.to_string() << ": " << to_string(c.status) << " via " << c.method << ", " << c.moves
           << " moves" << (c.reason.empty() ? "" : " (" + c.reason + ")") << "\n";
  }
  r.j["links"] = links;
  if (m.verdict != SphereStatus::Certified) r.code = 1;
}

void cmd_homology(const Options& o, Report& r) {
  const auto k = load(o.input);
  const auto h = homology(k);
  r.j["betti"] = h.betti;
  r.j["torsion"] = h.torsion;
  for (std::size_t i = 0; i < h.betti.size(); ++i) {
    r.text << "H" << i << " = ";
    bool any = false;
    if (h.betti[i] > 0) {
      r.text << "Z" << (h.betti[i] > 1 ? "^" + std::to_string(h.betti[i]) : "");
      any = true;
    }
    for (auto t : h.torsion[i]) {
      r.text << (any ? " + " : "") << "Z/" << t;
      any = true;
    }
    if (!any) r.text << "0";
    r.text << "\n";
  }
}

void cmd_colour(const Options& o, Report& r) {
  const auto k = load(o.input);
  const auto even = is_even(k);
  const auto chess = chess_colouring(k);
  const auto reg = regular_colouring(k);
  const auto h = projectivity_group(k);
  r.j["even"] = even.ok;
  r.j["bw"] = chess.has_value();
  r.j["colour"] = reg.has_value();
  r.j["projectivity_group_order"] = h.group_order;
  r.j["rho1_trivial"] = h.rho1_trivial;
  r.j["rho2_trivial"] = h.rho2_trivial;
  r.j["rho3_trivial"] = h.rho3_defined ? json(h.rho3_trivial) : json(nullptr);
  r.j["relation_holds"] = h.relation_holds;
  r.text << "even=" << (even.ok ? "T" : "F") << " bw=" << (chess ? "T" : "F") << " colour=" << (reg ? "T" : "F") << "\n";
  if (!even.ok) r.text << "odd codimension-2 face " << to_string(even.face) << " in " << even.degree << " facets\n";
  if (chess) {
    const auto black = std::count(chess->begin(), chess->end(), 0);
    r.j["chess_classes"] = {black, static_cast<long>(chess->size()) - black};
    r.text << "chess classes " << black << "/" << chess->size() - static_cast<std::size_t>(black) << "\n";
  }
  r.text << "projectivity group order " << h.group_order << ", rho1 " << (h.rho1_trivial ? "trivial" : "nontrivial")
         << ", rho2 " << (h.rho2_trivial ? "trivial" : "nontrivial") << ", rho3 "
         << (h.rho3_defined ? (h.rho3_trivial ? "trivial" : "nontrivial") : "undefined") << "\n";
  if (reg) {
    json classes = json::array();
    for (int c = 0; c <= k.dim(); ++c) {
      json cls = json::array();
      r.text << "colour " << c << ":";
      for (std::size_t v = 0; v < reg->size(); ++v) {
        if ((*reg)[v] != c) continue;
        cls.push_back(k.vertices()[v].to_string());
        r.text << " " << k.vertices()[v].to_string();
      }
      classes.push_back(cls);
      r.text << "\n";
    }
    r.j["colour_classes"] = classes;
    if (const auto s = suspension_colour_class(k, *reg)) {
      r.j["suspension_class"] = s->colour;
      r.text << "colour " << s->colour << " spans a suspension over " << s->apex1.to_string() << ", " << s->apex2.to_string()
             << "\n";
    }
  }
}

std::vector<VertexMap> pick_group(const Options& o, const SimplicialComplex& k) {
  if (o.group == "s4xs3") return induced_group(k);
  if (o.group == "aut") return automorphism_group(k);
  throw Error(ErrorKind::UnknownName, "group must be 'aut' or 's4xs3'");
}

void cmd_aut(const Options& o, Report& r) {
  const auto k = load(o.input);
  const auto g = automorphism_group(k);
  r.j["order"] = g.size();
  r.text << "order " << g.size() << "\n";
  if (!o.list) return;
  json maps = json::array();
  for (const auto& m : g) {
    json one = json::object();
    for (std::size_t v = 0; v < m.size(); ++v) {
      one[k.vertices()[v].to_string()] = k.vertices()[static_cast<std::size_t>(m[v])].to_string();
      r.text << (v ? " " : "") << k.vertices()[v].to_string() << "->" << k.vertices()[static_cast<std::size_t>(m[v])].to_string();
    }
    r.text << "\n";
    maps.push_back(one);
  }
  r.j["maps"] = maps;
}

void cmd_orbits(const Options& o, Report& r) {
  const auto k = load(o.input);
  const auto g = pick_group(o, k);
  json rows = json::array();
  r.text << "group " << o.group << " (" << g.size() << " elements), dim " << o.dim << "\n";
  for (const auto& orb : orbits(k, g, o.dim)) {
    const auto rep = k.labels(orb.representative);
    rows.push_back({{"size", orb.members.size()}, {"representative", simplex_json(rep)}});
    r.text << orb.members.size() << " " << to_string(rep) << "\n";
  }
  r.j["group"] = o.group;
  r.j["group_order"] = g.size();
  r.j["dim"] = o.dim;
  r.j["orbits"] = rows;
}

void cmd_isomorphic(const Options& o, Report& r) {
  const auto a = load(o.input);
  const auto b = load(o.input2);
  const auto m = are_isomorphic(a, b);
  r.j["isomorphic"] = m.has_value();
  r.text << "isomorphic=" << (m ? "true" : "false") << "\n";
  if (!m) {
    r.code = 1;
    return;
  }
  json map = json::object();
  for (std::size_t v = 0; v < m->size(); ++v) {
    const auto& to = b.vertices()[static_cast<std::size_t>((*m)[v])];
    map[a.vertices()[v].to_string()] = to.to_string();
    r.text << a.vertices()[v].to_string() << " -> " << to.to_string() << "\n";
  }
  r.j["map"] = map;
}

void add_stat(Report& r, const Options& o, const std::string& name, const SampleStats& s, double tol) {
  const bool ok = s.max_deviation < tol;
  r.j["checks"][name] = {{"max_deviation", s.max_deviation}, {"samples", s.samples}, {"tolerance", tol}, {"pass", ok}};
  r.text << (ok ? "PASS " : "FAIL ") << name << " max=" << sci(s.max_deviation) << " samples=" << s.samples
         << " tol=" << sci(tol);
  if (!ok) r.text << " worst=" << to_string(s.worst_facet);
  r.text << "\n";
  if (!ok) r.code = 1;
  (void)o;
}

void cmd_geometry(const Options& o, Report& r, bool moment_only) {
  r.j["seed"] = o.seed;
  r.j["samples"] = o.samples;
  r.j["tolerance"] = o.tol;
  r.j["checks"] = json::object();
  r.text << "seed=" << o.seed << " samples=" << o.samples << " tol=" << sci(o.tol) << "\n";
  add_stat(r, o, "moment_triangulation", check_moment_triangulation(o.seed, o.samples), o.tol);
  if (moment_only) return;
  SampleStats eq;
  eq.max_deviation = check_equivariance();
  eq.samples = s4xs3_elements().size() * realization().xbar().num_vertices();
  add_stat(r, o, "equivariance", eq, o.tol);
  add_stat(r, o, "vertices", check_vertices(), o.tol);
  add_stat(r, o, "midpoints", check_midpoints(), o.tol);
  add_stat(r, o, "face_consistency", check_face_consistency(o.seed), o.tol);
  add_stat(r, o, "stabilizer", check_stabilizer(o.seed), o.tol);
  add_stat(r, o, "equivariance_composite", check_equivariance_composite(o.seed), o.tol);
  add_stat(r, o, "refinement", check_refinement(o.seed), o.tol);
  add_stat(r, o, "mu_tilde_factorization", check_mu_tilde_factorization(o.seed), o.tol);
}

void cmd_suite(const Options& o, Report& r) {
  SuiteOptions so;
  so.seed = o.seed;
  so.budget = o.budget;
  so.tol = o.tol;
  so.samples = o.samples;
  r.j["seed"] = o.seed;
  r.j["budget"] = o.budget;
  r.j["tolerance"] = o.tol;
  r.j["samples"] = o.samples;
  json rows = json::array();
  r.text << "seed=" << o.seed << " budget=" << o.budget << " tol=" << sci(o.tol) << " samples=" << o.samples << "\n";
  for (const auto& row : run_suite(so, o.only)) {
    rows.push_back({{"id", row.id}, {"title", row.title}, {"pass", row.pass}, {"checks", row.checks}});
    r.text << (row.pass ? "PASS" : "FAIL") << " [" << row.id << "] " << row.title << "\n";
    for (const auto& c : row.checks) r.text << "       " << c << "\n";
    if (!row.pass) r.code = 1;
  }
  r.j["claims"] = rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial and numerical checks for a 15-vertex triangulation of CP2"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto input = [&](CLI::App* sub) { sub->add_option("input", o.input, "Complex file, '-' for stdin, or gen:NAME")->required(); };
  auto seeded = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Random seed"); };

  auto* gen = app.add_subcommand("generate", "Print a built-in complex");
  gen->add_option("name", o.name, "Generator name")->required();
  auto* fv = app.add_subcommand("fvector", "Face counts per dimension");
  input(fv);
  auto* ln = app.add_subcommand("links", "Link f-vector of every face of a dimension");
  input(ln);
  ln->add_option("--dim", o.dim, "Face dimension");
  auto* ver = app.add_subcommand("verify", "Pseudomanifold, orientability and vertex-link sphere checks");
  input(ver);
  seeded(ver);
  ver->add_option("--budget", o.budget, "Bistellar move budget per link");
  ver->add_flag("--orbit-reduce", o.orbit_reduce, "Check one vertex per automorphism orbit");
  auto* hom = app.add_subcommand("homology", "Integral homology");
  input(hom);
  auto* col = app.add_subcommand("colour", "Evenness, chess and regular colourings, projectivity group");
  input(col);
  auto* aut = app.add_subcommand("aut", "Automorphism group");
  input(aut);
  aut->add_flag("--list", o.list, "Print every automorphism");
  auto* orb = app.add_subcommand("orbits", "Face orbits under a group");
  input(orb);
  orb->add_option("--dim", o.dim, "Face dimension");
  orb->add_option("--group", o.group, "aut or s4xs3")->check(CLI::IsMember({"aut", "s4xs3"}));
  auto* iso = app.add_subcommand("isomorphic", "Search for an isomorphism");
  iso->add_option("a", o.input, "First complex")->required();
  iso->add_option("b", o.input2, "Second complex")->required();
  auto* geo = app.add_subcommand("geometry-check", "Numerical checks of the realization in CP2");
  seeded(geo);
  geo->add_option("--samples", o.samples, "Interior samples per facet");
  geo->add_option("--tol", o.tol, "Tolerance");
  auto* mom = app.add_subcommand("moment-check", "Moment-map triangulation check only");
  seeded(mom);
  mom->add_option("--samples", o.samples, "Interior samples per facet");
  mom->add_option("--tol", o.tol, "Tolerance");
  auto* suite = app.add_subcommand("paper-suite", "Run the full acceptance battery");
  seeded(suite);
  suite->add_option("--budget", o.budget, "Bistellar move budget per link");
  suite->add_option("--tol", o.tol, "Geometry tolerance");
  suite->add_option("--samples", o.samples, "Interior samples per facet");
  suite->add_option("--only", o.only, "Claim ids to run")->check(CLI::Range(1, kClaimCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Report r;
  const auto* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  try {
    if (cmd == "generate") cmd_generate(o, r);
    else if (cmd == "fvector") cmd_fvector(o, r);
    else if (cmd == "links") cmd_links(o, r);
    else if (cmd == "verify") cmd_verify(o, r);
    else if (cmd == "homology") cmd_homology(o, r);
    else if (cmd == "colour") cmd_colour(o, r);
    else if (cmd == "aut") cmd_aut(o, r);
    else if (cmd == "orbits") cmd_orbits(o, r);
    else if (cmd == "isomorphic") cmd_isomorphic(o, r);
    else if (cmd == "geometry-check") cmd_geometry(o, r, false);
    else if (cmd == "moment-check") cmd_geometry(o, r, true);
    else if (cmd == "paper-suite") cmd_suite(o, r);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.format == "json") {
    json out = {{"schema_version", kSchemaVersion}, {"command", cmd}, {"exit_code", r.code}};
    out.update(r.j);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text.str();
  }
  return r.code;
}
