#include "cp2tri/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cp2tri/error.hpp"
#include "cp2tri/generators.hpp"
#include "cp2tri/io.hpp"

namespace cp2 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingular = 1e-12;

const cplx kOmega = std::polar(1.0, 2.0 * kPi / 3.0);

cplx omega_pow(int k) { return std::polar(1.0, 2.0 * kPi * static_cast<double>(((k % 3) + 3) % 3) / 3.0); }

// e^{i angle}, with the angle numerator/denominator set to 0 when the
// denominator degenerates.
cplx phase(double num, double den) { return den < kSingular ? cplx(1.0, 0.0) : std::polar(1.0, num / den); }

double norm(const ProjectivePoint& z) { return std::sqrt(std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2])); }

cplx inner(const ProjectivePoint& v, const ProjectivePoint& u) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) s += std::conj(v[i]) * u[i];
  return s;
}

using Mat3 = std::array<std::array<cplx, 3>, 3>;

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Mat3 conj(const Mat3& a) {
  Mat3 r = a;
  for (auto& row : r)
    for (auto& x : row) x = std::conj(x);
  return r;
}

Mat3 real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  Mat3 m{};
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (double x : row) m[i][j++] = x;
    ++i;
  }
  return m;
}

// Generators of S4 acting on C^3: (12), (23), (34).
const std::array<Mat3, 3>& rho_generators() {
  static const std::array<Mat3, 3> g = {
      real_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
      real_matrix({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
      real_matrix({{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}),
  };
  return g;
}

// theta as a product s_{w0} s_{w1} ... of adjacent transpositions.
std::vector<int> adjacent_word(const std::array<int, 4>& theta) {
  auto t = theta;
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i] > t[i + 1]) {
        std::swap(t[i], t[i + 1]);
        swaps.push_back(static_cast<int>(i));
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

ProjectiveOperator linear(const Mat3& m) { return {m, false}; }

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Uniform point of the open simplex with n vertices.
std::vector<double> random_barycentric(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) total += (x = e(rng));
  for (auto& x : w) x /= total;
  return w;
}

void track(SampleStats& s, double d, const Simplex& facet) {
  ++s.samples;
  if (d > s.max_deviation || std::isnan(d)) {
    s.max_deviation = std::isnan(d) ? INFINITY : d;
    s.worst_facet = facet;
  }
}

double moment_gap(const MomentValue& a, const MomentValue& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

double projective_distance(const ProjectivePoint& u, const ProjectivePoint& v) {
  const double nu = norm(u);
  const double nv = norm(v);
  if (nu == 0.0 || nv == 0.0) throw Error(ErrorKind::Precondition, "zero vector is not a projective point");
  ProjectivePoint a = u;
  ProjectivePoint b = v;
  for (auto& x : a) x /= nu;
  for (auto& x : b) x /= nv;
  const cplx ip = inner(b, a);
  const cplx ph = std::abs(ip) > 0.0 ? ip / std::abs(ip) : cplx(1.0, 0.0);
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d += std::norm(a[i] - ph * b[i]);
  return std::sqrt(d);
}

bool projectively_equal(const ProjectivePoint& u, const ProjectivePoint& v, double tol) {
  const double uu = std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]);
  const double vv = std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
  if (uu == 0.0 || vv == 0.0) throw Error(ErrorKind::Precondition, "zero vector is not a projective point");
  return std::abs(std::norm(inner(u, v)) - uu * vv) <= tol * uu * vv;
}

ProjectiveOperator ProjectiveOperator::identity() {
  return linear(real_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

ProjectiveOperator ProjectiveOperator::conjugation() { return {identity().a, true}; }

ProjectivePoint ProjectiveOperator::operator()(const ProjectivePoint& z) const {
  ProjectivePoint r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i] += a[i][j] * (antilinear ? std::conj(z[j]) : z[j]);
  return r;
}

ProjectiveOperator ProjectiveOperator::operator*(const ProjectiveOperator& rhs) const {
  return {matmul(a, antilinear ? conj(rhs.a) : rhs.a), antilinear != rhs.antilinear};
}

bool ProjectiveOperator::equivalent(const ProjectiveOperator& other, double tol) const {
  if (antilinear != other.antilinear) return false;
  // lambda from the largest entry of other, then compare entrywise.
  std::size_t bi = 0;
  std::size_t bj = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (std::abs(other.a[i][j]) > std::abs(other.a[bi][bj])) bi = i, bj = j;
  if (std::abs(other.a[bi][bj]) == 0.0) return false;
  const cplx lambda = a[bi][bj] / other.a[bi][bj];
  if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (std::abs(a[i][j] - lambda * other.a[i][j]) > tol) return false;
  return true;
}

ProjectiveOperator rep_R(const GroupElement& g) {
  auto rho = ProjectiveOperator::identity();
  for (int i : adjacent_word(g.theta)) rho = rho * linear(rho_generators()[static_cast<std::size_t>(i)]);
  if (g.theta_odd()) rho = rho * ProjectiveOperator::conjugation();

  // kappa = (123)^j or (123)^j (12).
  const Mat3 d = {{{1.0, 0.0, 0.0}, {0.0, kOmega, 0.0}, {0.0, 0.0, kOmega * kOmega}}};
  const std::array<int, 3> cycle = {2, 3, 1};
  const std::array<int, 3> swap12 = {2, 1, 3};
  auto eta = ProjectiveOperator::identity();
  GroupElement cj;
  for (int j = 0; j < 3; ++j) {
    if (cj.kappa == g.kappa) return rho * eta;
    GroupElement with_swap = cj * GroupElement{{1, 2, 3, 4}, swap12};
    if (with_swap.kappa == g.kappa) return rho * eta * ProjectiveOperator::conjugation();
    cj = GroupElement{{1, 2, 3, 4}, cycle} * cj;
    eta = eta * linear(d);
  }
  throw Error(ErrorKind::Inconsistent, "kappa is not a permutation of 1..3");
}

ProjectivePoint vertex_point(const VertexLabel& s) {
  switch (s.kind()) {
    case LabelKind::Perm:
      switch (s.perm_partner()) {
        case 2: return {0.0, 0.0, 1.0};
        case 3: return {0.0, 1.0, 0.0};
        default: return {1.0, 0.0, 0.0};
      }
    case LabelKind::Pair: {
      const cplx w1 = omega_pow(s.b());
      const cplx w2 = omega_pow(2 * s.b());
      switch (s.a()) {
        case 1: return {-1.0, w1, w2};
        case 2: return {1.0, -w1, w2};
        case 3: return {1.0, w1, -w2};
        default: return {1.0, w1, w2};
      }
    }
    case LabelKind::Mid: {
      const cplx wb = omega_pow(s.b());
      const int code = s.a1() * 10 + s.a2();
      switch (code) {
        case 12: return {1.0, -wb, 0.0};
        case 13: return {-wb, 0.0, 1.0};
        case 23: return {0.0, 1.0, -wb};
        case 34: return {1.0, wb, 0.0};
        case 24: return {wb, 0.0, 1.0};
        default: return {0.0, 1.0, wb};
      }
    }
    default: throw Error(ErrorKind::OutOfRange, s.to_string() + " has no vertex point");
  }
}

double check_equivariance() {
  const auto& xbar = realization().xbar();
  double worst = 0.0;
  for (const auto& g : s4xs3_elements()) {
    const auto r = rep_R(g);
    for (const auto& s : xbar.vertices()) worst = std::max(worst, projective_distance(r(vertex_point(s)), vertex_point(act(g, s))));
  }
  return worst;
}

ProjectivePoint formula_delta1(const Bary5& xi) {
  const auto [x0, x1, x2, x3, x4] = xi;
  const double s = std::abs(x4 - x1) + x2 + x3;
  const cplx first =
      s < kSingular ? cplx(0.0) : s / 3.0 * cplx(std::sin(kPi * (x4 - x1) / (2 * s)), std::sin(kPi * (x2 + x3) / (2 * s)));
  const cplx e = phase(kPi * (x2 - x3), 6 * (1 - x0));
  return {first, ((1 - x0) / 2 - s / 6) * e, ((1 + x0) / 2 - s / 6) * std::conj(e)};
}

ProjectivePoint formula_delta2(const Bary5& xi) {
  const auto [x0, x1, x2, x3, x4] = xi;
  const double s = std::abs(x4 - x1) + std::abs(x2 - x3);
  const cplx first =
      s < kSingular ? cplx(0.0) : s / 3.0 * cplx(std::sin(kPi * (x4 - x1) / (2 * s)), std::sin(kPi * (x2 - x3) / (2 * s)));
  const cplx e = phase(kPi * (x2 + x3), 6 * (1 - x0));
  return {first, ((1 - x0) / 2 - s / 6) * e, ((1 + x0) / 2 - s / 6) * std::conj(e)};
}

ProjectivePoint formula_sigma1(const Bary5& p) {
  const auto [p0, p1, p2, p3, p4] = p;
  const double s = p2 + p3 + p4;
  const cplx e = phase(kPi * (p2 - p3), 6 * (1 - p0));
  return {s / 3 * phase(kPi * (p2 + p3), 2 * s), (p1 / 2 + s / 3) * e, (p0 + p1 / 2 + s / 3) * std::conj(e)};
}

ProjectivePoint formula_sigma2(const Bary5& q) {
  const auto [q0, q1, q2, q3, q4] = q;
  const double s = q3 + q4;
  const cplx e = phase(kPi * (q2 + q3), 6 * (1 - q0));
  return {s / 3 * phase(kPi * q3, 2 * s), ((q1 + q2) / 2 + s / 3) * e, (q0 + (q1 + q2) / 2 + s / 3) * std::conj(e)};
}

Bary5 sigma1_in_delta1(const Bary5& p) { return {p[0], p[1] / 2, p[2], p[3], p[4] + p[1] / 2}; }

Bary5 sigma2_in_delta2(const Bary5& q) { return {q[0], q[1] / 2, q[2] / 2 + q[3], q[2] / 2, q[1] / 2 + q[4]}; }

const char* to_string(Chart c) {
  switch (c) {
    case Chart::Delta1: return "Delta1";
    case Chart::Delta2: return "Delta2";
    case Chart::Sigma1: return "sigma1";
    case Chart::Sigma2: return "sigma2";
  }
  return "?";
}

const std::vector<VertexLabel>& chart_vertices(Chart c) {
  using L = VertexLabel;
  static const std::vector<L> d1 = {L::perm(2), L::pair(1, 3), L::pair(2, 1), L::pair(3, 2), L::pair(4, 3)};
  static const std::vector<L> d2 = {L::perm(2), L::pair(1, 3), L::pair(2, 1), L::pair(3, 1), L::pair(4, 3)};
  static const std::vector<L> s1 = {L::perm(2), L::mid(1, 4, 3), L::pair(2, 1), L::pair(3, 2), L::pair(4, 3)};
  static const std::vector<L> s2 = {L::perm(2), L::mid(1, 4, 3), L::mid(2, 3, 1), L::pair(2, 1), L::pair(4, 3)};
  switch (c) {
    case Chart::Delta1: return d1;
    case Chart::Delta2: return d2;
    case Chart::Sigma1: return s1;
    default: return s2;
  }
}

namespace {

ProjectivePoint chart_formula(Chart c, const Bary5& p) {
  switch (c) {
    case Chart::Delta1: return formula_delta1(p);
    case Chart::Delta2: return formula_delta2(p);
    case Chart::Sigma1: return formula_sigma1(p);
    default: return formula_sigma2(p);
  }
}

std::vector<Realization::Transport> transports_to(const Simplex& facet, std::initializer_list<Chart> charts, bool first_only) {
  std::vector<Realization::Transport> out;
  for (const auto& g : s4xs3_elements()) {
    const auto img = act(g, facet);
    for (Chart c : charts) {
      if (img != make_simplex(chart_vertices(c))) continue;
      Realization::Transport t;
      t.h = g;
      t.chart = c;
      const auto& rep = chart_vertices(c);
      for (std::size_t i = 0; i < facet.size(); ++i) {
        t.slot[i] = static_cast<int>(std::find(rep.begin(), rep.end(), act(g, facet[i])) - rep.begin());
      }
      out.push_back(t);
      if (first_only) return out;
    }
  }
  return out;
}

}  // namespace

Realization::Realization() : x_(gen_X()), xbar_(gen_Xbar()) {
  for (const auto& f : x_.facets()) {
    auto t = transports_to(x_.labels(f), {Chart::Delta1, Chart::Delta2}, true);
    if (t.empty()) throw Error(ErrorKind::Inconsistent, "facet of X outside both representative orbits");
    x_transports_.emplace(f, t.front());
  }
  for (const auto& f : xbar_.facets()) {
    auto t = transports_to(xbar_.labels(f), {Chart::Sigma1, Chart::Sigma2}, true);
    xbar_transports_.emplace(f, t.empty() ? std::nullopt : std::optional<Transport>(t.front()));
  }
}

void Realization::validate(const BarycentricPoint& pt, const SimplicialComplex& k) const {
  if (pt.coords.size() != pt.facet.size()) throw Error(ErrorKind::Precondition, "coordinate count differs from facet size");
  double sum = 0.0;
  for (double c : pt.coords) {
    if (c < -1e-12) throw Error(ErrorKind::Precondition, "negative barycentric coordinate");
    sum += c;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw Error(ErrorKind::Precondition, "barycentric coordinates do not sum to 1");
  if (!k.has_simplex(pt.facet) || pt.facet.size() != static_cast<std::size_t>(k.dim() + 1)) {
    throw Error(ErrorKind::NotAFace, to_string(pt.facet) + " is not a facet");
  }
}

ProjectivePoint Realization::evaluate(const Transport& t, std::span<const double> coords) const {
  Bary5 p{};
  for (std::size_t i = 0; i < coords.size(); ++i) p[static_cast<std::size_t>(t.slot[i])] = coords[i];
  return rep_R(t.h.inverse())(chart_formula(t.chart, p));
}

const Realization::Transport& Realization::x_transport(const Simplex& facet) const {
  auto it = x_transports_.find(x_.face_of(facet));
  if (it == x_transports_.end()) throw Error(ErrorKind::NotAFace, to_string(facet) + " is not a facet of X");
  return it->second;
}

std::optional<Realization::Transport> Realization::xbar_transport(const Simplex& facet) const {
  auto it = xbar_transports_.find(xbar_.face_of(facet));
  if (it == xbar_transports_.end()) throw Error(ErrorKind::NotAFace, to_string(facet) + " is not a facet of Xbar");
  return it->second;
}

std::vector<Realization::Transport> Realization::all_transports(const Simplex& facet, bool in_xbar) const {
  if (in_xbar) return transports_to(facet, {Chart::Sigma1, Chart::Sigma2}, false);
  return transports_to(facet, {Chart::Delta1, Chart::Delta2}, false);
}

ProjectivePoint Realization::f_x(const BarycentricPoint& pt) const {
  validate(pt, x_);
  return evaluate(x_transport(pt.facet), pt.coords);
}

BarycentricPoint Realization::to_carrier(const BarycentricPoint& pt) const {
  BarycentricPoint out;
  out.facet = carrier_facet(pt.facet);
  out.coords.assign(out.facet.size(), 0.0);
  auto add = [&](const VertexLabel& l, double w) {
    out.coords[static_cast<std::size_t>(std::find(out.facet.begin(), out.facet.end(), l) - out.facet.begin())] += w;
  };
  for (std::size_t i = 0; i < pt.facet.size(); ++i) {
    const auto& l = pt.facet[i];
    if (l.kind() == LabelKind::Mid) {
      add(VertexLabel::pair(l.a1(), l.b()), pt.coords[i] / 2);
      add(VertexLabel::pair(l.a2(), l.b()), pt.coords[i] / 2);
    } else {
      add(l, pt.coords[i]);
    }
  }
  return out;
}

ProjectivePoint Realization::f(const BarycentricPoint& pt) const {
  validate(pt, xbar_);
  if (auto t = xbar_transport(pt.facet)) return evaluate(*t, pt.coords);
  return f_x(to_carrier(pt));
}

const Realization& realization() {
  static const Realization r;
  return r;
}

MomentValue moment_mu(const ProjectivePoint& z) {
  const double t = std::norm(z[0]) + std::norm(z[1]) + std::norm(z[2]);
  if (t == 0.0) throw Error(ErrorKind::Precondition, "moment map of the zero vector");
  return {std::norm(z[0]) / t, std::norm(z[1]) / t, std::norm(z[2]) / t};
}

MomentValue moment_mu_tilde(const ProjectivePoint& z) {
  const double t = std::abs(z[0]) + std::abs(z[1]) + std::abs(z[2]);
  if (t == 0.0) throw Error(ErrorKind::Precondition, "moment map of the zero vector");
  return {std::abs(z[0]) / t, std::abs(z[1]) / t, std::abs(z[2]) / t};
}

ProjectivePoint g_map(const ProjectivePoint& z) {
  ProjectivePoint r{};
  for (std::size_t i = 0; i < 3; ++i) r[i] = z[i] == 0.0 ? cplx(0.0) : z[i] / std::sqrt(std::abs(z[i]));
  return r;
}

MomentValue m_vertex(const VertexLabel& s) {
  switch (s.kind()) {
    case LabelKind::Perm:
      switch (s.perm_partner()) {
        case 2: return {0.0, 0.0, 1.0};
        case 3: return {0.0, 1.0, 0.0};
        default: return {1.0, 0.0, 0.0};
      }
    case LabelKind::Pair: return {1.0 / 3, 1.0 / 3, 1.0 / 3};
    case LabelKind::Mid: {
      const int code = s.a1() * 10 + s.a2();
      if (code == 12 || code == 34) return {0.5, 0.5, 0.0};
      if (code == 13 || code == 24) return {0.5, 0.0, 0.5};
      return {0.0, 0.5, 0.5};
    }
    default: throw Error(ErrorKind::OutOfRange, s.to_string() + " is not a vertex of Xbar");
  }
}

MomentValue m_map(const BarycentricPoint& pt) {
  const auto& xbar = realization().xbar();
  if (!xbar.has_simplex(pt.facet) || pt.facet.size() != static_cast<std::size_t>(xbar.dim() + 1)) {
    throw Error(ErrorKind::NotAFace, to_string(pt.facet) + " is not a facet of Xbar");
  }
  if (pt.coords.size() != pt.facet.size()) throw Error(ErrorKind::Precondition, "coordinate count differs from facet size");
  MomentValue out{};
  for (std::size_t i = 0; i < pt.facet.size(); ++i) {
    const auto v = m_vertex(pt.facet[i]);
    for (std::size_t j = 0; j < 3; ++j) out[j] += pt.coords[i] * v[j];
  }
  return out;
}

std::map<VertexLabel, VertexLabel> m_vertex_map() {
  // Vertex ids of the subdivided triangle: {0}, {1}, {2}, {0,1}, {0,2}, {1,2}, {0,1,2}.
  std::map<VertexLabel, VertexLabel> out;
  for (const auto& s : realization().xbar().vertices()) {
    const auto m = m_vertex(s);
    int id = 0;
    const int support = (m[0] > 0) + (m[1] > 0) + (m[2] > 0);
    if (support == 1) {
      id = m[0] > 0 ? 0 : (m[1] > 0 ? 1 : 2);
    } else if (support == 2) {
      id = m[2] == 0 ? 3 : (m[1] == 0 ? 4 : 5);
    } else {
      id = 6;
    }
    out.emplace(s, VertexLabel::integer(id));
  }
  return out;
}

SampleStats check_vertices() {
  const auto& r = realization();
  SampleStats s;
  for (bool bar : {false, true}) {
    const auto& k = bar ? r.xbar() : r.x();
    for (const auto& f : k.facets()) {
      const auto facet = k.labels(f);
      for (std::size_t i = 0; i < facet.size(); ++i) {
        BarycentricPoint pt{facet, std::vector<double>(facet.size(), 0.0)};
        pt.coords[i] = 1.0;
        track(s, projective_distance(bar ? r.f(pt) : r.f_x(pt), vertex_point(facet[i])), facet);
      }
    }
  }
  return s;
}

SampleStats check_midpoints() {
  const auto& r = realization();
  SampleStats s;
  for (const auto& f : r.x().facets()) {
    const auto facet = r.x().labels(f);
    for (std::size_t i = 0; i < facet.size(); ++i) {
      for (std::size_t j = i + 1; j < facet.size(); ++j) {
        if (facet[i].kind() != LabelKind::Pair || facet[j].kind() != LabelKind::Pair || facet[i].b() != facet[j].b()) continue;
        BarycentricPoint pt{facet, std::vector<double>(facet.size(), 0.0)};
        pt.coords[i] = pt.coords[j] = 0.5;
        const auto mid = VertexLabel::mid(facet[i].a(), facet[j].a(), facet[i].b());
        track(s, projective_distance(r.f_x(pt), vertex_point(mid)), facet);
      }
    }
  }
  return s;
}

SampleStats check_face_consistency(std::uint64_t seed, std::size_t samples) {
  const auto& r = realization();
  SampleStats s;
  for (bool bar : {true, false}) {
    const auto& k = bar ? r.xbar() : r.x();
    std::map<Face, std::vector<std::size_t>> around;
    for (std::size_t fi = 0; fi < k.facets().size(); ++fi) {
      const auto& f = k.facets()[fi];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face ridge = f;
        ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
        around[ridge].push_back(fi);
      }
    }
    std::size_t ridx = 0;
    for (const auto& [ridge, owners] : around) {
      auto rng = stream(seed, bar ? 1 : 2, ridx++);
      for (std::size_t n = 0; n < samples; ++n) {
        const auto w = random_barycentric(rng, ridge.size());
        std::vector<ProjectivePoint> values;
        for (std::size_t fi : owners) {
          const auto& f = k.facets()[fi];
          BarycentricPoint pt{k.labels(f), std::vector<double>(f.size(), 0.0)};
          for (std::size_t i = 0; i < ridge.size(); ++i) {
            pt.coords[static_cast<std::size_t>(std::find(f.begin(), f.end(), ridge[i]) - f.begin())] = w[i];
          }
          values.push_back(bar ? r.f(pt) : r.f_x(pt));
        }
        for (std::size_t i = 1; i < values.size(); ++i) track(s, projective_distance(values[0], values[i]), k.labels(ridge));
      }
    }
  }
  return s;
}

SampleStats check_stabilizer(std::uint64_t seed, std::size_t samples) {
  SampleStats s;
  std::uint64_t tag = 10;
  for (Chart c : {Chart::Delta1, Chart::Delta2, Chart::Sigma1, Chart::Sigma2}) {
    const auto& rep = chart_vertices(c);
    const auto rep_set = make_simplex(rep);
    auto rng = stream(seed, tag++, 0);
    for (const auto& g : s4xs3_elements()) {
      if (act(g, rep_set) != rep_set) continue;
      const auto r = rep_R(g);
      for (std::size_t n = 0; n < samples; ++n) {
        const auto w = random_barycentric(rng, 5);
        Bary5 p{};
        Bary5 moved{};
        for (std::size_t i = 0; i < 5; ++i) {
          p[i] = w[i];
          const auto j = static_cast<std::size_t>(std::find(rep.begin(), rep.end(), act(g, rep[i])) - rep.begin());
          moved[j] = w[i];
        }
        track(s, projective_distance(chart_formula(c, moved), r(chart_formula(c, p))), rep_set);
      }
    }
  }
  return s;
}

SampleStats check_equivariance_composite(std::uint64_t seed, std::size_t samples) {
  const auto& r = realization();
  const auto& k = r.xbar();
  const auto& group = s4xs3_elements();
  SampleStats s;
  auto rng = stream(seed, 20, 0);
  for (std::size_t n = 0; n < samples; ++n) {
    const auto facet = k.labels(k.facets()[rng() % k.facets().size()]);
    const auto& g = group[rng() % group.size()];
    BarycentricPoint pt{facet, random_barycentric(rng, facet.size())};
    BarycentricPoint moved{act(g, facet), std::vector<double>(facet.size(), 0.0)};
    for (std::size_t i = 0; i < facet.size(); ++i) {
      const auto img = act(g, facet[i]);
      moved.coords[static_cast<std::size_t>(std::find(moved.facet.begin(), moved.facet.end(), img) - moved.facet.begin())] =
          pt.coords[i];
    }
    track(s, projective_distance(r.f(moved), rep_R(g)(r.f(pt))), facet);
  }
  return s;
}

SampleStats check_refinement(std::uint64_t seed, std::size_t samples) {
  const auto& r = realization();
  SampleStats s;
  auto rng = stream(seed, 30, 0);
  for (std::size_t n = 0; n < samples; ++n) {
    const auto w = random_barycentric(rng, 5);
    Bary5 p{};
    std::copy(w.begin(), w.end(), p.begin());
    track(s, projective_distance(formula_sigma1(p), formula_delta1(sigma1_in_delta1(p))), make_simplex(chart_vertices(Chart::Sigma1)));
    track(s, projective_distance(formula_sigma2(p), formula_delta2(sigma2_in_delta2(p))), make_simplex(chart_vertices(Chart::Sigma2)));
  }
  // Whole-map version: every facet of Xbar against its carrier in X.
  for (std::size_t fi = 0; fi < r.xbar().facets().size(); ++fi) {
    auto frng = stream(seed, 31, fi);
    const auto facet = r.xbar().labels(r.xbar().facets()[fi]);
    BarycentricPoint pt{facet, random_barycentric(frng, facet.size())};
    track(s, projective_distance(r.f(pt), r.f_x(r.to_carrier(pt))), facet);
  }
  return s;
}

SampleStats check_moment_triangulation(std::uint64_t seed, std::size_t samples) {
  const auto& r = realization();
  const auto& k = r.xbar();
  SampleStats s;
  for (std::size_t fi = 0; fi < k.facets().size(); ++fi) {
    const auto facet = k.labels(k.facets()[fi]);
    std::vector<std::vector<double>> points;
    for (std::size_t i = 0; i < facet.size(); ++i) {
      std::vector<double> c(facet.size(), 0.0);
      c[i] = 1.0;
      points.push_back(std::move(c));
    }
    points.emplace_back(facet.size(), 1.0 / static_cast<double>(facet.size()));
    auto rng = stream(seed, 40, fi);
    for (std::size_t n = 0; n < samples; ++n) points.push_back(random_barycentric(rng, facet.size()));
    for (auto& c : points) {
      BarycentricPoint pt{facet, std::move(c)};
      track(s, moment_gap(m_map(pt), moment_mu_tilde(r.f(pt))), facet);
    }
  }
  return s;
}

SampleStats check_mu_tilde_factorization(std::uint64_t seed, std::size_t samples) {
  SampleStats s;
  auto rng = stream(seed, 50, 0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> zero(0, 9);
  for (std::size_t n = 0; n < samples; ++n) {
    ProjectivePoint z{};
    for (auto& c : z) c = cplx(gauss(rng), gauss(rng));
    // Occasionally kill a coordinate to exercise the zero branch of g.
    if (zero(rng) == 0) z[rng() % 3] = 0.0;
    track(s, moment_gap(moment_mu_tilde(z), moment_mu(g_map(z))), {});
  }
  return s;
}

std::vector<VertexLabel> barycenter_preimage() {
  std::vector<VertexLabel> out;
  for (const auto& s : realization().xbar().vertices()) {
    const auto m = m_vertex(s);
    if (moment_gap(m, {1.0 / 3, 1.0 / 3, 1.0 / 3}) < 1e-15) out.push_back(s);
  }
  return out;
}

}  // namespace cp2
