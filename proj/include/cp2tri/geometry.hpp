#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cp2tri/complex.hpp"
#include "cp2tri/symmetry.hpp"

namespace cp2 {

using cplx = std::complex<double>;
// Homogeneous coordinates (z1 : z2 : z3), not all zero.
using ProjectivePoint = std::array<cplx, 3>;
// A point of the 2-simplex, coordinates summing to 1.
using MomentValue = std::array<double, 3>;

inline constexpr double kGeometryTol = 1e-9;

// min over unit phases of |u/|u| - phase v/|v||; zero iff the points agree.
double projective_distance(const ProjectivePoint& u, const ProjectivePoint& v);
// Cauchy-Schwarz test |<u,v>|^2 = <u,u><v,v> with relative tolerance.
bool projectively_equal(const ProjectivePoint& u, const ProjectivePoint& v, double tol = kGeometryTol);

/// z -> A z, or z -> A conj(z) when antilinear.
struct ProjectiveOperator {
  std::array<std::array<cplx, 3>, 3> a{};
  bool antilinear = false;

  static ProjectiveOperator identity();
  static ProjectiveOperator conjugation();
  ProjectivePoint operator()(const ProjectivePoint& z) const;
  ProjectiveOperator operator*(const ProjectiveOperator& rhs) const;
  // Same flag and a = lambda * other.a with |lambda| = 1.
  bool equivalent(const ProjectiveOperator& other, double tol = kGeometryTol) const;
};

ProjectiveOperator rep_R(const GroupElement& g);

// Throws OutOfRange for labels that are not vertices of Xbar.
ProjectivePoint vertex_point(const VertexLabel& s);

// Max over all 144 group elements and 33 vertices of the deviation between
// R(h) v_s and v_{h.s}.
double check_equivariance();

// Coordinate charts, evaluated on barycentric coordinates in the listed
// vertex order of the matching representative facet.
using Bary5 = std::array<double, 5>;
ProjectivePoint formula_delta1(const Bary5& xi);
ProjectivePoint formula_delta2(const Bary5& xi);
ProjectivePoint formula_sigma1(const Bary5& p);
ProjectivePoint formula_sigma2(const Bary5& q);
// Barycentric coordinates of a point of sigma1 (sigma2) inside Delta1 (Delta2).
Bary5 sigma1_in_delta1(const Bary5& p);
Bary5 sigma2_in_delta2(const Bary5& q);

enum class Chart { Delta1, Delta2, Sigma1, Sigma2 };
const char* to_string(Chart c);
// Representative facets, vertices in chart order.
const std::vector<VertexLabel>& chart_vertices(Chart c);

/// A point of a facet; coordinates follow the facet's (sorted) vertex order.
struct BarycentricPoint {
  Simplex facet;
  std::vector<double> coords;
};

/// Precomputed orbit transports for the facets of X and Xbar.
///
/// A facet F is sent by the least group element h with h.F a representative;
/// f(x) = R(h)^-1 applied to the chart formula at the transported
/// coordinates. Xbar facets outside the orbits of sigma1 and sigma2 are
/// evaluated through their carrier facet in X.
class Realization {
 public:
  struct Transport {
    GroupElement h;
    Chart chart = Chart::Delta1;
    std::array<int, 5> slot{};  // slot[i]: chart position of h applied to vertex i
  };

  Realization();

  const SimplicialComplex& x() const { return x_; }
  const SimplicialComplex& xbar() const { return xbar_; }

  ProjectivePoint f_x(const BarycentricPoint& pt) const;
  ProjectivePoint f(const BarycentricPoint& pt) const;

  // Nullopt for Xbar facets that use the carrier fallback.
  std::optional<Transport> xbar_transport(const Simplex& facet) const;
  const Transport& x_transport(const Simplex& facet) const;
  // Every group element carrying the facet onto its representative.
  std::vector<Transport> all_transports(const Simplex& facet, bool in_xbar) const;
  ProjectivePoint evaluate(const Transport& t, std::span<const double> coords) const;

  // The same point expressed in the carrier facet of X.
  BarycentricPoint to_carrier(const BarycentricPoint& pt) const;

 private:
  void validate(const BarycentricPoint& pt, const SimplicialComplex& k) const;

  SimplicialComplex x_;
  SimplicialComplex xbar_;
  std::map<Face, Transport> x_transports_;
  std::map<Face, std::optional<Transport>> xbar_transports_;
};

const Realization& realization();

// Moment maps. Throw Precondition for the zero vector.
MomentValue moment_mu(const ProjectivePoint& z);
MomentValue moment_mu_tilde(const ProjectivePoint& z);
// z_j -> z_j / sqrt|z_j|, with 0 kept at 0.
ProjectivePoint g_map(const ProjectivePoint& z);

// Vertex table of the simplicial map m : Xbar -> (Delta^2)'.
MomentValue m_vertex(const VertexLabel& s);
MomentValue m_map(const BarycentricPoint& pt);
// Vertex assignment into gen_sd_triangle(), for simplicial-map checks.
std::map<VertexLabel, VertexLabel> m_vertex_map();

struct SampleStats {
  double max_deviation = 0.0;
  std::size_t samples = 0;
  Simplex worst_facet;
};

// Every vertex of every facet of X and Xbar against vertex_point.
SampleStats check_vertices();
// Edge midpoints of X against the midpoint vertex points of Xbar.
SampleStats check_midpoints();
// Both sides of every ridge of Xbar and of X, `samples` random points each.
SampleStats check_face_consistency(std::uint64_t seed, std::size_t samples = 3);
// Each representative against R(h) for every h in its setwise stabilizer.
SampleStats check_stabilizer(std::uint64_t seed, std::size_t samples = 5);
// f(h.x) against R(h) f(x) over random Xbar facets, elements and points.
SampleStats check_equivariance_composite(std::uint64_t seed, std::size_t samples = 500);
// sigma charts against the Delta charts after substitution.
SampleStats check_refinement(std::uint64_t seed, std::size_t samples = 1000);
// |m(x) - mu~(f(x))| at the vertices, centroid and `samples` interior points
// of every Xbar facet.
SampleStats check_moment_triangulation(std::uint64_t seed, std::size_t samples = 20);
// |mu~(z) - mu(g(z))| on random points.
SampleStats check_mu_tilde_factorization(std::uint64_t seed, std::size_t samples = 1000);
// Vertices of Xbar that m sends to the barycenter.
std::vector<VertexLabel> barycenter_preimage();

}  // namespace cp2
