#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cp2tri/complex.hpp"

namespace cp2 {

// The 15-vertex complex: facets {nu, (1,b1), (2,b2), (3,b3), (4,b4)} with
// b_{nu(a)} != b_a.
SimplicialComplex gen_X();
// Same complex rebuilt from forbidden pairs and triples only.
SimplicialComplex gen_X_oracle();

// 33-vertex subdivision of X obtained by inserting a midpoint on each of the 18
// edges (a1,b)(a2,b) with a1 != a2.
SimplicialComplex gen_Xbar();
// Facet of X carrying a facet of Xbar (each Mid vertex replaced by both
// endpoints). Throws NotAFace if the result is not a facet of X.
Simplex carrier_facet(const Simplex& xbar_facet);
// Number of distinct b values among the Pair vertices of an X facet: 3 for
// the 72 facets split in two, 2 for the 36 facets split in four.
int x_facet_type(const Simplex& x_facet);

// Y on u(a,b), a,b in Z_3, and u(kappa), kappa in S_3. family(i) returns the
// facets of the i-th family (1..6) after deduplication.
std::vector<Simplex> gen_Y_family(int family);
SimplicialComplex gen_Y();

// Regular torus {3,6}_{p,q}: the triangular lattice Z^2 (basis vectors at 60
// degrees, triangles {x, x+(1,0), x+(0,1)} and {x+(1,0), x+(0,1), x+(1,1)})
// modulo the span of (p,q) and its 60 degree rotation (-q,p+q). Vertices are
// Int labels numbering the reduced representatives. Throws DegenerateQuotient
// when p < 0, q < 0 or p + q < 3.
SimplicialComplex gen_torus_36pq(int p, int q);
// Index of the sublattice spanned by (p-q, 2p+q) and (2p+q, p+2q).
std::int64_t literal_sublattice_index(int p, int q);

struct TorusLayer {
  SimplicialComplex T;
  SimplicialComplex P1;  // (12)(34) and (13)(24)
  SimplicialComplex P2;  // (12)(34) and (14)(23)
  SimplicialComplex P3;  // (13)(24) and (14)(23)
};
TorusLayer subcomplex_T_P(const SimplicialComplex& x);

// Boundary of the n-simplex (n >= 1), vertices 0..n.
SimplicialComplex gen_boundary_simplex(int n);
// Boundary of the n-dimensional cross-polytope; +e_j is Int(2j), -e_j Int(2j+1).
SimplicialComplex gen_cross_polytope(int n);
SimplicialComplex gen_cycle(int n);
SimplicialComplex gen_rp2_6();
SimplicialComplex gen_torus_7();
// 3x3 grid quotient on GridU labels.
SimplicialComplex gen_torus_9();
SimplicialComplex gen_triangle();
SimplicialComplex gen_sd_triangle();

// Dispatches "X", "X-oracle", "Xbar", "Y", "T", "P1", "P2", "P3",
// "torus:p,q", "boundary-simplex:n", "cross:n", "cycle:n", "rp2-6",
// "torus-7", "torus-9", "triangle", "sd-triangle". Throws UnknownName.
SimplicialComplex generate(std::string_view name);
std::vector<std::string> generator_names();

}  // namespace cp2
