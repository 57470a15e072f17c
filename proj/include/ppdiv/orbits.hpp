#pragma once

// Fibers of the quotient map X -> Y over a point y and the torus orbits in
// them: fiber polyhedra, the lattices M_{y,lambda}, isotropy groups, the
// components of the fiber, and when two orbits over different points of a
// curve become one orbit in the affine variety.

#include <string>
#include <utility>
#include <vector>

#include "ppdiv/poldiv.hpp"

namespace ppdiv {

struct ConeLattice {
  Cone cone;
  std::vector<ZVector> basis;  // Hermite basis of the sublattice of M ∩ lin(cone)
};

struct OrbitRecord {
  PolyhedronFace face;
  std::vector<std::size_t> face_vertices;  // indices into the fiber polyhedron's vertices
  Cone orbit_cone;
  std::vector<ZVector> orbit_lattice;
  std::vector<Integer> isotropy_invariants;
  std::size_t dimension = 0;
};

struct FiberComponent {
  QVector vertex;
  Cone cone;                      // in the dual of the component lattice
  std::vector<ZVector> lattice;   // basis of M_{y,lambda(v)}
};

struct FiberReport {
  std::string point;
  TailedPolyhedron fiber_polyhedron;
  QuasiFan normal_quasifan;
  std::vector<ConeLattice> cone_lattices;
  std::vector<OrbitRecord> orbits;
  bool reduced = false;
};

/// Delta_y for a point of a curve base; sigma off the support. Throws UnknownPoint.
TailedPolyhedron fiber_polyhedron(const PolyhedralDivisor& D, const std::string& y);
/// Sum of the coefficients at the given rays of a toric base. Throws UnknownRay.
TailedPolyhedron fiber_polyhedron(const PolyhedralDivisor& D, const std::vector<ZVector>& stratum);

/// M_{y,lambda} for the maximal cones lambda of Lambda(Delta_y).
std::vector<ConeLattice> fiber_lattices(const PolyhedralDivisor& D, const std::string& y);

FiberReport fiber_orbits(const PolyhedralDivisor& D, const std::string& y);

std::vector<FiberComponent> fiber_components(const PolyhedralDivisor& D, const std::string& y);

bool is_fiber_reduced(const PolyhedralDivisor& D, const std::string& y);

/// Normal quasifan of the sum of all coefficients.
QuasiFan git_quasifan(const PolyhedralDivisor& D);

/// Whether the orbits of (y1, F1) and (y2, F2) coincide in X. Throws FaceNotInFiber.
bool orbit_identification(const PolyhedralDivisor& D, const std::pair<std::string, PolyhedronFace>& a,
                          const std::pair<std::string, PolyhedronFace>& b);

enum class SurfaceClass { Elliptic, Parabolic, Hyperbolic };

std::string to_string(SurfaceClass c);

/// Type of the K*-surface of a rank-one datum over a curve. Throws NotASurfaceDatum.
SurfaceClass classify_k_star_surface(const PolyhedralDivisor& D);

}  // namespace ppdiv
