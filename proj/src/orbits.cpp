#include "ppdiv/orbits.hpp"

#include <algorithm>

namespace ppdiv {

namespace {

void require_curve(const PolyhedralDivisor& D) {
  if (!D.base().is_curve()) throw Error(Errc::UnsupportedBase, "fiber analysis needs a curve base");
}

// {u in M ∩ lin(lambda) : <u, v> in Z}, in Hermite form.
std::vector<ZVector> principal_lattice(const Cone& lambda, const QVector& v) {
  const std::size_t n = lambda.ambient_dim();
  if (lambda.is_zero()) return {};
  const std::vector<ZVector> B = saturated_span(lambda.generators(), n);
  const std::size_t k = B.size();
  QVector w(k);
  Integer d = 1;
  for (std::size_t i = 0; i < k; ++i) {
    w[i] = dot(B[i], v);
    d = lcm(d, boost::multiprecision::denominator(w[i]));
  }
  ZVector row(k + 1);
  for (std::size_t i = 0; i < k; ++i) row[i] = boost::multiprecision::numerator(Rational(w[i] * d));
  row[k] = d;
  std::vector<ZVector> gens;
  for (const auto& c : kernel_basis(LatticeMap({row}, k + 1))) {
    ZVector u = zero_zvector(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) u[j] += c[i] * B[i][j];
    gens.push_back(std::move(u));
  }
  return hermite_basis(gens, n);
}

const QVector& minimizing_vertex(const TailedPolyhedron& delta, const QVector& u) {
  const QVector* best = &delta.vertices().front();
  for (const auto& v : delta.vertices())
    if (dot(v, u) < dot(*best, u)) best = &v;
  return *best;
}

Cone vertex_cone(const TailedPolyhedron& delta, const QVector& v) {
  std::vector<QVector> gens;
  for (const auto& w : delta.vertices()) gens.push_back(sub(w, v));
  for (const auto& r : delta.tail().rays()) gens.push_back(to_rational(r));
  return Cone::from_generators(delta.ambient_dim(), gens, {});
}

}  // namespace

TailedPolyhedron fiber_polyhedron(const PolyhedralDivisor& D, const std::string& y) {
  require_curve(D);
  if (!D.base().has_prime(y)) throw Error(Errc::UnknownPoint, "no point " + y + " on the base");
  return D.coefficient(y);
}

TailedPolyhedron fiber_polyhedron(const PolyhedralDivisor& D, const std::vector<ZVector>& stratum) {
  if (D.base().kind() != BaseKind::Toric) throw Error(Errc::UnsupportedBase, "strata are given by rays of a toric base");
  TailedPolyhedron sum = TailedPolyhedron::neutral(D.tail());
  for (const auto& ray : stratum) {
    const std::string label = Base::ray_label(ray);
    if (!D.base().has_prime(label)) throw Error(Errc::UnknownRay, "no fan ray " + label);
    sum = minkowski_sum(sum, D.coefficient(label));
  }
  return sum;
}

std::vector<ConeLattice> fiber_lattices(const PolyhedralDivisor& D, const std::string& y) {
  const TailedPolyhedron delta = fiber_polyhedron(D, y);
  const QuasiFan fan = normal_quasifan(delta);
  std::vector<ConeLattice> out;
  for (const auto& lam : fan.maximal_cones()) {
    const QVector& v = minimizing_vertex(delta, to_rational(lam.relative_interior_point()));
    out.push_back({lam, principal_lattice(lam, v)});
  }
  return out;
}

FiberReport fiber_orbits(const PolyhedralDivisor& D, const std::string& y) {
  FiberReport rep;
  rep.point = y;
  rep.fiber_polyhedron = fiber_polyhedron(D, y);
  rep.normal_quasifan = normal_quasifan(rep.fiber_polyhedron);
  rep.cone_lattices = fiber_lattices(D, y);
  rep.reduced = is_integral(rep.fiber_polyhedron);
  const auto& vertices = rep.fiber_polyhedron.vertices();
  for (auto& face : rep.fiber_polyhedron.faces()) {
    OrbitRecord orbit;
    for (const auto& v : face.vertices)
      orbit.face_vertices.push_back(
          static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin()));
    orbit.orbit_cone = normal_cone(rep.fiber_polyhedron, face);
    orbit.orbit_lattice = principal_lattice(orbit.orbit_cone, face.vertices.front());
    orbit.isotropy_invariants = quotient_invariants(D.lattice_rank(), orbit.orbit_lattice);
    orbit.dimension = orbit.orbit_cone.dimension();
    orbit.face = std::move(face);
    rep.orbits.push_back(std::move(orbit));
  }
  return rep;
}

std::vector<FiberComponent> fiber_components(const PolyhedralDivisor& D, const std::string& y) {
  const TailedPolyhedron delta = fiber_polyhedron(D, y);
  std::vector<FiberComponent> out;
  for (const auto& v : delta.vertices()) {
    const Cone omega = vertex_cone(delta, v);
    std::vector<ZVector> lattice = principal_lattice(omega.dual(), v);
    std::vector<QVector> gens;
    for (const auto& g : omega.rays()) {
      QVector image(lattice.size());
      for (std::size_t i = 0; i < lattice.size(); ++i) image[i] = dot(lattice[i], to_rational(g));
      gens.push_back(std::move(image));
    }
    out.push_back({v, Cone::from_generators(lattice.size(), gens, std::vector<QVector>{}), std::move(lattice)});
  }
  return out;
}

bool is_fiber_reduced(const PolyhedralDivisor& D, const std::string& y) { return is_integral(fiber_polyhedron(D, y)); }

QuasiFan git_quasifan(const PolyhedralDivisor& D) {
  TailedPolyhedron sum = TailedPolyhedron::neutral(D.tail());
  for (const auto& [label, delta] : D.coefficients()) sum = minkowski_sum(sum, delta);
  return normal_quasifan(sum);
}

bool orbit_identification(const PolyhedralDivisor& D, const std::pair<std::string, PolyhedronFace>& a,
                          const std::pair<std::string, PolyhedronFace>& b) {
  require_curve(D);
  auto orbit_cone = [&](const std::pair<std::string, PolyhedronFace>& p) {
    const TailedPolyhedron delta = fiber_polyhedron(D, p.first);
    const auto faces = delta.faces();
    if (std::find(faces.begin(), faces.end(), p.second) == faces.end())
      throw Error(Errc::FaceNotInFiber, "face is not a face of the fiber polyhedron at " + p.first);
    return normal_cone(delta, p.second);
  };
  const Cone lam = orbit_cone(a);
  if (!(lam == orbit_cone(b))) return false;
  if (a.first == b.first) return true;
  if (D.base().kind() != BaseKind::P1) return false;

  // Some u in relint(lambda) with deg D(u) = 0: on lambda(w) the degree is <., w>.
  const TailedPolyhedron deg = polyhedral_degree(D);
  const std::size_t n = D.lattice_rank();
  for (const auto& w : deg.vertices()) {
    Cone zero = lam.intersection(vertex_cone(deg, w).dual());
    if (!is_zero(w)) zero = zero.intersection(Cone::from_inequalities(n, {}, {primitive(w)}));
    if (lam.in_relative_interior(to_rational(zero.relative_interior_point()))) return true;
  }
  return false;
}

std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Elliptic:
      return "elliptic";
    case SurfaceClass::Parabolic:
      return "parabolic";
    case SurfaceClass::Hyperbolic:
      return "hyperbolic";
  }
  return {};
}

SurfaceClass classify_k_star_surface(const PolyhedralDivisor& D) {
  if (D.lattice_rank() != 1 || !D.base().is_curve())
    throw Error(Errc::NotASurfaceDatum, "a K*-surface needs lattice rank one over a curve");
  if (!is_proper(D).proper) throw Error(Errc::NotASurfaceDatum, "the divisor is not proper");
  if (D.base().kind() == BaseKind::P1) return SurfaceClass::Elliptic;
  return D.tail().is_zero() ? SurfaceClass::Hyperbolic : SurfaceClass::Parabolic;
}

}  // namespace ppdiv
