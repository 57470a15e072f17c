#include "ppdiv/polyhedron.hpp"

#include <algorithm>
#include <set>

namespace ppdiv {

namespace {

ZVector homogenize_point(const QVector& v) {
  QVector h = v;
  h.emplace_back(1);
  return primitive(h);
}

ZVector homogenize_ray(const ZVector& r) {
  ZVector h = r;
  h.emplace_back(0);
  return h;
}

// Splits the extreme rays of a homogenized cone into points (last
// coordinate > 0, dehomogenized) and directions (last coordinate 0).
void split_homogeneous(const std::vector<ZVector>& rays, std::size_t dim, std::vector<QVector>& points,
                       std::vector<ZVector>& directions) {
  for (const auto& r : rays) {
    if (r[dim] > 0) {
      QVector p(dim);
      for (std::size_t i = 0; i < dim; ++i) p[i] = Rational(r[i], r[dim]);
      points.push_back(std::move(p));
    } else {
      directions.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dim));
    }
  }
  std::sort(points.begin(), points.end());
}

}  // namespace

TailedPolyhedron::TailedPolyhedron(const std::vector<QVector>& points, const Cone& tail) : tail_(tail) {
  if (points.empty()) throw Error(Errc::EmptyPolyhedron, "a tailed polyhedron needs at least one point");
  if (!tail.is_pointed()) throw Error(Errc::NotPointed, "tail cone must be pointed");
  const std::size_t dim = tail.ambient_dim();
  std::vector<ZVector> gens;
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(Errc::DimensionMismatch, "point dimension differs from tail cone");
    gens.push_back(homogenize_point(p));
  }
  for (const auto& r : tail.rays()) gens.push_back(homogenize_ray(r));
  // Extreme rays of the homogenization, one double description pass each way.
  ConeGenerators facets = double_description(gens, {}, dim + 1);
  ConeGenerators extreme = double_description(facets.rays, facets.lineality, dim + 1);
  std::vector<ZVector> directions;
  split_homogeneous(extreme.rays, dim, vertices_, directions);
}

TailedPolyhedron TailedPolyhedron::neutral(const Cone& tail) {
  return TailedPolyhedron({zero_qvector(tail.ambient_dim())}, tail, 0);
}

TailedPolyhedron TailedPolyhedron::from_inequalities(std::size_t dim, const std::vector<HalfSpace>& inequalities,
                                                     const std::vector<HalfSpace>& equations) {
  auto homogenize = [dim](const HalfSpace& h) {
    if (h.normal.size() != dim) throw Error(Errc::DimensionMismatch, "half-space of wrong dimension");
    QVector row = h.normal;
    row.push_back(-h.bound);
    return primitive(row);
  };
  std::vector<ZVector> ineq, eq;
  for (const auto& h : inequalities) ineq.push_back(homogenize(h));
  ZVector t = zero_zvector(dim + 1);
  t[dim] = 1;
  ineq.push_back(t);
  for (const auto& h : equations) eq.push_back(homogenize(h));

  ConeGenerators gens = double_description(ineq, eq, dim + 1);
  if (!gens.lineality.empty()) throw Error(Errc::NotPointed, "system has a nontrivial lineality space");
  std::vector<QVector> vertices;
  std::vector<ZVector> directions;
  split_homogeneous(gens.rays, dim, vertices, directions);
  if (vertices.empty()) throw Error(Errc::EmptyPolyhedron, "inequality system is infeasible");
  return TailedPolyhedron(std::move(vertices), Cone::from_generators(dim, directions), 0);
}

bool TailedPolyhedron::contains(const QVector& x) const {
  QVector h = x;
  h.emplace_back(1);
  return homogenization().contains(h);
}

bool TailedPolyhedron::is_neutral() const { return vertices_.size() == 1 && is_zero(vertices_.front()); }

Cone TailedPolyhedron::homogenization() const {
  std::vector<ZVector> gens;
  for (const auto& v : vertices_) gens.push_back(homogenize_point(v));
  for (const auto& r : tail_.rays()) gens.push_back(homogenize_ray(r));
  return Cone::from_generators(ambient_dim() + 1, gens);
}

std::vector<PolyhedronFace> TailedPolyhedron::faces() const {
  const std::size_t dim = ambient_dim();
  std::vector<PolyhedronFace> out;
  for (const auto& g : homogenization().faces()) {
    std::vector<QVector> points;
    std::vector<ZVector> directions;
    split_homogeneous(g.rays(), dim, points, directions);
    if (points.empty()) continue;
    out.push_back({std::move(points), Cone::from_generators(dim, directions), g.dimension() - 1});
  }
  std::sort(out.begin(), out.end(), [](const PolyhedronFace& a, const PolyhedronFace& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.recession < b.recession;
  });
  return out;
}

std::strong_ordering operator<=>(const TailedPolyhedron& a, const TailedPolyhedron& b) {
  if (auto c = a.tail_ <=> b.tail_; c != 0) return c;
  if (a.vertices_ < b.vertices_) return std::strong_ordering::less;
  if (b.vertices_ < a.vertices_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TailedPolyhedron minkowski_sum(const TailedPolyhedron& a, const TailedPolyhedron& b) {
  if (!(a.tail() == b.tail())) throw Error(Errc::TailMismatch, "Minkowski sum of polyhedra with different tails");
  if (a.is_neutral()) return b;
  if (b.is_neutral()) return a;
  std::vector<QVector> sums;
  for (const auto& v : a.vertices())
    for (const auto& w : b.vertices()) sums.push_back(add(v, w));
  return TailedPolyhedron(sums, a.tail());
}

TailedPolyhedron scale(const Rational& alpha, const TailedPolyhedron& d) {
  if (alpha <= 0) throw Error(Errc::NonPositiveScalar, "scalar must be positive, got " + to_string(alpha));
  std::vector<QVector> pts;
  for (const auto& v : d.vertices()) pts.push_back(scaled(alpha, v));
  return TailedPolyhedron(pts, d.tail());
}

TailedPolyhedron translate(const TailedPolyhedron& d, const QVector& v) {
  std::vector<QVector> pts;
  for (const auto& w : d.vertices()) pts.push_back(add(w, v));
  return TailedPolyhedron(pts, d.tail());
}

Rational eval(const QVector& u, const TailedPolyhedron& d) {
  if (u.size() != d.ambient_dim()) throw Error(Errc::DimensionMismatch, "weight of wrong dimension");
  for (const auto& r : d.tail().rays())
    if (dot(r, u) < 0) throw Error(Errc::OutsideDomain, "weight is not in the dual of the tail cone");
  Rational best = dot(d.vertices().front(), u);
  for (const auto& v : d.vertices()) best = std::min(best, dot(v, u));
  return best;
}

FormalTailedDifference::FormalTailedDifference(TailedPolyhedron plus, TailedPolyhedron minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (!(plus_.tail() == minus_.tail())) throw Error(Errc::TailMismatch, "formal difference of different tails");
}

FormalTailedDifference::FormalTailedDifference(TailedPolyhedron plus)
    : plus_(std::move(plus)), minus_(TailedPolyhedron::neutral(plus_.tail())) {}

FormalTailedDifference operator+(const FormalTailedDifference& a, const FormalTailedDifference& b) {
  return {minkowski_sum(a.plus_, b.plus_), minkowski_sum(a.minus_, b.minus_)};
}

FormalTailedDifference operator-(const FormalTailedDifference& a, const FormalTailedDifference& b) {
  return {minkowski_sum(a.plus_, b.minus_), minkowski_sum(a.minus_, b.plus_)};
}

bool operator==(const FormalTailedDifference& a, const FormalTailedDifference& b) {
  return minkowski_sum(a.plus_, b.minus_) == minkowski_sum(b.plus_, a.minus_);
}

Rational eval(const QVector& u, const FormalTailedDifference& d) { return eval(u, d.plus()) - eval(u, d.minus()); }

Cone normal_cone(const TailedPolyhedron& d, const PolyhedronFace& face) {
  const std::size_t dim = d.ambient_dim();
  const QVector& base = face.vertices.front();
  std::vector<QVector> gens, lin;
  for (const auto& w : d.vertices()) gens.push_back(sub(w, base));
  for (const auto& r : d.tail().rays()) gens.push_back(to_rational(r));
  for (const auto& w : face.vertices) lin.push_back(sub(w, base));
  for (const auto& r : face.recession.rays()) lin.push_back(to_rational(r));
  return Cone::from_generators(dim, gens, lin).dual();
}

QuasiFan normal_quasifan(const TailedPolyhedron& d) {
  const std::size_t dim = d.ambient_dim();
  std::vector<Cone> cones;
  for (const auto& v : d.vertices()) {
    std::vector<QVector> gens;
    for (const auto& w : d.vertices()) gens.push_back(sub(w, v));
    for (const auto& r : d.tail().rays()) gens.push_back(to_rational(r));
    cones.push_back(Cone::from_generators(dim, gens, {}).dual());
  }
  return QuasiFan(dim, std::move(cones));
}

TailedPolyhedron support_function_roundtrip(const TailedPolyhedron& d) {
  std::set<ZVector> normals;
  const QuasiFan fan = normal_quasifan(d);
  for (const auto& c : fan.maximal_cones())
    for (auto& g : c.generators()) normals.insert(std::move(g));
  std::vector<HalfSpace> halfspaces;
  for (const auto& u : normals) {
    QVector q = to_rational(u);
    halfspaces.push_back({q, eval(q, d)});
  }
  return TailedPolyhedron::from_inequalities(d.ambient_dim(), halfspaces);
}

bool is_integral(const TailedPolyhedron& d) {
  return std::all_of(d.vertices().begin(), d.vertices().end(), [](const QVector& v) { return is_integral(v); });
}

}  // namespace ppdiv
