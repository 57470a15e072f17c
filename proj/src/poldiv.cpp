#include "ppdiv/poldiv.hpp"

#include <algorithm>
#include <set>

namespace ppdiv {

namespace {

// Some solution of the (possibly overdetermined) system A x = b over Q.
std::optional<QVector> solve_consistent(const std::vector<QVector>& A, const QVector& b, std::size_t n) {
  std::vector<QVector> m;
  for (std::size_t i = 0; i < A.size(); ++i) {
    QVector row = A[i];
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[r][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i)
    if (m[i][n] != 0) return std::nullopt;
  QVector x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = m[i][n] / m[i][pivots[i]];
  return x;
}

void check_same_frame(const PolyhedralDivisor& a, const PolyhedralDivisor& b) {
  if (a.lattice_rank() != b.lattice_rank() || !(a.tail() == b.tail()) || !(a.base() == b.base()))
    throw Error(Errc::Mismatch, "divisors live over different bases, lattices or tails");
}

// Coefficients of D(u) at the rays of a toric base, zero for absent rays.
std::vector<Rational> ray_values(const PolyhedralDivisor& D, const QVector& u) {
  RationalDivisor e = evaluate(D, u);
  std::vector<Rational> out;
  for (const auto& ray : D.base().rays()) out.push_back(e.coefficient(Base::ray_label(ray)));
  return out;
}

std::string describe(const QVector& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + to_string(u[i]);
  return s + ")";
}

PropernessReport proper_on_p1(const PolyhedralDivisor& D) {
  PropernessReport rep;
  rep.notes.push_back("coefficients are tail-polyhedra at distinct points");
  TailedPolyhedron deg = polyhedral_degree(D);
  rep.degree = deg;
  const Cone& sigma = D.tail();
  for (const auto& v : deg.vertices())
    if (!sigma.contains(v)) {
      rep.reason = "polyhedral degree is not contained in the tail cone";
      return rep;
    }
  if (deg.is_neutral()) {
    rep.reason = "polyhedral degree equals the tail cone";
    return rep;
  }
  rep.notes.push_back("polyhedral degree is a proper subset of the tail cone");

  // On the cone lambda(v) the degree evaluates to <., v> >= 0; its zero set is
  // the face cut out by v, which must avoid the interior of the weight cone.
  const Cone& omega = D.weight_cone();
  for (const auto& v : deg.vertices()) {
    std::vector<QVector> gens;
    for (const auto& w : deg.vertices()) gens.push_back(sub(w, v));
    for (const auto& r : sigma.rays()) gens.push_back(to_rational(r));
    Cone lam = Cone::from_generators(D.lattice_rank(), gens, {}).dual();
    Cone zero = is_zero(v) ? lam : lam.intersection(Cone::from_inequalities(D.lattice_rank(), {}, {primitive(v)}));
    if (omega.in_relative_interior(to_rational(zero.relative_interior_point()))) {
      rep.reason = "degree vanishes at an interior weight";
      return rep;
    }
  }
  rep.notes.push_back("zero locus of the degree lies in the boundary of the weight cone");
  rep.notes.push_back("degree-zero evaluations have principal multiples on P1");
  rep.proper = true;
  return rep;
}

PropernessReport proper_on_toric(const PolyhedralDivisor& D) {
  const QuasiFan& fan = D.base().fan();
  if (!fan.is_fan() || !fan.is_complete())
    throw Error(Errc::IncompleteToricFan, "properness is only decided over complete fans");
  PropernessReport rep;
  const std::size_t r = fan.ambient_dim();
  const auto& rays = D.base().rays();
  const QuasiFan lambda = evaluation_quasifan(D);

  std::set<ZVector> generators;
  for (const auto& c : lambda.maximal_cones())
    for (auto& g : c.generators()) generators.insert(std::move(g));

  for (const auto& g : generators) {
    const QVector u = to_rational(g);
    const std::vector<Rational> a = ray_values(D, u);
    std::vector<QVector> m_cones;
    for (const auto& c : fan.maximal_cones()) {
      std::vector<QVector> A;
      QVector b;
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (c.contains(rays[i])) {
          A.push_back(to_rational(rays[i]));
          b.push_back(-a[i]);
        }
      auto m = solve_consistent(A, b, r);
      if (!m) {
        rep.reason = "evaluation at " + describe(u) + " is not Q-Cartier";
        return rep;
      }
      m_cones.push_back(std::move(*m));
    }
    for (const auto& m : m_cones)
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (dot(rays[i], m) < -a[i]) {
          rep.reason = "evaluation at " + describe(u) + " is not semiample";
          return rep;
        }
  }
  rep.notes.push_back("evaluations are Q-Cartier at all quasifan generators");
  rep.notes.push_back("evaluations are semiample at all quasifan generators");

  const Cone& omega = D.weight_cone();
  for (const auto& c : lambda.cones()) {
    const QVector u = to_rational(c.relative_interior_point());
    if (!omega.in_relative_interior(u)) continue;
    const std::vector<Rational> a = ray_values(D, u);
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < rays.size(); ++i) hs.push_back({to_rational(rays[i]), -a[i]});
    bool big = false;
    try {
      TailedPolyhedron p = TailedPolyhedron::from_inequalities(r, hs);
      std::vector<QVector> diffs;
      for (const auto& v : p.vertices()) diffs.push_back(sub(v, p.vertices().front()));
      big = rank(diffs) == r;
    } catch (const Error& e) {
      if (e.code() != Errc::EmptyPolyhedron) throw;
    }
    if (!big) {
      rep.reason = "evaluation at " + describe(u) + " is not big";
      return rep;
    }
  }
  rep.notes.push_back("evaluations are big in the interior of the weight cone");
  rep.proper = true;
  return rep;
}

}  // namespace

Base Base::p1(std::vector<std::string> points) {
  Base b;
  b.kind_ = BaseKind::P1;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  b.points_ = std::move(points);
  return b;
}

Base Base::affine_curve(std::vector<std::string> points) {
  Base b = p1(std::move(points));
  b.kind_ = BaseKind::AffineCurve;
  return b;
}

Base Base::toric(QuasiFan fan) {
  if (!fan.is_fan()) throw Error(Errc::InvalidInput, "toric base needs a fan of pointed cones");
  Base b;
  b.kind_ = BaseKind::Toric;
  b.rays_ = fan.rays();
  b.fan_ = std::move(fan);
  return b;
}

std::string Base::ray_label(const ZVector& ray) {
  std::string s;
  for (std::size_t i = 0; i < ray.size(); ++i) s += (i ? "," : "") + to_string(ray[i]);
  return s;
}

ZVector Base::ray_of(const std::string& label) const {
  for (const auto& r : rays_)
    if (ray_label(r) == label) return r;
  throw Error(Errc::UnknownRay, "no fan ray " + label);
}

bool Base::has_prime(const std::string& label) const {
  if (kind_ == BaseKind::Toric)
    return std::any_of(rays_.begin(), rays_.end(), [&](const ZVector& r) { return ray_label(r) == label; });
  if (label.empty()) return false;
  return points_.empty() || std::binary_search(points_.begin(), points_.end(), label);
}

RationalDivisor::RationalDivisor(const std::map<std::string, Rational>& coefficients) {
  for (const auto& [k, v] : coefficients)
    if (v != 0) coefficients_.emplace(k, v);
}

Rational RationalDivisor::coefficient(const std::string& label) const {
  auto it = coefficients_.find(label);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

Rational RationalDivisor::degree() const {
  Rational d = 0;
  for (const auto& [k, v] : coefficients_) d += v;
  return d;
}

RationalDivisor operator+(const RationalDivisor& a, const RationalDivisor& b) {
  std::map<std::string, Rational> sum = a.coefficients_;
  for (const auto& [k, v] : b.coefficients_) sum[k] += v;
  return RationalDivisor(sum);
}

bool operator<=(const RationalDivisor& a, const RationalDivisor& b) {
  std::set<std::string> labels;
  for (const auto& [k, v] : a.coefficients_) labels.insert(k);
  for (const auto& [k, v] : b.coefficients_) labels.insert(k);
  return std::all_of(labels.begin(), labels.end(),
                     [&](const std::string& l) { return a.coefficient(l) <= b.coefficient(l); });
}

PolyhedralDivisor::PolyhedralDivisor(std::size_t lattice_rank, Cone tail, Base base,
                                     std::map<std::string, TailedPolyhedron> coefficients)
    : rank_(lattice_rank), tail_(std::move(tail)), base_(std::move(base)) {
  if (tail_.ambient_dim() != rank_) throw Error(Errc::DimensionMismatch, "tail cone has the wrong rank");
  if (!tail_.is_pointed()) throw Error(Errc::NotPointed, "tail cone must be pointed");
  weight_cone_ = tail_.dual();
  for (auto& [label, delta] : coefficients) {
    if (!base_.has_prime(label))
      throw Error(base_.kind() == BaseKind::Toric ? Errc::UnknownRay : Errc::UnknownPoint,
                  "no prime divisor " + label + " on the base");
    if (!(delta.tail() == tail_)) throw Error(Errc::TailMismatch, "coefficient at " + label + " has another tail");
    if (!delta.is_neutral()) coefficients_.emplace(label, std::move(delta));
  }
}

TailedPolyhedron PolyhedralDivisor::coefficient(const std::string& label) const {
  auto it = coefficients_.find(label);
  return it == coefficients_.end() ? TailedPolyhedron::neutral(tail_) : it->second;
}

RationalDivisor evaluate(const PolyhedralDivisor& D, const QVector& u) {
  if (u.size() != D.lattice_rank()) throw Error(Errc::DimensionMismatch, "weight of wrong rank");
  if (!D.weight_cone().contains(u)) throw Error(Errc::OutsideWeightCone, "weight " + describe(u) + " is outside the weight cone");
  std::map<std::string, Rational> c;
  for (const auto& [label, delta] : D.coefficients()) c[label] = eval(u, delta);
  return RationalDivisor(c);
}

QuasiFan evaluation_quasifan(const PolyhedralDivisor& D) {
  QuasiFan fan = QuasiFan::face_fan(D.weight_cone());
  for (const auto& [label, delta] : D.coefficients()) fan = common_refinement(fan, normal_quasifan(delta));
  return fan;
}

TailedPolyhedron polyhedral_degree(const PolyhedralDivisor& D) {
  if (D.base().kind() != BaseKind::P1) throw Error(Errc::NotProjectiveCurve, "polyhedral degree needs a P1 base");
  TailedPolyhedron deg = TailedPolyhedron::neutral(D.tail());
  for (const auto& [label, delta] : D.coefficients()) deg = minkowski_sum(deg, delta);
  return deg;
}

PropernessReport is_proper(const PolyhedralDivisor& D) {
  switch (D.base().kind()) {
    case BaseKind::P1:
      return proper_on_p1(D);
    case BaseKind::AffineCurve: {
      PropernessReport rep;
      rep.proper = true;
      rep.notes.push_back("coefficients are tail-polyhedra at distinct points");
      rep.notes.push_back("every evaluation on an affine curve is semiample and big");
      return rep;
    }
    case BaseKind::Toric:
      return proper_on_toric(D);
  }
  throw Error(Errc::UnsupportedBase, "unknown base");
}

PolyhedralDivisor add(const PolyhedralDivisor& a, const PolyhedralDivisor& b) {
  check_same_frame(a, b);
  std::map<std::string, TailedPolyhedron> sum = a.coefficients();
  for (const auto& [label, delta] : b.coefficients()) {
    auto it = sum.find(label);
    if (it == sum.end())
      sum.emplace(label, delta);
    else
      it->second = minkowski_sum(it->second, delta);
  }
  return PolyhedralDivisor(a.lattice_rank(), a.tail(), a.base(), std::move(sum));
}

PolyhedralDivisor add_principal(const PolyhedralDivisor& D, const Plurifunction& f) {
  if (D.base().kind() != BaseKind::P1) throw Error(Errc::UnsupportedBase, "principal polyhedral divisors need a P1 base");
  ZVector total = zero_zvector(D.lattice_rank());
  for (const auto& [label, v] : f.shifts) {
    if (v.size() != D.lattice_rank()) throw Error(Errc::DimensionMismatch, "shift of wrong rank at " + label);
    total = add(total, v);
  }
  if (!is_zero(total)) throw Error(Errc::DegreeNotZero, "shifts of a plurifunction must sum to zero");
  std::map<std::string, TailedPolyhedron> c = D.coefficients();
  for (const auto& [label, v] : f.shifts) c[label] = translate(D.coefficient(label), to_rational(v));
  return PolyhedralDivisor(D.lattice_rank(), D.tail(), D.base(), std::move(c));
}

std::optional<Plurifunction> linear_equivalent_P1(const PolyhedralDivisor& D1, const PolyhedralDivisor& D2) {
  if (D1.base().kind() != BaseKind::P1 || D2.base().kind() != BaseKind::P1)
    throw Error(Errc::UnsupportedBase, "linear equivalence is decided over P1 only");
  check_same_frame(D1, D2);
  std::set<std::string> labels;
  for (const auto& [k, v] : D1.coefficients()) labels.insert(k);
  for (const auto& [k, v] : D2.coefficients()) labels.insert(k);
  Plurifunction f;
  ZVector total = zero_zvector(D1.lattice_rank());
  for (const auto& label : labels) {
    const TailedPolyhedron a = D1.coefficient(label), b = D2.coefficient(label);
    if (a.vertices().size() != b.vertices().size()) return std::nullopt;
    const QVector shift = sub(b.vertices().front(), a.vertices().front());
    if (!is_integral(shift) || !(translate(a, shift) == b)) return std::nullopt;
    ZVector v = to_integer(shift);
    total = add(total, v);
    if (!is_zero(v)) f.shifts.emplace(label, std::move(v));
  }
  if (!is_zero(total)) return std::nullopt;
  return f;
}

bool is_integral_divisor(const PolyhedralDivisor& D) {
  return std::all_of(D.coefficients().begin(), D.coefficients().end(),
                     [](const auto& kv) { return is_integral(kv.second); });
}

}  // namespace ppdiv
