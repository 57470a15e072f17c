#pragma once

// Polyhedral divisors sum(Delta_i ⊗ D_i) over P^1, smooth affine curves and
// complete toric varieties.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppdiv/polyhedron.hpp"
#include "ppdiv/quasifan.hpp"

namespace ppdiv {

enum class BaseKind { P1, AffineCurve, Toric };

/// The variety Y carrying the divisor. Curve points are opaque labels; an
/// empty declared point list means any label names a point. Toric prime
/// divisors are the rays of the fan, labelled by their coordinates ("1,0").
class Base {
 public:
  static Base p1(std::vector<std::string> points = {});
  static Base affine_curve(std::vector<std::string> points = {});
  static Base toric(QuasiFan fan);

  BaseKind kind() const { return kind_; }
  bool is_curve() const { return kind_ != BaseKind::Toric; }
  const std::vector<std::string>& points() const { return points_; }
  const QuasiFan& fan() const { return fan_; }
  /// Fan rays, in the fan's canonical order.
  const std::vector<ZVector>& rays() const { return rays_; }

  /// Whether `label` names a prime divisor of this base.
  bool has_prime(const std::string& label) const;

  static std::string ray_label(const ZVector& ray);
  ZVector ray_of(const std::string& label) const;

  friend bool operator==(const Base& a, const Base& b) {
    return a.kind_ == b.kind_ && a.points_ == b.points_ && a.fan_ == b.fan_;
  }

 private:
  BaseKind kind_ = BaseKind::P1;
  std::vector<std::string> points_;
  QuasiFan fan_;
  std::vector<ZVector> rays_;
};

/// A Q-divisor sum(c_i D_i); zero coefficients are never stored.
class RationalDivisor {
 public:
  RationalDivisor() = default;
  explicit RationalDivisor(const std::map<std::string, Rational>& coefficients);

  const std::map<std::string, Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(const std::string& label) const;
  Rational degree() const;
  bool is_zero() const { return coefficients_.empty(); }

  friend RationalDivisor operator+(const RationalDivisor& a, const RationalDivisor& b);
  /// Coefficientwise comparison.
  friend bool operator<=(const RationalDivisor& a, const RationalDivisor& b);
  friend bool operator==(const RationalDivisor&, const RationalDivisor&) = default;

 private:
  std::map<std::string, Rational> coefficients_;
};

class PolyhedralDivisor {
 public:
  /// Coefficients must be tail-polyhedra at prime divisors of `base`.
  /// Coefficients equal to the tail itself (the neutral element) are dropped.
  PolyhedralDivisor(std::size_t lattice_rank, Cone tail, Base base,
                    std::map<std::string, TailedPolyhedron> coefficients = {});

  std::size_t lattice_rank() const { return rank_; }
  const Cone& tail() const { return tail_; }
  const Base& base() const { return base_; }
  const std::map<std::string, TailedPolyhedron>& coefficients() const { return coefficients_; }
  /// The coefficient at `label`, the tail cone if there is none.
  TailedPolyhedron coefficient(const std::string& label) const;
  /// Dual of the tail: the domain of evaluation.
  const Cone& weight_cone() const { return weight_cone_; }

  friend bool operator==(const PolyhedralDivisor& a, const PolyhedralDivisor& b) {
    return a.rank_ == b.rank_ && a.tail_ == b.tail_ && a.base_ == b.base_ && a.coefficients_ == b.coefficients_;
  }

 private:
  std::size_t rank_;
  Cone tail_;
  Cone weight_cone_;
  Base base_;
  std::map<std::string, TailedPolyhedron> coefficients_;
};

/// Lattice translations v_y attached to points of P^1 with sum(v_y) = 0; its
/// divisor translates the coefficient at y by v_y.
struct Plurifunction {
  std::map<std::string, ZVector> shifts;

  friend bool operator==(const Plurifunction&, const Plurifunction&) = default;
};

/// D(u) = sum eval_u(Delta_i) D_i. Throws OutsideWeightCone.
RationalDivisor evaluate(const PolyhedralDivisor& D, const QVector& u);

/// Coarsest quasifan on the weight cone where u -> D(u) is linear.
QuasiFan evaluation_quasifan(const PolyhedralDivisor& D);

/// Minkowski sum of all coefficients (every point of P^1 has degree one).
/// Throws NotProjectiveCurve on other bases.
TailedPolyhedron polyhedral_degree(const PolyhedralDivisor& D);

struct PropernessReport {
  bool proper = false;
  std::string reason;                 // why it failed; empty when proper
  std::vector<std::string> notes;     // checks performed, in order
  std::optional<TailedPolyhedron> degree;
};

/// Properness test. On P^1 via the polyhedral degree; on affine curves every
/// polyhedral divisor is proper; on toric bases the evaluations are checked
/// for being Q-Cartier, semiample and (in the interior) big. Throws
/// IncompleteToricFan if the fan is not complete.
PropernessReport is_proper(const PolyhedralDivisor& D);

/// Coefficientwise Minkowski sum. Throws Mismatch.
PolyhedralDivisor add(const PolyhedralDivisor& a, const PolyhedralDivisor& b);

/// D + div(f). Throws DegreeNotZero, UnsupportedBase off P^1.
PolyhedralDivisor add_principal(const PolyhedralDivisor& D, const Plurifunction& f);

/// f with D1 + div(f) = D2 when it exists.
std::optional<Plurifunction> linear_equivalent_P1(const PolyhedralDivisor& D1, const PolyhedralDivisor& D2);

bool is_integral_divisor(const PolyhedralDivisor& D);

}  // namespace ppdiv
