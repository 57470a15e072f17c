#pragma once

// Tailed polyhedra: Delta = conv(vertices) + sigma for a fixed pointed tail
// cone sigma. With Minkowski addition they form a cancellative semigroup with
// neutral element sigma; evaluation u -> min <u, Delta> identifies a
// polyhedron with its support function on the dual cone.

#include <compare>
#include <utility>
#include <vector>

#include "ppdiv/cone.hpp"
#include "ppdiv/quasifan.hpp"

namespace ppdiv {

/// A face of a tailed polyhedron: its vertices and its recession cone, which
/// is a face of the tail.
struct PolyhedronFace {
  std::vector<QVector> vertices;
  Cone recession;
  std::size_t dimension = 0;

  friend bool operator==(const PolyhedronFace&, const PolyhedronFace&) = default;
};

/// A (possibly affine) inequality <normal, x> >= bound.
struct HalfSpace {
  QVector normal;
  Rational bound;
};

class TailedPolyhedron {
 public:
  TailedPolyhedron() = default;

  /// conv(points) + tail. Throws EmptyPolyhedron for no points and NotPointed
  /// for a tail with lineality.
  TailedPolyhedron(const std::vector<QVector>& points, const Cone& tail);

  static TailedPolyhedron point(const QVector& v, const Cone& tail) { return {{v}, tail}; }
  static TailedPolyhedron neutral(const Cone& tail);

  /// {x : <a, x> >= b for all (a, b)}; the tail is the recession cone of the
  /// system. Throws EmptyPolyhedron or NotPointed.
  static TailedPolyhedron from_inequalities(std::size_t dim, const std::vector<HalfSpace>& inequalities,
                                            const std::vector<HalfSpace>& equations = {});

  std::size_t ambient_dim() const { return tail_.ambient_dim(); }
  const Cone& tail() const { return tail_; }
  const std::vector<QVector>& vertices() const { return vertices_; }

  bool contains(const QVector& x) const;
  bool is_neutral() const;

  /// The cone over Delta x {1} in Q^{n+1}.
  Cone homogenization() const;

  /// All nonempty faces, the polyhedron itself included.
  std::vector<PolyhedronFace> faces() const;

  friend bool operator==(const TailedPolyhedron& a, const TailedPolyhedron& b) {
    return a.vertices_ == b.vertices_ && a.tail_ == b.tail_;
  }
  friend std::strong_ordering operator<=>(const TailedPolyhedron& a, const TailedPolyhedron& b);

 private:
  TailedPolyhedron(std::vector<QVector> vertices, Cone tail, int)
      : tail_(std::move(tail)), vertices_(std::move(vertices)) {}

  Cone tail_;
  std::vector<QVector> vertices_;
};

/// Throws TailMismatch if the tails differ.
TailedPolyhedron minkowski_sum(const TailedPolyhedron& a, const TailedPolyhedron& b);
/// Throws NonPositiveScalar for alpha <= 0.
TailedPolyhedron scale(const Rational& alpha, const TailedPolyhedron& d);
TailedPolyhedron translate(const TailedPolyhedron& d, const QVector& v);

/// min over d of <u, .>. Throws OutsideDomain if u is not in the dual of the tail.
Rational eval(const QVector& u, const TailedPolyhedron& d);

/// A formal difference plus - minus in the Grothendieck group of the
/// semigroup of sigma-polyhedra.
class FormalTailedDifference {
 public:
  FormalTailedDifference(TailedPolyhedron plus, TailedPolyhedron minus);
  explicit FormalTailedDifference(TailedPolyhedron plus);

  const TailedPolyhedron& plus() const { return plus_; }
  const TailedPolyhedron& minus() const { return minus_; }
  const Cone& tail() const { return plus_.tail(); }

  friend FormalTailedDifference operator+(const FormalTailedDifference& a, const FormalTailedDifference& b);
  friend FormalTailedDifference operator-(const FormalTailedDifference& a, const FormalTailedDifference& b);
  /// a+ + b- == b+ + a-, which by cancellation is equality of all evaluations.
  friend bool operator==(const FormalTailedDifference& a, const FormalTailedDifference& b);

 private:
  TailedPolyhedron plus_;
  TailedPolyhedron minus_;
};

Rational eval(const QVector& u, const FormalTailedDifference& d);

/// The cone lambda(F) of all u whose minimum over Delta is attained on all of F.
Cone normal_cone(const TailedPolyhedron& d, const PolyhedronFace& face);

/// Lambda(Delta): the maximal cones are lambda(v) for the vertices v.
QuasiFan normal_quasifan(const TailedPolyhedron& d);

/// Rebuilds Delta from the supporting half-spaces <u, x> >= h(u) taken at the
/// generators of the cones of its normal quasifan.
TailedPolyhedron support_function_roundtrip(const TailedPolyhedron& d);

bool is_integral(const TailedPolyhedron& d);

}  // namespace ppdiv
