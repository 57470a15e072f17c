#pragma once

#include <vector>

#include "ppdiv/cone.hpp"
#include "ppdiv/linalg.hpp"

namespace ppdiv {

/// A finite collection of cones closed under taking faces, stored by its
/// inclusion-maximal cones in sorted canonical order. Faces are derived.
class QuasiFan {
 public:
  QuasiFan() = default;
  QuasiFan(std::size_t dim, std::vector<Cone> cones);

  static QuasiFan face_fan(const Cone& c) { return QuasiFan(c.ambient_dim(), {c}); }

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Cone>& maximal_cones() const { return cones_; }

  /// Every cone of the quasifan (all faces of the maximal cones), sorted.
  std::vector<Cone> cones() const;
  /// Primitive generators of the one-dimensional cones, sorted.
  std::vector<ZVector> rays() const;
  /// Cone generated by all maximal cones (the support when it is convex).
  Cone support() const;

  bool is_fan() const;
  bool is_complete() const;
  /// Every cone of *this lies in some cone of `coarser`.
  bool refines(const QuasiFan& coarser) const;

  friend bool operator==(const QuasiFan& a, const QuasiFan& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Cone> cones_;
};

/// Pairwise intersections of maximal cones are faces of both.
bool validate(const QuasiFan& f);

/// Coarsest common refinement; both supports must agree. Throws SupportMismatch.
QuasiFan common_refinement(const QuasiFan& f, const QuasiFan& g);

/// The minimal cone of `f` containing `u`. Throws OutsideSupport.
Cone locate(const QuasiFan& f, const QVector& u);

/// Coarsest fan supported on P(delta) refining every image P(delta_0) of a
/// face of delta.
QuasiFan projected_face_fan(const Cone& delta, const LatticeMap& P);

}  // namespace ppdiv
