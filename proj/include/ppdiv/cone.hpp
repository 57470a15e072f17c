#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "ppdiv/arith.hpp"
#include "ppdiv/linalg.hpp"

namespace ppdiv {

/// Minimal description of {x : <a, x> >= 0 for a in `inequalities`,
/// <e, x> = 0 for e in `equations`}: primitive extreme rays taken in the
/// orthogonal complement of the lineality space, and a canonical lineality
/// basis. Double description method with the combinatorial adjacency test.
struct ConeGenerators {
  std::vector<ZVector> rays;
  std::vector<ZVector> lineality;
};
ConeGenerators double_description(const std::vector<ZVector>& inequalities,
                                  const std::vector<ZVector>& equations, std::size_t dim);

/// A rational polyhedral cone carrying both descriptions.
///
/// Canonical form: rays are primitive, orthogonal to the lineality space and
/// sorted lexicographically; facets are primitive, orthogonal to the equation
/// space and sorted; lineality and equation bases are reduced row echelon
/// forms scaled to primitive rows. Two cones are equal iff their canonical
/// forms agree.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t dim, const std::vector<ZVector>& rays,
                              const std::vector<ZVector>& lineality = {});
  static Cone from_generators(std::size_t dim, const std::vector<QVector>& rays,
                              const std::vector<QVector>& lineality = {});
  static Cone from_inequalities(std::size_t dim, const std::vector<ZVector>& inequalities,
                                const std::vector<ZVector>& equations = {});
  static Cone zero(std::size_t dim);
  static Cone full(std::size_t dim);
  static Cone orthant(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dimension() const { return dim_ - equations_.size(); }
  const std::vector<ZVector>& rays() const { return rays_; }
  const std::vector<ZVector>& lineality() const { return lineality_; }
  const std::vector<ZVector>& facets() const { return facets_; }
  const std::vector<ZVector>& equations() const { return equations_; }

  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  bool contains(const QVector& x) const;
  bool contains(const ZVector& x) const;
  bool contains(const Cone& other) const;
  bool in_relative_interior(const QVector& x) const;

  /// Sum of the rays: a point of the relative interior.
  ZVector relative_interior_point() const;

  /// Rays together with both signs of each lineality vector.
  std::vector<ZVector> generators() const;

  Cone dual() const;
  Cone intersection(const Cone& other) const;
  Cone image(const LatticeMap& map) const;
  Cone preimage(const LatticeMap& map) const;

  /// All faces, including the cone itself and the lineality space, sorted.
  std::vector<Cone> faces() const;
  Cone minimal_face_containing(const QVector& x) const;
  bool has_face(const Cone& candidate) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);

 private:
  Cone(std::size_t dim, std::vector<ZVector> rays, std::vector<ZVector> lineality,
       std::vector<ZVector> facets, std::vector<ZVector> equations)
      : dim_(dim),
        rays_(std::move(rays)),
        lineality_(std::move(lineality)),
        facets_(std::move(facets)),
        equations_(std::move(equations)) {}

  std::size_t dim_ = 0;
  std::vector<ZVector> rays_;
  std::vector<ZVector> lineality_;
  std::vector<ZVector> facets_;
  std::vector<ZVector> equations_;
};

/// Minimal generating set of the semigroup c ∩ Z^n, sorted. Throws NotPointed.
std::vector<ZVector> hilbert_basis(const Cone& c);

/// Pulling triangulation of a pointed cone into simplicial cones, each given
/// by a linearly independent subset of the rays.
std::vector<std::vector<ZVector>> triangulate(const Cone& c);

}  // namespace ppdiv
