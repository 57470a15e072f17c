#include "ppdiv/quasifan.hpp"

#include <algorithm>
#include <set>

namespace ppdiv {

QuasiFan::QuasiFan(std::size_t dim, std::vector<Cone> cones) : dim_(dim) {
  for (const auto& c : cones)
    if (c.ambient_dim() != dim) throw Error(Errc::DimensionMismatch, "cone of wrong ambient rank in quasifan");
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cones.size() && !dominated; ++j)
      if (i != j && cones[j].contains(cones[i])) dominated = true;
    if (!dominated) cones_.push_back(cones[i]);
  }
}

std::vector<Cone> QuasiFan::cones() const {
  std::set<Cone> all;
  for (const auto& c : cones_)
    for (auto& f : c.faces()) all.insert(std::move(f));
  return {all.begin(), all.end()};
}

std::vector<ZVector> QuasiFan::rays() const {
  std::set<ZVector> rays;
  for (const auto& c : cones())
    if (c.is_pointed() && c.dimension() == 1) rays.insert(c.rays().front());
  return {rays.begin(), rays.end()};
}

Cone QuasiFan::support() const {
  std::vector<ZVector> gens;
  for (const auto& c : cones_)
    for (auto& g : c.generators()) gens.push_back(std::move(g));
  return Cone::from_generators(dim_, gens);
}

bool QuasiFan::is_fan() const {
  return std::all_of(cones_.begin(), cones_.end(), [](const Cone& c) { return c.is_pointed(); });
}

bool QuasiFan::is_complete() const { return support() == Cone::full(dim_); }

bool QuasiFan::refines(const QuasiFan& coarser) const {
  for (const auto& c : cones_) {
    bool inside = std::any_of(coarser.cones_.begin(), coarser.cones_.end(),
                              [&](const Cone& big) { return big.contains(c); });
    if (!inside) return false;
  }
  return true;
}

bool validate(const QuasiFan& f) {
  const auto& cones = f.maximal_cones();
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      Cone meet = cones[i].intersection(cones[j]);
      if (!cones[i].has_face(meet) || !cones[j].has_face(meet)) return false;
    }
  return true;
}

QuasiFan common_refinement(const QuasiFan& f, const QuasiFan& g) {
  if (f.ambient_dim() != g.ambient_dim()) throw Error(Errc::SupportMismatch, "quasifans live in different ranks");
  if (!(f.support() == g.support())) throw Error(Errc::SupportMismatch, "quasifans have different supports");
  std::vector<Cone> pieces;
  for (const auto& a : f.maximal_cones())
    for (const auto& b : g.maximal_cones()) pieces.push_back(a.intersection(b));
  return QuasiFan(f.ambient_dim(), std::move(pieces));
}

Cone locate(const QuasiFan& f, const QVector& u) {
  for (const auto& c : f.maximal_cones())
    if (c.contains(u)) return c.minimal_face_containing(u);
  throw Error(Errc::OutsideSupport, "point is not in the support of the quasifan");
}

QuasiFan projected_face_fan(const Cone& delta, const LatticeMap& P) {
  const Cone target = delta.image(P);
  const std::size_t d = target.dimension();
  std::vector<Cone> full;
  std::set<ZVector> walls;
  for (const auto& face : delta.faces()) {
    Cone img = face.image(P);
    if (img.dimension() != d) continue;
    for (const auto& a : img.facets()) walls.insert(a);
    full.push_back(std::move(img));
  }

  // Cells of the wall arrangement inside the target; each lies in one chamber.
  std::vector<Cone> cells{target};
  for (const auto& a : walls) {
    std::set<Cone> next;
    for (const auto& c : cells) {
      for (const ZVector& side : {a, negated(a)}) {
        Cone half = c.intersection(Cone::from_inequalities(P.rows(), {side}));
        if (half.dimension() == d) next.insert(std::move(half));
      }
    }
    cells.assign(next.begin(), next.end());
  }

  std::vector<Cone> chambers;
  for (const auto& cell : cells) {
    const QVector v = to_rational(cell.relative_interior_point());
    Cone chamber = target;
    for (const auto& img : full)
      if (img.contains(v)) chamber = chamber.intersection(img);
    chambers.push_back(std::move(chamber));
  }
  return QuasiFan(P.rows(), std::move(chambers));
}

}  // namespace ppdiv
