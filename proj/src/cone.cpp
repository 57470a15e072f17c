#include "ppdiv/cone.hpp"

#include <algorithm>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace ppdiv {

namespace {

void sort_unique(std::vector<ZVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<ZVector> nonzero_primitive(const std::vector<ZVector>& v) {
  std::vector<ZVector> out;
  for (const auto& x : v)
    if (!is_zero(x)) out.push_back(primitive(x));
  return out;
}

void check_lengths(const std::vector<ZVector>& v, std::size_t dim) {
  for (const auto& x : v)
    if (x.size() != dim) throw Error(Errc::DimensionMismatch, "vector of wrong length for cone");
}

struct DdRay {
  ZVector y;
  boost::dynamic_bitset<> zeros;
};

}  // namespace

ConeGenerators double_description(const std::vector<ZVector>& inequalities,
                                  const std::vector<ZVector>& equations, std::size_t dim) {
  check_lengths(inequalities, dim);
  check_lengths(equations, dim);
  std::vector<ZVector> all = inequalities;
  all.insert(all.end(), equations.begin(), equations.end());

  ConeGenerators out;
  out.lineality = canonical_span(rational_kernel(all, dim), dim);

  // Work inside W = {E x = 0} ∩ lineality^⊥, where the cone is pointed.
  std::vector<ZVector> w_constraints = equations;
  w_constraints.insert(w_constraints.end(), out.lineality.begin(), out.lineality.end());
  const std::vector<ZVector> basis = rational_kernel(w_constraints, dim);
  const std::size_t k = basis.size();
  if (k == 0) return out;

  const std::size_t m = inequalities.size();
  std::vector<ZVector> rows(m, ZVector(k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = dot(inequalities[i], basis[j]);

  // A pointed cone of dimension k: pick k independent rows; they cut out a
  // simplicial cone whose rays start the iteration.
  std::vector<std::size_t> chosen;
  std::vector<QVector> chosen_rows;
  for (std::size_t i = 0; i < m && chosen.size() < k; ++i) {
    chosen_rows.push_back(to_rational(rows[i]));
    if (rank(chosen_rows) == chosen_rows.size()) {
      chosen.push_back(i);
    } else {
      chosen_rows.pop_back();
    }
  }
  if (chosen.size() != k) throw Error(Errc::InvalidInput, "internal: cone not pointed modulo lineality");

  std::vector<DdRay> rays;
  for (std::size_t j = 0; j < k; ++j) {
    QVector e = zero_qvector(k);
    e[j] = 1;
    DdRay r{primitive(solve(chosen_rows, e)), boost::dynamic_bitset<>(m)};
    rays.push_back(std::move(r));
  }
  std::vector<bool> processed(m, false);
  for (std::size_t i : chosen) {
    processed[i] = true;
    for (auto& r : rays)
      if (dot(rows[i], r.y) == 0) r.zeros.set(i);
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(rows[i], rays[r].y);
      if (value[r] > 0) pos.push_back(r);
      if (value[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (value[r] == 0) rays[r].zeros.set(i);
      continue;
    }

    std::vector<DdRay> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (k >= 2 && common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        ZVector y(k);
        for (std::size_t j = 0; j < k; ++j) y[j] = value[p] * rays[q].y[j] - value[q] * rays[p].y[j];
        common.set(i);
        next.push_back({primitive(y), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] > 0) next.push_back(std::move(rays[r]));
      if (value[r] == 0) {
        rays[r].zeros.set(i);
        next.push_back(std::move(rays[r]));
      }
    }
    rays = std::move(next);
  }

  for (const auto& r : rays) {
    ZVector x = zero_zvector(dim);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < dim; ++t) x[t] += r.y[j] * basis[j][t];
    out.rays.push_back(primitive(x));
  }
  sort_unique(out.rays);
  return out;
}

Cone Cone::from_generators(std::size_t dim, const std::vector<ZVector>& rays,
                           const std::vector<ZVector>& lineality) {
  check_lengths(rays, dim);
  check_lengths(lineality, dim);
  ConeGenerators dual = double_description(nonzero_primitive(rays), nonzero_primitive(lineality), dim);
  ConeGenerators primal = double_description(dual.rays, dual.lineality, dim);
  return Cone(dim, std::move(primal.rays), std::move(primal.lineality), std::move(dual.rays),
              std::move(dual.lineality));
}

Cone Cone::from_generators(std::size_t dim, const std::vector<QVector>& rays,
                           const std::vector<QVector>& lineality) {
  std::vector<ZVector> zr, zl;
  for (const auto& r : rays) zr.push_back(primitive(r));
  for (const auto& l : lineality) zl.push_back(primitive(l));
  return from_generators(dim, zr, zl);
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<ZVector>& inequalities,
                             const std::vector<ZVector>& equations) {
  check_lengths(inequalities, dim);
  check_lengths(equations, dim);
  ConeGenerators primal =
      double_description(nonzero_primitive(inequalities), nonzero_primitive(equations), dim);
  ConeGenerators dual = double_description(primal.rays, primal.lineality, dim);
  return Cone(dim, std::move(primal.rays), std::move(primal.lineality), std::move(dual.rays),
              std::move(dual.lineality));
}

Cone Cone::zero(std::size_t dim) { return from_generators(dim, std::vector<ZVector>{}); }

Cone Cone::full(std::size_t dim) {
  std::vector<ZVector> basis;
  for (std::size_t i = 0; i < dim; ++i) {
    ZVector e = zero_zvector(dim);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return from_generators(dim, {}, basis);
}

Cone Cone::orthant(std::size_t dim) {
  std::vector<ZVector> basis;
  for (std::size_t i = 0; i < dim; ++i) {
    ZVector e = zero_zvector(dim);
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return from_generators(dim, basis);
}

bool Cone::contains(const QVector& x) const {
  if (x.size() != dim_) throw Error(Errc::DimensionMismatch, "point of wrong length for cone");
  for (const auto& a : facets_)
    if (dot(a, x) < 0) return false;
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  return true;
}

bool Cone::contains(const ZVector& x) const { return contains(to_rational(x)); }

bool Cone::contains(const Cone& other) const {
  if (other.dim_ != dim_) return false;
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_) {
    if (!contains(l) || !contains(negated(l))) return false;
  }
  return true;
}

bool Cone::in_relative_interior(const QVector& x) const {
  if (!contains(x)) return false;
  for (const auto& a : facets_)
    if (dot(a, x) == 0) return false;
  return true;
}

ZVector Cone::relative_interior_point() const {
  ZVector p = zero_zvector(dim_);
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

std::vector<ZVector> Cone::generators() const {
  std::vector<ZVector> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(negated(l));
  }
  return g;
}

Cone Cone::dual() const { return Cone(dim_, facets_, equations_, rays_, lineality_); }

Cone Cone::intersection(const Cone& other) const {
  if (other.dim_ != dim_) throw Error(Errc::DimensionMismatch, "intersecting cones of different ambient rank");
  std::vector<ZVector> ineq = facets_;
  ineq.insert(ineq.end(), other.facets_.begin(), other.facets_.end());
  std::vector<ZVector> eq = equations_;
  eq.insert(eq.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(dim_, ineq, eq);
}

Cone Cone::image(const LatticeMap& map) const {
  if (map.cols() != dim_) throw Error(Errc::DimensionMismatch, "map domain does not match cone");
  std::vector<ZVector> r, l;
  for (const auto& x : rays_) r.push_back(map.apply(x));
  for (const auto& x : lineality_) l.push_back(map.apply(x));
  return from_generators(map.rows(), r, l);
}

Cone Cone::preimage(const LatticeMap& map) const {
  if (map.rows() != dim_) throw Error(Errc::DimensionMismatch, "map codomain does not match cone");
  const LatticeMap t = map.transpose();
  std::vector<ZVector> ineq, eq;
  for (const auto& a : facets_) ineq.push_back(t.apply(a));
  for (const auto& e : equations_) eq.push_back(t.apply(e));
  return from_inequalities(map.cols(), ineq, eq);
}

std::vector<Cone> Cone::faces() const {
  std::set<Cone> seen{*this};
  std::vector<Cone> stack{*this};
  while (!stack.empty()) {
    Cone c = std::move(stack.back());
    stack.pop_back();
    for (const auto& a : c.facets_) {
      std::vector<ZVector> gens;
      for (const auto& r : c.rays_)
        if (dot(a, r) == 0) gens.push_back(r);
      Cone f = from_generators(dim_, gens, c.lineality_);
      if (seen.insert(f).second) stack.push_back(std::move(f));
    }
  }
  return {seen.begin(), seen.end()};
}

Cone Cone::minimal_face_containing(const QVector& x) const {
  if (!contains(x)) throw Error(Errc::OutsideSupport, "point is not in the cone");
  std::vector<const ZVector*> tight;
  for (const auto& a : facets_)
    if (dot(a, x) == 0) tight.push_back(&a);
  std::vector<ZVector> gens;
  for (const auto& r : rays_) {
    bool on = std::all_of(tight.begin(), tight.end(), [&](const ZVector* a) { return dot(*a, r) == 0; });
    if (on) gens.push_back(r);
  }
  return from_generators(dim_, gens, lineality_);
}

bool Cone::has_face(const Cone& candidate) const {
  if (!contains(candidate)) return false;
  return minimal_face_containing(to_rational(candidate.relative_interior_point())) == candidate;
}

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  if (a.rays_ < b.rays_) return std::strong_ordering::less;
  if (b.rays_ < a.rays_) return std::strong_ordering::greater;
  if (a.lineality_ < b.lineality_) return std::strong_ordering::less;
  if (b.lineality_ < a.lineality_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<std::vector<ZVector>> triangulate(const Cone& c) {
  if (!c.is_pointed()) throw Error(Errc::NotPointed, "triangulation needs a pointed cone");
  if (c.rays().size() == c.dimension()) return {c.rays()};
  const ZVector& apex = c.rays().front();
  std::vector<std::vector<ZVector>> out;
  for (const auto& a : c.facets()) {
    if (dot(a, apex) == 0) continue;
    std::vector<ZVector> gens;
    for (const auto& r : c.rays())
      if (dot(a, r) == 0) gens.push_back(r);
    for (auto simplex : triangulate(Cone::from_generators(c.ambient_dim(), gens))) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

namespace {

// Lattice points of the half-open parallelepiped spanned by linearly
// independent integer vectors, enumerated as coset representatives of the
// sublattice they generate inside the saturated lattice of their span.
std::vector<ZVector> parallelepiped_points(const std::vector<ZVector>& simplex, std::size_t dim) {
  const std::size_t d = simplex.size();
  const std::vector<ZVector> basis = saturated_span(simplex, dim);

  // Pivot columns of the basis give a square system for coordinates.
  std::vector<std::size_t> cols;
  {
    std::vector<QVector> picked;
    for (std::size_t j = 0; j < dim && cols.size() < d; ++j) {
      QVector col(d);
      for (std::size_t i = 0; i < d; ++i) col[i] = basis[i][j];
      picked.push_back(col);
      if (rank(picked) == picked.size()) {
        cols.push_back(j);
      } else {
        picked.pop_back();
      }
    }
  }
  std::vector<QVector> system(d, QVector(d));  // system[j][i] = basis[i][cols[j]]
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) system[j][i] = basis[i][cols[j]];

  LatticeMap R(d, d);  // columns: coordinates of the simplex rays
  for (std::size_t t = 0; t < d; ++t) {
    QVector rhs(d);
    for (std::size_t j = 0; j < d; ++j) rhs[j] = simplex[t][cols[j]];
    ZVector coords = to_integer(solve(system, rhs));
    for (std::size_t i = 0; i < d; ++i) {
      R(i, t) = coords[i];
    }
  }

  // With U R V = S, the group points are lambda = V S^{-1} k mod 1; scaled by
  // D = det, these are integers in [0, D). Only minimal ones are kept.
  SmithForm snf = smith_normal_form(R);
  const auto diag = snf.diagonal();
  Integer det = 1;
  for (const auto& s : diag) det *= s;
  if (det > Integer(1) << 60) throw Error(Errc::InvalidInput, "simplicial cone index too large");
  const long long D = det.convert_to<long long>();
  std::vector<long long> sizes(d);
  std::vector<std::vector<long long>> steps(d, std::vector<long long>(d));
  for (std::size_t i = 0; i < d; ++i) {
    sizes[i] = diag[i].convert_to<long long>();
    const Integer scale = det / diag[i];
    for (std::size_t t = 0; t < d; ++t) {
      Integer m = (snf.V(t, i) * scale) % det;
      if (m < 0) m += det;
      steps[i][t] = m.convert_to<long long>();
    }
  }

  std::vector<std::pair<long long, std::vector<long long>>> elements;
  std::vector<long long> k(d, 0), mu(d, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < d) {
      ++k[pos];
      for (std::size_t t = 0; t < d; ++t) {
        mu[t] += steps[pos][t];
        if (mu[t] >= D) mu[t] -= D;
      }
      if (k[pos] < sizes[pos]) break;
      k[pos] = 0;  // mu has wrapped back by a multiple of D
      ++pos;
    }
    if (pos == d) break;
    long long total = 0;
    for (auto x : mu) total += x;
    elements.emplace_back(total, mu);
  }
  std::sort(elements.begin(), elements.end());

  std::vector<std::vector<long long>> minimal;
  for (const auto& [total, x] : elements) {
    bool reducible = false;
    for (const auto& y : minimal) {
      bool below = true;
      for (std::size_t t = 0; t < d && below; ++t) below = y[t] <= x[t];
      if (below) {
        reducible = true;
        break;
      }
    }
    if (!reducible) minimal.push_back(x);
  }

  std::vector<ZVector> points;
  for (const auto& x : minimal) {
    QVector p = zero_qvector(dim);
    for (std::size_t t = 0; t < d; ++t)
      if (x[t] != 0) p = add(p, scaled(Rational(x[t], D), to_rational(simplex[t])));
    points.push_back(to_integer(p));
  }
  return points;
}

}  // namespace

std::vector<ZVector> hilbert_basis(const Cone& c) {
  if (!c.is_pointed()) throw Error(Errc::NotPointed, "Hilbert basis needs a pointed cone");
  if (c.is_zero()) return {};
  const std::size_t dim = c.ambient_dim();

  std::vector<ZVector> candidates = c.rays();
  for (const auto& simplex : triangulate(c)) {
    for (auto& p : parallelepiped_points(simplex, dim))
      if (!is_zero(p)) candidates.push_back(std::move(p));
  }
  sort_unique(candidates);

  ZVector grading = zero_zvector(dim);
  for (const auto& a : c.facets()) grading = add(grading, a);
  std::vector<std::pair<Integer, ZVector>> by_degree;
  for (auto& x : candidates) by_degree.emplace_back(dot(grading, x), std::move(x));
  std::sort(by_degree.begin(), by_degree.end());

  std::vector<ZVector> basis;
  for (const auto& [deg, x] : by_degree) {
    bool reducible = false;
    for (const auto& h : basis) {
      ZVector diff(dim);
      for (std::size_t j = 0; j < dim; ++j) diff[j] = x[j] - h[j];
      if (!is_zero(diff) && c.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace ppdiv
