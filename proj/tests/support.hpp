#pragma once

// Shared fixtures and independent oracles for the test executables.

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ppdiv/downgrade.hpp"
#include "ppdiv/io.hpp"
#include "ppdiv/orbits.hpp"
#include "ppdiv/sections.hpp"

namespace testing {

using namespace ppdiv;

inline Rational q(const char* s) { return parse_rational(s); }

inline QVector qv(std::initializer_list<const char*> xs) {
  QVector v;
  for (const char* x : xs) v.push_back(q(x));
  return v;
}

inline ZVector zv(std::initializer_list<long> xs) {
  ZVector v;
  for (long x : xs) v.push_back(x);
  return v;
}

inline std::string fixture(const std::string& name) { return std::string(PPDIV_FIXTURES) + "/" + name; }

inline Cone e6_sigma() { return Cone::from_generators(2, std::vector<ZVector>{zv({1, 0}), zv({1, 12})}); }

/// The E6-singularity divisor Δ0⊗{0} + Δ1⊗{1} + Δ∞⊗{inf} over P1.
inline PolyhedralDivisor e6_divisor() {
  const Cone s = e6_sigma();
  return PolyhedralDivisor(2, s, Base::p1(),
                           {{"0", TailedPolyhedron::point(qv({"1/3", "0"}), s)},
                            {"1", TailedPolyhedron::point(qv({"-1/4", "0"}), s)},
                            {"inf", TailedPolyhedron({qv({"0", "0"}), qv({"0", "1"})}, s)}});
}

inline DowngradeInput e6_downgrade_input() {
  DowngradeInput in;
  in.delta = Cone::orthant(4);
  in.F = LatticeMap({zv({4, 0}), zv({3, 0}), zv({0, 1}), zv({12, -1})});
  in.section = LatticeMap({zv({1, -1, 0, 0}), zv({0, 0, 1, 0})});
  return in;
}

inline std::map<ZVector, std::vector<PointMultiplicity>> e6_line() {
  return {{zv({1, 0}), {{"0", 1}}}, {zv({0, 1}), {{"1", 1}}}, {zv({-1, -1}), {{"inf", 1}}}};
}

/// [1/3, 1/2]⊗{0} over the affine line, tail {0}.
inline PolyhedralDivisor segment_divisor() {
  const Cone zero = Cone::zero(1);
  return PolyhedralDivisor(1, zero, Base::affine_curve(), {{"0", TailedPolyhedron({qv({"1/3"}), qv({"1/2"})}, zero)}});
}

// ---- section-ring oracles -------------------------------------------------

/// Number of monomials z1^a z2^b z3^c z4^d of weight u for the weights
/// (4,0), (3,0), (0,1), (12,-1).
inline long e6_monomials(long u1, long u2) {
  if (u1 < 0) return 0;
  long count = 0;
  for (long d = 0; 12 * d <= u1; ++d)
    for (long a = 0; 4 * a + 12 * d <= u1; ++a) {
      const long rest = u1 - 4 * a - 12 * d;
      if (rest % 3 != 0) continue;
      if (u2 + d >= 0) ++count;  // c = u2 + d
    }
  return count;
}

/// dim of the weight-u piece of K[z]/(z1^3 + z2^4 + z3 z4): the relation has
/// weight (12,0) and is a nonzerodivisor.
inline long e6_oracle(long u1, long u2) { return e6_monomials(u1, u2) - e6_monomials(u1 - 12, u2); }

/// #{(a, b) : 2a + 3b = u, a, b >= 0}.
inline long weights23_oracle(long u) {
  long count = 0;
  for (long b = 0; 3 * b <= u; ++b)
    if ((u - 3 * b) % 2 == 0) ++count;
  return count;
}

// ---- geometry oracles -----------------------------------------------------

/// min over the finite set `points` of <u, .>.
inline Rational min_pairing(const std::vector<QVector>& points, const QVector& u) {
  Rational best = dot(points.front(), u);
  for (const auto& p : points) best = std::min(best, dot(p, u));
  return best;
}

/// Brute-force coarsest common refinement of the normal fans of the given
/// polyhedra (all with tail `tail`): every grid weight in `box`^n of the dual
/// cone is sorted into the closed classes {tuple of minimizing vertices}; the
/// full-dimensional classes span the maximal cones.
inline std::set<Cone> refinement_by_grid(const std::vector<TailedPolyhedron>& polys, const Cone& tail, long box) {
  const std::size_t n = tail.ambient_dim();
  const Cone omega = tail.dual();
  std::map<std::vector<std::size_t>, std::vector<ZVector>> classes;
  ZVector u(n, -box);
  while (true) {
    const QVector uq = to_rational(u);
    if (omega.contains(uq)) {
      // Each tuple of minimizers.
      std::vector<std::vector<std::size_t>> choices;
      for (const auto& p : polys) {
        const Rational h = min_pairing(p.vertices(), uq);
        std::vector<std::size_t> argmin;
        for (std::size_t i = 0; i < p.vertices().size(); ++i)
          if (dot(p.vertices()[i], uq) == h) argmin.push_back(i);
        choices.push_back(argmin);
      }
      std::vector<std::size_t> pick(polys.size(), 0);
      while (true) {
        std::vector<std::size_t> key;
        for (std::size_t i = 0; i < polys.size(); ++i) key.push_back(choices[i][pick[i]]);
        classes[key].push_back(u);
        std::size_t i = 0;
        while (i < polys.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == polys.size()) break;
      }
    }
    std::size_t i = 0;
    while (i < n && u[i] == box) u[i++] = -box;
    if (i == n) break;
    ++u[i];
  }
  std::set<Cone> out;
  for (const auto& [key, pts] : classes) {
    Cone c = Cone::from_generators(n, pts);
    if (c.dimension() == n) out.insert(c);
  }
  return out;
}

// ---- random instances -----------------------------------------------------

class Random {
 public:
  explicit Random(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational() { return Rational(integer(-12, 12), integer(1, 12)); }

  QVector point(std::size_t n) {
    QVector v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  /// A pointed cone with at most n + 1 small rays (possibly {0}).
  Cone pointed_cone(std::size_t n) {
    while (true) {
      std::vector<ZVector> rays;
      const long k = integer(0, static_cast<long>(n) + 1);
      for (long i = 0; i < k; ++i) {
        ZVector r(n);
        for (auto& x : r) x = integer(-2, 3);
        if (!is_zero(r)) rays.push_back(r);
      }
      Cone c = Cone::from_generators(n, rays);
      if (c.is_pointed()) return c;
    }
  }

  TailedPolyhedron polyhedron(const Cone& tail) {
    std::vector<QVector> pts;
    const long k = integer(1, 4);
    for (long i = 0; i < k; ++i) pts.push_back(point(tail.ambient_dim()));
    return TailedPolyhedron(pts, tail);
  }

  /// Vertices with numerators in [-4, 4] and denominators at most 3.
  TailedPolyhedron small_polyhedron(const Cone& tail) {
    std::vector<QVector> pts;
    const long k = integer(1, 4);
    for (long i = 0; i < k; ++i) {
      QVector v(tail.ambient_dim());
      for (auto& x : v) x = Rational(integer(-4, 4), integer(1, 3));
      pts.push_back(v);
    }
    return TailedPolyhedron(pts, tail);
  }

  /// A lattice point of the cone: a small nonnegative combination of generators.
  ZVector in_cone(const Cone& c) {
    ZVector u = zero_zvector(c.ambient_dim());
    for (const auto& g : c.generators()) {
      const long m = integer(0, 3);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] += m * g[i];
    }
    return u;
  }

  std::size_t rank() { return static_cast<std::size_t>(integer(1, 3)); }

 private:
  std::mt19937 gen_;
};

}  // namespace testing
