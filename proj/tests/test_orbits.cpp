#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

Integer index_in_saturation(const Cone& lam, const std::vector<ZVector>& basis) {
  // [M ∩ lin(lam) : L] as the product of the finite invariant factors of L in its saturation.
  const auto sat = saturated_span(lam.generators(), lam.ambient_dim());
  if (sat.empty()) return 1;
  // Coordinates of the basis in the saturated basis.
  std::vector<ZVector> coords;
  for (const auto& b : basis) {
    std::vector<QVector> A;
    for (std::size_t i = 0; i < sat.size(); ++i) {
      QVector row;
      for (const auto& s : sat) row.push_back(Rational(s[i]));
      A.push_back(row);
    }
    // Least-squares free: pick the first |sat| independent coordinates.
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < A.size() && rows.size() < sat.size(); ++i) {
      std::vector<QVector> trial;
      for (auto r : rows) trial.push_back(A[r]);
      trial.push_back(A[i]);
      if (rank(trial) == trial.size()) rows.push_back(i);
    }
    std::vector<QVector> sq;
    QVector rhs;
    for (auto r : rows) {
      sq.push_back(A[r]);
      rhs.push_back(Rational(b[r]));
    }
    coords.push_back(to_integer(solve(sq, rhs)));
  }
  Integer product = 1;
  for (const auto& d : quotient_invariants(sat.size(), coords)) product *= d;
  return product;
}

}  // namespace

TEST_CASE("fiber polyhedra") {
  const PolyhedralDivisor D = segment_divisor();
  CHECK(fiber_polyhedron(D, "0") == TailedPolyhedron({qv({"1/3"}), qv({"1/2"})}, Cone::zero(1)));
  CHECK(fiber_polyhedron(D, "5").is_neutral());
  const PolyhedralDivisor declared(1, Cone::zero(1), Base::affine_curve({"0", "1"}));
  CHECK_THROWS_AS(fiber_polyhedron(declared, "2"), Error);

  const DowngradeResult r = downgrade(e6_downgrade_input());
  CHECK(fiber_polyhedron(r.divisor, std::vector<ZVector>{zv({1, 0}), zv({0, 1})}) ==
        minkowski_sum(r.divisor.coefficient("1,0"), r.divisor.coefficient("0,1")));
  CHECK_THROWS_AS(fiber_polyhedron(r.divisor, std::vector<ZVector>{zv({2, 1})}), Error);
  CHECK_THROWS_AS(fiber_polyhedron(r.divisor, "0"), Error);
}

TEST_CASE("fiber lattices") {
  const PolyhedralDivisor D = segment_divisor();
  const auto lat = fiber_lattices(D, "0");
  REQUIRE(lat.size() == 2);
  CHECK(lat[0].cone == Cone::from_generators(1, std::vector<ZVector>{zv({-1})}));
  CHECK(lat[0].basis == std::vector<ZVector>{zv({2})});
  CHECK(lat[1].basis == std::vector<ZVector>{zv({3})});
  const auto generic = fiber_lattices(D, "5");
  REQUIRE(generic.size() == 1);
  CHECK(generic[0].basis == std::vector<ZVector>{zv({1})});

  const PolyhedralDivisor E = e6_divisor();
  for (const auto& l : fiber_lattices(E, "inf")) CHECK(l.basis == saturated_span(l.cone.generators(), 2));
  // At 0 the vertex (1/3, 0) gives {u : u1 in 3Z}.
  const auto at0 = fiber_lattices(E, "0");
  REQUIRE(at0.size() == 1);
  CHECK(at0[0].basis == std::vector<ZVector>{zv({3, 0}), zv({0, 1})});
}

TEST_CASE("orbits over the segment fixture") {
  const FiberReport r = fiber_orbits(segment_divisor(), "0");
  REQUIRE(r.orbits.size() == 3);
  CHECK(r.orbits[0].face_vertices == std::vector<std::size_t>{0});
  CHECK(r.orbits[0].isotropy_invariants == ZVector{3});
  CHECK(r.orbits[0].dimension == 1);
  CHECK(r.orbits[1].isotropy_invariants == ZVector{2});
  CHECK(r.orbits[2].face_vertices == std::vector<std::size_t>{0, 1});
  CHECK(r.orbits[2].isotropy_invariants == ZVector{0});
  CHECK(r.orbits[2].dimension == 0);
  CHECK(!r.reduced);

  const FiberReport g = fiber_orbits(segment_divisor(), "5");
  REQUIRE(g.orbits.size() == 1);
  CHECK(g.orbits[0].isotropy_invariants == ZVector{1});
  CHECK(g.reduced);
}

TEST_CASE("E6 orbits over a generic point") {
  const FiberReport r = fiber_orbits(e6_divisor(), "7");
  CHECK(r.orbits.size() == 4);
  const FiberReport inf = fiber_orbits(e6_divisor(), "inf");
  CHECK(inf.orbits.size() == 6);
  CHECK(inf.reduced);
}

TEST_CASE("orbit invariants on all curve fixtures") {
  std::vector<std::pair<PolyhedralDivisor, std::vector<std::string>>> cases{
      {segment_divisor(), {"0", "5"}}, {e6_divisor(), {"0", "1", "inf", "7"}}};
  for (const char* f : {"elliptic.json", "parabolic.json", "hyperbolic.json"})
    cases.push_back({io::divisor_from_json(io::read_file(fixture(f))), {"0", "1", "2"}});
  for (const auto& [D, points] : cases)
    for (const auto& y : points) {
      const FiberReport r = fiber_orbits(D, y);
      CHECK(r.orbits.size() == r.fiber_polyhedron.faces().size());
      // Dimension reverses face inclusion.
      for (const auto& a : r.orbits)
        for (const auto& b : r.orbits) {
          const bool sub = std::includes(b.face_vertices.begin(), b.face_vertices.end(), a.face_vertices.begin(),
                                         a.face_vertices.end()) &&
                           b.face.recession.contains(a.face.recession);
          if (sub && a.face.dimension < b.face.dimension) CHECK(a.dimension > b.dimension);
        }
      // Finite isotropy at vertices is the lattice index.
      for (const auto& o : r.orbits) {
        if (o.face.dimension != 0 || !o.face.recession.is_zero()) continue;
        Integer finite = 1;
        for (const auto& d : o.isotropy_invariants)
          if (d != 0) finite *= d;
        CHECK(finite == index_in_saturation(o.orbit_cone, o.orbit_lattice));
      }
      // Reduced iff every cone carries the full lattice.
      bool full = true;
      for (const auto& l : fiber_lattices(D, y)) full = full && l.basis == saturated_span(l.cone.generators(), D.lattice_rank());
      CHECK(full == is_fiber_reduced(D, y));
    }
}

TEST_CASE("fiber components") {
  const auto comps = fiber_components(segment_divisor(), "0");
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].lattice == std::vector<ZVector>{zv({3})});
  CHECK(comps[1].lattice == std::vector<ZVector>{zv({2})});
  CHECK(fiber_components(segment_divisor(), "5").size() == 1);
  CHECK(fiber_components(e6_divisor(), "inf").size() == 2);
}

TEST_CASE("reducedness") {
  CHECK(!is_fiber_reduced(segment_divisor(), "0"));
  CHECK(is_fiber_reduced(segment_divisor(), "9"));
  CHECK(is_fiber_reduced(e6_divisor(), "inf"));
  CHECK(!is_fiber_reduced(e6_divisor(), "1"));
}

TEST_CASE("GIT quasifans") {
  const PolyhedralDivisor E = e6_divisor();
  const QuasiFan git = git_quasifan(E);
  CHECK(git.maximal_cones() ==
        std::vector<Cone>{Cone::from_generators(2, std::vector<ZVector>{zv({0, 1}), zv({1, 0})}),
                          Cone::from_generators(2, std::vector<ZVector>{zv({1, 0}), zv({12, -1})})});
  CHECK(git.support() == E.weight_cone());
  CHECK(git == evaluation_quasifan(E));

  const Cone s = e6_sigma();
  const PolyhedralDivisor single(2, s, Base::p1(), {{"0", TailedPolyhedron::point(qv({"1/3", "0"}), s)}});
  CHECK(git_quasifan(single) == QuasiFan::face_fan(s.dual()));
  CHECK(git_quasifan(segment_divisor()).cones().size() == 3);

  // Brute-force refinement of all fiber normal fans on every fixture.
  for (const auto& D : {E, segment_divisor()}) {
    std::vector<TailedPolyhedron> fibers;
    for (const auto& [label, delta] : D.coefficients()) fibers.push_back(delta);
    const QuasiFan g = git_quasifan(D);
    CHECK(std::set<Cone>(g.maximal_cones().begin(), g.maximal_cones().end()) == refinement_by_grid(fibers, D.tail(), 24));
  }
}

TEST_CASE("orbit identification") {
  const PolyhedralDivisor E = e6_divisor();
  const TailedPolyhedron sigma = fiber_polyhedron(E, "5");
  const auto faces = sigma.faces();
  const auto ray_face = std::find_if(faces.begin(), faces.end(), [](const PolyhedronFace& f) {
    return f.recession == Cone::from_generators(2, std::vector<ZVector>{zv({1, 12})});
  });
  REQUIRE(ray_face != faces.end());
  CHECK(normal_cone(sigma, *ray_face) == Cone::from_generators(2, std::vector<ZVector>{zv({12, -1})}));
  CHECK(orbit_identification(E, {"5", *ray_face}, {"6", *ray_face}));
  // The vertex has a full-dimensional orbit cone: degree is positive inside.
  CHECK(!orbit_identification(E, {"5", faces.front()}, {"6", faces.front()}));
  CHECK(orbit_identification(E, {"5", faces.front()}, {"5", faces.front()}));
  // Distinct orbit cones.
  CHECK(!orbit_identification(E, {"5", faces.front()}, {"5", *ray_face}));

  const PolyhedronFace bogus{{qv({"7", "7"})}, Cone::zero(2), 0};
  try {
    orbit_identification(E, {"5", bogus}, {"6", faces.front()});
    FAIL("expected FaceNotInFiber");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FaceNotInFiber);
  }

  const PolyhedralDivisor seg = segment_divisor();
  const auto gf = fiber_polyhedron(seg, "5").faces();
  CHECK(!orbit_identification(seg, {"5", gf.front()}, {"6", gf.front()}));
}

TEST_CASE("K*-surface classification") {
  auto load = [](const char* f) { return io::divisor_from_json(io::read_file(fixture(f))); };
  CHECK(classify_k_star_surface(load("elliptic.json")) == SurfaceClass::Elliptic);
  CHECK(classify_k_star_surface(load("parabolic.json")) == SurfaceClass::Parabolic);
  CHECK(classify_k_star_surface(load("hyperbolic.json")) == SurfaceClass::Hyperbolic);
  CHECK(to_string(SurfaceClass::Parabolic) == "parabolic");
  CHECK_THROWS_AS(classify_k_star_surface(e6_divisor()), Error);
  const Cone half = Cone::orthant(1);
  const PolyhedralDivisor improper(1, half, Base::p1(), {{"0", TailedPolyhedron::point(qv({"-1"}), half)}});
  CHECK_THROWS_AS(classify_k_star_surface(improper), Error);
  // Negative tail: still elliptic.
  const Cone neg = Cone::from_generators(1, std::vector<ZVector>{zv({-1})});
  const PolyhedralDivisor flipped(1, neg, Base::p1(), {{"0", TailedPolyhedron::point(qv({"-1"}), neg)}});
  CHECK(classify_k_star_surface(flipped) == SurfaceClass::Elliptic);
}
