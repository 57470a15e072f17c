#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

RationalDivisor rd(std::map<std::string, Rational> c) { return RationalDivisor(c); }

PolyhedralDivisor ray_divisor(std::map<std::string, const char*> starts) {
  const Cone half = Cone::orthant(1);
  std::map<std::string, TailedPolyhedron> c;
  for (const auto& [k, v] : starts) c.emplace(k, TailedPolyhedron::point(qv({v}), half));
  return PolyhedralDivisor(1, half, Base::p1(), c);
}

}  // namespace

TEST_CASE("evaluation of the E6 divisor") {
  const PolyhedralDivisor D = e6_divisor();
  CHECK(evaluate(D, qv({"1", "0"})) == rd({{"0", q("1/3")}, {"1", q("-1/4")}}));
  CHECK(evaluate(D, qv({"12", "-1"})) == rd({{"0", q("4")}, {"1", q("-3")}, {"inf", q("-1")}}));
  CHECK(evaluate(D, qv({"0", "0"})).is_zero());
  CHECK_THROWS_AS(evaluate(D, qv({"-1", "0"})), Error);
}

TEST_CASE("evaluation quasifans") {
  const PolyhedralDivisor D = e6_divisor();
  const QuasiFan f = evaluation_quasifan(D);
  CHECK(f.maximal_cones() ==
        std::vector<Cone>{Cone::from_generators(2, std::vector<ZVector>{zv({0, 1}), zv({1, 0})}),
                          Cone::from_generators(2, std::vector<ZVector>{zv({1, 0}), zv({12, -1})})});
  const Cone s = e6_sigma();
  const PolyhedralDivisor single(2, s, Base::p1(), {{"0", TailedPolyhedron::point(qv({"1/3", "0"}), s)}});
  CHECK(evaluation_quasifan(single) == QuasiFan::face_fan(s.dual()));
  const QuasiFan seg = evaluation_quasifan(segment_divisor());
  CHECK(seg.cones().size() == 3);
  CHECK(seg.maximal_cones() == std::vector<Cone>{Cone::from_generators(1, std::vector<ZVector>{zv({-1})}),
                                                 Cone::from_generators(1, std::vector<ZVector>{zv({1})})});
}

TEST_CASE("polyhedral degree") {
  const Cone s = e6_sigma();
  CHECK(polyhedral_degree(e6_divisor()) == TailedPolyhedron({qv({"1/12", "0"}), qv({"1/12", "1"})}, s));
  const PolyhedralDivisor single(2, s, Base::p1(), {{"y", TailedPolyhedron::point(qv({"1", "2"}), s)}});
  CHECK(polyhedral_degree(single) == single.coefficient("y"));
  CHECK(polyhedral_degree(ray_divisor({{"p+", "-1/3"}, {"p-", "1/2"}})) ==
        TailedPolyhedron::point(qv({"1/6"}), Cone::orthant(1)));
  CHECK_THROWS_AS(polyhedral_degree(segment_divisor()), Error);
}

TEST_CASE("properness") {
  const PropernessReport e6 = is_proper(e6_divisor());
  CHECK(e6.proper);
  CHECK(e6.reason.empty());
  CHECK(!e6.notes.empty());

  const Cone half = Cone::orthant(1);
  const PolyhedralDivisor trivial(1, half, Base::p1(), {{"0", TailedPolyhedron::neutral(half)}});
  const PropernessReport t = is_proper(trivial);
  CHECK(!t.proper);
  CHECK(t.reason.find("equals") != std::string::npos);

  const Cone zero = Cone::zero(1);
  const TailedPolyhedron seg({qv({"0"}), qv({"1"})}, zero);
  CHECK(!is_proper(PolyhedralDivisor(1, zero, Base::p1(), {{"0", seg}})).proper);
  CHECK(is_proper(PolyhedralDivisor(1, zero, Base::affine_curve(), {{"0", seg}})).proper);

  // Degrees cancel to the tail itself.
  const PolyhedralDivisor flat = ray_divisor({{"0", "1"}, {"1", "-1"}});
  CHECK(!is_proper(flat).proper);
  // Degree outside the tail.
  CHECK(!is_proper(ray_divisor({{"0", "-1"}})).proper);
}

TEST_CASE("properness over toric bases") {
  const DowngradeResult r = downgrade(e6_downgrade_input());
  CHECK(is_proper(r.divisor).proper);
  const QuasiFan ray(1, {Cone::orthant(1)});
  const PolyhedralDivisor incomplete(1, Cone::orthant(1), Base::toric(ray));
  CHECK_THROWS_AS(is_proper(incomplete), Error);

  // On P1 = toric(+-1) the divisor 0*D+ + 0*D- is never big.
  const QuasiFan p1(1, {Cone::orthant(1), Cone::from_generators(1, std::vector<ZVector>{zv({-1})})});
  const PolyhedralDivisor zero(1, Cone::orthant(1), Base::toric(p1));
  CHECK(!is_proper(zero).proper);
}

TEST_CASE("sums of divisors") {
  const PolyhedralDivisor D = e6_divisor();
  const Cone s = e6_sigma();
  const PolyhedralDivisor empty(2, s, Base::p1());
  CHECK(add(D, empty) == D);
  const TailedPolyhedron d0 = D.coefficient("0"), d1 = D.coefficient("1");
  const PolyhedralDivisor a(2, s, Base::p1(), {{"0", d0}}), b(2, s, Base::p1(), {{"0", d1}}),
      c(2, s, Base::p1(), {{"1", d1}});
  CHECK(add(a, b).coefficient("0") == minkowski_sum(d0, d1));
  CHECK(add(a, c).coefficients().size() == 2);
  CHECK(add(a, c) == add(c, a));
  CHECK_THROWS_AS(add(a, PolyhedralDivisor(2, s, Base::affine_curve())), Error);
  CHECK_THROWS_AS(add(a, PolyhedralDivisor(2, Cone::orthant(2), Base::p1())), Error);
}

TEST_CASE("principal polyhedral divisors and linear equivalence") {
  const PolyhedralDivisor D = ray_divisor({{"0", "1"}});
  Plurifunction f;
  f.shifts = {{"0", zv({-1})}, {"inf", zv({1})}};
  const PolyhedralDivisor E = add_principal(D, f);
  CHECK(E == ray_divisor({{"0", "0"}, {"inf", "1"}}));
  CHECK(polyhedral_degree(E) == polyhedral_degree(D));
  CHECK(add_principal(D, Plurifunction{}) == D);
  Plurifunction bad;
  bad.shifts = {{"0", zv({1})}};
  CHECK_THROWS_AS(add_principal(D, bad), Error);

  const auto g = linear_equivalent_P1(D, ray_divisor({{"inf", "1"}}));
  REQUIRE(g.has_value());
  CHECK(g->shifts == std::map<std::string, ZVector>{{"0", zv({-1})}, {"inf", zv({1})}});
  CHECK(!linear_equivalent_P1(D, ray_divisor({{"0", "2"}})).has_value());
  const auto id = linear_equivalent_P1(D, D);
  REQUIRE(id.has_value());
  CHECK(id->shifts.empty());
  // Non-lattice translations are not principal.
  CHECK(!linear_equivalent_P1(ray_divisor({{"0", "1/2"}}), ray_divisor({{"1", "1/2"}})).has_value());
  CHECK(!linear_equivalent_P1(ray_divisor({{"0", "1/2"}, {"1", "0"}}), ray_divisor({{"0", "0"}, {"1", "1/2"}})).has_value());
}

TEST_CASE("integrality") {
  const PolyhedralDivisor D = e6_divisor();
  CHECK(!is_integral_divisor(D));
  const Cone s = e6_sigma();
  CHECK(is_integral_divisor(PolyhedralDivisor(2, s, Base::p1(), {{"inf", D.coefficient("inf")}})));
  CHECK(is_integral_divisor(PolyhedralDivisor(2, s, Base::p1())));
}

TEST_CASE("construction checks") {
  const Cone s = e6_sigma();
  CHECK_THROWS_AS(PolyhedralDivisor(2, s, Base::p1({"0", "1"}), {{"2", TailedPolyhedron::point(qv({"1", "0"}), s)}}),
                  Error);
  CHECK_THROWS_AS(PolyhedralDivisor(2, s, Base::p1(), {{"0", TailedPolyhedron::neutral(Cone::orthant(2))}}), Error);
  CHECK_THROWS_AS(PolyhedralDivisor(2, Cone::full(2), Base::p1()), Error);
  CHECK_THROWS_AS(PolyhedralDivisor(1, s, Base::p1()), Error);
  // Neutral coefficients are not stored.
  CHECK(PolyhedralDivisor(2, s, Base::p1(), {{"0", TailedPolyhedron::neutral(s)}}).coefficients().empty());
}

TEST_CASE("rational divisors") {
  const RationalDivisor a = rd({{"0", q("1/2")}, {"1", q("0")}});
  CHECK(a.coefficients().size() == 1);
  CHECK(a.degree() == q("1/2"));
  CHECK((a + rd({{"0", q("-1/2")}})).is_zero());
  CHECK(a <= rd({{"0", q("1")}}));
  CHECK(!(a <= rd({{"1", q("1")}})));
}
