#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(q("6/8")) == "3/4");
  CHECK(to_string(q("-2/4")) == "-1/2");
  CHECK(to_string(q("4/2")) == "2");
  CHECK(to_string(q("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(floor(q("-1/3")) == -1);
  CHECK(floor(q("7/2")) == 3);
}

TEST_CASE("primitive rescaling") {
  CHECK(primitive(qv({"1/2", "1/3"})) == zv({3, 2}));
  CHECK(primitive(zv({-4, 6})) == zv({-2, 3}));
  CHECK(is_zero(primitive(zv({0, 0}))));
}

TEST_CASE("Smith normal form") {
  const LatticeMap A({zv({2, 4, 4}), zv({-6, 6, 12}), zv({10, -4, -16})});
  const SmithForm f = smith_normal_form(A);
  CHECK(f.U * A * f.V == f.S);
  CHECK(f.diagonal() == std::vector<Integer>{2, 6, 12});
  CHECK(f.rank() == 3);

  Random rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = static_cast<std::size_t>(rng.integer(1, 4)), c = static_cast<std::size_t>(rng.integer(1, 4));
    LatticeMap M(r, c);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) M(a, b) = rng.integer(-6, 6);
    const SmithForm g = smith_normal_form(M);
    CHECK(g.U * M * g.V == g.S);
    const auto d = g.diagonal();
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
      if (d[k + 1] != 0) CHECK(d[k + 1] % d[k] == 0);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b)
        if (a != b) CHECK(g.S(a, b) == 0);
  }
}

TEST_CASE("kernel, section and cokernel of the E6 embedding") {
  const LatticeMap F({zv({4, 0}), zv({3, 0}), zv({0, 1}), zv({12, -1})});
  const LatticeMap s = section_of_embedding(F);
  CHECK(s * F == LatticeMap::identity(2));
  CHECK(s == LatticeMap({zv({1, -1, 0, 0}), zv({0, 0, 1, 0})}));
  const LatticeMap P = cokernel_projection(F);
  CHECK(P == LatticeMap({zv({3, 0, -1, -1}), zv({0, 4, -1, -1})}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK((P * F)(i, j) == 0);
  const auto d = smith_normal_form(P).diagonal();
  CHECK(d == std::vector<Integer>{1, 1});
}

TEST_CASE("split embeddings are required") {
  CHECK_THROWS_AS(section_of_embedding(LatticeMap({zv({2}), zv({4})})), Error);
  CHECK_THROWS_AS(cokernel_projection(LatticeMap({zv({1, 1}), zv({1, 1})})), Error);
  const LatticeMap F({zv({2}), zv({3})});
  CHECK(cokernel_projection(F) == LatticeMap({zv({3, -2})}));
  CHECK(section_of_embedding(F) * F == LatticeMap::identity(1));
}

TEST_CASE("lattice bases") {
  CHECK(kernel_basis(LatticeMap({zv({2, 4, 6})})).size() == 2);
  for (const auto& k : kernel_basis(LatticeMap({zv({2, 4, 6})}))) CHECK(dot(zv({2, 4, 6}), k) == 0);
  CHECK(hermite_basis({zv({2, 0}), zv({0, 3}), zv({2, 3})}, 2) == std::vector<ZVector>{zv({2, 0}), zv({0, 3})});
  CHECK(saturated_span({zv({2, 4})}, 2) == std::vector<ZVector>{zv({1, 2})});
  CHECK(quotient_invariants(2, {zv({2, 0}), zv({0, 3})}) == std::vector<Integer>{1, 6});
  CHECK(quotient_invariants(1, {}) == std::vector<Integer>{0});
  CHECK(quotient_invariants(2, {zv({1, 0})}) == std::vector<Integer>{1, 0});
  CHECK(rational_kernel({zv({1, 1})}, 2).size() == 1);
  CHECK(rank(std::vector<ZVector>{zv({1, 2}), zv({2, 4})}) == 1);
  CHECK(solve({qv({"2", "0"}), qv({"0", "3"})}, qv({"1", "1"})) == qv({"1/2", "1/3"}));
}
