#include "ppdiv/sections.hpp"

namespace ppdiv {

Integer h0_P1(const RationalDivisor& E) {
  Integer d = 0;
  for (const auto& [label, c] : E.coefficients()) d += floor(c);
  return d < 0 ? Integer(0) : Integer(d + 1);
}

Integer weight_dimension(const PolyhedralDivisor& D, const ZVector& u) {
  if (D.base().kind() != BaseKind::P1) throw Error(Errc::NotP1, "section dimensions are computed over P1");
  if (u.size() != D.lattice_rank()) throw Error(Errc::DimensionMismatch, "weight of wrong rank");
  const QVector q = to_rational(u);
  if (!D.weight_cone().contains(q)) return 0;
  return h0_P1(evaluate(D, q));
}

std::vector<HilbertEntry> hilbert_table(const PolyhedralDivisor& D, const std::vector<std::pair<Integer, Integer>>& box) {
  if (D.base().kind() != BaseKind::P1) throw Error(Errc::NotP1, "section dimensions are computed over P1");
  if (box.size() != D.lattice_rank()) throw Error(Errc::DimensionMismatch, "box of wrong rank");
  std::vector<HilbertEntry> out;
  for (const auto& [lo, hi] : box)
    if (lo > hi) return out;
  ZVector u;
  for (const auto& [lo, hi] : box) u.push_back(lo);
  while (true) {
    out.push_back({u, weight_dimension(D, u)});
    std::size_t i = box.size();
    while (i > 0) {
      --i;
      if (u[i] < box[i].second) {
        ++u[i];
        break;
      }
      u[i] = box[i].first;
      if (i == 0) return out;
    }
    if (box.empty()) return out;
  }
}

}  // namespace ppdiv
