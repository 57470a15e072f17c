#include "ppdiv/downgrade.hpp"

#include <algorithm>

namespace ppdiv {

namespace {

bool unimodular_rows(const LatticeMap& A) {
  const SmithForm snf = smith_normal_form(A);
  if (snf.rank() != A.rows()) return false;
  const auto d = snf.diagonal();
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

bool is_zero_map(const LatticeMap& A) {
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (!is_zero(A.row(i))) return false;
  return true;
}

}  // namespace

DowngradeResult downgrade(const DowngradeInput& in) {
  const LatticeMap& F = in.F;
  const std::size_t n = F.rows(), k = F.cols();
  if (in.delta.ambient_dim() != n) throw Error(Errc::DimensionMismatch, "delta and F disagree on the rank of N_X");
  if (!unimodular_rows(F.transpose())) throw Error(Errc::NotSaturated, "F must be injective with saturated image");

  LatticeMap s;
  if (in.section) {
    s = *in.section;
    if (s.rows() != k || s.cols() != n || !(s * F == LatticeMap::identity(k)))
      throw Error(Errc::SectionInvalid, "s * F is not the identity");
  } else {
    s = section_of_embedding(F);
  }

  LatticeMap P;
  if (in.projection) {
    P = *in.projection;
    if (P.cols() != n || P.rows() != n - k || !is_zero_map(P * F) || !unimodular_rows(P))
      throw Error(Errc::InvalidInput, "P must be a surjection with kernel image(F)");
  } else {
    P = cokernel_projection(F);
  }

  Cone sigma = in.delta.preimage(F);
  if (!sigma.is_pointed()) throw Error(Errc::NotPointed, "the subtorus acts with a non-pointed weight cone");

  QuasiFan fan = projected_face_fan(in.delta, P);
  Base base = Base::toric(fan);

  std::vector<HalfSpace> ineqs, eqs;
  for (const auto& a : in.delta.facets()) ineqs.push_back({to_rational(a), 0});
  for (const auto& e : in.delta.equations()) eqs.push_back({to_rational(e), 0});

  std::map<std::string, TailedPolyhedron> coefficients;
  for (const auto& ray : base.rays()) {
    std::vector<HalfSpace> slice_eqs = eqs;
    for (std::size_t i = 0; i < P.rows(); ++i) slice_eqs.push_back({to_rational(P.row(i)), Rational(ray[i])});
    const TailedPolyhedron slice = TailedPolyhedron::from_inequalities(n, ineqs, slice_eqs);
    std::vector<QVector> pts;
    for (const auto& x : slice.vertices()) pts.push_back(s.apply(x));
    coefficients.emplace(Base::ray_label(ray), TailedPolyhedron(pts, sigma));
  }
  PolyhedralDivisor divisor(k, sigma, std::move(base), std::move(coefficients));
  return {std::move(sigma), std::move(fan), std::move(P), std::move(s), std::move(divisor)};
}

PolyhedralDivisor restrict_to_curve(const DowngradeResult& result,
                                    const std::map<ZVector, std::vector<PointMultiplicity>>& pullbacks,
                                    const Base& target) {
  if (!target.is_curve()) throw Error(Errc::UnsupportedBase, "restriction targets a curve");
  const PolyhedralDivisor& D = result.divisor;
  std::map<std::string, TailedPolyhedron> coefficients;
  for (const auto& [ray, points] : pullbacks) {
    const std::string label = Base::ray_label(ray);
    if (!D.base().has_prime(label)) throw Error(Errc::UnknownRay, "no fan ray " + label);
    const TailedPolyhedron delta = D.coefficient(label);
    for (const auto& pm : points) {
      if (!target.has_prime(pm.point)) throw Error(Errc::UnknownPoint, "no point " + pm.point + " on the target");
      if (pm.multiplicity < 1) throw Error(Errc::InvalidInput, "multiplicities must be positive");
      TailedPolyhedron term = scale(Rational(pm.multiplicity), delta);
      auto it = coefficients.find(pm.point);
      if (it == coefficients.end())
        coefficients.emplace(pm.point, std::move(term));
      else
        it->second = minkowski_sum(it->second, term);
    }
  }
  return PolyhedralDivisor(D.lattice_rank(), D.tail(), target, std::move(coefficients));
}

}  // namespace ppdiv
