#pragma once

// Toric varieties with a subtorus action: the minimal polyhedral divisor on
// the toric quotient, and its pullback to curves.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppdiv/poldiv.hpp"

namespace ppdiv {

/// X = X_delta with the subtorus given by F : N_T -> N_X.
struct DowngradeInput {
  Cone delta;
  LatticeMap F;
  std::optional<LatticeMap> section;     // s with s * F = id
  std::optional<LatticeMap> projection;  // P onto N_Y with kernel image(F)
};

struct DowngradeResult {
  Cone sigma;
  QuasiFan fan;
  LatticeMap projection;
  LatticeMap section;
  PolyhedralDivisor divisor;  // on the toric base of `fan`
};

/// Throws NotSaturated, SectionInvalid, NotPointed.
DowngradeResult downgrade(const DowngradeInput& in);

struct PointMultiplicity {
  std::string point;
  Integer multiplicity;
};

/// Pulls the toric divisor back along a curve meeting the divisor of ray rho
/// in the given points with the given multiplicities. Throws UnknownRay,
/// UnknownPoint, UnsupportedBase.
PolyhedralDivisor restrict_to_curve(const DowngradeResult& result,
                                    const std::map<ZVector, std::vector<PointMultiplicity>>& pullbacks,
                                    const Base& target);

}  // namespace ppdiv
