#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppdiv {

enum class Errc {
  InvalidInput,
  DimensionMismatch,
  NotSplit,
  NotPointed,
  EmptyPolyhedron,
  TailMismatch,
  OutsideDomain,
  NonPositiveScalar,
  SupportMismatch,
  OutsideSupport,
  OutsideWeightCone,
  NotProjectiveCurve,
  UnsupportedBase,
  IncompleteToricFan,
  Mismatch,
  DegreeNotZero,
  NotSaturated,
  SectionInvalid,
  UnknownRay,
  UnknownPoint,
  FaceNotInFiber,
  NotASurfaceDatum,
  NotP1,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ppdiv
