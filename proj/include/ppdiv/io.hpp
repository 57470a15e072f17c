#pragma once

// JSON encoding of all library values. Rationals are "p/q" strings, integers
// are JSON numbers (or decimal strings when they do not fit).

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppdiv/downgrade.hpp"
#include "ppdiv/orbits.hpp"
#include "ppdiv/sections.hpp"

namespace ppdiv::io {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const ZVector& v);
Json to_json(const QVector& v);
Json to_json(const std::vector<ZVector>& rows);
Json to_json(const LatticeMap& m);
Json to_json(const Cone& c);
Json to_json(const QuasiFan& f);
Json to_json(const TailedPolyhedron& d);
Json to_json(const Base& b);
Json to_json(const RationalDivisor& e);
Json to_json(const PolyhedralDivisor& D);
Json to_json(const PropernessReport& r);
Json to_json(const DowngradeResult& r);
Json to_json(const ConeLattice& l);
Json to_json(const FiberReport& r);
Json to_json(const FiberComponent& c);
Json to_json(const Plurifunction& f);
Json to_json(const std::vector<HilbertEntry>& table);

// All readers throw Error(InvalidInput) on malformed input.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
ZVector zvector_from_json(const Json& j);
QVector qvector_from_json(const Json& j);
LatticeMap matrix_from_json(const Json& j, std::size_t cols = 0);
Base base_from_json(const Json& j);
PolyhedralDivisor divisor_from_json(const Json& j);
DowngradeInput downgrade_input_from_json(const Json& j);
DowngradeResult downgrade_result_from_json(const Json& j);

struct RestrictionMap {
  Base target;
  std::map<ZVector, std::vector<PointMultiplicity>> pullbacks;
};
RestrictionMap restriction_map_from_json(const Json& j);

Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace ppdiv::io
