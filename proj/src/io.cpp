#include "ppdiv/io.hpp"

#include <fstream>
#include <sstream>

namespace ppdiv::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) malformed(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::vector<ZVector> rows_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array of vectors");
  std::vector<ZVector> rows;
  for (const auto& r : j) {
    rows.push_back(zvector_from_json(r));
    if (rows.back().size() != dim) malformed(std::string(what) + ": vector of wrong length");
  }
  return rows;
}

std::vector<std::string> points_from_json(const Json& j) {
  std::vector<std::string> pts;
  if (!j.contains("points")) return pts;
  for (const auto& p : array_field(j, "points")) {
    if (!p.is_string()) malformed("point labels must be strings");
    pts.push_back(p.get<std::string>());
  }
  return pts;
}

std::string label_from_json(const Json& at, const Base& base) {
  if (at.is_string()) return at.get<std::string>();
  if (base.kind() != BaseKind::Toric) malformed("coefficient position must be a point label");
  if (at.is_number_unsigned() || at.is_number_integer()) {
    const auto i = at.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= base.rays().size()) throw Error(Errc::UnknownRay, "ray index out of range");
    return Base::ray_label(base.rays()[static_cast<std::size_t>(i)]);
  }
  return Base::ray_label(zvector_from_json(at));
}

Json cones_by_ray_index(const QuasiFan& fan, const std::vector<ZVector>& rays) {
  Json cones = Json::array();
  for (const auto& c : fan.maximal_cones()) {
    Json idx = Json::array();
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (c.contains(rays[i])) idx.push_back(i);
    cones.push_back(std::move(idx));
  }
  return cones;
}

QuasiFan fan_from_indices(std::size_t rank, const std::vector<ZVector>& rays, const Json& cones) {
  if (!cones.is_array()) malformed("fan cones must be an array of index lists");
  std::vector<Cone> out;
  for (const auto& c : cones) {
    if (!c.is_array()) malformed("fan cones must be an array of index lists");
    std::vector<ZVector> gens;
    for (const auto& i : c) {
      if (!i.is_number_integer() || i.get<long long>() < 0 || static_cast<std::size_t>(i.get<long long>()) >= rays.size())
        malformed("fan cone refers to an unknown ray");
      gens.push_back(rays[i.get<std::size_t>()]);
    }
    out.push_back(Cone::from_generators(rank, gens));
  }
  if (out.empty()) out.push_back(Cone::zero(rank));
  return QuasiFan(rank, std::move(out));
}

}  // namespace

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return to_string(x);
}

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const ZVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const std::vector<ZVector>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

Json to_json(const LatticeMap& m) { return to_json(m.row_vectors()); }

Json to_json(const Cone& c) {
  Json j;
  j["rays"] = to_json(c.rays());
  j["lineality"] = to_json(c.lineality());
  return j;
}

Json to_json(const QuasiFan& f) {
  Json j;
  j["rank"] = f.ambient_dim();
  Json cones = Json::array();
  for (const auto& c : f.maximal_cones()) cones.push_back(to_json(c));
  j["max_cones"] = std::move(cones);
  return j;
}

Json to_json(const TailedPolyhedron& d) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : d.vertices()) vs.push_back(to_json(v));
  j["vertices"] = std::move(vs);
  j["tail_rays"] = to_json(d.tail().rays());
  return j;
}

Json to_json(const Base& b) {
  Json j;
  switch (b.kind()) {
    case BaseKind::P1:
      j["kind"] = "P1";
      break;
    case BaseKind::AffineCurve:
      j["kind"] = "affine_curve";
      break;
    case BaseKind::Toric:
      j["kind"] = "toric";
      j["rank"] = b.fan().ambient_dim();
      j["fan_rays"] = to_json(b.rays());
      j["fan_max_cones"] = cones_by_ray_index(b.fan(), b.rays());
      return j;
  }
  if (!b.points().empty()) j["points"] = b.points();
  return j;
}

Json to_json(const RationalDivisor& e) {
  Json j = Json::object();
  for (const auto& [label, c] : e.coefficients()) j[label] = to_json(c);
  return j;
}

Json to_json(const PolyhedralDivisor& D) {
  Json j;
  j["lattice_rank"] = D.lattice_rank();
  j["tail_rays"] = to_json(D.tail().rays());
  j["base"] = to_json(D.base());
  Json coeffs = Json::array();
  auto emit = [&](Json at, const TailedPolyhedron& delta) {
    Json c;
    c["at"] = std::move(at);
    Json vs = Json::array();
    for (const auto& v : delta.vertices()) vs.push_back(to_json(v));
    c["vertices"] = std::move(vs);
    coeffs.push_back(std::move(c));
  };
  if (D.base().kind() == BaseKind::Toric) {
    for (const auto& ray : D.base().rays()) {
      auto it = D.coefficients().find(Base::ray_label(ray));
      if (it != D.coefficients().end()) emit(to_json(ray), it->second);
    }
  } else {
    for (const auto& [label, delta] : D.coefficients()) emit(label, delta);
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json to_json(const PropernessReport& r) {
  Json j;
  j["proper"] = r.proper;
  if (r.degree) j["degree_polyhedron"] = to_json(*r.degree);
  if (!r.proper) j["reason"] = r.reason;
  j["checks"] = r.notes;
  return j;
}

Json to_json(const DowngradeResult& r) {
  Json j;
  j["sigma_rays"] = to_json(r.sigma.rays());
  j["P"] = to_json(r.projection);
  j["s"] = to_json(r.section);
  Json fan;
  fan["rank"] = r.fan.ambient_dim();
  fan["rays"] = to_json(r.divisor.base().rays());
  fan["max_cones"] = cones_by_ray_index(r.fan, r.divisor.base().rays());
  j["fan"] = std::move(fan);
  j["divisor"] = to_json(r.divisor);
  return j;
}

Json to_json(const ConeLattice& l) {
  Json j;
  j["cone"] = to_json(l.cone);
  j["basis"] = to_json(l.basis);
  return j;
}

Json to_json(const FiberReport& r) {
  Json j;
  j["point"] = r.point;
  j["fiber_polyhedron"] = to_json(r.fiber_polyhedron);
  j["normal_quasifan"] = to_json(r.normal_quasifan);
  Json lat = Json::array();
  for (const auto& l : r.cone_lattices) lat.push_back(to_json(l));
  j["cone_lattices"] = std::move(lat);
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    Json jo;
    jo["face"] = o.face_vertices;
    jo["face_recession_rays"] = to_json(o.face.recession.rays());
    jo["dimension"] = o.dimension;
    jo["orbit_cone"] = to_json(o.orbit_cone);
    jo["orbit_lattice"] = to_json(o.orbit_lattice);
    jo["isotropy"] = to_json(ZVector(o.isotropy_invariants));
    orbits.push_back(std::move(jo));
  }
  j["orbits"] = std::move(orbits);
  j["reduced"] = r.reduced;
  return j;
}

Json to_json(const FiberComponent& c) {
  Json j;
  j["vertex"] = to_json(c.vertex);
  j["cone"] = to_json(c.cone);
  j["lattice"] = to_json(c.lattice);
  return j;
}

Json to_json(const Plurifunction& f) {
  Json j = Json::object();
  for (const auto& [label, v] : f.shifts) j[label] = to_json(v);
  return j;
}

Json to_json(const std::vector<HilbertEntry>& table) {
  Json a = Json::array();
  for (const auto& e : table) {
    Json row;
    row["u"] = to_json(e.weight);
    row["dim"] = to_json(e.dimension);
    a.push_back(std::move(row));
  }
  return a;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) malformed("expected an integer, got " + j.get<std::string>());
    return boost::multiprecision::numerator(q);
  }
  malformed("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  malformed("expected a rational \"p/q\", got " + j.dump());
}

ZVector zvector_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an integer vector, got " + j.dump());
  ZVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

QVector qvector_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected a rational vector, got " + j.dump());
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

LatticeMap matrix_from_json(const Json& j, std::size_t cols) {
  if (!j.is_array()) malformed("expected a matrix (array of rows)");
  std::vector<ZVector> rows;
  for (const auto& r : j) {
    rows.push_back(zvector_from_json(r));
    if (rows.back().size() != rows.front().size()) malformed("matrix rows of different lengths");
  }
  if (!rows.empty()) cols = rows.front().size();
  return LatticeMap(std::move(rows), cols);
}

Base base_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) malformed("base kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "P1") return Base::p1(points_from_json(j));
  if (k == "affine_curve") return Base::affine_curve(points_from_json(j));
  if (k != "toric") malformed("unknown base kind \"" + k + "\"");
  const Json& rays_j = array_field(j, "fan_rays");
  std::size_t rank = 0;
  if (j.contains("rank")) {
    if (!j.at("rank").is_number_unsigned()) malformed("toric rank must be a nonnegative integer");
    rank = j.at("rank").get<std::size_t>();
  } else if (!rays_j.empty()) {
    rank = zvector_from_json(rays_j.front()).size();
  }
  const std::vector<ZVector> rays = rows_from_json(rays_j, rank, "fan_rays");
  QuasiFan fan = fan_from_indices(rank, rays, field(j, "fan_max_cones"));
  if (!validate(fan)) throw Error(Errc::InvalidInput, "fan cones do not meet in common faces");
  Base b = Base::toric(std::move(fan));
  if (b.rays().size() != rays.size()) malformed("fan_rays must list exactly the rays of the fan");
  return b;
}

PolyhedralDivisor divisor_from_json(const Json& j) {
  const Json& rank_j = field(j, "lattice_rank");
  if (!rank_j.is_number_unsigned()) malformed("lattice_rank must be a nonnegative integer");
  const std::size_t n = rank_j.get<std::size_t>();
  const Cone tail = Cone::from_generators(n, rows_from_json(field(j, "tail_rays"), n, "tail_rays"));
  Base base = base_from_json(field(j, "base"));
  std::map<std::string, TailedPolyhedron> coefficients;
  const Json coeffs = j.contains("coefficients") ? j.at("coefficients") : Json::array();
  if (!coeffs.is_array()) malformed("coefficients must be an array");
  for (const auto& c : coeffs) {
    const std::string label = label_from_json(field(c, "at"), base);
    std::vector<QVector> vertices;
    for (const auto& v : array_field(c, "vertices")) {
      vertices.push_back(qvector_from_json(v));
      if (vertices.back().size() != n) malformed("vertex of wrong length at " + label);
    }
    if (!coefficients.emplace(label, TailedPolyhedron(vertices, tail)).second)
      malformed("two coefficients at " + label);
  }
  return PolyhedralDivisor(n, tail, std::move(base), std::move(coefficients));
}

DowngradeInput downgrade_input_from_json(const Json& j) {
  DowngradeInput in;
  in.F = matrix_from_json(field(j, "F"));
  const std::size_t n = in.F.rows();
  in.delta = Cone::from_generators(n, rows_from_json(field(j, "delta_rays"), n, "delta_rays"));
  if (j.contains("s")) in.section = matrix_from_json(j.at("s"), n);
  if (j.contains("P")) in.projection = matrix_from_json(j.at("P"), n);
  return in;
}

DowngradeResult downgrade_result_from_json(const Json& j) {
  PolyhedralDivisor D = divisor_from_json(field(j, "divisor"));
  if (D.base().kind() != BaseKind::Toric) malformed("a downgrade result carries a toric divisor");
  LatticeMap P = matrix_from_json(field(j, "P"));
  LatticeMap s = matrix_from_json(field(j, "s"));
  return {D.tail(), D.base().fan(), std::move(P), std::move(s), std::move(D)};
}

RestrictionMap restriction_map_from_json(const Json& j) {
  RestrictionMap m{base_from_json(field(j, "target")), {}};
  for (const auto& entry : array_field(j, "pullbacks")) {
    ZVector ray = zvector_from_json(field(entry, "ray"));
    auto& points = m.pullbacks[ray];
    for (const auto& p : array_field(entry, "points")) {
      const Json& label = field(p, "point");
      if (!label.is_string()) malformed("point labels must be strings");
      Integer mult = p.contains("multiplicity") ? integer_from_json(p.at("multiplicity")) : Integer(1);
      points.push_back({label.get<std::string>(), mult});
    }
  }
  return m;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace ppdiv::io
