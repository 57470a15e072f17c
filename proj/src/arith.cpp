#include "ppdiv/arith.hpp"

#include <cctype>

namespace ppdiv {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSplit: return "NotSplit";
    case Errc::NotPointed: return "NotPointed";
    case Errc::EmptyPolyhedron: return "EmptyPolyhedron";
    case Errc::TailMismatch: return "TailMismatch";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::NonPositiveScalar: return "NonPositiveScalar";
    case Errc::SupportMismatch: return "SupportMismatch";
    case Errc::OutsideSupport: return "OutsideSupport";
    case Errc::OutsideWeightCone: return "OutsideWeightCone";
    case Errc::NotProjectiveCurve: return "NotProjectiveCurve";
    case Errc::UnsupportedBase: return "UnsupportedBase";
    case Errc::IncompleteToricFan: return "IncompleteToricFan";
    case Errc::Mismatch: return "Mismatch";
    case Errc::DegreeNotZero: return "DegreeNotZero";
    case Errc::NotSaturated: return "NotSaturated";
    case Errc::SectionInvalid: return "SectionInvalid";
    case Errc::UnknownRay: return "UnknownRay";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::FaceNotInFiber: return "FaceNotInFiber";
    case Errc::NotASurfaceDatum: return "NotASurfaceDatum";
    case Errc::NotP1: return "NotP1";
  }
  return "Unknown";
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(Errc::InvalidInput, "malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(Errc::InvalidInput, "malformed rational '" + std::string(whole) + "'");
    }
  }
  Integer value(std::string(text.substr(i)));
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(Errc::InvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Integer& value) { return value.str(); }

Integer floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;
  if (q * den != num && num < 0) q -= 1;
  return q;
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

QVector to_rational(const ZVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

ZVector zero_zvector(std::size_t n) { return ZVector(n, Integer(0)); }
QVector zero_qvector(std::size_t n) { return QVector(n, Rational(0)); }

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product of different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const ZVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product of different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer dot(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot product of different lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sum of different lengths");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector difference of different lengths");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector scaled(const Rational& s, const QVector& a) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

ZVector add(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sum of different lengths");
  ZVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ZVector negated(const ZVector& a) {
  ZVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const ZVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_integral(const QVector& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

ZVector primitive(const QVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, boost::multiprecision::denominator(x));
  ZVector scaled_v(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled_v[i] = boost::multiprecision::numerator(v[i]) * (den / boost::multiprecision::denominator(v[i]));
  }
  return primitive(scaled_v);
}

ZVector primitive(const ZVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  g = abs(g);
  ZVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

ZVector to_integer(const QVector& v) {
  ZVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw Error(Errc::InvalidInput, "expected an integral vector");
    out[i] = boost::multiprecision::numerator(v[i]);
  }
  return out;
}

}  // namespace ppdiv
