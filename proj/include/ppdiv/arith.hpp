#pragma once

// Exact scalar and vector arithmetic. Everything in the library is built on
// GMP-backed integers and rationals; there is no floating point anywhere.

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "ppdiv/error.hpp"

namespace ppdiv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using ZVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

/// Parses "p/q", "p" or "-p/q"; the result is in lowest terms.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms with q > 0, or "p" when q = 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer floor(const Rational& value);
bool is_integer(const Rational& value);

QVector to_rational(const ZVector& v);
ZVector zero_zvector(std::size_t n);
QVector zero_qvector(std::size_t n);

Rational dot(const QVector& a, const QVector& b);
Rational dot(const ZVector& a, const QVector& b);
Integer dot(const ZVector& a, const ZVector& b);

QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scaled(const Rational& s, const QVector& a);
ZVector add(const ZVector& a, const ZVector& b);
ZVector negated(const ZVector& a);

bool is_zero(const QVector& v);
bool is_zero(const ZVector& v);
bool is_integral(const QVector& v);

/// Positive rescaling of a nonzero vector to a primitive integer vector.
/// The zero vector maps to the zero vector.
ZVector primitive(const QVector& v);
ZVector primitive(const ZVector& v);

/// Integer vector from an integral rational vector; throws InvalidInput otherwise.
ZVector to_integer(const QVector& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace ppdiv
