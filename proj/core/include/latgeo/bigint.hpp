// Exact arbitrary-precision integers and rationals used throughout latgeo.
// BigInt has no overflow semantics; Rat is always kept normalized
// (positive denominator, reduced, zero stored as 0/1).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace latgeo {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<BigInt>;
using RatVec = std::vector<Rat>;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

inline int sign(const BigInt& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }

inline BigInt rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Floor division for exact integers (rounds toward -inf, any divisor sign).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Nonnegative remainder a mod m for m > 0.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Exact floor of a rational.
inline BigInt rat_floor(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }

inline BigInt rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline std::string to_string(const BigInt& a) { return a.str(); }

/// Serialize a rational: "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

inline BigInt parse_bigint(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_bigint: empty string");
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_bigint: bad integer '" + s + "'");
  }
}

/// Parse "p" or "p/q" (q > 0 after normalization).
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_bigint(s));
  BigInt num = parse_bigint(s.substr(0, slash));
  BigInt den = parse_bigint(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  return Rat(num, den);
}

/// gcd of a vector's entries (nonnegative; 0 for the zero vector).
inline BigInt vec_gcd(const IntVec& v) {
  BigInt g = 0;
  for (const auto& e : v) g = big_gcd(g, e);
  return g;
}

/// v / gcd(v). The gcd is positive, so signs are preserved.
/// Errors on the zero vector.
inline IntVec primitive(const IntVec& v) {
  BigInt g = vec_gcd(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

}  // namespace latgeo
