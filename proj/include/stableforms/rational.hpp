#ifndef STABLEFORMS_RATIONAL_HPP
#define STABLEFORMS_RATIONAL_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stableforms {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with the canonical-form invariants (gcd(|num|,den) = 1,
// den > 0, zero = 0/1) maintained by cpp_rational itself.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline int rat_sign(const Rational& r) { return r.sign(); }

Rational rat_pow(const Rational& base, unsigned exp);

// Exact square root when r is a perfect square of a rational, else nullopt.
std::optional<Rational> rat_sqrt(const Rational& r);

std::string rat_format(const Rational& r);

}  // namespace stableforms

#endif
