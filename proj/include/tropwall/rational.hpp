#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropwall {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense rational vector. Used for weights, rays, points.
using Vector = std::vector<Rational>;
/// Row-major dense rational matrix.
using Matrix = std::vector<Vector>;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Vector& v);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
bool is_zero(const Vector& v);

/// Positive rescaling of v to a primitive integer vector (entries coprime).
/// The zero vector is returned unchanged.
Vector primitive(const Vector& v);

/// Least common multiple of the denominators of v.
Integer denominator_lcm(const Vector& v);

/// Conversion with range check; throws std::overflow_error when the value
/// does not fit.
long long to_int64(const Integer& z);
long long to_int64(const Rational& q);

}  // namespace tropwall
