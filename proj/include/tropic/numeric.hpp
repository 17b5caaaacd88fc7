#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropic {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;
using IntVec = std::vector<Integer>;
using Matrix = std::vector<Vec>;        // row-major
using IntMatrix = std::vector<IntVec>;  // row-major

/// A rational number or -infinity (the tropical zero).
class ExtRational {
 public:
  ExtRational() : value_(Rational(0)) {}
  ExtRational(Rational r) : value_(std::move(r)) {}  // NOLINT(implicit)
  static ExtRational neg_inf() { return ExtRational(std::nullopt); }

  bool is_neg_inf() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) { return a.value_ == b.value_; }
  friend bool operator<(const ExtRational& a, const ExtRational& b);

 private:
  explicit ExtRational(std::optional<Rational> v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

/// A point of extended tropical space; -inf coordinates mark boundary directions.
using RationalPoint = std::vector<ExtRational>;

// "p/q", integers without denominator, "-inf" for the tropical zero.
std::string format_rational(const Rational& r);
std::string format_ext(const ExtRational& r);
Rational parse_rational(const std::string& s);
ExtRational parse_ext(const std::string& s);

bool is_integer(const Rational& r);
Integer to_integer(const Rational& r);  // throws std::domain_error if not integral
long long to_ll(const Integer& z);      // throws std::overflow_error
long long to_ll(const Rational& r);

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
bool is_zero(const Vec& a);

Vec to_vec(const IntVec& v);
Vec to_vec(const std::vector<long long>& v);
IntVec to_intvec(const Vec& v);  // requires integral entries

/// Positive multiple of v with coprime integer entries (zero stays zero).
Vec primitive(const Vec& v);
/// Primitive, and the first nonzero entry made positive.
Vec primitive_line(const Vec& v);

std::string vec_key(const Vec& v);

Integer gcd(const Integer& a, const Integer& b);
/// Returns (g, x, y) with a*x + b*y = g = gcd(a,b) >= 0.
std::tuple<Integer, Integer, Integer> ext_gcd(const Integer& a, const Integer& b);

Integer binomial(long long n, long long k);
Rational factorial(long long n);

}  // namespace tropic
