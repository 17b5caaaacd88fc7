#include "tropic/numeric.hpp"

#include <limits>
#include <stdexcept>
#include <tuple>

namespace tropic {

const Rational& ExtRational::value() const {
  if (!value_) throw std::domain_error("value() of -inf");
  return *value_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (a.is_neg_inf()) return !b.is_neg_inf();
  if (b.is_neg_inf()) return false;
  return *a.value_ < *b.value_;
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_ext(const ExtRational& r) {
  return r.is_neg_inf() ? std::string("-inf") : format_rational(r.value());
}

Rational parse_rational(const std::string& s) {
  auto bad = [&]() { return std::invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& t) {
    if (t.empty()) throw bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') throw bad();
    return Integer(t[0] == '+' ? t.substr(1) : t);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(num, den);
}

ExtRational parse_ext(const std::string& s) {
  if (s == "-inf") return ExtRational::neg_inf();
  return ExtRational(parse_rational(s));
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("expected an integer, got " + format_rational(r));
  return numerator(r);
}

long long to_ll(const Integer& z) {
  if (z > std::numeric_limits<long long>::max() || z < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer does not fit in 64 bits");
  return z.convert_to<long long>();
}

long long to_ll(const Rational& r) { return to_ll(to_integer(r)); }

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec to_vec(const IntVec& v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

Vec to_vec(const std::vector<long long>& v) {
  Vec r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(x);
  return r;
}

IntVec to_intvec(const Vec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(to_integer(x));
  return r;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Vec primitive(const Vec& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  IntVec z;
  z.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    z.push_back(numerator(x) * (l / denominator(x)));
    g = gcd(g, z.back());
  }
  if (g == 0) return v;
  Vec r;
  r.reserve(v.size());
  for (auto& x : z) r.emplace_back(x / abs(g));
  return r;
}

Vec primitive_line(const Vec& v) {
  Vec p = primitive(v);
  for (const auto& x : p) {
    if (x == 0) continue;
    if (x < 0) p = scale(p, -1);
    break;
  }
  return p;
}

std::string vec_key(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_rational(v[i]);
  }
  return s + ")";
}

std::tuple<Integer, Integer, Integer> ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;  // truncation is fine for the invariant
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational factorial(long long n) {
  Rational r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace tropic
