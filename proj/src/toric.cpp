#include "tropic/toric.hpp"

#include "tropic/complex.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace tropic {

namespace {

int weight(const std::vector<int>& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
  return w;
}

void accumulate(ChernPolynomial& into, const std::vector<int>& e, const Rational& c) {
  if (c.is_zero()) return;
  auto& slot = into[e];
  slot += c;
  if (slot.is_zero()) into.erase(e);
}

ChernPolynomial times(const ChernPolynomial& a, const ChernPolynomial& b, int cap) {
  ChernPolynomial out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      if (weight(e) <= cap) accumulate(out, e, ca * cb);
    }
  return out;
}

ChernPolynomial plus(ChernPolynomial a, const ChernPolynomial& b, const Rational& s = 1) {
  for (const auto& [e, c] : b) accumulate(a, e, c * s);
  return a;
}

ToddTable build_todd(int n) {
  // log of x/(1-e^-x): from Q' = L' Q
  Vec q = todd_series(n), l(n + 1, Rational(0));
  for (int k = 1; k <= n; ++k) {
    Rational s = k * q[k];
    for (int i = 1; i < k; ++i) s -= i * l[i] * q[k - i];
    l[k] = s / k;
  }
  // power sums in the elementary symmetric functions c_1..c_n (Newton's identities)
  auto mono = [&](int i) {
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    return ChernPolynomial{{e, Rational(1)}};
  };
  std::vector<ChernPolynomial> p(n + 1);
  for (int k = 1; k <= n; ++k) {
    ChernPolynomial pk;
    for (int i = 1; i < k; ++i) pk = plus(pk, times(mono(i), p[k - i], n), (i % 2 == 1) ? 1 : -1);
    pk = plus(pk, mono(k), Rational((k % 2 == 1) ? k : -k));
    p[k] = pk;
  }
  ChernPolynomial s;
  for (int k = 1; k <= n; ++k) s = plus(s, p[k], l[k]);
  // exp(s), truncated at weight n
  ChernPolynomial total{{std::vector<int>(n, 0), Rational(1)}}, power = total;
  for (int m = 1; m <= n; ++m) {
    power = times(power, s, n);
    total = plus(total, power, Rational(1) / factorial(m).convert_to<long long>());
  }
  ToddTable t;
  t.nmax = n;
  t.todd.resize(n + 1);
  for (const auto& [e, c] : total) t.todd[weight(e)][e] = c;
  return t;
}

}  // namespace

Vec todd_series(int n) {
  if (n < 0) throw std::invalid_argument("todd_series: negative order");
  // (1 - e^-x)/x = sum (-1)^k x^k / (k+1)!, inverted term by term
  Vec a(n + 1), q(n + 1, Rational(0));
  for (int k = 0; k <= n; ++k) a[k] = Rational((k % 2 == 0) ? 1 : -1) / factorial(k + 1).convert_to<long long>();
  q[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s -= a[i] * q[k - i];
    q[k] = s;
  }
  return q;
}

Rational ToddTable::evaluate(int j, const std::vector<Rational>& c) const {
  if (j < 0 || j > nmax) throw std::out_of_range("ToddTable::evaluate: degree");
  Rational total = 0;
  for (const auto& [e, coef] : todd[j]) {
    Rational term = coef;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int r = 0; r < e[i]; ++r) term *= i < c.size() ? c[i] : Rational(0);
    total += term;
  }
  return total;
}

const ToddTable& todd_polynomials(int nmax) {
  if (nmax < 0 || nmax > kToddCap) throw std::invalid_argument("todd_polynomials: degree above the cap");
  static std::mutex mu;
  static std::map<int, ToddTable> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(nmax);
  if (it == cache.end()) it = cache.emplace(nmax, build_todd(nmax)).first;
  return it->second;
}

SmoothCompleteFan2D::SmoothCompleteFan2D(std::vector<IntVec> rays) : rays_(std::move(rays)) {
  std::size_t m = rays_.size();
  if (m < 3) throw std::invalid_argument("SmoothCompleteFan2D: need at least three rays");
  double turn = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = rays_[i];
    const auto& b = rays_[(i + 1) % m];
    if (a.size() != 2) throw std::invalid_argument("SmoothCompleteFan2D: rays must be planar");
    if (a[0] * b[1] - a[1] * b[0] != 1)
      throw std::invalid_argument("SmoothCompleteFan2D: consecutive rays are not a positive lattice basis");
    double ang = std::atan2(b[1].convert_to<double>(), b[0].convert_to<double>()) -
                 std::atan2(a[1].convert_to<double>(), a[0].convert_to<double>());
    if (ang <= 0) ang += 2 * std::numbers::pi;
    turn += ang;
  }
  if (std::lround(turn / (2 * std::numbers::pi)) != 1)
    throw std::invalid_argument("SmoothCompleteFan2D: rays wind more than once");
  for (std::size_t i = 0; i < m; ++i) {
    const auto& prev = rays_[(i + m - 1) % m];
    const auto& next = rays_[(i + 1) % m];
    const auto& u = rays_[i];
    Integer w0 = prev[0] + next[0], w1 = prev[1] + next[1];
    Integer a = u[0] != 0 ? w0 / u[0] : w1 / u[1];
    if (w0 != a * u[0] || w1 != a * u[1]) throw std::logic_error("SmoothCompleteFan2D: wall relation fails");
    walls_.push_back(a.convert_to<long long>());
  }
}

SmoothCompleteFan2D SmoothCompleteFan2D::from_polygon(const Polyhedron& q, Vec* heights) {
  require_lattice_polytope(q);
  if (q.ambient_dim() != 2 || q.dim() != 2) throw std::invalid_argument("from_polygon: not a polygon");
  struct Side {
    IntVec normal;
    Rational height;
    double angle;
  };
  std::vector<Side> sides;
  for (const auto& row : q.inequalities()) {
    // b + a.x >= 0 means <-a, x> <= b
    Vec u = primitive(Vec{-row[1], -row[2]});
    Rational g = u[0].is_zero() ? -row[2] / u[1] : -row[1] / u[0];
    sides.push_back({to_intvec(u), row[0] / g, std::atan2(u[1].convert_to<double>(), u[0].convert_to<double>())});
  }
  std::sort(sides.begin(), sides.end(), [](const Side& a, const Side& b) { return a.angle < b.angle; });
  std::vector<IntVec> rays;
  for (const auto& s : sides) rays.push_back(s.normal);
  SmoothCompleteFan2D fan = [&] {
    try {
      return SmoothCompleteFan2D(rays);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("from_polygon: polygon is not Delzant");
    }
  }();
  if (heights) {
    heights->clear();
    for (const auto& s : sides) heights->push_back(s.height);
  }
  return fan;
}

Vec support_heights(const SmoothCompleteFan2D& fan, const Polyhedron& polygon) {
  if (polygon.ambient_dim() != 2 || !polygon.bounded() || polygon.empty())
    throw std::invalid_argument("support_heights: need a planar polytope");
  Vec h;
  for (const auto& u : fan.rays()) {
    Vec uv = to_vec(u);
    Rational best = dot(uv, polygon.vertices()[0]);
    for (const auto& x : polygon.vertices()) best = std::max(best, dot(uv, x));
    h.push_back(best);
  }
  return h;
}

ToricRing ToricRing::surface(const SmoothCompleteFan2D& fan) {
  ToricRing r;
  r.dim_ = 2;
  r.rays_ = fan.rays().size();
  std::size_t m = r.rays_;
  r.form_.assign(m, Vec(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    r.form_[i][i] = -fan.wall_numbers()[i];
    r.form_[i][(i + 1) % m] = 1;
    r.form_[(i + 1) % m][i] = 1;
  }
  return r;
}

ToricRing ToricRing::projective_space(std::size_t n) {
  if (n == 0) throw std::invalid_argument("projective_space: n must be positive");
  ToricRing r;
  r.dim_ = n;
  r.rays_ = n + 1;
  r.projective_ = true;
  return r;
}

CohomologyClass ToricRing::zero() const {
  CohomologyClass c;
  for (std::size_t k = 0; k <= dim_; ++k) {
    std::size_t len = (!projective_ && k == 1) ? rays_ : 1;
    c.parts.emplace_back(len, Rational(0));
  }
  return c;
}

CohomologyClass ToricRing::one() const {
  auto c = zero();
  c.parts[0][0] = 1;
  return c;
}

CohomologyClass ToricRing::ray_divisor(std::size_t i) const {
  if (i >= rays_) throw std::out_of_range("ray_divisor: no such ray");
  auto c = zero();
  c.parts[1][projective_ ? 0 : i] = 1;
  return c;
}

CohomologyClass ToricRing::divisor(const Vec& coeffs) const {
  auto c = zero();
  if (coeffs.size() != c.parts[1].size()) throw std::invalid_argument("divisor: wrong number of coefficients");
  c.parts[1] = coeffs;
  return c;
}

CohomologyClass ToricRing::hyperplane() const {
  if (!projective_) throw std::logic_error("hyperplane: not a projective space");
  return ray_divisor(0);
}

CohomologyClass ToricRing::add(const CohomologyClass& a, const CohomologyClass& b) const {
  auto c = zero();
  for (std::size_t k = 0; k <= dim_; ++k)
    for (std::size_t i = 0; i < c.parts[k].size(); ++i) c.parts[k][i] = a.parts.at(k).at(i) + b.parts.at(k).at(i);
  return c;
}

CohomologyClass ToricRing::scale(const CohomologyClass& a, const Rational& s) const {
  auto c = a;
  for (auto& p : c.parts)
    for (auto& x : p) x *= s;
  return c;
}

CohomologyClass ToricRing::multiply(const CohomologyClass& a, const CohomologyClass& b) const {
  auto c = zero();
  if (projective_) {
    for (std::size_t i = 0; i <= dim_; ++i)
      for (std::size_t j = 0; i + j <= dim_; ++j) c.parts[i + j][0] += a.parts[i][0] * b.parts[j][0];
    return c;
  }
  const Rational& a0 = a.parts[0][0];
  const Rational& b0 = b.parts[0][0];
  c.parts[0][0] = a0 * b0;
  for (std::size_t i = 0; i < rays_; ++i) c.parts[1][i] = a0 * b.parts[1][i] + b0 * a.parts[1][i];
  Rational top = a0 * b.parts[2][0] + b0 * a.parts[2][0];
  for (std::size_t i = 0; i < rays_; ++i)
    for (std::size_t j = 0; j < rays_; ++j)
      if (!form_[i][j].is_zero()) top += a.parts[1][i] * form_[i][j] * b.parts[1][j];
  c.parts[2][0] = top;
  return c;
}

CohomologyClass ToricRing::part(const CohomologyClass& a, std::size_t k) const {
  auto c = zero();
  c.parts.at(k) = a.parts.at(k);
  return c;
}

Rational ToricRing::integrate(const CohomologyClass& a) const { return a.parts.at(dim_)[0]; }

CohomologyClass ToricRing::exp(const CohomologyClass& a) const {
  if (!a.parts[0][0].is_zero()) throw std::invalid_argument("exp: class has a degree-zero part");
  auto total = one(), power = one();
  for (std::size_t m = 1; m <= dim_; ++m) {
    power = scale(multiply(power, a), Rational(1, static_cast<long long>(m)));
    total = add(total, power);
  }
  return total;
}

CohomologyClass ToricRing::chern_total() const {
  auto c = one();
  for (std::size_t i = 0; i < rays_; ++i) c = multiply(c, add(one(), ray_divisor(i)));
  return c;
}

CohomologyClass ToricRing::canonical() const {
  auto k = zero();
  for (std::size_t i = 0; i < rays_; ++i) k = add(k, ray_divisor(i));
  return scale(k, -1);
}

CohomologyClass ToricRing::todd() const {
  const auto& table = todd_polynomials(static_cast<int>(dim_));
  auto c = chern_total();
  std::vector<CohomologyClass> ck;
  for (std::size_t k = 1; k <= dim_; ++k) ck.push_back(part(c, k));
  auto td = zero();
  for (std::size_t j = 0; j <= dim_; ++j)
    for (const auto& [e, coef] : table.todd[j]) {
      auto term = one();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int r = 0; r < e[i]; ++r) term = multiply(term, ck[i]);
      td = add(td, scale(term, coef));
    }
  return td;
}

Rational intersection_number(const ToricRing& ring, const std::vector<CohomologyClass>& classes) {
  if (classes.size() != ring.dim()) throw std::invalid_argument("intersection_number: need dim classes of degree one");
  auto c = ring.one();
  for (const auto& d : classes) c = ring.multiply(c, ring.part(d, 1));
  return ring.integrate(c);
}

Rational rr_number(const ToricRing& ring, const CohomologyClass& d) {
  return ring.integrate(ring.multiply(ring.exp(ring.part(d, 1)), ring.todd()));
}

Rational adjunction_rr_surface(const ToricRing& ring, const CohomologyClass& d) {
  if (ring.dim() != 2) throw std::invalid_argument("adjunction_rr_surface: not a surface");
  auto d1 = ring.part(d, 1);
  return intersection_number(ring, {d1, ring.add(d1, ring.scale(ring.canonical(), -1))}) / 2 + 1;
}

Rational virtual_T_genus(const ToricRing& ring, const std::vector<CohomologyClass>& ds) {
  auto c = ring.todd();
  for (const auto& d : ds)
    c = ring.multiply(c, ring.add(ring.one(), ring.scale(ring.exp(ring.scale(ring.part(d, 1), -1)), -1)));
  return ring.integrate(c);
}

RRDifferenceReport rr_difference(const ToricRing& ring, const CohomologyClass& dprime, const CohomologyClass& d,
                                 std::optional<long long> curve_genus) {
  if (ring.dim() != 2) throw std::invalid_argument("rr_difference: not a surface");
  RRDifferenceReport rep;
  rep.difference = rr_number(ring, ring.add(dprime, ring.scale(d, -1)));
  rep.ambient = rr_number(ring, dprime);
  if (curve_genus) {
    rep.curve_genus = *curve_genus;
  } else {
    Rational g = 1 + intersection_number(ring, {d, ring.add(d, ring.canonical())}) / 2;
    if (!is_integer(g)) throw std::domain_error("rr_difference: adjunction genus is not an integer");
    rep.curve_genus = to_ll(g);
  }
  rep.curve = intersection_number(ring, {dprime, d}) + 1 - rep.curve_genus;
  rep.agrees = rep.difference == rep.ambient - rep.curve;
  return rep;
}

}  // namespace tropic
