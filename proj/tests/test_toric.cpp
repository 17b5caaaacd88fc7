#include <doctest.h>

#include "tropic/complex.hpp"
#include "tropic/toric.hpp"

#include <random>

using namespace tropic;

namespace {

IntVec iv(long long a, long long b) { return IntVec{Integer(a), Integer(b)}; }
Vec v(std::initializer_list<long long> xs) {
  Vec r;
  for (auto x : xs) r.emplace_back(x);
  return r;
}

// Oracle: Bernoulli numbers B_k (with B_1 = +1/2) give x/(1-e^-x) = sum B_k x^k / k!.
Vec bernoulli_series(int n) {
  Vec b(n + 1, Rational(0));
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -s / (m + 1);
  }
  if (n >= 1) b[1] = Rational(1, 2);
  Vec out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = b[k] / Rational(factorial(k));
  return out;
}

}  // namespace

TEST_CASE("Todd series and polynomials") {
  auto q = todd_series(4);
  CHECK(q == Vec{1, Rational(1, 2), Rational(1, 12), 0, Rational(-1, 720)});
  CHECK(todd_series(8) == bernoulli_series(8));

  const auto& t = todd_polynomials(4);
  CHECK(t.todd[0] == ChernPolynomial{{{0, 0, 0, 0}, 1}});
  CHECK(t.todd[1] == ChernPolynomial{{{1, 0, 0, 0}, Rational(1, 2)}});
  CHECK(t.todd[2] == ChernPolynomial{{{2, 0, 0, 0}, Rational(1, 12)}, {{0, 1, 0, 0}, Rational(1, 12)}});
  CHECK(t.todd[3] == ChernPolynomial{{{1, 1, 0, 0}, Rational(1, 24)}});
  CHECK(t.evaluate(4, {0, 0, 0, 1}) == Rational(-1, 720));
  CHECK_THROWS_AS(todd_polynomials(kToddCap + 1), std::invalid_argument);
  CHECK_THROWS_AS(todd_polynomials(-1), std::invalid_argument);

  // Todd_j(e_1(x)..e_j(x)) is the degree-j part of prod Q(x_i), at random rational points
  auto series = bernoulli_series(kToddCap);
  const auto& full = todd_polynomials(kToddCap);
  std::mt19937 rng(17);
  for (int j = 1; j <= kToddCap; ++j)
    for (int trial = 0; trial < 4; ++trial) {
      Vec x;
      for (int i = 0; i < j; ++i) x.emplace_back(static_cast<long long>(rng() % 11) - 5, 1 + rng() % 3);
      // degree-j coefficient in t of prod_i Q(t x_i)
      Vec prod(j + 1, Rational(0));
      prod[0] = 1;
      for (const auto& xi : x) {
        Vec next(j + 1, Rational(0));
        Rational pw = 1;
        for (int a = 0; a <= j; ++a, pw *= xi)
          for (int b = 0; a + b <= j; ++b) next[a + b] += series[a] * pw * prod[b];
        prod = next;
      }
      // elementary symmetric functions
      Vec e(j + 1, Rational(0));
      e[0] = 1;
      for (const auto& xi : x)
        for (int k = j; k >= 1; --k) e[k] += e[k - 1] * xi;
      CHECK(full.evaluate(j, Vec(e.begin() + 1, e.end())) == prod[j]);
    }
}

TEST_CASE("smooth complete fans") {
  SmoothCompleteFan2D p2({iv(1, 0), iv(0, 1), iv(-1, -1)});
  CHECK(p2.wall_numbers() == std::vector<long long>{-1, -1, -1});
  SmoothCompleteFan2D f3({iv(1, 0), iv(0, 1), iv(-1, 3), iv(0, -1)});
  CHECK(f3.wall_numbers() == std::vector<long long>{0, 3, 0, -3});
  CHECK_THROWS_AS(SmoothCompleteFan2D({iv(1, 0), iv(1, 2), iv(-1, -1)}), std::invalid_argument);
  CHECK_THROWS_AS(SmoothCompleteFan2D({iv(1, 0), iv(0, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(SmoothCompleteFan2D({iv(1, 0), iv(0, -1), iv(-1, 0), iv(0, 1)}), std::invalid_argument);

  Vec h;
  auto sq = SmoothCompleteFan2D::from_polygon(Polyhedron::from_generators(2, {v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})}), &h);
  CHECK(sq.rays().size() == 4);
  CHECK(h.size() == 4);
  CHECK_THROWS_AS(SmoothCompleteFan2D::from_polygon(Polyhedron::from_generators(2, {v({0, 0}), v({2, 0}), v({0, 1})})),
                  std::invalid_argument);
}

TEST_CASE("Chern classes and intersection numbers") {
  auto p2 = ToricRing::projective_space(2);
  auto c = p2.chern_total();
  CHECK(c.parts[0][0] == 1);
  CHECK(c.parts[1][0] == 3);
  CHECK(c.parts[2][0] == 3);
  auto h = p2.hyperplane();
  CHECK(intersection_number(p2, {h, h}) == 1);
  CHECK_THROWS_AS(intersection_number(p2, {h}), std::invalid_argument);

  auto s = ToricRing::surface(SmoothCompleteFan2D({iv(1, 0), iv(0, 1), iv(-1, -1)}));
  CHECK(s.integrate(s.chern_total()) == 3);
  CHECK(intersection_number(s, {s.ray_divisor(0), s.ray_divisor(0)}) == 1);

  auto q = ToricRing::surface(SmoothCompleteFan2D({iv(1, 0), iv(0, 1), iv(-1, 0), iv(0, -1)}));
  CHECK(q.integrate(q.chern_total()) == 4);
  CHECK(intersection_number(q, {q.ray_divisor(0), q.ray_divisor(1)}) == 1);
  CHECK(intersection_number(q, {q.ray_divisor(0), q.ray_divisor(0)}) == 0);
  CHECK(intersection_number(q, {q.ray_divisor(0), q.ray_divisor(2)}) == 0);

  auto f2 = ToricRing::surface(SmoothCompleteFan2D({iv(1, 0), iv(0, 1), iv(-1, 2), iv(0, -1)}));
  CHECK(f2.integrate(f2.chern_total()) == 4);
  // linear equivalence: D_0 ~ D_2 and D_1 ~ D_3 - 2 D_2 pair identically with everything
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(intersection_number(f2, {f2.ray_divisor(0), f2.ray_divisor(i)}) ==
          intersection_number(f2, {f2.ray_divisor(2), f2.ray_divisor(i)}));
    CHECK(intersection_number(f2, {f2.ray_divisor(1), f2.ray_divisor(i)}) ==
          intersection_number(f2, {f2.add(f2.ray_divisor(3), f2.scale(f2.ray_divisor(2), -2)), f2.ray_divisor(i)}));
  }
}

TEST_CASE("Riemann-Roch numbers on projective spaces") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = ToricRing::projective_space(n);
    CHECK(rr_number(r, r.zero()) == 1);
    for (long long d = -6; d <= 6; ++d) {
      // (d+n choose n) as a polynomial in d
      Rational expect = 1;
      for (std::size_t i = 1; i <= n; ++i) expect *= Rational(d + static_cast<long long>(i), static_cast<long long>(i));
      CHECK(rr_number(r, r.scale(r.hyperplane(), d)) == expect);
    }
  }
  auto p2 = ToricRing::projective_space(2);
  CHECK(rr_number(p2, p2.scale(p2.hyperplane(), -3)) == 1);
  auto s = ToricRing::surface(SmoothCompleteFan2D({iv(1, 0), iv(0, 1), iv(-1, -1)}));
  for (long long d = 0; d <= 4; ++d)
    CHECK(rr_number(s, s.scale(s.ray_divisor(2), d)) == rr_number(p2, p2.scale(p2.hyperplane(), d)));
  CHECK(adjunction_rr_surface(p2, p2.scale(p2.hyperplane(), 2)) == 6);
  CHECK(adjunction_rr_surface(p2, p2.scale(p2.hyperplane(), 3)) == 10);
}

TEST_CASE("polygon classes: RR, adjunction and lattice count") {
  std::vector<Polyhedron> polys{
      Polyhedron::from_generators(2, {v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})}),
      Polyhedron::from_generators(2, {v({0, 0}), v({2, 0}), v({2, 1}), v({1, 2}), v({0, 2})}),
      Polyhedron::from_generators(2, {v({0, 0}), v({4, 0}), v({1, 3}), v({0, 3})}),
      Polyhedron::from_generators(2, {v({-2, 0}), v({0, -2}), v({3, -2}), v({3, 1}), v({1, 3}), v({-2, 3})}),
  };
  for (const auto& q : polys) {
    Vec h;
    auto fan = SmoothCompleteFan2D::from_polygon(q, &h);
    auto ring = ToricRing::surface(fan);
    auto d = ring.divisor(h);
    auto count = static_cast<long long>(lattice_points(q).size());
    CHECK(rr_number(ring, d) == count);
    CHECK(adjunction_rr_surface(ring, d) == count);
    CHECK(intersection_number(ring, {d, d}) == Rational(normalized_volume(q)));
    CHECK(rr_number(ring, ring.zero()) == 1);
    CHECK(ring.integrate(ring.chern_total()) == static_cast<long long>(fan.rays().size()));
  }
}

TEST_CASE("virtual T-genus and RR differences") {
  auto p2 = ToricRing::projective_space(2);
  auto h = p2.hyperplane();
  CHECK(virtual_T_genus(p2, {}) == rr_number(p2, p2.zero()));
  for (long long d = 1; d <= 4; ++d) {
    auto dh = p2.scale(h, d);
    CHECK(virtual_T_genus(p2, {dh}) + virtual_T_genus(p2, {dh, dh}) == rr_number(p2, dh) - 1);
  }
  auto rep = rr_difference(p2, p2.scale(h, 2), h);
  CHECK(rep.difference == 3);
  CHECK(rep.ambient == 6);
  CHECK(rep.curve == 3);
  CHECK(rep.curve_genus == 0);
  CHECK(rep.agrees);
  auto cubic = rr_difference(p2, p2.scale(h, 4), p2.scale(h, 3));
  CHECK(cubic.curve_genus == 1);
  CHECK(cubic.agrees);
}
