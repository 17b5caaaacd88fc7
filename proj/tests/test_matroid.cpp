#include <doctest.h>

#include "tropic/matroid.hpp"

#include <bit>

using namespace tropic;

namespace {
// oracle: beta(M) = (-1)^r sum_S (-1)^|S| r(S)
Integer beta_by_subsets(const Matroid& m) {
  Integer s = 0;
  for (Matroid::Set x = 0;; ++x) {
    int sign = (std::popcount(x) % 2 == 0) ? 1 : -1;
    s += sign * m.rank(x);
    if (x == m.ground()) break;
  }
  return (m.rank() % 2 == 0) ? s : Integer(-s);
}
// oracle: chi(t) = sum_S (-1)^|S| t^(r - r(S))
std::vector<Integer> char_by_subsets(const Matroid& m) {
  std::vector<Integer> c(static_cast<std::size_t>(m.rank()) + 1, 0);
  for (Matroid::Set x = 0;; ++x) {
    int sign = (std::popcount(x) % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(m.rank() - m.rank(x))] += sign;
    if (x == m.ground()) break;
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}
Integer derivative_at_one(const std::vector<Integer>& c) {
  Integer s = 0;
  for (std::size_t i = 1; i < c.size(); ++i) s += Integer(static_cast<long>(i)) * c[i];
  return s;
}
// reduced characteristic polynomial chi/(t-1) evaluated at 1 equals the derivative at 1
Vec v(std::initializer_list<long long> xs) {
  Vec r;
  for (auto x : xs) r.emplace_back(x);
  return r;
}
}  // namespace

TEST_CASE("basis exchange is enforced") {
  CHECK_NOTHROW(Matroid(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100}));
  CHECK_THROWS_AS(Matroid(4, {0b0011, 0b1100}), std::invalid_argument);
  CHECK_THROWS_AS(Matroid(3, {0b011, 0b111}), std::invalid_argument);
  CHECK_THROWS_AS(Matroid(13, {0}), std::invalid_argument);
}

TEST_CASE("uniform matroid basics") {
  auto m = Matroid::uniform(2, 4);
  CHECK(m.bases().size() == 6);
  CHECK(m.rank() == 2);
  CHECK(m.flats().size() == 6);  // empty, 4 points, whole set
  CHECK(m.closure(0b0011) == m.ground());
  CHECK_FALSE(m.has_loop());
  CHECK(Matroid::uniform(0, 2).has_loop());
}

TEST_CASE("beta invariant and characteristic polynomial against subset oracles") {
  for (const auto& [name, m] : matroid_catalogue(7)) {
    CAPTURE(name);
    Integer b = beta_invariant(m);
    CHECK(b == beta_by_subsets(m));
    auto c = characteristic_polynomial(m);
    CHECK(c == char_by_subsets(m));
    Integer d = derivative_at_one(c);
    CHECK(b == ((m.rank() - 1) % 2 == 0 ? d : Integer(-d)));
  }
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= n; ++r) CHECK(beta_invariant(Matroid::uniform(r, n)) == binomial(n - 2, r - 1));
}

TEST_CASE("cycle matroid of K4") {
  auto k4 = Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.rank() == 3);
  CHECK(k4.bases().size() == 16);
  CHECK(beta_invariant(k4) == 2);
  // chromatic polynomial of K4 divided by t
  CHECK(characteristic_polynomial(k4) == std::vector<Integer>{-6, 11, -6, 1});
}

TEST_CASE("Bergman fans: tropical line and the flag subdivision of the plane") {
  auto line = bergman_fan(Matroid::uniform(2, 3));
  CHECK(line.dim() == 1);
  CHECK(line.top_cells().size() == 3);
  std::set<std::string> rays;
  for (auto t : line.top_cells()) rays.insert(vec_key(line.complex().cell(t).rays()[0]));
  CHECK(rays == std::set<std::string>{vec_key(v({-1, 0})), vec_key(v({0, -1})), vec_key(v({1, 1}))});
  auto plane = bergman_fan(Matroid::uniform(3, 3));
  CHECK(plane.top_cells().size() == 6);
  CHECK(same_support(plane.complex(), TropicalCycle::whole_space(2).complex()));
  for (const auto& [name, m] : matroid_catalogue(5)) {
    CAPTURE(name);
    CHECK(check_balancing(bergman_fan(m)).balanced);
  }
  CHECK(bergman_fan(Matroid::uniform(1, 4)).dim() == 0);
}

TEST_CASE("CSM cycles: balanced, top one is the fan, degree zero part is the reduced polynomial at 1") {
  for (const auto& [name, m] : matroid_catalogue(5)) {
    CAPTURE(name);
    for (int k = 0; k < m.rank(); ++k) CHECK(check_balancing(csm_cycle(m, k)).balanced);
    auto top = csm_cycle(m, m.rank() - 1);
    auto fan = bergman_fan(m);
    CHECK(top.weighted_cells() == fan.weighted_cells());
    auto c = characteristic_polynomial(m);
    // chi(t) = (t - 1) q(t)  =>  q(1) = chi'(1)
    CHECK(Integer(degree(csm_cycle(m, 0))) == derivative_at_one(c));
  }
  CHECK(degree(csm_cycle(Matroid::uniform(2, 3), 0)) == -1);
  CHECK(csm_cycle(Matroid::uniform(3, 3), 0).is_zero());
}

TEST_CASE("CSM orbit sum over the torus orbits of TP^2 recovers c_2 = 3") {
  // orbits: the torus (U_{3,3}), three C* orbits (U_{2,2}), three fixed points (U_{1,1})
  long long total = degree(csm_cycle(Matroid::uniform(3, 3), 0)) + 3 * degree(csm_cycle(Matroid::uniform(2, 2), 0)) +
                    3 * degree(csm_cycle(Matroid::uniform(1, 1), 0));
  CHECK(total == 3);
}

TEST_CASE("powers of the tropical hyperplane are Bergman fans of uniform matroids") {
  for (int r = 1; r <= 3; ++r) {
    std::size_t n = static_cast<std::size_t>(r);
    std::vector<AffineFunction> t{{Vec(n, Rational(0)), 0}};
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, Rational(0));
      e[i] = 1;
      t.push_back({e, 0});
    }
    auto x = TropicalCycle::whole_space(n);
    auto tower = power_tower(CartierFunction::from_max(x, t), x, r);
    REQUIRE(static_cast<int>(tower.layers.size()) == r + 1);
    for (int j = 0; j <= r; ++j) {
      CAPTURE(r);
      CAPTURE(j);
      auto fan = bergman_fan(Matroid::uniform(r - j + 1, r + 1));
      CHECK(same_support(tower.layers[j].complex(), fan.complex()));
    }
  }
}
