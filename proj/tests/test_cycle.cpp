#include <doctest.h>

#include "tropic/cycle.hpp"

#include <random>

using namespace tropic;

namespace {
Vec v(std::initializer_list<long long> xs) {
  Vec r;
  for (auto x : xs) r.emplace_back(x);
  return r;
}
Polyhedron ray_cone(std::size_t n, Vec r) {
  return Polyhedron::from_generators(n, {Vec(n, Rational(0))}, {std::move(r)});
}
AffineFunction term(Vec slope, Rational c) { return {std::move(slope), std::move(c)}; }

std::vector<AffineFunction> max_of_coordinates(std::size_t n) {
  std::vector<AffineFunction> t{term(Vec(n, Rational(0)), 0)};
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rational(0));
    e[i] = 1;
    t.push_back(term(e, 0));
  }
  return t;
}

// normalized area of conv(points)
Integer area(const Matrix& pts) {
  auto p = Polyhedron::from_generators(2, pts);
  return p.dim() < 2 ? Integer(0) : normalized_volume(p);
}
}  // namespace

TEST_CASE("tropical line is balanced, a reweighted ray breaks it") {
  auto line = TropicalCycle::from_cells(
      2, 1, {{ray_cone(2, v({-1, 0})), 1}, {ray_cone(2, v({0, -1})), 1}, {ray_cone(2, v({1, 1})), 1}});
  CHECK(check_balancing(line).balanced);
  auto bad = TropicalCycle::from_cells(
      2, 1, {{ray_cone(2, v({-1, 0})), 1}, {ray_cone(2, v({0, -1})), 1}, {ray_cone(2, v({1, 1})), 2}});
  auto rep = check_balancing(bad);
  CHECK_FALSE(rep.balanced);
  CHECK(rep.failing.size() == 1);
}

TEST_CASE("zero weights are dropped and equal cells merge") {
  auto c = TropicalCycle::from_cells(1, 1, {{ray_cone(1, v({1})), 2}, {ray_cone(1, v({1})), -2}});
  CHECK(c.is_zero());
  CHECK_THROWS_AS(TropicalCycle::from_cells(1, 0, {{ray_cone(1, v({1})), 1}}), std::invalid_argument);
}

TEST_CASE("line and its self-intersection from max(0,x,y)") {
  auto phi = CartierFunction::from_max(TropicalCycle::whole_space(2), max_of_coordinates(2));
  CHECK(phi.domain().top_cells().size() == 3);
  auto tower = power_tower(phi, TropicalCycle::whole_space(2), 5);
  REQUIRE(tower.layers.size() == 3);
  const auto& d = tower.layers[1];
  CHECK(d.dim() == 1);
  CHECK(d.top_cells().size() == 3);
  for (auto t : d.top_cells()) CHECK(d.weight(t) == 1);
  CHECK(check_balancing(d).balanced);
  const auto& d2 = tower.layers[2];
  CHECK(degree(d2) == 1);
  REQUIRE(d2.top_cells().size() == 1);
  CHECK(d2.complex().cell(d2.top_cells()[0]).vertices() == Matrix{v({0, 0})});
}

TEST_CASE("max(0, 2x) has a weight-two corner") {
  auto phi = CartierFunction::from_max(TropicalCycle::whole_space(1), {term(v({0}), 0), term(v({2}), 0)});
  auto d = divisor_intersect(phi, TropicalCycle::whole_space(1));
  CHECK(degree(d) == 2);
}

TEST_CASE("pieces that disagree on a shared face are rejected") {
  auto halves = TropicalCycle::from_cells(1, 1, {{ray_cone(1, v({1})), 1}, {ray_cone(1, v({-1})), 1}});
  CHECK_THROWS_AS(CartierFunction(halves, {term(v({0}), 0), term(v({1}), 1)}), std::invalid_argument);
  CHECK_NOTHROW(CartierFunction(halves, {term(v({0}), 0), term(v({1}), 0)}));
}

TEST_CASE("divisor on an unbalanced cycle is refused") {
  auto bad = TropicalCycle::from_cells(
      2, 1, {{ray_cone(2, v({-1, 0})), 1}, {ray_cone(2, v({0, -1})), 1}, {ray_cone(2, v({1, 1})), 2}});
  auto phi = CartierFunction::from_max(TropicalCycle::whole_space(2), {term(v({0, 0}), 0), term(v({1, 0}), 0)});
  CHECK_THROWS_AS(divisor_intersect(phi, bad), std::domain_error);
}

TEST_CASE("smooth conic: four self-intersection points") {
  // generic concave heights on 2*Delta_2
  std::vector<AffineFunction> f{term(v({0, 0}), 0),  term(v({1, 0}), 3),  term(v({0, 1}), 3),
                                term(v({2, 0}), 2),  term(v({1, 1}), 5),  term(v({0, 2}), 1)};
  auto phi = CartierFunction::from_max(TropicalCycle::whole_space(2), f);
  auto tower = power_tower(phi, TropicalCycle::whole_space(2), 2);
  REQUIRE(tower.layers.size() == 3);
  CHECK(check_balancing(tower.layers[1]).balanced);
  CHECK(degree(tower.layers[2]) == 4);
  CHECK(tower.layers[2].top_cells().size() == 4);
}

TEST_CASE("local cycle of the line at a point on a ray") {
  auto phi = CartierFunction::from_max(TropicalCycle::whole_space(2), max_of_coordinates(2));
  auto d = divisor_intersect(phi, TropicalCycle::whole_space(2));
  auto loc = local_cycle(d, v({3, 3}));
  REQUIRE(loc.top_cells().size() == 1);
  CHECK(loc.complex().cell(loc.top_cells()[0]).lineality().size() == 1);
  auto at0 = local_cycle(d, v({0, 0}));
  CHECK(at0.top_cells().size() == 3);
}

TEST_CASE("property: corner-locus pairing degree equals mixed area") {
  // oracle: the number of intersection points is (area(P+Q) - area(P) - area(Q)) / 2 in normalized units
  std::mt19937_64 rng(20261016);
  auto rnd = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<AffineFunction> f, g;
    Matrix pf, pg;
    for (int k = 0; k < 4; ++k) {
      Vec e = v({rnd(0, 2), rnd(0, 2)});
      f.push_back(term(e, Rational(rnd(-20, 20), rnd(1, 7))));
      pf.push_back(e);
      Vec h = v({rnd(0, 2), rnd(0, 2)});
      g.push_back(term(h, Rational(rnd(-20, 20), rnd(1, 7))));
      pg.push_back(h);
    }
    Matrix sum;
    for (const auto& a : pf)
      for (const auto& b : pg) sum.push_back(add(a, b));
    Integer mv = (area(sum) - area(pf) - area(pg)) / 2;
    auto plane = TropicalCycle::whole_space(2);
    auto phif = CartierFunction::from_max(plane, f);
    auto phig = CartierFunction::from_max(plane, g);
    auto cf = divisor_intersect(phif, plane);
    auto cg = divisor_intersect(phig, plane);
    CHECK(check_balancing(cf).balanced);
    long long fg = cf.is_zero() ? 0 : degree(divisor_intersect(phig, cf));
    long long gf = cg.is_zero() ? 0 : degree(divisor_intersect(phif, cg));
    CHECK(fg == gf);
    CHECK(Integer(fg) == mv);
  }
}
