#include <doctest.h>

#include "tropic/local_models.hpp"

using namespace tropic;

namespace {
Vec v(std::initializer_list<long long> xs) {
  Vec r;
  for (auto x : xs) r.emplace_back(x);
  return r;
}
Polyhedron cone(std::size_t n, Matrix rays, Matrix lin = {}) {
  return Polyhedron::from_generators(n, {Vec(n, Rational(0))}, rays, lin);
}
TropicalCycle hyperplane(std::size_t n) {
  std::vector<AffineFunction> t{{Vec(n, Rational(0)), 0}};
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rational(0));
    e[i] = 1;
    t.push_back({e, 0});
  }
  auto phi = CartierFunction::from_max(TropicalCycle::whole_space(n), t);
  return divisor_intersect(phi, TropicalCycle::whole_space(n));
}
}  // namespace

TEST_CASE("tropical hyperplanes are relatively uniform with the expected corank") {
  auto line = hyperplane(2);
  auto plane2 = TropicalCycle::whole_space(2);
  auto at0 = relatively_uniform(local_cycle(line, v({0, 0})), local_cycle(plane2, v({0, 0})));
  CHECK(at0.result == Uniformity::Uniform);
  CHECK(at0.corank == 2);
  auto on_ray = relatively_uniform(local_cycle(line, v({-4, 0})), local_cycle(plane2, v({-4, 0})));
  CHECK(on_ray.result == Uniformity::Uniform);
  CHECK(on_ray.corank == 1);

  auto plane = hyperplane(3);
  auto r3 = TropicalCycle::whole_space(3);
  for (auto [pt, r] : std::vector<std::pair<Vec, int>>{{v({0, 0, 0}), 3}, {v({1, 1, 0}), 1}, {v({2, 2, 2}), 2},
                                                       {v({0, 0, -5}), 2}}) {
    auto rep = relatively_uniform(local_cycle(plane, pt), local_cycle(r3, pt));
    CHECK(rep.result == Uniformity::Uniform);
    CHECK(rep.corank == r);
  }
}

TEST_CASE("non-model local fans are rejected") {
  auto plane2 = TropicalCycle::whole_space(2);
  auto heavy = TropicalCycle::from_cells(2, 1, {{cone(2, {v({-1, 0})}), 1}, {cone(2, {v({0, -1})}), 1},
                                               {cone(2, {v({1, 1})}), 2}});
  CHECK(relatively_uniform(heavy, plane2).result == Uniformity::NotUniform);
  auto cross = TropicalCycle::from_cells(2, 1, {{cone(2, {v({1, 0})}), 1}, {cone(2, {v({-1, 0})}), 1},
                                               {cone(2, {v({0, 1})}), 1}, {cone(2, {v({0, -1})}), 1}});
  CHECK(relatively_uniform(cross, plane2).result == Uniformity::NotUniform);
  // rays (1,0), (1,2), (-2,-2): balanced but not a lattice basis
  auto wide = TropicalCycle::from_cells(2, 1, {{cone(2, {v({1, 0})}), 1}, {cone(2, {v({1, 2})}), 1},
                                              {cone(2, {v({-1, -1})}), 2}});
  CHECK(relatively_uniform(wide, plane2).result == Uniformity::NotUniform);
}

TEST_CASE("curve in a surface chart: corank one product model") {
  // X = L_{U_{2,3}} x R, Y = L_{U_{2,3}} x {0}
  std::vector<std::pair<Polyhedron, long long>> xs, ys;
  for (auto r : {v({-1, 0, 0}), v({0, -1, 0}), v({1, 1, 0})}) {
    xs.emplace_back(cone(3, {r}, {v({0, 0, 1})}), 1);
    ys.emplace_back(cone(3, {r}), 1);
  }
  auto x = TropicalCycle::from_cells(3, 2, xs);
  auto y = TropicalCycle::from_cells(3, 1, ys);
  auto rep = relatively_uniform(y, x);
  CHECK(rep.result == Uniformity::Uniform);
  CHECK(rep.corank == 1);
  auto origin = TropicalCycle::from_cells(3, 0, {{cone(3, {}), 1}});
  CHECK(relatively_uniform(origin, x).result == Uniformity::Unsupported);
  // a sheared copy of Y is still a product factor, a doubled one is not
  std::vector<std::pair<Polyhedron, long long>> tilted, doubled;
  for (auto r : {v({-1, 0, 1}), v({0, -1, 0}), v({1, 1, -1})}) tilted.emplace_back(cone(3, {r}), 1);
  for (auto r : {v({-1, 0, 0}), v({0, -1, 0}), v({1, 1, 0})}) doubled.emplace_back(cone(3, {r}), 2);
  CHECK(relatively_uniform(TropicalCycle::from_cells(3, 1, tilted), x).result == Uniformity::Uniform);
  CHECK(relatively_uniform(TropicalCycle::from_cells(3, 1, doubled), x).result == Uniformity::NotUniform);
}

TEST_CASE("moderate position at every cell of a line in the plane") {
  auto line = hyperplane(2);
  auto plane = TropicalCycle::whole_space(2);
  CHECK(moderate_position(local_pairs(line, plane)).ok);
  // Y = X fails the proper-lineality condition
  auto rep = moderate_position(local_pairs(plane, plane));
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violating.has_value());
  // Y leaving X
  auto other = TropicalCycle::from_cells(2, 1, {{cone(2, {v({1, 0})}, {}), 1}});
  std::vector<LocalPair> pairs{{local_cycle(other, v({1, 0})), local_cycle(line, v({1, 0})), v({1, 0})}};
  CHECK_FALSE(moderate_position(pairs).ok);
}

TEST_CASE("self-intersection support equals singular points in the regular part") {
  std::vector<AffineFunction> conic{{v({0, 0}), 0}, {v({1, 0}), 3}, {v({0, 1}), 3},
                                    {v({2, 0}), 2}, {v({1, 1}), 5}, {v({0, 2}), 1}};
  auto plane = TropicalCycle::whole_space(2);
  auto rep = self_intersection_support(CartierFunction::from_max(plane, conic), plane);
  CHECK(rep.equal);
  CHECK(rep.support_points.size() == 4);
  CHECK(degree(rep.square) == 4);
  std::vector<AffineFunction> line{{v({0, 0}), 0}, {v({1, 0}), 0}, {v({0, 1}), 0}};
  auto rl = self_intersection_support(CartierFunction::from_max(plane, line), plane);
  CHECK(rl.equal);
  CHECK(rl.support_points.size() == 1);
}
