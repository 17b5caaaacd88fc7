#include <doctest.h>

#include "tropic/hypersurface.hpp"

#include <random>

using namespace tropic;

namespace {
Vec v(std::initializer_list<long long> xs) {
  Vec r;
  for (auto x : xs) r.emplace_back(x);
  return r;
}
TropicalPolynomial poly(std::size_t n, std::vector<std::pair<Vec, Rational>> ts) {
  std::vector<Term> terms;
  for (auto& [e, c] : ts) terms.push_back({e, c});
  return TropicalPolynomial(n, terms);
}
TropicalPolynomial smooth_conic() {
  return poly(2, {{v({0, 0}), 0}, {v({1, 0}), 3}, {v({0, 1}), 3}, {v({2, 0}), 2}, {v({1, 1}), 5}, {v({0, 2}), 1}});
}
}  // namespace

TEST_CASE("polynomial validation") {
  CHECK_THROWS_AS(poly(2, {{v({0, 0}), 0}, {v({0, 0}), 1}}), std::invalid_argument);
  CHECK_THROWS_AS(TropicalPolynomial(2, {{Vec{Rational(1, 2), Rational(0)}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(TropicalPolynomial(2, {}), std::invalid_argument);
  auto f = smooth_conic();
  CHECK(f.evaluate(v({0, 0})) == 5);
  CHECK(f.active_terms(v({0, 0})) == std::vector<std::size_t>{4});
}

TEST_CASE("tropical line: subdivision, smoothness, hypersurface, components") {
  auto f = poly(2, {{v({0, 0}), 0}, {v({1, 0}), 0}, {v({0, 1}), 0}});
  auto s = regular_subdivision(f);
  CHECK(s.cells.size() == 1);
  CHECK(s.edges.size() == 3);
  CHECK(is_smooth(f));
  auto h = tropical_hypersurface(f);
  CHECK(h.top_cells().size() == 3);
  CHECK(check_balancing(h).balanced);
  CHECK(complement_components(f).size() == 3);
}

TEST_CASE("max(0, 2x) is not smooth and has a weight-two point") {
  auto f = poly(1, {{v({0}), 0}, {v({2}), 0}});
  CHECK_FALSE(is_smooth(f));
  auto h = tropical_hypersurface(f);
  REQUIRE(h.top_cells().size() == 1);
  CHECK(h.weight(h.top_cells()[0]) == 2);
  CHECK(complement_components(f).size() == 2);
  // the middle monomial on the segment makes it smooth
  auto g = poly(1, {{v({0}), 0}, {v({1}), 1}, {v({2}), 0}});
  CHECK(is_smooth(g));
  CHECK(complement_components(g).size() == 3);
  // a middle monomial below the hull does not
  auto low = poly(1, {{v({0}), 0}, {v({1}), -1}, {v({2}), 0}});
  CHECK_FALSE(is_smooth(low));
  CHECK(complement_components(low).size() == 2);
}

TEST_CASE("smooth conic via duality matches the corner locus") {
  auto f = smooth_conic();
  CHECK(is_smooth(f));
  auto dual = tropical_hypersurface(f);
  auto corner = divisor_intersect(cartier_of(f), TropicalCycle::whole_space(2));
  CHECK(dual.weighted_cells() == corner.weighted_cells());
  CHECK(complement_components(f).size() == 6);
}

TEST_CASE("property: duality and corner locus agree on random polynomials") {
  std::mt19937_64 rng(77);
  auto rnd = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = trial < 7 ? 2 : 3;
    std::vector<Term> terms;
    std::set<std::string> seen;
    while (terms.size() < (n == 2 ? 6u : 5u)) {
      Vec e(n);
      for (auto& x : e) x = rnd(0, 3);
      if (!seen.insert(vec_key(e)).second) continue;
      terms.push_back({e, Rational(rnd(-30, 30), rnd(1, 5))});
    }
    TropicalPolynomial f(n, terms);
    if (newton_polytope(f).dim() != static_cast<int>(n)) continue;
    auto dual = tropical_hypersurface(f);
    auto corner = divisor_intersect(cartier_of(f), TropicalCycle::whole_space(n));
    CHECK(dual.weighted_cells() == corner.weighted_cells());
    CHECK(check_balancing(dual).balanced);
    // regions of full dimension are exactly the subdivision vertices
    CHECK(cartier_of(f).domain().top_cells().size() == complement_components(f).size());
  }
}
