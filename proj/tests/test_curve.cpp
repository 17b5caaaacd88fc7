#include <doctest.h>

#include "tropic/curve.hpp"
#include "tropic/linalg.hpp"

#include <functional>
#include <numeric>
#include <random>

using namespace tropic;

namespace {

CurveGraph circle() { return CurveGraph(1, {{0, 0}}); }
CurveGraph theta() { return CurveGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }
CurveGraph k4() { return CurveGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
CurvePoint ep(std::size_t e, std::size_t k) { return {true, e, k}; }

// Oracle: D ~ D' iff D - D' = L x for an integral x; solved exactly on the reduced Laplacian.
bool linearly_equivalent(const CurveGraph& g, const std::vector<long long>& a, const std::vector<long long>& b) {
  std::size_t n = g.vertex_count();
  if (std::accumulate(a.begin(), a.end(), 0LL) != std::accumulate(b.begin(), b.end(), 0LL)) return false;
  if (n == 1) return true;
  Matrix l(n - 1, Vec(n - 1, Rational(0)));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      l[i - 1][j - 1] = i == j ? Rational(g.valence(i) - 2 * g.multiplicity(i, i)) : Rational(-g.multiplicity(i, j));
  Vec rhs;
  for (std::size_t i = 1; i < n; ++i) rhs.emplace_back(a[i] - b[i]);
  auto x = linalg::solve(l, rhs, n - 1);
  REQUIRE(x);
  for (const auto& v : *x)
    if (!is_integer(v)) return false;
  return true;
}

void effective_of_degree(std::size_t n, long long deg, const std::function<bool(const std::vector<long long>&)>& f) {
  std::vector<long long> e(n, 0);
  bool go = true;
  std::function<void(std::size_t, long long)> rec = [&](std::size_t from, long long left) {
    if (!go) return;
    if (left == 0) {
      go = f(e);
      return;
    }
    for (std::size_t v = from; v < n && go; ++v) {
      ++e[v];
      rec(v, left - 1);
      --e[v];
    }
  };
  if (deg >= 0) rec(0, deg);
}

bool oracle_effective(const CurveGraph& g, const std::vector<long long>& d) {
  long long deg = std::accumulate(d.begin(), d.end(), 0LL);
  bool found = false;
  effective_of_degree(g.vertex_count(), deg, [&](const std::vector<long long>& e) {
    found = linearly_equivalent(g, d, e);
    return !found;
  });
  return found;
}

long long oracle_rank(const CurveGraph& g, const std::vector<long long>& d) {
  if (!oracle_effective(g, d)) return -1;
  for (long long k = 1;; ++k) {
    bool all = true;
    effective_of_degree(g.vertex_count(), k, [&](const std::vector<long long>& e) {
      std::vector<long long> x(d);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= e[i];
      all = oracle_effective(g, x);
      return all;
    });
    if (!all) return k - 1;
  }
}

std::vector<long long> canonical(const CurveGraph& g) {
  std::vector<long long> k(g.vertex_count());
  for (std::size_t v = 0; v < k.size(); ++v) k[v] = g.valence(v) - 2;
  return k;
}

}  // namespace

TEST_CASE("curve graphs: genus, Euler characteristic, validation") {
  CHECK(circle().genus() == 1);
  CHECK(circle().euler_char() == 0);
  CHECK(theta().genus() == 2);
  CHECK(theta().euler_char() == -1);
  CurveGraph tree(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(tree.genus() == 0);
  CHECK(tree.euler_char() == 1);
  CHECK_THROWS_AS(CurveGraph(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CurveGraph(2, {{0, 2}}), std::invalid_argument);
  CHECK(circle().valence(0) == 2);
}

TEST_CASE("curve points and divisors") {
  CHECK(CurvePoint::parse("v3") == CurvePoint{false, 3, 0});
  CHECK(CurvePoint::parse("e2.1") == ep(2, 1));
  CHECK(ep(2, 1).name() == "e2.1");
  CHECK_THROWS(CurvePoint::parse("x1"));
  CHECK_THROWS(CurvePoint::parse("e2"));
  CHECK_THROWS(CurvePoint::parse("v-1"));
  CurveDivisor a{{{ep(0, 0), 2}}}, b{{{ep(0, 0), 2}, {CurvePoint{false, 1, 0}, -1}}};
  CHECK((a - b).degree() == 1);
  CHECK((a - a).values.empty());
}

TEST_CASE("canonical divisor and RR numbers") {
  CHECK(canonical_divisor(circle()).values.empty());
  auto kt = canonical_divisor(theta());
  CHECK(kt.degree() == 2);
  CHECK(kt.values.at({false, 0, 0}) == 1);
  CurveGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto ks = canonical_divisor(star);
  CHECK(ks.values.at({false, 0, 0}) == 2);
  for (std::size_t v = 1; v <= 4; ++v) CHECK(ks.values.at({false, v, 0}) == -1);
  for (const auto& g : {circle(), theta(), star, k4()}) CHECK(canonical_divisor(g).degree() == 2 * g.genus() - 2);

  CHECK(rr_number_curve(circle(), CurveDivisor{{{ep(0, 0), 1}, {ep(0, 1), 1}}}) == 2);
  CHECK(rr_number_curve(circle(), {}) == circle().euler_char());
  CHECK(rr_number_curve(theta(), kt) == 1);
}

TEST_CASE("complements of points on curves") {
  auto r = chi_complement_curve(circle(), {ep(0, 0), ep(0, 1)});
  CHECK(r.by_formula == 2);
  CHECK(r.by_surgery == 2);
  CHECK(r.components == 2);
  r = chi_complement_curve(theta(), {ep(1, 0)});
  CHECK(r.by_formula == 0);
  CHECK(r.by_surgery == 0);
  r = chi_complement_curve(k4(), {});
  CHECK(r.by_surgery == k4().euler_char());
  CHECK_THROWS_AS(chi_complement_curve(theta(), {{false, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(chi_complement_curve(circle(), {ep(0, 0), ep(0, 0)}), std::invalid_argument);
  // a valence-two vertex is a legal point
  CurveGraph square(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  r = chi_complement_curve(square, {{false, 2, 0}, ep(0, 0), ep(0, 1)});
  CHECK(r.by_surgery == r.by_formula);
  CHECK(r.components == 3);

  // the RR number equals the complement's Euler characteristic, with random points
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<CurvePoint> pts;
    std::size_t m = rng() % 5;
    for (std::size_t i = 0; i < m; ++i) pts.push_back(ep(rng() % 6, i));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    CurveDivisor d;
    for (const auto& p : pts) d.values[p] = 1;
    auto rep = chi_complement_curve(k4(), pts);
    CHECK(rep.by_surgery == rep.by_formula);
    CHECK(rr_number_curve(k4(), d) == rep.by_surgery);
  }
}

TEST_CASE("loopless model") {
  auto m = loopless_model(circle(), {});
  CHECK_FALSE(m.graph.has_loop());
  CHECK(m.graph.vertex_count() == 2);
  CHECK(m.graph.genus() == 1);
  auto t = loopless_model(theta(), CurveDivisor{{{ep(2, 2), 1}}});
  CHECK(t.graph.vertex_count() == 5);
  CHECK(t.divisor[t.vertex_of.at(ep(2, 2))] == 1);
  CHECK_THROWS(loopless_model(theta(), CurveDivisor{{{ep(3, 0), 1}}}));
}

TEST_CASE("reduction agrees with the lattice oracle") {
  auto g = loopless_model(theta(), CurveDivisor{{{ep(0, 0), 0}, {ep(1, 1), 0}}}).graph;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> d(g.vertex_count());
    for (auto& x : d) x = static_cast<long long>(rng() % 7) - 3;
    std::size_t q = rng() % g.vertex_count();
    auto r = reduce(g, d, q);
    CHECK(linearly_equivalent(g, d, r));
    for (std::size_t v = 0; v < r.size(); ++v)
      if (v != q) CHECK(r[v] >= 0);
    CHECK(equivalent_to_effective(g, d) == oracle_effective(g, d));
  }
  CHECK_THROWS(reduce(circle(), {0}, 0));
}

TEST_CASE("Baker-Norine rank") {
  auto th = loopless_model(theta(), CurveDivisor{{{ep(0, 0), 0}}}).graph;  // theta with one edge subdivided
  CHECK(baker_norine_rank(th, std::vector<long long>(th.vertex_count(), 0)) == 0);
  CHECK(baker_norine_rank(th, {-1, 0, 1}) == -1);
  // large degree: r = d - g
  for (long long d = 3; d <= 5; ++d) CHECK(baker_norine_rank(th, {d, 0, 0}) == d - 2);

  // rank against the brute-force oracle, and graph Riemann-Roch
  std::vector<CurveGraph> graphs{th, k4(), CurveGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}),
                                 loopless_model(circle(), {}).graph};
  std::mt19937 rng(5);
  for (const auto& g : graphs) {
    DivisorClassOracle classes(g);
    auto k = canonical(g);
    long long genus = g.genus();
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<long long> d(g.vertex_count(), 0);
      long long target = static_cast<long long>(rng() % (2 * genus + 7)) - 3;
      for (long long i = 0; i < std::abs(target); ++i) d[rng() % d.size()] += target < 0 ? -1 : 1;
      // spread some zero-sum noise as well
      d[rng() % d.size()] += 1;
      d[rng() % d.size()] -= 1;
      long long deg = std::accumulate(d.begin(), d.end(), 0LL);
      std::vector<long long> kd(k);
      for (std::size_t i = 0; i < kd.size(); ++i) kd[i] -= d[i];
      long long r = baker_norine_rank(g, d);
      CHECK(r == oracle_rank(g, d));
      CHECK(r == classes.rank(d));
      CHECK(r - baker_norine_rank(g, kd) == deg + 1 - genus);
    }
  }
}

TEST_CASE("complement cohomology of a genus-two curve") {
  auto r = complement_cohomology_ranks(theta(), {ep(0, 0), ep(0, 1), ep(0, 2)});
  CHECK(r.h0 == 3);
  CHECK(r.h1 == 1);
  CHECK(r.rank_d == 2);
  CHECK(r.rank_k_minus_d == 0);
  CHECK(r.h0 > r.rank_d);
  CHECK(r.h0c == 0);
  CHECK(r.h1c == 4);
  CHECK(r.rank_minus_d == 0);
  CHECK(r.rank_k_plus_d == 4);
  CHECK(r.compact_support_matches);

  auto c = complement_cohomology_ranks(circle(), {ep(0, 0)});
  CHECK(c.h0 == 1);
  CHECK(c.h1 == 0);
  CHECK(c.compact_support_matches);

  // points spread over several edges: H^1 drops with each cut cycle
  auto s = complement_cohomology_ranks(theta(), {ep(0, 0), ep(1, 0)});
  CHECK(s.h0 == 1);
  CHECK(s.h1 == 0);
  CHECK(s.compact_support_matches);
}
