#pragma once

#include "tropic/numeric.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tropic {

/// Compact tropical curve as a connected multigraph; loops allowed, edge lengths ignored.
class CurveGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  CurveGraph() = default;
  /// Throws std::invalid_argument on a bad endpoint or a disconnected graph.
  CurveGraph(std::size_t vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Loops count twice.
  long long valence(std::size_t v) const;
  long long genus() const;
  long long euler_char() const { return 1 - genus(); }
  bool has_loop() const;
  /// Number of edges between u and v (for u == v, the number of loops).
  long long multiplicity(std::size_t u, std::size_t v) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// A point of the curve: a vertex, or the k-th of the marked interior points of an edge
/// (ordered from the edge's first endpoint).
struct CurvePoint {
  bool on_edge = false;
  std::size_t index = 0;  // vertex or edge index
  std::size_t k = 0;      // position along the edge
  auto operator<=>(const CurvePoint&) const = default;
  /// "v<i>" or "e<j>.<k>"
  std::string name() const;
  static CurvePoint parse(const std::string& s);
};

struct CurveDivisor {
  std::map<CurvePoint, long long> values;
  long long degree() const;
  CurveDivisor operator+(const CurveDivisor& o) const;
  CurveDivisor operator-(const CurveDivisor& o) const;
};

/// valence - 2 at every vertex.
CurveDivisor canonical_divisor(const CurveGraph& c);
/// deg D + 1 - g.
long long rr_number_curve(const CurveGraph& c, const CurveDivisor& d);

/// Graph with the marked edge points of `d` turned into vertices and loops subdivided, so the
/// result has no loops. `vertex_of` maps each marked point to its vertex.
struct CurveModel {
  CurveGraph graph;
  std::map<CurvePoint, std::size_t> vertex_of;
  std::vector<long long> divisor;  // d pushed to the model's vertices
};
CurveModel loopless_model(const CurveGraph& c, const CurveDivisor& d);

struct CurveComplementReport {
  long long by_formula = 0;  // chi(C) + #D
  long long by_surgery = 0;  // cells of C minus D counted after cutting
  long long components = 0;  // rank H^0(C \ D)
  long long cycles = 0;      // rank H^1(C \ D)
};
/// Euler characteristic of C minus a finite set of valence-two points (given with multiplicity one).
/// Throws std::invalid_argument if a point is a vertex of valence other than two.
CurveComplementReport chi_complement_curve(const CurveGraph& c, const std::vector<CurvePoint>& points);

// Chip firing on a loopless multigraph; divisors are vectors indexed by vertex.

/// The q-reduced divisor equivalent to d.
std::vector<long long> reduce(const CurveGraph& g, std::vector<long long> d, std::size_t q);
bool equivalent_to_effective(const CurveGraph& g, const std::vector<long long>& d);
/// Baker-Norine rank, -1 when d is not equivalent to an effective divisor.
long long baker_norine_rank(const CurveGraph& g, const std::vector<long long>& d);

/**
 * Rank computation that avoids chip firing: two divisors are equivalent iff they have the same
 * degree and the same fractional part of L_q^-1 applied to them (L_q the reduced Laplacian).
 * Effective classes of each degree are enumerated once and cached. Loopless graphs only.
 */
class DivisorClassOracle {
 public:
  explicit DivisorClassOracle(const CurveGraph& g);
  std::vector<Rational> key(const std::vector<long long>& d) const;
  bool effective(const std::vector<long long>& d);
  long long rank(const std::vector<long long>& d);

 private:
  const std::set<std::vector<Rational>>& effective_keys(long long degree);
  CurveGraph g_;
  std::vector<std::vector<Rational>> inverse_;  // L_q^-1, q = vertex 0
  std::map<long long, std::set<std::vector<Rational>>> cache_;
};

struct ComplementCohomology {
  long long h0 = 0, h1 = 0;      // ordinary
  long long h0c = 0, h1c = 0;    // compact support
  long long rank_minus_d = 0;    // r(-D) + 1
  long long rank_k_plus_d = 0;   // r(K + D) + 1
  long long rank_d = 0;          // r(D) + 1
  long long rank_k_minus_d = 0;  // r(K - D) + 1
  bool compact_support_matches = false;  // h0c == r(-D)+1 and h1c == r(K+D)+1
};
/// Cohomology ranks of C minus the support of an effective reduced divisor D on valence-two points.
ComplementCohomology complement_cohomology_ranks(const CurveGraph& c, const std::vector<CurvePoint>& points);

}  // namespace tropic
