#pragma once

#include "tropic/complex.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tropic {

/// x -> linear.x + constant, with integral linear part.
struct AffineFunction {
  Vec linear;
  Rational constant;
  Rational operator()(const Vec& x) const { return dot(linear, x) + constant; }
};

/// Pure weighted rational polyhedral complex. Zero-weight cells are dropped on construction.
class TropicalCycle {
 public:
  TropicalCycle(std::size_t n = 0, int dim = 0) : n_(n), dim_(dim), complex_(n) {}
  static TropicalCycle from_cells(std::size_t n, int dim,
                                  const std::vector<std::pair<Polyhedron, long long>>& weighted);
  /// R^n with weight one.
  static TropicalCycle whole_space(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  int dim() const { return dim_; }
  bool is_zero() const { return weights_.empty(); }
  const PolyhedralComplex& complex() const { return complex_; }

  /// Indices (into complex().cells()) of the weighted top-dimensional cells.
  const std::vector<std::size_t>& top_cells() const { return top_; }
  long long weight(std::size_t cell) const;
  std::vector<std::pair<Polyhedron, long long>> weighted_cells() const;

 private:
  std::size_t n_;
  int dim_;
  PolyhedralComplex complex_;
  std::map<std::string, long long> weights_;
  std::vector<std::size_t> top_;
};

/// Primitive generator of the lattice of `sigma` modulo that of its facet `tau`, pointing into sigma.
Vec primitive_generator(const Polyhedron& sigma, const Polyhedron& tau);

struct BalancingReport {
  bool balanced = true;
  std::vector<std::size_t> failing;  // codimension-one cells where the weighted sum leaves the span
};
BalancingReport check_balancing(const TropicalCycle& c);

/// Piecewise integral affine function on the support of a cycle, one piece per top cell.
class CartierFunction {
 public:
  CartierFunction() = default;
  /// `pieces` is indexed like domain.top_cells(). Throws if pieces disagree on shared faces.
  CartierFunction(TropicalCycle domain, std::vector<AffineFunction> pieces);

  /// max of the given affine functions, on a refinement of `domain` where it is affine per cell.
  static CartierFunction from_max(const TropicalCycle& domain, const std::vector<AffineFunction>& terms);

  const TropicalCycle& domain() const { return domain_; }
  const std::vector<AffineFunction>& pieces() const { return pieces_; }
  /// Piece of some top cell containing the given cell of domain().complex().
  const AffineFunction& piece_on(std::size_t cell) const;
  Rational value(const Vec& x) const;

  /// Same function on a cycle whose support lies in the domain's support (refined where needed).
  CartierFunction restrict_to(const TropicalCycle& sub) const;

 private:
  TropicalCycle domain_;
  std::vector<AffineFunction> pieces_;
  std::vector<std::size_t> top_of_cell_;  // for every cell, a top cell containing it
};

/// Weighted corner locus of phi on c (the divisor phi . c).
TropicalCycle divisor_intersect(const CartierFunction& phi, const TropicalCycle& c);

/// D^0 = X, D^(k+1) = phi . D^k, until the zero cycle, dimension zero, or kmax steps.
struct PowerTower {
  std::vector<TropicalCycle> layers;
};
PowerTower power_tower(const CartierFunction& phi, const TropicalCycle& x, int kmax);

/// Sum of weights of a zero-dimensional cycle.
long long degree(const TropicalCycle& c);

/// Weighted fan of tangent cones at x.
TropicalCycle local_cycle(const TropicalCycle& c, const Vec& x);

}  // namespace tropic
