#pragma once

#include "tropic/cycle.hpp"

#include <vector>

namespace tropic {

struct Term {
  Vec exponent;  // integral
  Rational coeff;
};

/// max_i (coeff_i + exponent_i . x), with distinct exponents.
class TropicalPolynomial {
 public:
  TropicalPolynomial() = default;
  TropicalPolynomial(std::size_t n, std::vector<Term> terms);

  std::size_t nvars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<AffineFunction> affine_terms() const;
  Rational evaluate(const Vec& x) const;
  /// Indices of the terms attaining the maximum at x.
  std::vector<std::size_t> active_terms(const Vec& x) const;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

Polyhedron newton_polytope(const TropicalPolynomial& f);

/// Regular subdivision of the exponents induced by the upper hull of the lifted points.
struct RegularSubdivision {
  std::vector<std::vector<std::size_t>> cells;  // term indices on each maximal cell
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // endpoints of the edges
  std::vector<std::size_t> vertices;  // terms that are vertices of the subdivision
};
RegularSubdivision regular_subdivision(const TropicalPolynomial& f);

/// Every maximal cell is a unimodular simplex.
bool is_smooth(const TropicalPolynomial& f);

/// Hypersurface as the complex dual to the subdivision; the cell dual to an edge has the
/// edge's lattice length as weight.
TropicalCycle tropical_hypersurface(const TropicalPolynomial& f);

struct ComplementComponent {
  std::size_t term;  // index of the dominating term
  Vec exponent;
  bool contractible = true;  // the closure of an open convex region
};
std::vector<ComplementComponent> complement_components(const TropicalPolynomial& f);

/// The function max(terms) on R^n, refined so that it is affine on every cell.
CartierFunction cartier_of(const TropicalPolynomial& f);

}  // namespace tropic
