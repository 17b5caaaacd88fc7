#pragma once

#include "tropic/hypersurface.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tropic {

using Rng = std::mt19937_64;

/// d times the standard simplex in R^n.
Polyhedron dilated_simplex(std::size_t n, long long d);
/// [0,a] x [0,b].
Polyhedron rectangle(long long a, long long b);

/// Delzant lattice polygon built from a base shape (dilated triangle, rectangle or Hirzebruch
/// trapezoid) by corner cuts. history[0] is the base, history.back() == polygon.
struct DelzantInstance {
  Polyhedron polygon;
  std::vector<Polyhedron> history;
  std::string recipe;  // human-readable construction log
};
/// Vertices stay within |coord| <= bound.
DelzantInstance random_delzant_polygon(Rng& rng, long long bound = 6);

/// Polynomial with the given exponents, concave heights plus a random perturbation, redrawn
/// until its subdivision is unimodular. Throws std::runtime_error after `retries` failures.
TropicalPolynomial smooth_polynomial(const std::vector<Vec>& exponents, Rng& rng, int retries = 20);
/// Exponents = all lattice points of the polytope.
TropicalPolynomial smooth_polynomial(const Polyhedron& newton, Rng& rng, int retries = 20);

/// Two smooth curves on TP^2 or TP^1 x TP^1 together with the polytope defining the compactification.
struct BertiniPair {
  std::string surface;  // "TP2" or "TP1xTP1"
  Polyhedron ambient;   // its normal fan is the compactifying fan
  Polyhedron newton_d, newton_dprime;
  TropicalPolynomial d, dprime;
};
BertiniPair random_bertini_pair(Rng& rng, bool product_surface, long long max_degree = 3, int retries = 20);

}  // namespace tropic
