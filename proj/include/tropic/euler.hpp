#pragma once

#include "tropic/compactification.hpp"
#include "tropic/local_models.hpp"

#include <string>
#include <vector>

namespace tropic {

/// Relatively open cells partitioning a compact space (typically a compactified complex).
struct Stratification {
  std::vector<Stratum> strata;
};

struct ConstructibleFunction {
  Stratification domain;
  std::vector<long long> values;  // one per stratum
};

/// Compactly supported Euler characteristic of a union of strata (given by index).
long long chi_c(const Stratification& s, const std::vector<std::size_t>& subset);
long long euler_integral(const ConstructibleFunction& f);

/// Number of k >= 0 with x in |D^k|; throws if x is not in |X|.
long long local_index(const PowerTower& tower, const Vec& x);

/// Local index as a constructible function on the compactified domain of phi.
ConstructibleFunction local_index_function(const CartierFunction& phi, const PowerTower& tower,
                                           const CompleteFan& fan);

struct ChiComplementReport {
  long long path_a = 0;                // sum of chi of the closed layers
  long long path_b = 0;                // sum of (k+1) chi_c(layer k minus layer k+1)
  long long chi_c_complement = 0;      // compactly supported, over the strata off D
  std::vector<long long> layer_chis;   // chi of each closed layer
  bool relatively_uniform = false;     // checked at every point of the closure of D
  bool moderate = false;
  std::vector<std::string> flags;      // why the hypotheses could not be confirmed
  bool agrees() const { return path_a == path_b; }
};

/**
 * Euler characteristic of the complement of D = phi.X in the compactification of X, with X the
 * first layer of `tower` and phi the function that produced it. Hypothesis checks never abort;
 * failures are recorded in `flags`.
 */
ChiComplementReport chi_complement(const CartierFunction& phi, const PowerTower& tower, const CompleteFan& fan);

struct SurfaceComplementReport {
  long long chi_surface = 0;
  long long chi_curve = 0;
  long long chi_square = 0;  // number of points of |C^2|
  long long total = 0;
};
/// chi(S) + chi(C) + chi(|C^2|) for C = phi.S. Throws std::domain_error if C is not in moderate position.
SurfaceComplementReport chi_surface_complement(const CartierFunction& phi, const TropicalCycle& s,
                                               const CompleteFan& fan);

struct RelativePairReport {
  long long chi_outside_dprime = 0;  // chi(X minus D')
  long long chi_d_minus = 0;         // chi(D minus D ∩ D')
  long long value = 0;
  std::vector<std::string> flags;
};
/// chi(X \ D') - chi(D \ (D ∩ D')) for D = phi_d.X and D' = phi_dprime.X.
RelativePairReport chi_relative_pair(const CartierFunction& phi_d, const CartierFunction& phi_dprime,
                                     const CompleteFan& fan);

}  // namespace tropic
