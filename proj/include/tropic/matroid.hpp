#pragma once

#include "tropic/cycle.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tropic {

/// Matroid on {0..n-1} (n <= 12), given by its bases as bitmasks.
class Matroid {
 public:
  using Set = std::uint32_t;
  static constexpr int kMaxSize = 12;

  /// Throws std::invalid_argument unless the bases satisfy the exchange axiom.
  Matroid(int n, std::vector<Set> bases);

  static Matroid uniform(int r, int n);
  static Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  int rank() const { return rank_; }
  int rank(Set s) const { return rank_of_.at(s); }
  Set ground() const { return n_ == 0 ? 0 : static_cast<Set>((1u << n_) - 1); }
  const std::vector<Set>& bases() const { return bases_; }

  Set closure(Set s) const;
  bool is_flat(Set s) const { return closure(s) == s; }
  /// All flats, ordered by rank then mask.
  std::vector<Set> flats() const;
  bool is_loop(int e) const { return rank(Set{1} << e) == 0; }
  bool is_coloop(int e) const { return rank(ground() & ~(Set{1} << e)) == rank_ - 1; }
  bool has_loop() const;

  Matroid deletion(int e) const;
  Matroid contraction(int e) const;
  Matroid restriction(Set s) const;       // ground set relabelled in increasing order
  /// (M restricted to upper) contracted by lower, for flats lower ⊆ upper.
  Matroid interval_minor(Set lower, Set upper) const;

 private:
  int n_;
  int rank_;
  std::vector<Set> bases_;
  std::vector<int> rank_of_;
};

/// Bergman fan in R^(n-1): coordinates of R^n / R(1,...,1) with the last one set to 0,
/// subdivided into flag cones with weight one. Zero cycle if M has a loop.
TropicalCycle bergman_fan(const Matroid& m);

/// Cone of a chain of flats, generated by the images of -e_F.
Polyhedron flag_cone(const Matroid& m, const std::vector<Matroid::Set>& chain);

Integer beta_invariant(const Matroid& m);
/// Coefficients in increasing powers of t.
std::vector<Integer> characteristic_polynomial(const Matroid& m);

/// k-dimensional CSM cycle on the flag subdivision of the Bergman fan.
TropicalCycle csm_cycle(const Matroid& m, int k);

/// Uniform matroids U_{r,n} with 1 <= r <= n <= max_n, plus the cycle matroid of K4.
std::vector<std::pair<std::string, Matroid>> matroid_catalogue(int max_n);

}  // namespace tropic
