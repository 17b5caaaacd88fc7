#pragma once

#include "tropic/cycle.hpp"

#include <vector>

namespace tropic {

/// Complete rational fan; cones()[0] is the zero cone. Each cone indexes a torus orbit.
class CompleteFan {
 public:
  /// Outer normal fan of a full-dimensional polytope.
  static CompleteFan normal_fan(const Polyhedron& polytope);
  /// Fan of TP^n (normal fan of the standard simplex).
  static CompleteFan projective_space(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Polyhedron>& cones() const { return cones_; }
  /// Lattice quotient Z^n -> Z^(n - dim cone) whose kernel is the cone's span.
  const Matrix& quotient(std::size_t cone) const { return quotients_.at(cone); }
  Matrix rays() const;
  /// Every maximal cone is generated by a lattice basis.
  bool smooth() const;

 private:
  std::size_t n_ = 0;
  std::vector<Polyhedron> cones_;
  std::vector<Matrix> quotients_;
};

/// Relatively open cell of a compactified complex, living in the orbit of `orbit`.
struct Stratum {
  std::size_t orbit;
  Polyhedron cell;  // in the orbit's quotient coordinates
};

/// Cells of the closure in the toric variety of `fan`: for every cell c and every cone
/// inside the recession cone of c, the image of c in that cone's orbit.
std::vector<Stratum> compactify(const PolyhedralComplex& k, const CompleteFan& fan);

/// Euler characteristic of a compact space given by its open cells.
long long euler_characteristic(const std::vector<Stratum>& strata);

/// The part of a cycle at infinity in one orbit, with weights carried over.
TropicalCycle orbit_cycle(const TropicalCycle& c, const CompleteFan& fan, std::size_t orbit);

/// Does some stratum of the given orbit contain the point (orbit coordinates)?
bool strata_contain(const std::vector<Stratum>& strata, std::size_t orbit, const Vec& p);

}  // namespace tropic
