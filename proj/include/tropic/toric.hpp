#pragma once

#include "tropic/polyhedron.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tropic {

/// Polynomial in Chern classes c_1..c_N; a key lists the exponent of each c_i.
using ChernPolynomial = std::map<std::vector<int>, Rational>;

/// Todd polynomials Todd_0..Todd_nmax, generated from the series x / (1 - e^-x).
struct ToddTable {
  int nmax = 0;
  std::vector<ChernPolynomial> todd;  // todd[j] is weighted-homogeneous of degree j
  /// c[i-1] = value of c_i; missing classes count as zero.
  Rational evaluate(int j, const std::vector<Rational>& c) const;
};
constexpr int kToddCap = 6;
/// Throws std::invalid_argument for nmax outside [0, kToddCap].
const ToddTable& todd_polynomials(int nmax);

/// Power series coefficients of x / (1 - e^-x) up to x^n.
Vec todd_series(int n);

/// Complete smooth fan in the plane, rays in counterclockwise order.
class SmoothCompleteFan2D {
 public:
  /// Throws std::invalid_argument unless consecutive rays form positively oriented lattice bases
  /// and the rays wind once around the origin.
  explicit SmoothCompleteFan2D(std::vector<IntVec> rays);
  /// Outer normal fan of a Delzant lattice polygon; `heights` receives h_i with Q = {<u_i, x> <= h_i}.
  static SmoothCompleteFan2D from_polygon(const Polyhedron& q, Vec* heights = nullptr);

  const std::vector<IntVec>& rays() const { return rays_; }
  /// a_i in u_{i-1} + u_{i+1} = a_i u_i; the self-intersection of D_i is -a_i.
  const std::vector<long long>& wall_numbers() const { return walls_; }

 private:
  std::vector<IntVec> rays_;
  std::vector<long long> walls_;
};

/// h_i = max over the polygon of <u_i, x>: the class of a polygon whose normal fan the given fan refines.
Vec support_heights(const SmoothCompleteFan2D& fan, const Polyhedron& polygon);

/// parts[k] holds the degree-k component: a scalar for k = 0 and k = dim, divisor coefficients
/// for k = 1 on surfaces, and the coefficient of H^k on projective spaces.
struct CohomologyClass {
  std::vector<Vec> parts;
};

/// Cohomology ring of a smooth complete toric surface or of TP^n, presented by intersection numbers.
class ToricRing {
 public:
  static ToricRing surface(const SmoothCompleteFan2D& fan);
  static ToricRing projective_space(std::size_t n);

  std::size_t dim() const { return dim_; }
  std::size_t ray_count() const { return rays_; }
  bool is_projective_space() const { return projective_; }

  CohomologyClass zero() const;
  CohomologyClass one() const;
  /// Class of the torus-invariant divisor of ray i.
  CohomologyClass ray_divisor(std::size_t i) const;
  /// Degree-one class from coefficients (one per ray on surfaces, a single H coefficient on TP^n).
  CohomologyClass divisor(const Vec& coeffs) const;
  CohomologyClass hyperplane() const;  // TP^n only

  CohomologyClass add(const CohomologyClass& a, const CohomologyClass& b) const;
  CohomologyClass scale(const CohomologyClass& a, const Rational& s) const;
  CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) const;
  CohomologyClass part(const CohomologyClass& a, std::size_t k) const;
  Rational integrate(const CohomologyClass& a) const;

  /// exp of a class without degree-zero part, truncated at the top degree.
  CohomologyClass exp(const CohomologyClass& a) const;
  /// Product over rays of (1 + D_rho).
  CohomologyClass chern_total() const;
  CohomologyClass canonical() const;  // minus the sum of the ray divisors
  CohomologyClass todd() const;

 private:
  std::size_t dim_ = 0, rays_ = 0;
  bool projective_ = false;
  Matrix form_;  // surfaces: D_i . D_j
};

/// Product of degree-one classes; throws std::invalid_argument unless their number is dim.
Rational intersection_number(const ToricRing& ring, const std::vector<CohomologyClass>& classes);
/// Integral of exp(D) td(X).
Rational rr_number(const ToricRing& ring, const CohomologyClass& d);
/// deg(D.(D - K))/2 + chi(X), with chi(X) = 1 for toric instances.
Rational adjunction_rr_surface(const ToricRing& ring, const CohomologyClass& d);
/// Integral of prod_j (1 - exp(-D_j)) td(X).
Rational virtual_T_genus(const ToricRing& ring, const std::vector<CohomologyClass>& ds);

struct RRDifferenceReport {
  Rational difference;    // RR(X; D' - D)
  Rational ambient;       // RR(X; D')
  Rational curve;         // RR of the curve D with the divisor D'|_D
  long long curve_genus = 0;
  bool agrees = false;    // difference == ambient - curve
};
/// RR(X; D' - D) against RR(X; D') - RR(D; D'|_D) on a surface. The genus of D defaults to the
/// adjunction value 1 + D.(D + K)/2.
RRDifferenceReport rr_difference(const ToricRing& ring, const CohomologyClass& dprime, const CohomologyClass& d,
                                 std::optional<long long> curve_genus = std::nullopt);

}  // namespace tropic
