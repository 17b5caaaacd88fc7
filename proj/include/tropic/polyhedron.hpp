#pragma once

#include "tropic/numeric.hpp"

#include <string>
#include <vector>

namespace tropic {

/// Lineality basis and extreme rays (modulo lineality) of {x : ineqs x >= 0, eqs x = 0}.
struct ConeGenerators {
  Matrix lineality;
  Matrix rays;
};
ConeGenerators double_description(std::size_t m, const Matrix& ineqs, const Matrix& eqs);

/**
 * Rational polyhedron in R^n, stored through its homogenisation in R^(n+1):
 * vertex v becomes (1, v), a ray r becomes (0, r). Both representations are
 * canonical after construction, so equal polyhedra have equal keys.
 * Inequality rows (b, a) mean b + a.x >= 0; equation rows mean b + a.x = 0.
 */
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_generators(std::size_t n, const Matrix& points, const Matrix& rays = {},
                                    const Matrix& lineality = {});
  static Polyhedron from_inequalities(std::size_t n, const Matrix& ineqs, const Matrix& eqs = {});
  static Polyhedron whole_space(std::size_t n);
  static Polyhedron empty_set(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  bool empty() const { return dim_ < 0; }
  int dim() const { return dim_; }
  bool bounded() const { return rays_.empty() && lineality_.empty(); }

  const Matrix& vertices() const { return vertices_; }
  const Matrix& rays() const { return rays_; }
  const Matrix& lineality() const { return lineality_; }
  const Matrix& inequalities() const { return ineqs_; }
  const Matrix& equations() const { return eqs_; }
  const std::string& key() const { return key_; }

  bool contains(const Vec& x) const;
  bool contains_in_relative_interior(const Vec& x) const;
  bool contains(const Polyhedron& other) const;
  Vec relative_interior_point() const;

  /// Basis of the linear space parallel to the affine hull.
  Matrix tangent_space() const;
  Polyhedron recession_cone() const;

  /// Faces of codimension one that contain at least one vertex.
  std::vector<Polyhedron> facets() const;
  /// Keys of the facets, one per facet-defining row of inequalities(); cheap.
  std::vector<std::pair<std::string, std::size_t>> facet_keys() const;
  /// The facet cut out by inequalities()[row].
  Polyhedron facet(std::size_t row) const;
  /// All nonempty faces, including the polyhedron itself.
  std::vector<Polyhedron> faces() const;

  Polyhedron intersection(const Polyhedron& other) const;
  Polyhedron with_constraints(const Matrix& ineqs, const Matrix& eqs = {}) const;
  /// Image under x -> a x + t.
  Polyhedron affine_image(const Matrix& a, const Vec& t) const;

  /// Values of the homogeneous row (b, a) on the homogenised generators.
  struct SignSummary {
    bool positive = false, negative = false;
  };
  SignSummary signs(const Vec& row) const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) { return a.key_ == b.key_; }
  friend bool operator<(const Polyhedron& a, const Polyhedron& b) { return a.key_ < b.key_; }

 private:
  static Polyhedron from_cone(std::size_t n, const Matrix& hom_rays, const Matrix& hom_lineality);
  void finalize(const Matrix& hom_rays, const Matrix& hom_lineality, const Matrix& facets,
                const Matrix& eqs);

  std::size_t n_ = 0;
  int dim_ = -1;
  Matrix vertices_, rays_, lineality_;
  Matrix ineqs_, eqs_;
  std::string key_ = "empty";
};

/// Homogenise an affine point (1, x) or a direction (0, d).
Vec homogenize_point(const Vec& x);
Vec homogenize_direction(const Vec& d);

}  // namespace tropic
