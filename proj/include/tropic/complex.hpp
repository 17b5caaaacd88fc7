#pragma once

#include "tropic/polyhedron.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropic {

/// Finite polyhedral complex, closed under faces. Cells are sorted by dimension then key.
class PolyhedralComplex {
 public:
  explicit PolyhedralComplex(std::size_t n = 0) : n_(n) {}

  /// Face closure of the given cells (which need not be maximal or distinct).
  static PolyhedralComplex from_cells(std::size_t n, const std::vector<Polyhedron>& cells);

  std::size_t ambient_dim() const { return n_; }
  int dim() const;
  bool empty() const { return cells_.empty(); }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  const Polyhedron& cell(std::size_t i) const { return cells_.at(i); }
  std::optional<std::size_t> find(const Polyhedron& p) const;

  const std::vector<std::size_t>& facets_of(std::size_t i) const { return facets_.at(i); }
  const std::vector<std::size_t>& cofacets_of(std::size_t i) const { return cofacets_.at(i); }
  std::vector<std::size_t> maximal_cells() const;
  std::vector<std::size_t> cells_of_dim(int d) const;
  bool pure() const;

  bool contains_point(const Vec& x) const;
  /// Maximal cells containing x.
  std::vector<std::size_t> maximal_cells_containing(const Vec& x) const;

 private:
  std::size_t n_;
  std::vector<Polyhedron> cells_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> facets_, cofacets_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Checks that a raw cell list is a polyhedral complex: faces present, intersections are common faces.
ValidationReport validate_complex(std::size_t n, const std::vector<Polyhedron>& cells);

/// Fan of tangent cones at x of the maximal cells containing x.
PolyhedralComplex local_cone(const PolyhedralComplex& c, const Vec& x);

/// Tangent cone of a single polyhedron at one of its points.
Polyhedron tangent_cone(const Polyhedron& p, const Vec& x);

/// Is the polyhedron `piece` contained in the support of `c`?
/// True when the complex is pure of full dimension and every wall has two sides, so its support is R^n.
bool fills_space(const PolyhedralComplex& c);
bool support_contains(const PolyhedralComplex& c, const Polyhedron& piece);
bool support_contains(const PolyhedralComplex& big, const PolyhedralComplex& small);
bool same_support(const PolyhedralComplex& a, const PolyhedralComplex& b);

/// Basis of the lineality space of the support of a fan.
Matrix lineality_space(const PolyhedralComplex& fan);

/// Number of -inf coordinates.
int sedentarity(const RationalPoint& x);

/// Cells of `c` cut along every hyperplane of `cuts` (facets and equations of its cells), keeping dimension.
std::vector<Polyhedron> refine_along(const Polyhedron& piece, const Matrix& hyperplanes);
Matrix cell_hyperplanes(const PolyhedralComplex& c);

// ---- lattice polytopes ----

/// Bounded polyhedron with integer vertices; throws std::invalid_argument otherwise.
void require_lattice_polytope(const Polyhedron& p);
std::vector<Vec> lattice_points(const Polyhedron& p);
std::vector<Vec> interior_lattice_points(const Polyhedron& p);  // relative interior
/// dim(P)! times the volume, measured in the lattice of the affine hull.
Integer normalized_volume(const Polyhedron& p);

}  // namespace tropic
