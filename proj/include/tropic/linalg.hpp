#pragma once

#include "tropic/numeric.hpp"

#include <optional>

namespace tropic::linalg {

struct Echelon {
  Matrix rows;              // reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m, std::size_t ncols);
std::size_t rank(const Matrix& m, std::size_t ncols);

/// Basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m, std::size_t ncols);

/// Canonical basis of the row span: reduced echelon rows, each scaled to a primitive integer vector.
Matrix canonical_span(const Matrix& gens, std::size_t ncols);

bool in_span(const Matrix& basis, const Vec& v, std::size_t ncols);

/// Some x with a x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b, std::size_t ncols);

/// Coordinates of v in the given (independent) rows; throws if v is outside their span.
Vec coordinates(const Matrix& basis, const Vec& v);

/// Orthogonal projection of v onto the complement of span(basis).
Vec project_out(const Vec& v, const Matrix& basis);

/// Basis of span(a) ∩ span(b).
Matrix intersect_spans(const Matrix& a, const Matrix& b, std::size_t ncols);

Rational det(Matrix m);

// ---- integer lattices ----

/// Unimodular u with u * m in row echelon form (integer row operations only).
struct IntEchelon {
  IntMatrix reduced;
  IntMatrix transform;
  std::size_t rank = 0;
};
IntEchelon integer_row_echelon(const IntMatrix& m);

/// Integer basis of the lattice Z^n ∩ span(gens).
Matrix saturated_basis(const Matrix& gens, std::size_t n);

/// Integer (n-k) x n matrix whose kernel over Z is Z^n ∩ span(gens) and which maps Z^n onto Z^(n-k).
Matrix quotient_map(const Matrix& gens, std::size_t n);

/// Index [Z^n ∩ span(gens) : Z gens] for integer generators spanning that subspace (0 if dependent).
Integer lattice_index(const Matrix& gens, std::size_t n);

/**
 * Primitive integer vector of the lattice Z^n ∩ span(big) that generates it modulo
 * Z^n ∩ span(small), oriented towards `direction`. span(small) must be a hyperplane in span(big).
 */
Vec primitive_normal(const Matrix& big, const Matrix& small, const Vec& direction, std::size_t n);

Matrix apply(const Matrix& a, const Matrix& rows);  // each row r -> a r
Vec apply(const Matrix& a, const Vec& v);

}  // namespace tropic::linalg
