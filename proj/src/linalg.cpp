#include "tropic/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace tropic::linalg {

Echelon rref(const Matrix& m, std::size_t ncols) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < ncols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }

Matrix nullspace(const Matrix& m, std::size_t ncols) {
  auto e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

Matrix canonical_span(const Matrix& gens, std::size_t ncols) {
  auto e = rref(gens, ncols);
  for (auto& r : e.rows) r = primitive(r);
  return e.rows;
}

bool in_span(const Matrix& basis, const Vec& v, std::size_t ncols) {
  Matrix m = basis;
  m.push_back(v);
  return rank(m, ncols) == rank(basis, ncols);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b, std::size_t ncols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto e = rref(aug, ncols + 1);
  Vec x(ncols, Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == ncols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][ncols];
  }
  return x;
}

Vec coordinates(const Matrix& basis, const Vec& v) {
  if (basis.empty()) {
    if (!is_zero(v)) throw std::domain_error("coordinates: vector outside span");
    return {};
  }
  std::size_t n = v.size();
  Matrix at(n, Vec(basis.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) at[i][j] = basis[j][i];
  auto x = solve(at, v, basis.size());
  if (!x) throw std::domain_error("coordinates: vector outside span");
  return *x;
}

Vec project_out(const Vec& v, const Matrix& basis) {
  if (basis.empty()) return v;
  std::size_t k = basis.size();
  Matrix gram(k, Vec(k));
  Vec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto c = solve(gram, rhs, k);
  Vec r = v;
  for (std::size_t i = 0; i < k; ++i)
    if (!(*c)[i].is_zero()) r = sub(r, scale(basis[i], (*c)[i]));
  return r;
}

Matrix intersect_spans(const Matrix& a, const Matrix& b, std::size_t ncols) {
  // span(a) ∩ span(b) = kernel of the stacked complements' equations.
  Matrix eqs = nullspace(a, ncols);
  Matrix eb = nullspace(b, ncols);
  eqs.insert(eqs.end(), eb.begin(), eb.end());
  return nullspace(eqs, ncols);
}

Rational det(Matrix m) {
  std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

IntEchelon integer_row_echelon(const IntMatrix& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  IntMatrix a = m;
  IntMatrix u(rows, IntVec(rows, Integer(0)));
  for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& q) {  // dst -= q*src
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] -= q * a[src][j];
    for (std::size_t j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      // smallest nonzero |entry| in column c at or below r goes to row r
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == rows) break;
      std::swap(a[best], a[r]);
      std::swap(u[best], u[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        row_op(i, r, a[i][c] / a[r][c]);
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && a[r][c] != 0) ++r;
  }
  return {std::move(a), std::move(u), r};
}

namespace {

IntMatrix to_int_rows(const Matrix& m) {
  IntMatrix r;
  for (const auto& row : m) r.push_back(to_intvec(primitive(row)));
  return r;
}

// Basis of {x in Z^n : eqs x = 0} for integer rows eqs.
Matrix integer_kernel(const Matrix& eqs, std::size_t n) {
  if (eqs.empty()) {
    Matrix id(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  IntMatrix e = to_int_rows(eqs);
  IntMatrix t(n, IntVec(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = e[i][j];
  auto ech = integer_row_echelon(t);
  Matrix basis;
  for (std::size_t i = ech.rank; i < n; ++i) basis.push_back(to_vec(ech.transform[i]));
  return basis;
}

}  // namespace

Matrix saturated_basis(const Matrix& gens, std::size_t n) {
  return integer_kernel(nullspace(gens, n), n);
}

Matrix quotient_map(const Matrix& gens, std::size_t n) {
  Matrix span = rref(gens, n).rows;
  if (span.empty()) return integer_kernel({}, n);
  return saturated_basis(nullspace(span, n), n);
}

Integer lattice_index(const Matrix& gens, std::size_t n) {
  if (gens.empty()) return 1;
  if (rank(gens, n) != gens.size()) return 0;
  Matrix sat = saturated_basis(gens, n);
  Matrix coords;
  for (const auto& g : gens) coords.push_back(coordinates(sat, g));
  return to_integer(abs(det(coords)));
}

Vec primitive_normal(const Matrix& big, const Matrix& small, const Vec& direction, std::size_t n) {
  Matrix basis = saturated_basis(big, n);
  std::size_t k = basis.size();
  Matrix small_coords;
  for (const auto& s : small) small_coords.push_back(coordinates(basis, s));
  Matrix f = nullspace(small_coords, k);
  if (f.size() != 1) throw std::domain_error("primitive_normal: expected a hyperplane");
  IntVec fi = to_intvec(primitive(f[0]));
  // w with f.w = 1
  IntVec w(k, Integer(0));
  Integer g = 0;
  std::size_t first = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (fi[i] == 0) continue;
    if (first == k) {
      first = i;
      g = fi[i];
      w[i] = 1;
      continue;
    }
    auto [d, x, y] = ext_gcd(g, fi[i]);
    for (auto& c : w) c *= x;
    w[i] = y;
    g = d;
  }
  if (g < 0) {
    for (auto& c : w) c = -c;
    g = -g;
  }
  if (g != 1) throw std::logic_error("primitive_normal: functional not primitive");
  Vec v(n, Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    if (w[i] != 0) v = add(v, scale(basis[i], Rational(w[i])));
  Vec dir_coords = coordinates(basis, direction);
  Rational side = dot(to_vec(fi), dir_coords);
  if (side.is_zero()) throw std::domain_error("primitive_normal: direction lies in the hyperplane");
  if (side < 0) v = scale(v, -1);
  return v;
}

Matrix apply(const Matrix& a, const Matrix& rows) {
  Matrix r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(apply(a, v));
  return r;
}

Vec apply(const Matrix& a, const Vec& v) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

}  // namespace tropic::linalg
