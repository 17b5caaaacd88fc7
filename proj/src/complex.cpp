#include "tropic/complex.hpp"

#include "tropic/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tropic {

PolyhedralComplex PolyhedralComplex::from_cells(std::size_t n, const std::vector<Polyhedron>& cells) {
  std::map<std::string, Polyhedron> all;
  std::map<std::string, std::vector<std::string>> facet_keys;
  std::vector<Polyhedron> stack;
  for (const auto& c : cells) {
    if (c.ambient_dim() != n) throw std::invalid_argument("from_cells: ambient dimension mismatch");
    if (c.empty()) continue;
    if (all.emplace(c.key(), c).second) stack.push_back(c);
  }
  while (!stack.empty()) {
    Polyhedron p = std::move(stack.back());
    stack.pop_back();
    auto& keys = facet_keys[p.key()];
    for (const auto& [fk, row] : p.facet_keys()) {
      keys.push_back(fk);
      if (!all.count(fk)) {
        auto f = p.facet(row);
        all.emplace(fk, f);
        stack.push_back(std::move(f));
      }
    }
  }
  PolyhedralComplex out(n);
  for (auto& [k, p] : all) out.cells_.push_back(p);
  std::sort(out.cells_.begin(), out.cells_.end(), [](const Polyhedron& a, const Polyhedron& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a.key() < b.key();
  });
  for (std::size_t i = 0; i < out.cells_.size(); ++i) out.index_[out.cells_[i].key()] = i;
  out.facets_.assign(out.cells_.size(), {});
  out.cofacets_.assign(out.cells_.size(), {});
  for (std::size_t i = 0; i < out.cells_.size(); ++i) {
    for (const auto& fk : facet_keys[out.cells_[i].key()]) {
      std::size_t j = out.index_.at(fk);
      out.facets_[i].push_back(j);
      out.cofacets_[j].push_back(i);
    }
    std::sort(out.facets_[i].begin(), out.facets_[i].end());
  }
  for (auto& c : out.cofacets_) std::sort(c.begin(), c.end());
  return out;
}

int PolyhedralComplex::dim() const { return cells_.empty() ? -1 : cells_.back().dim(); }

std::optional<std::size_t> PolyhedralComplex::find(const Polyhedron& p) const {
  auto it = index_.find(p.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> PolyhedralComplex::maximal_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cofacets_[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> PolyhedralComplex::cells_of_dim(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim() == d) out.push_back(i);
  return out;
}

bool PolyhedralComplex::pure() const {
  for (auto i : maximal_cells())
    if (cells_[i].dim() != dim()) return false;
  return true;
}

bool PolyhedralComplex::contains_point(const Vec& x) const {
  for (auto i : maximal_cells())
    if (cells_[i].contains(x)) return true;
  return false;
}

std::vector<std::size_t> PolyhedralComplex::maximal_cells_containing(const Vec& x) const {
  std::vector<std::size_t> out;
  for (auto i : maximal_cells())
    if (cells_[i].contains(x)) out.push_back(i);
  return out;
}

ValidationReport validate_complex(std::size_t n, const std::vector<Polyhedron>& cells) {
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.problems.push_back(std::move(msg));
  };
  std::set<std::string> keys;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].ambient_dim() != n) fail("cell " + std::to_string(i) + ": wrong ambient dimension");
    if (cells[i].empty()) fail("cell " + std::to_string(i) + ": empty");
    if (!keys.insert(cells[i].key()).second) fail("cell " + std::to_string(i) + ": duplicate");
  }
  if (!rep.ok) return rep;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (const auto& f : cells[i].facets())
      if (!keys.count(f.key())) {
        fail("cell " + std::to_string(i) + ": a facet is missing from the complex");
        break;
      }
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      Polyhedron m = cells[i].intersection(cells[j]);
      if (m.empty()) continue;
      auto is_face_of = [&](const Polyhedron& c) {
        for (const auto& f : c.faces())
          if (f == m) return true;
        return false;
      };
      if (!is_face_of(cells[i]) || !is_face_of(cells[j]))
        fail("cells " + std::to_string(i) + " and " + std::to_string(j) + " meet outside a common face");
    }
  return rep;
}

Polyhedron tangent_cone(const Polyhedron& p, const Vec& x) {
  if (!p.contains(x)) throw std::domain_error("tangent_cone: point outside polyhedron");
  Matrix rays = p.rays();
  for (const auto& v : p.vertices()) rays.push_back(sub(v, x));
  return Polyhedron::from_generators(p.ambient_dim(), {Vec(p.ambient_dim(), Rational(0))}, rays,
                                     p.lineality());
}

PolyhedralComplex local_cone(const PolyhedralComplex& c, const Vec& x) {
  std::vector<Polyhedron> cones;
  for (auto i : c.maximal_cells_containing(x)) cones.push_back(tangent_cone(c.cell(i), x));
  return PolyhedralComplex::from_cells(c.ambient_dim(), cones);
}

Matrix cell_hyperplanes(const PolyhedralComplex& c) {
  std::set<std::string> seen;
  Matrix out;
  auto take = [&](const Vec& row) {
    Vec r = primitive_line(row);
    if (seen.insert(vec_key(r)).second) out.push_back(r);
  };
  for (auto i : c.maximal_cells()) {
    for (const auto& r : c.cell(i).inequalities()) {
      bool only_x0 = true;
      for (std::size_t k = 1; k < r.size(); ++k)
        if (!r[k].is_zero()) only_x0 = false;
      if (!only_x0) take(r);
    }
    for (const auto& r : c.cell(i).equations()) take(r);
  }
  return out;
}

std::vector<Polyhedron> refine_along(const Polyhedron& piece, const Matrix& hyperplanes) {
  std::vector<Polyhedron> pieces{piece};
  for (const auto& h : hyperplanes) {
    std::vector<Polyhedron> next;
    for (auto& p : pieces) {
      auto s = p.signs(h);
      if (!(s.positive && s.negative)) {
        next.push_back(std::move(p));
        continue;
      }
      for (int sign : {1, -1}) {
        Polyhedron q = p.with_constraints({scale(h, sign)});
        if (q.dim() == p.dim()) next.push_back(std::move(q));
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

bool fills_space(const PolyhedralComplex& c) {
  int n = static_cast<int>(c.ambient_dim());
  if (c.cells().empty() || c.dim() != n || !c.pure()) return false;
  for (auto tau : c.cells_of_dim(n - 1))
    if (c.cofacets_of(tau).size() != 2) return false;
  return true;
}

namespace {

// True when the piece lies in {row <= 0} without lying in {row = 0}; then it
// meets {row >= 0} in lower dimension.
bool pushed_off(const Polyhedron& piece, const Vec& row) {
  bool strict = false;
  for (const auto& v : piece.vertices()) {
    Rational s = dot(row, homogenize_point(v));
    if (s > 0) return false;
    strict = strict || s < 0;
  }
  for (const auto& r : piece.rays()) {
    Rational s = dot(row, homogenize_direction(r));
    if (s > 0) return false;
    strict = strict || s < 0;
  }
  for (const auto& l : piece.lineality())
    if (!dot(row, homogenize_direction(l)).is_zero()) return false;
  return strict;
}

// Cheap necessary condition for piece ∩ cell to have the dimension of the piece.
bool may_meet_fully(const Polyhedron& piece, const Polyhedron& cell) {
  for (const auto& g : cell.inequalities())
    if (pushed_off(piece, g)) return false;
  for (const auto& e : cell.equations())
    if (pushed_off(piece, e) || pushed_off(piece, scale(e, Rational(-1)))) return false;
  return true;
}

}  // namespace

// The pieces piece ∩ C over maximal cells C form a complex inside the piece.
// They cover it exactly when every wall through the relative interior of the
// piece has two sides.
bool support_contains(const PolyhedralComplex& c, const Polyhedron& piece) {
  if (piece.empty()) return true;
  if (fills_space(c)) return true;
  std::vector<Polyhedron> parts;
  for (auto i : c.maximal_cells()) {
    const auto& cell = c.cell(i);
    if (cell.dim() < piece.dim()) continue;
    if (cell.contains(piece)) return true;
    if (!may_meet_fully(piece, cell)) continue;
    Polyhedron part = piece.intersection(cell);
    if (part.dim() == piece.dim()) parts.push_back(std::move(part));
  }
  if (parts.empty()) return false;
  auto cover = PolyhedralComplex::from_cells(c.ambient_dim(), parts);
  for (auto w : cover.cells_of_dim(piece.dim() - 1))
    if (cover.cofacets_of(w).size() != 2 && piece.contains_in_relative_interior(cover.cell(w).relative_interior_point()))
      return false;
  return true;
}

bool support_contains(const PolyhedralComplex& big, const PolyhedralComplex& small) {
  for (auto i : small.maximal_cells())
    if (!support_contains(big, small.cell(i))) return false;
  return true;
}

bool same_support(const PolyhedralComplex& a, const PolyhedralComplex& b) {
  return support_contains(a, b) && support_contains(b, a);
}

Matrix lineality_space(const PolyhedralComplex& fan) {
  std::size_t n = fan.ambient_dim();
  auto maxc = fan.maximal_cells();
  if (maxc.empty()) return {};
  Matrix s = fan.cell(maxc[0]).tangent_space();
  for (auto i : maxc) s = linalg::intersect_spans(s, fan.cell(i).tangent_space(), n);
  bool ok = true;
  for (auto i : maxc) {
    const auto& c = fan.cell(i);
    Matrix lin = c.lineality();
    lin.insert(lin.end(), s.begin(), s.end());
    if (!support_contains(fan, Polyhedron::from_generators(n, c.vertices(), c.rays(), lin))) {
      ok = false;
      break;
    }
  }
  if (ok) return linalg::canonical_span(s, n);
  Matrix common = fan.cell(maxc[0]).lineality();
  for (auto i : maxc) common = linalg::intersect_spans(common, fan.cell(i).lineality(), n);
  return linalg::canonical_span(common, n);
}

int sedentarity(const RationalPoint& x) {
  int s = 0;
  for (const auto& c : x)
    if (c.is_neg_inf()) ++s;
  return s;
}

void require_lattice_polytope(const Polyhedron& p) {
  if (p.empty()) throw std::invalid_argument("lattice polytope is empty");
  if (!p.bounded()) throw std::invalid_argument("lattice polytope is unbounded");
  for (const auto& v : p.vertices())
    for (const auto& x : v)
      if (!is_integer(x)) throw std::invalid_argument("lattice polytope has a non-integral vertex");
}

namespace {

template <class F>
void for_each_box_point(const Polyhedron& p, F&& f) {
  std::size_t n = p.ambient_dim();
  IntVec lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = to_integer(p.vertices()[0][k]);
    hi[k] = lo[k];
    for (const auto& v : p.vertices()) {
      Integer x = to_integer(v[k]);
      lo[k] = std::min(lo[k], x);
      hi[k] = std::max(hi[k], x);
    }
  }
  IntVec cur = lo;
  while (true) {
    f(to_vec(cur));
    std::size_t k = 0;
    while (k < n && cur[k] == hi[k]) {
      cur[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++cur[k];
  }
}

std::vector<Matrix> triangulate(const Polyhedron& p) {
  if (p.dim() == 0) return {p.vertices()};
  const Vec& v0 = p.vertices()[0];
  std::vector<Matrix> out;
  for (const auto& f : p.facets()) {
    if (f.contains(v0)) continue;
    for (auto& s : triangulate(f)) {
      s.push_back(v0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

std::vector<Vec> lattice_points(const Polyhedron& p) {
  require_lattice_polytope(p);
  std::vector<Vec> out;
  for_each_box_point(p, [&](const Vec& x) {
    if (p.contains(x)) out.push_back(x);
  });
  return out;
}

std::vector<Vec> interior_lattice_points(const Polyhedron& p) {
  require_lattice_polytope(p);
  std::vector<Vec> out;
  for_each_box_point(p, [&](const Vec& x) {
    if (p.contains_in_relative_interior(x)) out.push_back(x);
  });
  return out;
}

Integer normalized_volume(const Polyhedron& p) {
  require_lattice_polytope(p);
  if (p.dim() == 0) return 1;
  std::size_t n = p.ambient_dim();
  Matrix basis = linalg::saturated_basis(p.tangent_space(), n);
  Rational total = 0;
  for (const auto& s : triangulate(p)) {
    Matrix m;
    for (std::size_t i = 1; i < s.size(); ++i) m.push_back(linalg::coordinates(basis, sub(s[i], s[0])));
    total += abs(linalg::det(m));
  }
  return to_integer(total);
}

}  // namespace tropic
