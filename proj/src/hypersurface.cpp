#include "tropic/hypersurface.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tropic {

TropicalPolynomial::TropicalPolynomial(std::size_t n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("tropical polynomial without terms");
  std::set<std::string> seen;
  for (const auto& t : terms_) {
    if (t.exponent.size() != n_) throw std::invalid_argument("term exponent has the wrong length");
    for (const auto& e : t.exponent)
      if (!is_integer(e)) throw std::invalid_argument("term exponent is not integral");
    if (!seen.insert(vec_key(t.exponent)).second) throw std::invalid_argument("repeated exponent " + vec_key(t.exponent));
  }
}

std::vector<AffineFunction> TropicalPolynomial::affine_terms() const {
  std::vector<AffineFunction> out;
  for (const auto& t : terms_) out.push_back({t.exponent, t.coeff});
  return out;
}

Rational TropicalPolynomial::evaluate(const Vec& x) const {
  Rational best = terms_[0].coeff + dot(terms_[0].exponent, x);
  for (const auto& t : terms_) best = std::max(best, t.coeff + dot(t.exponent, x));
  return best;
}

std::vector<std::size_t> TropicalPolynomial::active_terms(const Vec& x) const {
  Rational best = evaluate(x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff + dot(terms_[i].exponent, x) == best) out.push_back(i);
  return out;
}

Polyhedron newton_polytope(const TropicalPolynomial& f) {
  Matrix pts;
  for (const auto& t : f.terms()) pts.push_back(t.exponent);
  return Polyhedron::from_generators(f.nvars(), pts);
}

RegularSubdivision regular_subdivision(const TropicalPolynomial& f) {
  std::size_t n = f.nvars();
  Matrix lifted;
  for (const auto& t : f.terms()) {
    Vec p = t.exponent;
    p.push_back(t.coeff);
    lifted.push_back(std::move(p));
  }
  Vec down(n + 1, Rational(0));
  down[n] = -1;
  auto hull = Polyhedron::from_generators(n + 1, lifted, {down});
  RegularSubdivision sub;
  std::set<std::size_t> verts;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& row : hull.inequalities()) {
    if (row[n + 1] >= 0) continue;  // vertical facet or the face at infinity
    std::vector<std::size_t> cell;
    Matrix pts;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (dot(row, homogenize_point(lifted[i])).is_zero()) {
        cell.push_back(i);
        pts.push_back(f.terms()[i].exponent);
      }
    auto poly = Polyhedron::from_generators(n, pts);
    auto vertex_term = [&](const Vec& v) {
      for (auto i : cell)
        if (f.terms()[i].exponent == v) return i;
      throw std::logic_error("regular_subdivision: vertex without term");
    };
    for (const auto& v : poly.vertices()) verts.insert(vertex_term(v));
    for (const auto& face : poly.faces()) {
      if (face.dim() != 1) continue;
      auto a = vertex_term(face.vertices()[0]), b = vertex_term(face.vertices()[1]);
      edges.emplace(std::min(a, b), std::max(a, b));
    }
    sub.cells.push_back(std::move(cell));
  }
  std::sort(sub.cells.begin(), sub.cells.end());
  sub.edges.assign(edges.begin(), edges.end());
  sub.vertices.assign(verts.begin(), verts.end());
  return sub;
}

bool is_smooth(const TropicalPolynomial& f) {
  std::size_t n = f.nvars();
  if (newton_polytope(f).dim() != static_cast<int>(n)) return false;
  for (const auto& cell : regular_subdivision(f).cells) {
    if (cell.size() != n + 1) return false;
    Matrix pts;
    for (auto i : cell) pts.push_back(f.terms()[i].exponent);
    auto simplex = Polyhedron::from_generators(n, pts);
    if (simplex.dim() != static_cast<int>(n) || normalized_volume(simplex) != 1) return false;
  }
  return true;
}

namespace {

Matrix dominance_rows(const TropicalPolynomial& f, std::size_t i) {
  Matrix rows;
  const auto& ti = f.terms()[i];
  for (std::size_t j = 0; j < f.terms().size(); ++j) {
    if (j == i) continue;
    const auto& tj = f.terms()[j];
    Vec row{ti.coeff - tj.coeff};
    Vec d = sub(ti.exponent, tj.exponent);
    row.insert(row.end(), d.begin(), d.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TropicalCycle tropical_hypersurface(const TropicalPolynomial& f) {
  std::size_t n = f.nvars();
  auto subdiv = regular_subdivision(f);
  std::vector<std::pair<Polyhedron, long long>> cells;
  for (auto [i, j] : subdiv.edges) {
    const auto& ti = f.terms()[i];
    const auto& tj = f.terms()[j];
    Vec eq{ti.coeff - tj.coeff};
    Vec d = sub(ti.exponent, tj.exponent);
    eq.insert(eq.end(), d.begin(), d.end());
    auto dual = Polyhedron::whole_space(n).with_constraints(dominance_rows(f, i), {eq});
    if (dual.dim() != static_cast<int>(n) - 1) throw std::logic_error("tropical_hypersurface: bad dual cell");
    auto segment = Polyhedron::from_generators(n, {ti.exponent, tj.exponent});
    cells.emplace_back(dual, to_ll(normalized_volume(segment)));
  }
  return TropicalCycle::from_cells(n, static_cast<int>(n) - 1, cells);
}

std::vector<ComplementComponent> complement_components(const TropicalPolynomial& f) {
  std::vector<ComplementComponent> out;
  for (auto i : regular_subdivision(f).vertices) out.push_back({i, f.terms()[i].exponent, true});
  return out;
}

CartierFunction cartier_of(const TropicalPolynomial& f) {
  return CartierFunction::from_max(TropicalCycle::whole_space(f.nvars()), f.affine_terms());
}

}  // namespace tropic
