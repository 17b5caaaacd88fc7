#include "tropic/cycle.hpp"

#include "tropic/linalg.hpp"

#include <set>
#include <stdexcept>

namespace tropic {

TropicalCycle TropicalCycle::from_cells(std::size_t n, int dim,
                                        const std::vector<std::pair<Polyhedron, long long>>& weighted) {
  TropicalCycle c(n, dim);
  std::map<std::string, Polyhedron> cells;
  for (const auto& [p, w] : weighted) {
    if (p.ambient_dim() != n) throw std::invalid_argument("cycle cell in wrong ambient dimension");
    if (p.dim() != dim) throw std::invalid_argument("cycle cell of dimension " + std::to_string(p.dim()) +
                                                    ", expected " + std::to_string(dim));
    c.weights_[p.key()] += w;
    cells.emplace(p.key(), p);
  }
  std::vector<Polyhedron> keep;
  for (auto it = c.weights_.begin(); it != c.weights_.end();) {
    if (it->second == 0) {
      it = c.weights_.erase(it);
    } else {
      keep.push_back(cells.at(it->first));
      ++it;
    }
  }
  c.complex_ = PolyhedralComplex::from_cells(n, keep);
  for (auto i : c.complex_.cells_of_dim(dim)) c.top_.push_back(i);
  return c;
}

TropicalCycle TropicalCycle::whole_space(std::size_t n) {
  return from_cells(n, static_cast<int>(n), {{Polyhedron::whole_space(n), 1}});
}

long long TropicalCycle::weight(std::size_t cell) const {
  auto it = weights_.find(complex_.cell(cell).key());
  return it == weights_.end() ? 0 : it->second;
}

std::vector<std::pair<Polyhedron, long long>> TropicalCycle::weighted_cells() const {
  std::vector<std::pair<Polyhedron, long long>> out;
  for (auto i : top_) out.emplace_back(complex_.cell(i), weight(i));
  return out;
}

Vec primitive_generator(const Polyhedron& sigma, const Polyhedron& tau) {
  Vec dir = sub(sigma.relative_interior_point(), tau.relative_interior_point());
  return linalg::primitive_normal(sigma.tangent_space(), tau.tangent_space(), dir, sigma.ambient_dim());
}

namespace {

// Weighted sum of primitive generators around a codimension-one cell.
Vec weighted_normal_sum(const TropicalCycle& c, std::size_t tau) {
  const auto& cx = c.complex();
  Vec sum(c.ambient_dim(), Rational(0));
  for (auto s : cx.cofacets_of(tau)) {
    long long w = c.weight(s);
    if (w != 0) sum = add(sum, scale(primitive_generator(cx.cell(s), cx.cell(tau)), Rational(w)));
  }
  return sum;
}

}  // namespace

BalancingReport check_balancing(const TropicalCycle& c) {
  BalancingReport rep;
  if (c.is_zero() || c.dim() == 0) return rep;
  const auto& cx = c.complex();
  for (auto tau : cx.cells_of_dim(c.dim() - 1)) {
    Vec sum = weighted_normal_sum(c, tau);
    if (!linalg::in_span(cx.cell(tau).tangent_space(), sum, c.ambient_dim())) {
      rep.balanced = false;
      rep.failing.push_back(tau);
    }
  }
  return rep;
}

CartierFunction::CartierFunction(TropicalCycle domain, std::vector<AffineFunction> pieces)
    : domain_(std::move(domain)), pieces_(std::move(pieces)) {
  const auto& top = domain_.top_cells();
  const auto& cx = domain_.complex();
  if (pieces_.size() != top.size()) throw std::invalid_argument("CartierFunction: one piece per top cell");
  for (const auto& p : pieces_) {
    if (p.linear.size() != domain_.ambient_dim()) throw std::invalid_argument("CartierFunction: piece dimension");
    for (const auto& x : p.linear)
      if (!is_integer(x)) throw std::invalid_argument("CartierFunction: non-integral slope");
  }
  // ancestors: every cell gets the list of top cells containing it
  std::vector<std::vector<std::size_t>> tops(cx.cells().size());
  for (std::size_t t = 0; t < top.size(); ++t) {
    std::vector<std::size_t> stack{top[t]};
    std::vector<bool> seen(cx.cells().size(), false);
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      if (seen[i]) continue;
      seen[i] = true;
      tops[i].push_back(t);
      for (auto f : cx.facets_of(i)) stack.push_back(f);
    }
  }
  top_of_cell_.resize(cx.cells().size());
  for (std::size_t i = 0; i < tops.size(); ++i) {
    if (tops[i].empty()) throw std::logic_error("CartierFunction: cell without a top cell");
    top_of_cell_[i] = tops[i][0];
    const auto& cell = cx.cell(i);
    const auto& p0 = pieces_[tops[i][0]];
    for (std::size_t k = 1; k < tops[i].size(); ++k) {
      const auto& pk = pieces_[tops[i][k]];
      Vec dl = sub(pk.linear, p0.linear);
      bool agree = true;
      for (const auto& v : cell.vertices())
        if (pk(v) != p0(v)) agree = false;
      for (const auto& r : cell.rays())
        if (!dot(dl, r).is_zero()) agree = false;
      for (const auto& l : cell.lineality())
        if (!dot(dl, l).is_zero()) agree = false;
      if (!agree) throw std::invalid_argument("CartierFunction: pieces disagree on a shared face");
    }
  }
}

CartierFunction CartierFunction::from_max(const TropicalCycle& domain, const std::vector<AffineFunction>& terms) {
  if (terms.empty()) throw std::invalid_argument("from_max: no terms");
  std::size_t n = domain.ambient_dim();
  std::vector<std::pair<Polyhedron, long long>> cells;
  std::map<std::string, AffineFunction> piece_of;
  for (const auto& [sigma, w] : domain.weighted_cells()) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Matrix ineqs;
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (j == i) continue;
        Vec row{terms[i].constant - terms[j].constant};
        Vec d = sub(terms[i].linear, terms[j].linear);
        row.insert(row.end(), d.begin(), d.end());
        ineqs.push_back(std::move(row));
      }
      Polyhedron region = sigma.with_constraints(ineqs);
      if (region.dim() != sigma.dim()) continue;
      if (piece_of.emplace(region.key(), terms[i]).second) cells.emplace_back(region, w);
    }
  }
  TropicalCycle refined = TropicalCycle::from_cells(n, domain.dim(), cells);
  std::vector<AffineFunction> pieces;
  for (auto t : refined.top_cells()) pieces.push_back(piece_of.at(refined.complex().cell(t).key()));
  return CartierFunction(std::move(refined), std::move(pieces));
}

const AffineFunction& CartierFunction::piece_on(std::size_t cell) const { return pieces_.at(top_of_cell_.at(cell)); }

Rational CartierFunction::value(const Vec& x) const {
  const auto& top = domain_.top_cells();
  for (std::size_t t = 0; t < top.size(); ++t)
    if (domain_.complex().cell(top[t]).contains(x)) return pieces_[t](x);
  throw std::domain_error("CartierFunction::value: point outside the domain");
}


CartierFunction CartierFunction::restrict_to(const TropicalCycle& sub) const {
  const auto& dom = domain_.complex();
  std::vector<std::pair<Polyhedron, long long>> cells;
  std::vector<AffineFunction> pieces;
  bool refined = false;
  for (const auto& [s, w] : sub.weighted_cells()) {
    if (auto idx = dom.find(s)) {
      cells.emplace_back(s, w);
      pieces.push_back(piece_on(*idx));
      continue;
    }
    bool inside = false;
    for (std::size_t t = 0; t < domain_.top_cells().size(); ++t)
      if (dom.cell(domain_.top_cells()[t]).contains(s)) {
        cells.emplace_back(s, w);
        pieces.push_back(pieces_[t]);
        inside = true;
        break;
      }
    if (inside) continue;
    refined = true;
    // a piece lying along a wall shows up once per adjacent top cell; keep it once
    std::set<std::string> taken;
    for (std::size_t t = 0; t < domain_.top_cells().size(); ++t) {
      Polyhedron part = s.intersection(dom.cell(domain_.top_cells()[t]));
      if (part.dim() != s.dim() || !taken.insert(part.key()).second) continue;
      cells.emplace_back(part, w);
      pieces.push_back(pieces_[t]);
    }
  }
  TropicalCycle c = TropicalCycle::from_cells(sub.ambient_dim(), sub.dim(), cells);
  if (refined && !fills_space(domain_.complex()) && !support_contains(c.complex(), sub.complex()))
    throw std::domain_error("restrict_to: cycle leaves the domain of the function");
  std::map<std::string, AffineFunction> by_key;
  for (std::size_t i = 0; i < cells.size(); ++i) by_key.emplace(cells[i].first.key(), pieces[i]);
  std::vector<AffineFunction> ordered;
  for (auto t : c.top_cells()) ordered.push_back(by_key.at(c.complex().cell(t).key()));
  return CartierFunction(std::move(c), std::move(ordered));
}

TropicalCycle divisor_intersect(const CartierFunction& phi, const TropicalCycle& c) {
  std::size_t n = c.ambient_dim();
  if (c.dim() == 0) throw std::domain_error("divisor_intersect: cycle has dimension zero");
  if (c.is_zero()) return TropicalCycle(n, c.dim() - 1);
  CartierFunction f = phi.restrict_to(c);
  const TropicalCycle& a = f.domain();
  const auto& cx = a.complex();
  std::vector<std::pair<Polyhedron, long long>> out;
  for (auto tau : cx.cells_of_dim(a.dim() - 1)) {
    Vec sum(n, Rational(0));
    Rational value = 0;
    const Vec* tau_slope = nullptr;
    for (auto s : cx.cofacets_of(tau)) {
      long long w = a.weight(s);
      if (w == 0) continue;
      Vec v = primitive_generator(cx.cell(s), cx.cell(tau));
      const auto& piece = f.piece_on(s);
      sum = add(sum, scale(v, Rational(w)));
      value += Rational(w) * dot(piece.linear, v);
      if (!tau_slope) tau_slope = &piece.linear;
    }
    if (!tau_slope) continue;
    if (!linalg::in_span(cx.cell(tau).tangent_space(), sum, n))
      throw std::domain_error("divisor_intersect: cycle is not balanced");
    value -= dot(*tau_slope, sum);
    long long w = to_ll(value);
    if (w != 0) out.emplace_back(cx.cell(tau), w);
  }
  return TropicalCycle::from_cells(n, a.dim() - 1, out);
}

PowerTower power_tower(const CartierFunction& phi, const TropicalCycle& x, int kmax) {
  PowerTower t;
  t.layers.push_back(x);
  for (int k = 1; k <= kmax; ++k) {
    const auto& cur = t.layers.back();
    if (cur.is_zero() || cur.dim() == 0) break;
    t.layers.push_back(divisor_intersect(phi, cur));
  }
  return t;
}

long long degree(const TropicalCycle& c) {
  if (c.is_zero()) return 0;
  if (c.dim() != 0) throw std::domain_error("degree: cycle is not zero-dimensional");
  long long d = 0;
  for (auto t : c.top_cells()) d += c.weight(t);
  return d;
}

TropicalCycle local_cycle(const TropicalCycle& c, const Vec& x) {
  std::vector<std::pair<Polyhedron, long long>> cones;
  for (auto t : c.top_cells())
    if (c.complex().cell(t).contains(x)) cones.emplace_back(tangent_cone(c.complex().cell(t), x), c.weight(t));
  return TropicalCycle::from_cells(c.ambient_dim(), c.dim(), cones);
}

}  // namespace tropic
