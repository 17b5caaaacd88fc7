#include "tropic/local_models.hpp"

#include "tropic/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropic {

std::vector<LocalPair> local_pairs(const TropicalCycle& y, const TropicalCycle& x) {
  std::vector<LocalPair> out;
  for (const auto& cell : y.complex().cells()) {
    Vec p = cell.relative_interior_point();
    out.push_back({local_cycle(y, p), local_cycle(x, p), p});
  }
  return out;
}

ModerateReport moderate_position(const std::vector<LocalPair>& pairs) {
  ModerateReport rep;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pr = pairs[i];
    if (pr.y.is_zero()) continue;
    auto fail = [&](std::string why) {
      rep.ok = false;
      rep.violating = i;
      rep.reason = std::move(why);
    };
    if (!support_contains(pr.x.complex(), pr.y.complex())) {
      fail("local support of Y is not inside X");
      return rep;
    }
    std::size_t n = pr.y.ambient_dim();
    Matrix ly = lineality_space(pr.y.complex());
    Matrix lx = lineality_space(pr.x.complex());
    for (const auto& v : ly)
      if (!linalg::in_span(lx, v, n)) {
        fail("lineality of Y is not inside the lineality of X");
        return rep;
      }
    if (ly.size() >= lx.size()) {
      fail("lineality of Y is not a proper subspace of the lineality of X");
      return rep;
    }
  }
  return rep;
}

namespace {

UniformReport report(Uniformity u, int r, std::string why) { return {u, r, std::move(why)}; }

bool all_weights_one(const TropicalCycle& c) {
  for (auto t : c.top_cells())
    if (c.weight(t) != 1) return false;
  return true;
}

UniformReport hyperplane_model(const TropicalCycle& y, const TropicalCycle& x, const Matrix& lx) {
  std::size_t n = y.ambient_dim();
  int m = x.dim();
  if (!all_weights_one(x)) return report(Uniformity::NotUniform, -1, "ambient weight is not one");
  if (y.dim() != m - 1) return report(Uniformity::NotUniform, -1, "Y is not of codimension one");
  if (!all_weights_one(y)) return report(Uniformity::NotUniform, -1, "Y has a weight different from one");
  Matrix ly = lineality_space(y.complex());
  int r = m - static_cast<int>(ly.size());
  if (r == 1) return report(Uniformity::Uniform, 1, "Y is a rational hyperplane");
  for (auto t : y.top_cells()) {
    const auto& lin = y.complex().cell(t).lineality();
    for (const auto& v : ly)
      if (!linalg::in_span(lin, v, n))
        return report(Uniformity::Unsupported, r, "local fan of Y is subdivided beyond its lineality");
  }
  Matrix bw = linalg::saturated_basis(lx, n);
  Matrix lc;
  for (const auto& v : ly) lc.push_back(linalg::coordinates(bw, v));
  Matrix q = linalg::quotient_map(lc, static_cast<std::size_t>(m));
  auto project = [&](const Vec& v) { return primitive(linalg::apply(q, linalg::coordinates(bw, v))); };

  std::map<std::string, std::size_t> ray_index;
  Matrix rays;
  std::set<std::vector<std::size_t>> cones;
  for (auto t : y.top_cells()) {
    const auto& cell = y.complex().cell(t);
    Matrix img;
    for (const auto& rv : cell.rays()) {
      Vec u = project(rv);
      if (!is_zero(u)) img.push_back(u);
    }
    auto cone = Polyhedron::from_generators(static_cast<std::size_t>(r), {Vec(r, Rational(0))}, img);
    if (!cone.lineality().empty() || cone.dim() != r - 1 || static_cast<int>(cone.rays().size()) != r - 1)
      return report(Uniformity::NotUniform, r, "a cone is not simplicial of dimension r-1 modulo lineality");
    std::vector<std::size_t> ids;
    for (const auto& u : cone.rays()) {
      auto [it, fresh] = ray_index.emplace(vec_key(u), rays.size());
      if (fresh) rays.push_back(u);
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    if (!cones.insert(ids).second) return report(Uniformity::NotUniform, r, "repeated cone");
  }
  if (static_cast<int>(rays.size()) != r + 1) return report(Uniformity::NotUniform, r, "wrong number of rays");
  if (Integer(static_cast<long>(cones.size())) != binomial(r + 1, r - 1))
    return report(Uniformity::NotUniform, r, "missing cones of the hyperplane model");
  Vec sum(r, Rational(0));
  for (const auto& u : rays) sum = add(sum, u);
  if (!is_zero(sum)) return report(Uniformity::NotUniform, r, "rays do not sum to zero");
  Matrix basis(rays.begin() + 1, rays.end());
  if (abs(linalg::det(basis)) != 1) return report(Uniformity::NotUniform, r, "rays do not form a lattice basis");
  return report(Uniformity::Uniform, r, "hyperplane model L_{U_{r,r+1}} times a linear space");
}

UniformReport product_model(const TropicalCycle& y, const TropicalCycle& x, const Matrix& lx, const Matrix& ly) {
  std::size_t n = y.ambient_dim();
  Vec dir;
  for (const auto& v : lx)
    if (!linalg::in_span(ly, v, n)) {
      dir = v;
      break;
    }
  Vec w = linalg::primitive_normal(lx, ly, dir, n);
  std::set<std::size_t> hit;
  for (auto t : y.top_cells()) {
    const auto& tau = y.complex().cell(t);
    Matrix lin = tau.lineality();
    lin.push_back(w);
    auto sigma = Polyhedron::from_generators(n, tau.vertices(), tau.rays(), lin);
    auto idx = x.complex().find(sigma);
    if (!idx || x.weight(*idx) == 0) return report(Uniformity::NotUniform, 1, "X is not Y times a line");
    if (x.weight(*idx) != y.weight(t)) return report(Uniformity::NotUniform, 1, "weights differ");
    Matrix gens = linalg::saturated_basis(tau.tangent_space(), n);
    gens.push_back(w);
    if (linalg::lattice_index(gens, n) != 1) return report(Uniformity::NotUniform, 1, "lattices do not split");
    if (!hit.insert(*idx).second) return report(Uniformity::NotUniform, 1, "repeated cell");
  }
  if (hit.size() != x.top_cells().size()) return report(Uniformity::NotUniform, 1, "X has extra cells");
  return report(Uniformity::Uniform, 1, "X is Y times a line");
}

}  // namespace

UniformReport relatively_uniform(const TropicalCycle& y, const TropicalCycle& x) {
  if (x.is_zero() || y.is_zero()) return report(Uniformity::Unsupported, -1, "empty local fan");
  std::size_t n = y.ambient_dim();
  Matrix lx = lineality_space(x.complex());
  if (static_cast<int>(lx.size()) == x.dim()) return hyperplane_model(y, x, lx);
  Matrix ly = lineality_space(y.complex());
  bool nested = true;
  for (const auto& v : ly)
    if (!linalg::in_span(lx, v, n)) nested = false;
  if (nested && y.dim() == x.dim() - 1 && lx.size() == ly.size() + 1) return product_model(y, x, lx, ly);
  return report(Uniformity::Unsupported, -1, "local shape outside the supported models");
}

SelfIntersectionReport self_intersection_support(const CartierFunction& phi, const TropicalCycle& s) {
  SelfIntersectionReport rep;
  rep.curve = divisor_intersect(phi, s);
  if (rep.curve.dim() != 1) throw std::domain_error("self_intersection_support: expected a curve");
  rep.square = divisor_intersect(phi, rep.curve);
  std::set<std::string> a, b;
  for (auto t : rep.square.top_cells()) {
    const Vec& p = rep.square.complex().cell(t).vertices()[0];
    rep.support_points.push_back(p);
    a.insert(vec_key(p));
  }
  for (auto i : rep.curve.complex().cells_of_dim(0)) {
    const Vec& p = rep.curve.complex().cell(i).vertices()[0];
    if (!lineality_space(local_cycle(rep.curve, p).complex()).empty()) continue;
    auto ls = local_cycle(s, p);
    if (static_cast<int>(lineality_space(ls.complex()).size()) != s.dim()) continue;
    rep.singular_regular.push_back(p);
    b.insert(vec_key(p));
  }
  rep.equal = (a == b);
  return rep;
}

}  // namespace tropic
