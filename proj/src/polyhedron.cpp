#include "tropic/polyhedron.hpp"

#include "tropic/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropic {

namespace {

struct DDRay {
  Vec v;
  boost::dynamic_bitset<> tight;
};

void eliminate(Matrix& lin, std::size_t pivot, const Vec& a, std::vector<DDRay>* rays) {
  const Vec& l0 = lin[pivot];
  Rational s0 = dot(a, l0);
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (i == pivot) continue;
    Rational s = dot(a, lin[i]);
    if (!s.is_zero()) lin[i] = sub(lin[i], scale(l0, s / s0));
  }
  if (rays)
    for (auto& r : *rays) {
      Rational s = dot(a, r.v);
      if (!s.is_zero()) r.v = primitive(sub(r.v, scale(l0, s / s0)));
    }
}

}  // namespace

ConeGenerators double_description(std::size_t m, const Matrix& ineqs, const Matrix& eqs) {
  Matrix lin(m, Vec(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) lin[i][i] = 1;

  for (const auto& e : eqs) {
    if (e.size() != m) throw std::invalid_argument("double_description: equation size");
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (dot(e, lin[i]).is_zero()) continue;
      eliminate(lin, i, e, nullptr);
      lin.erase(lin.begin() + static_cast<long>(i));
      break;
    }
  }

  const std::size_t total = ineqs.size();
  std::vector<DDRay> rays;
  for (std::size_t t = 0; t < total; ++t) {
    const Vec& a = ineqs[t];
    if (a.size() != m) throw std::invalid_argument("double_description: inequality size");
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (!dot(a, lin[i]).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < lin.size()) {
      if (dot(a, lin[pivot]) < 0) lin[pivot] = scale(lin[pivot], -1);
      eliminate(lin, pivot, a, &rays);
      for (auto& r : rays) r.tight.set(t);
      DDRay fresh{primitive(lin[pivot]), boost::dynamic_bitset<>(total)};
      for (std::size_t j = 0; j < t; ++j) fresh.tight.set(j);
      lin.erase(lin.begin() + static_cast<long>(pivot));
      rays.push_back(std::move(fresh));
      continue;
    }
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    for (auto p : pos)
      for (auto q : neg) {
        auto common = rays[p].tight & rays[q].tight;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Vec w = sub(scale(rays[q].v, val[p]), scale(rays[p].v, val[q]));
        DDRay nr{primitive(w), common};
        nr.tight.set(t);
        next.push_back(std::move(nr));
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      if (val[i].is_zero()) rays[i].tight.set(t);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = lin;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

Vec homogenize_point(const Vec& x) {
  Vec h;
  h.reserve(x.size() + 1);
  h.emplace_back(1);
  h.insert(h.end(), x.begin(), x.end());
  return h;
}

Vec homogenize_direction(const Vec& d) {
  Vec h;
  h.reserve(d.size() + 1);
  h.emplace_back(0);
  h.insert(h.end(), d.begin(), d.end());
  return h;
}

namespace {

Vec drop_first(const Vec& v) { return Vec(v.begin() + 1, v.end()); }

void sort_unique(Matrix& m) {
  std::sort(m.begin(), m.end(), [](const Vec& a, const Vec& b) { return vec_key(a) < vec_key(b); });
  m.erase(std::unique(m.begin(), m.end()), m.end());
}

std::string matrix_key(const Matrix& m) {
  std::string s = "[";
  for (const auto& r : m) s += vec_key(r);
  return s + "]";
}

std::string generators_key(const Matrix& vs, const Matrix& rs, const Matrix& ls) {
  return "V" + matrix_key(vs) + "R" + matrix_key(rs) + "L" + matrix_key(ls);
}

}  // namespace

Polyhedron Polyhedron::empty_set(std::size_t n) {
  Polyhedron p;
  p.n_ = n;
  return p;
}

Polyhedron Polyhedron::whole_space(std::size_t n) {
  Matrix lin(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) lin[i][i] = 1;
  return from_generators(n, {Vec(n, Rational(0))}, {}, lin);
}

Polyhedron Polyhedron::from_generators(std::size_t n, const Matrix& points, const Matrix& rays,
                                       const Matrix& lineality) {
  if (points.empty()) return empty_set(n);
  Matrix hr, hl;
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("from_generators: point dimension");
    hr.push_back(homogenize_point(p));
  }
  for (const auto& r : rays) {
    if (r.size() != n) throw std::invalid_argument("from_generators: ray dimension");
    if (!is_zero(r)) hr.push_back(homogenize_direction(r));
  }
  for (const auto& l : lineality) {
    if (l.size() != n) throw std::invalid_argument("from_generators: lineality dimension");
    if (!is_zero(l)) hl.push_back(homogenize_direction(l));
  }
  return from_cone(n, hr, hl);
}

Polyhedron Polyhedron::from_cone(std::size_t n, const Matrix& hom_rays, const Matrix& hom_lineality) {
  auto dual = double_description(n + 1, hom_rays, hom_lineality);
  auto primal = double_description(n + 1, dual.rays, dual.lineality);
  Polyhedron p;
  p.n_ = n;
  p.finalize(primal.rays, primal.lineality, dual.rays, dual.lineality);
  return p;
}

Polyhedron Polyhedron::from_inequalities(std::size_t n, const Matrix& ineqs, const Matrix& eqs) {
  Matrix all = ineqs;
  Vec x0(n + 1, Rational(0));
  x0[0] = 1;
  all.push_back(x0);
  for (const auto& r : all)
    if (r.size() != n + 1) throw std::invalid_argument("from_inequalities: row dimension");
  for (const auto& r : eqs)
    if (r.size() != n + 1) throw std::invalid_argument("from_inequalities: row dimension");
  auto gens = double_description(n + 1, all, eqs);
  bool has_point = false;
  for (const auto& r : gens.rays)
    if (r[0] > 0) has_point = true;
  if (!has_point) return empty_set(n);
  return from_cone(n, gens.rays, gens.lineality);
}

void Polyhedron::finalize(const Matrix& hom_rays, const Matrix& hom_lineality, const Matrix& facets,
                          const Matrix& eqs) {
  Matrix lin = linalg::canonical_span(hom_lineality, n_ + 1);
  for (const auto& l : lin) lineality_.push_back(drop_first(l));
  for (const auto& r : hom_rays) {
    Vec c = linalg::project_out(r, lin);
    if (c[0] > 0) {
      vertices_.push_back(drop_first(scale(c, 1 / c[0])));
    } else if (!is_zero(c)) {
      rays_.push_back(drop_first(primitive(c)));
    }
  }
  sort_unique(vertices_);
  sort_unique(rays_);
  eqs_ = linalg::canonical_span(eqs, n_ + 1);
  for (const auto& f : facets) {
    Vec c = linalg::project_out(f, eqs_);
    if (!is_zero(c)) ineqs_.push_back(primitive(c));
  }
  sort_unique(ineqs_);
  if (vertices_.empty()) {
    *this = empty_set(n_);
    return;
  }
  dim_ = static_cast<int>(n_) - static_cast<int>(eqs_.size());
  key_ = generators_key(vertices_, rays_, lineality_);
}

bool Polyhedron::contains(const Vec& x) const {
  if (empty()) return false;
  Vec h = homogenize_point(x);
  for (const auto& e : eqs_)
    if (!dot(e, h).is_zero()) return false;
  for (const auto& f : ineqs_)
    if (dot(f, h) < 0) return false;
  return true;
}

bool Polyhedron::contains_in_relative_interior(const Vec& x) const {
  if (empty()) return false;
  Vec h = homogenize_point(x);
  for (const auto& e : eqs_)
    if (!dot(e, h).is_zero()) return false;
  for (const auto& f : ineqs_)
    if (dot(f, h) <= 0) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.empty()) return true;
  if (empty()) return false;
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  auto direction_ok = [&](const Vec& d, bool both) {
    Vec h = homogenize_direction(d);
    for (const auto& e : eqs_)
      if (!dot(e, h).is_zero()) return false;
    for (const auto& f : ineqs_) {
      Rational s = dot(f, h);
      if (s < 0 || (both && !s.is_zero())) return false;
    }
    return true;
  };
  for (const auto& r : other.rays_)
    if (!direction_ok(r, false)) return false;
  for (const auto& l : other.lineality_)
    if (!direction_ok(l, true)) return false;
  return true;
}

Vec Polyhedron::relative_interior_point() const {
  if (empty()) throw std::domain_error("relative_interior_point of empty polyhedron");
  Vec p(n_, Rational(0));
  for (const auto& v : vertices_) p = add(p, v);
  p = scale(p, Rational(1, static_cast<long>(vertices_.size())));
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

Matrix Polyhedron::tangent_space() const {
  if (empty()) return {};
  Matrix gens;
  for (std::size_t i = 1; i < vertices_.size(); ++i) gens.push_back(sub(vertices_[i], vertices_[0]));
  gens.insert(gens.end(), rays_.begin(), rays_.end());
  gens.insert(gens.end(), lineality_.begin(), lineality_.end());
  return linalg::canonical_span(gens, n_);
}

Polyhedron Polyhedron::recession_cone() const {
  if (empty()) return empty_set(n_);
  return from_generators(n_, {Vec(n_, Rational(0))}, rays_, lineality_);
}

std::vector<std::pair<std::string, std::size_t>> Polyhedron::facet_keys() const {
  std::vector<std::pair<std::string, std::size_t>> out;
  if (empty()) return out;
  for (std::size_t i = 0; i < ineqs_.size(); ++i) {
    Matrix vs, rs;
    for (const auto& v : vertices_)
      if (dot(ineqs_[i], homogenize_point(v)).is_zero()) vs.push_back(v);
    if (vs.empty()) continue;
    for (const auto& r : rays_)
      if (dot(ineqs_[i], homogenize_direction(r)).is_zero()) rs.push_back(r);
    out.emplace_back(generators_key(vs, rs, lineality_), i);
  }
  return out;
}

// A facet's generators are the ones on its supporting hyperplane, and its
// inequalities are the rows of this polyhedron that cut it in a ridge, so no
// conversion is needed.
Polyhedron Polyhedron::facet(std::size_t row) const {
  if (row >= ineqs_.size()) throw std::out_of_range("Polyhedron::facet: row");
  const Vec& h = ineqs_[row];
  Matrix gens;  // homogeneous generators on the facet
  Polyhedron f;
  f.n_ = n_;
  for (const auto& v : vertices_)
    if (dot(h, homogenize_point(v)).is_zero()) {
      f.vertices_.push_back(v);
      gens.push_back(homogenize_point(v));
    }
  if (f.vertices_.empty()) throw std::domain_error("Polyhedron::facet: row only supports a face at infinity");
  for (const auto& r : rays_)
    if (dot(h, homogenize_direction(r)).is_zero()) {
      f.rays_.push_back(r);
      gens.push_back(homogenize_direction(r));
    }
  f.lineality_ = lineality_;
  Matrix hom_lin;
  for (const auto& l : lineality_) hom_lin.push_back(homogenize_direction(l));
  Matrix eqs = eqs_;
  eqs.push_back(h);
  f.eqs_ = linalg::canonical_span(eqs, n_ + 1);
  f.dim_ = static_cast<int>(n_) - static_cast<int>(f.eqs_.size());
  for (std::size_t j = 0; j < ineqs_.size(); ++j) {
    if (j == row) continue;
    Matrix ridge = hom_lin;
    bool proper = false;
    for (const auto& g : gens) {
      if (dot(ineqs_[j], g).is_zero()) ridge.push_back(g);
      else proper = true;
    }
    // homogeneous rank of a ridge is the facet's dimension
    if (!proper || static_cast<int>(linalg::rank(ridge, n_ + 1)) != f.dim_) continue;
    Vec c = linalg::project_out(ineqs_[j], f.eqs_);
    if (!is_zero(c)) f.ineqs_.push_back(primitive(c));
  }
  sort_unique(f.ineqs_);
  f.key_ = generators_key(f.vertices_, f.rays_, f.lineality_);
  return f;
}

std::vector<Polyhedron> Polyhedron::facets() const {
  std::vector<Polyhedron> out;
  for (const auto& [key, row] : facet_keys()) out.push_back(facet(row));
  return out;
}

std::vector<Polyhedron> Polyhedron::faces() const {
  std::map<std::string, Polyhedron> seen;
  if (empty()) return {};
  std::vector<Polyhedron> stack{*this};
  seen.emplace(key_, *this);
  while (!stack.empty()) {
    Polyhedron p = std::move(stack.back());
    stack.pop_back();
    for (auto& f : p.facets())
      if (seen.emplace(f.key(), f).second) stack.push_back(f);
  }
  std::vector<Polyhedron> out;
  for (auto& [k, p] : seen) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const Polyhedron& a, const Polyhedron& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a.key() < b.key();
  });
  return out;
}

Polyhedron Polyhedron::intersection(const Polyhedron& other) const {
  if (other.n_ != n_) throw std::invalid_argument("intersection: ambient dimension mismatch");
  if (empty() || other.empty()) return empty_set(n_);
  return with_constraints(other.ineqs_, other.eqs_);
}

Polyhedron Polyhedron::with_constraints(const Matrix& ineqs, const Matrix& eqs) const {
  if (empty()) return empty_set(n_);
  Matrix i = ineqs_, e = eqs_;
  i.insert(i.end(), ineqs.begin(), ineqs.end());
  e.insert(e.end(), eqs.begin(), eqs.end());
  return from_inequalities(n_, i, e);
}

Polyhedron Polyhedron::affine_image(const Matrix& a, const Vec& t) const {
  std::size_t m = a.size();
  if (t.size() != m) throw std::invalid_argument("affine_image: translation size");
  if (empty()) return empty_set(m);
  Matrix vs, rs, ls;
  for (const auto& v : vertices_) vs.push_back(add(linalg::apply(a, v), t));
  for (const auto& r : rays_) rs.push_back(linalg::apply(a, r));
  for (const auto& l : lineality_) ls.push_back(linalg::apply(a, l));
  return from_generators(m, vs, rs, ls);
}

Polyhedron::SignSummary Polyhedron::signs(const Vec& row) const {
  SignSummary s;
  auto note = [&](const Rational& x) {
    if (x > 0) s.positive = true;
    if (x < 0) s.negative = true;
  };
  for (const auto& v : vertices_) note(dot(row, homogenize_point(v)));
  for (const auto& r : rays_) note(dot(row, homogenize_direction(r)));
  for (const auto& l : lineality_) {
    Rational x = dot(row, homogenize_direction(l));
    if (!x.is_zero()) s.positive = s.negative = true;
  }
  return s;
}

}  // namespace tropic
