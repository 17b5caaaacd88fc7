#include "tropic/compactification.hpp"

#include "tropic/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropic {

CompleteFan CompleteFan::normal_fan(const Polyhedron& polytope) {
  std::size_t n = polytope.ambient_dim();
  if (polytope.dim() != static_cast<int>(n) || !polytope.bounded())
    throw std::invalid_argument("normal_fan: polytope must be bounded and full-dimensional");
  CompleteFan fan;
  fan.n_ = n;
  Matrix normals;
  for (const auto& row : polytope.inequalities()) normals.push_back(primitive(scale(Vec(row.begin() + 1, row.end()), -1)));
  std::map<std::string, Polyhedron> cones;
  for (const auto& face : polytope.faces()) {
    Matrix gens;
    for (std::size_t i = 0; i < normals.size(); ++i) {
      bool tight = true;
      for (const auto& v : face.vertices())
        if (!dot(polytope.inequalities()[i], homogenize_point(v)).is_zero()) tight = false;
      if (tight) gens.push_back(normals[i]);
    }
    auto c = Polyhedron::from_generators(n, {Vec(n, Rational(0))}, gens);
    cones.emplace(c.key(), c);
  }
  for (auto& [k, c] : cones) fan.cones_.push_back(c);
  std::stable_sort(fan.cones_.begin(), fan.cones_.end(),
                   [](const Polyhedron& a, const Polyhedron& b) { return a.dim() < b.dim(); });
  for (const auto& c : fan.cones_) fan.quotients_.push_back(linalg::quotient_map(c.rays(), n));
  return fan;
}

CompleteFan CompleteFan::projective_space(std::size_t n) {
  Matrix pts{Vec(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rational(0));
    e[i] = 1;
    pts.push_back(e);
  }
  return normal_fan(Polyhedron::from_generators(n, pts));
}

Matrix CompleteFan::rays() const {
  Matrix out;
  for (const auto& c : cones_)
    if (c.dim() == 1) out.push_back(c.rays()[0]);
  return out;
}

bool CompleteFan::smooth() const {
  for (const auto& c : cones_) {
    if (c.dim() != static_cast<int>(n_)) continue;
    if (c.rays().size() != n_ || linalg::lattice_index(c.rays(), n_) != 1) return false;
  }
  return true;
}

namespace {

bool cone_in_recession(const Polyhedron& cone, const Polyhedron& cell) {
  if (cone.dim() == 0) return true;
  Polyhedron rec = cell.recession_cone();
  for (const auto& r : cone.rays())
    if (!rec.contains(r)) return false;
  return true;
}

}  // namespace

std::vector<Stratum> compactify(const PolyhedralComplex& k, const CompleteFan& fan) {
  if (k.ambient_dim() != fan.ambient_dim()) throw std::invalid_argument("compactify: dimension mismatch");
  std::vector<Stratum> out;
  for (std::size_t o = 0; o < fan.cones().size(); ++o) {
    const auto& q = fan.quotient(o);
    std::set<std::string> seen;
    for (const auto& c : k.cells()) {
      if (!cone_in_recession(fan.cones()[o], c)) continue;
      Polyhedron img = c.affine_image(q, Vec(q.size(), Rational(0)));
      if (seen.insert(img.key()).second) out.push_back({o, img});
    }
  }
  return out;
}

long long euler_characteristic(const std::vector<Stratum>& strata) {
  long long chi = 0;
  for (const auto& s : strata) chi += (s.cell.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

TropicalCycle orbit_cycle(const TropicalCycle& c, const CompleteFan& fan, std::size_t orbit) {
  const auto& cone = fan.cones().at(orbit);
  const auto& q = fan.quotient(orbit);
  int d = c.dim() - cone.dim();
  std::vector<std::pair<Polyhedron, long long>> cells;
  if (d < 0) return TropicalCycle(q.size(), 0);
  for (const auto& [cell, w] : c.weighted_cells()) {
    if (!cone_in_recession(cone, cell)) continue;
    Polyhedron img = cell.affine_image(q, Vec(q.size(), Rational(0)));
    if (img.dim() == d) cells.emplace_back(img, w);
  }
  return TropicalCycle::from_cells(q.size(), d, cells);
}

bool strata_contain(const std::vector<Stratum>& strata, std::size_t orbit, const Vec& p) {
  for (const auto& s : strata)
    if (s.orbit == orbit && s.cell.contains(p)) return true;
  return false;
}

}  // namespace tropic
