#include "tropic/euler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropic {

namespace {

long long sign_of_dim(int d) { return d % 2 == 0 ? 1 : -1; }

std::string stratum_key(const Stratum& s) { return std::to_string(s.orbit) + ":" + s.cell.key(); }

int kmax_for(const TropicalCycle& x) { return x.dim() + 1; }

}  // namespace

long long chi_c(const Stratification& s, const std::vector<std::size_t>& subset) {
  std::set<std::size_t> seen;
  long long chi = 0;
  for (auto i : subset) {
    if (i >= s.strata.size()) throw std::out_of_range("chi_c: not a stratum index");
    if (!seen.insert(i).second) throw std::invalid_argument("chi_c: stratum listed twice");
    chi += sign_of_dim(s.strata[i].cell.dim());
  }
  return chi;
}

long long euler_integral(const ConstructibleFunction& f) {
  if (f.values.size() != f.domain.strata.size())
    throw std::invalid_argument("euler_integral: one value per stratum expected");
  long long total = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i) total += f.values[i] * sign_of_dim(f.domain.strata[i].cell.dim());
  return total;
}

long long local_index(const PowerTower& tower, const Vec& x) {
  if (tower.layers.empty() || !tower.layers[0].complex().contains_point(x))
    throw std::invalid_argument("local_index: point outside X");
  long long count = 0;
  for (const auto& layer : tower.layers)
    if (layer.complex().contains_point(x)) ++count;
  return count;
}

ConstructibleFunction local_index_function(const CartierFunction& phi, const PowerTower& tower,
                                           const CompleteFan& fan) {
  ConstructibleFunction f;
  f.domain.strata = compactify(phi.domain().complex(), fan);
  std::set<std::string> ambient;
  for (const auto& s : f.domain.strata) ambient.insert(stratum_key(s));
  std::vector<std::vector<Stratum>> closures;
  for (std::size_t k = 0; k < tower.layers.size(); ++k) {
    // layer 0 may be coarser than the domain; its closure is the whole ambient space
    if (k == 0) continue;
    closures.push_back(compactify(tower.layers[k].complex(), fan));
    for (const auto& s : closures.back())
      if (!ambient.count(stratum_key(s)))
        throw std::logic_error("local_index_function: layer is not a subcomplex of the domain");
  }
  for (const auto& s : f.domain.strata) {
    Vec p = s.cell.relative_interior_point();
    long long v = 1;
    for (const auto& c : closures)
      if (strata_contain(c, s.orbit, p)) ++v;
    f.values.push_back(v);
  }
  return f;
}

ChiComplementReport chi_complement(const CartierFunction& phi, const PowerTower& tower, const CompleteFan& fan) {
  if (tower.layers.empty()) throw std::invalid_argument("chi_complement: empty tower");
  ChiComplementReport rep;
  for (const auto& layer : tower.layers) {
    long long chi = euler_characteristic(compactify(layer.complex(), fan));
    rep.layer_chis.push_back(chi);
    rep.path_a += chi;
  }
  auto index = local_index_function(phi, tower, fan);
  rep.path_b = euler_integral(index);
  std::vector<std::size_t> off_d;
  for (std::size_t i = 0; i < index.values.size(); ++i)
    if (index.values[i] == 1) off_d.push_back(i);
  rep.chi_c_complement = chi_c(index.domain, off_d);

  rep.relatively_uniform = true;
  rep.moderate = true;
  if (tower.layers.size() < 2 || tower.layers[1].is_zero()) return rep;
  const auto& x = tower.layers[0];
  const auto& d = tower.layers[1];
  auto d_strata = compactify(d.complex(), fan);
  for (std::size_t o = 0; o < fan.cones().size(); ++o) {
    int expected = d.dim() - fan.cones()[o].dim();
    for (const auto& s : d_strata)
      if (s.orbit == o && s.cell.dim() > expected) {
        rep.relatively_uniform = rep.moderate = false;
        rep.flags.push_back("orbit " + std::to_string(o) + ": D meets the boundary in excess dimension");
        break;
      }
    auto dy = orbit_cycle(d, fan, o);
    if (dy.is_zero()) continue;
    auto pairs = local_pairs(dy, orbit_cycle(x, fan, o));
    auto mod = moderate_position(pairs);
    if (!mod.ok) {
      rep.moderate = false;
      rep.flags.push_back("orbit " + std::to_string(o) + ": not moderate: " + mod.reason);
    }
    for (const auto& pr : pairs) {
      auto u = relatively_uniform(pr.y, pr.x);
      if (u.result == Uniformity::Uniform) continue;
      rep.relatively_uniform = false;
      rep.flags.push_back("orbit " + std::to_string(o) + " at " + vec_key(pr.point) + ": " +
                          (u.result == Uniformity::NotUniform ? "not relatively uniform" : "uniformity undecided") +
                          (u.detail.empty() ? "" : " (" + u.detail + ")"));
      break;
    }
  }
  return rep;
}

SurfaceComplementReport chi_surface_complement(const CartierFunction& phi, const TropicalCycle& s,
                                               const CompleteFan& fan) {
  if (s.dim() != 2) throw std::invalid_argument("chi_surface_complement: S must be a surface");
  auto tower = power_tower(phi, s, 2);
  if (tower.layers.size() > 1 && !tower.layers[1].is_zero()) {
    auto mod = moderate_position(local_pairs(tower.layers[1], s));
    if (!mod.ok) throw std::domain_error("chi_surface_complement: curve not in moderate position: " + mod.reason);
  }
  SurfaceComplementReport rep;
  rep.chi_surface = euler_characteristic(compactify(s.complex(), fan));
  if (tower.layers.size() > 1) rep.chi_curve = euler_characteristic(compactify(tower.layers[1].complex(), fan));
  if (tower.layers.size() > 2) rep.chi_square = static_cast<long long>(tower.layers[2].top_cells().size());
  rep.total = rep.chi_surface + rep.chi_curve + rep.chi_square;
  return rep;
}

RelativePairReport chi_relative_pair(const CartierFunction& phi_d, const CartierFunction& phi_dprime,
                                     const CompleteFan& fan) {
  std::size_t n = fan.ambient_dim();
  auto x = TropicalCycle::whole_space(n);
  RelativePairReport rep;

  auto outer = power_tower(phi_dprime, x, kmax_for(x));
  auto outer_rep = chi_complement(phi_dprime, outer, fan);
  rep.chi_outside_dprime = outer_rep.path_a;
  for (const auto& f : outer_rep.flags) rep.flags.push_back("D': " + f);

  auto d = divisor_intersect(phi_d, x);
  if (!d.is_zero()) {
    auto psi = phi_dprime.restrict_to(d);
    auto inner = power_tower(psi, psi.domain(), kmax_for(d));
    auto inner_rep = chi_complement(psi, inner, fan);
    rep.chi_d_minus = inner_rep.path_a;
    for (const auto& f : inner_rep.flags) rep.flags.push_back("D' on D: " + f);

    // D and D' should meet properly: finitely many affine points, none at infinity
    auto dp = outer.layers.size() > 1 ? outer.layers[1] : TropicalCycle(n, 0);
    std::set<std::string> meet;
    if (inner.layers.size() > 1)
      for (auto t : inner.layers[1].top_cells()) meet.insert(inner.layers[1].complex().cell(t).key());
    for (auto a : d.top_cells())
      for (auto b : dp.top_cells()) {
        auto c = d.complex().cell(a).intersection(dp.complex().cell(b));
        if (c.empty()) continue;
        if (c.dim() > 0) {
          rep.flags.push_back("D and D' share a positive-dimensional piece");
        } else if (!meet.count(c.key())) {
          rep.flags.push_back("D ∩ D' has a point outside the intersection cycle");
        }
      }
    auto sd = compactify(d.complex(), fan), sdp = compactify(dp.complex(), fan);
    for (const auto& a : sd) {
      if (a.orbit == 0) continue;
      for (const auto& b : sdp)
        if (b.orbit == a.orbit && !a.cell.intersection(b.cell).empty()) {
          rep.flags.push_back("D and D' meet at infinity in orbit " + std::to_string(a.orbit));
          break;
        }
    }
  }
  std::sort(rep.flags.begin(), rep.flags.end());
  rep.flags.erase(std::unique(rep.flags.begin(), rep.flags.end()), rep.flags.end());
  rep.value = rep.chi_outside_dprime - rep.chi_d_minus;
  return rep;
}

}  // namespace tropic
