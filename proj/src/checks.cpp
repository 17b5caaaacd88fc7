#include "tropic/checks.hpp"

#include "tropic/complex.hpp"
#include "tropic/euler.hpp"

#include <algorithm>

namespace tropic {

void VerificationReport::add(std::string name, const json& left, const json& right) {
  checks.push_back({std::move(name), left, right, left == right});
}

bool VerificationReport::all_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.agrees; });
}

int VerificationReport::exit_code() const {
  if (!hypotheses_ok()) return 2;
  return all_agree() ? 0 : 1;
}

json VerificationReport::to_json() const {
  json cs = json::array();
  for (const auto& c : checks) cs.push_back(json{{"name", c.name}, {"left", c.left}, {"right", c.right}, {"agrees", c.agrees}});
  return json{{"kind", kind},
              {"instance", instance},
              {"seed", seed},
              {"checks", cs},
              {"hypothesis_flags", hypothesis_flags},
              {"all_agree", all_agree()}};
}

json reports_to_json(std::vector<VerificationReport> reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.instance.dump() < b.instance.dump();
  });
  json out = json::array();
  for (const auto& r : reports) out.push_back(r.to_json());
  return json{{"reports", out}};
}

int combined_exit_code(const std::vector<VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    int c = r.exit_code();
    if (c == 1) return 1;
    code = std::max(code, c);
  }
  return code;
}

namespace {

long long count(const Polyhedron& p) { return static_cast<long long>(lattice_points(p).size()); }
long long interior(const Polyhedron& p) { return static_cast<long long>(interior_lattice_points(p).size()); }

void absorb(VerificationReport& rep, const ChiComplementReport& c, const std::string& prefix = "") {
  for (const auto& f : c.flags) rep.hypothesis_flags.push_back(prefix + f);
  if (!c.relatively_uniform && c.flags.empty()) rep.hypothesis_flags.push_back(prefix + "relative uniformity not confirmed");
}

json layer_json(const ChiComplementReport& c) {
  json a = json::array();
  for (auto x : c.layer_chis) a.push_back(x);
  return a;
}

}  // namespace

VerificationReport check_tpn(std::size_t n, long long d, std::uint64_t seed, int retries) {
  if (n < 1 || n > 3) throw std::invalid_argument("check_tpn: n must be 1, 2 or 3");
  if (d < 1 || d > 6) throw std::invalid_argument("check_tpn: degree must be in 1..6");
  VerificationReport rep;
  rep.kind = "tpn";
  rep.seed = seed;
  rep.instance = json{{"n", n}, {"d", d}};
  Rng rng(seed);
  auto simplex = dilated_simplex(n, d);
  auto f = smooth_polynomial(simplex, rng, retries);
  auto phi = cartier_of(f);
  auto tower = power_tower(phi, TropicalCycle::whole_space(n), static_cast<int>(n));
  auto chi = chi_complement(phi, tower, CompleteFan::projective_space(n));
  auto ring = ToricRing::projective_space(n);
  auto h = ring.hyperplane();
  long long points = count(simplex), inner = interior(simplex);
  long long sign = n % 2 == 0 ? 1 : -1;

  rep.add("RR(dH) = lattice count", rational_to_json(rr_number(ring, ring.scale(h, d))), points);
  rep.add("lattice count = chi(complement), sum over powers", points, chi.path_a);
  rep.add("sum over powers = local index integral", chi.path_a, chi.path_b);
  rep.add("complement regions = lattice count", static_cast<long long>(complement_components(f).size()), points);
  rep.add("RR(-dH) = (-1)^n interior count", rational_to_json(rr_number(ring, ring.scale(h, -d))), sign * inner);
  rep.add("(-1)^n interior count = chi_c(complement)", sign * inner, chi.chi_c_complement);
  rep.instance["layer_chis"] = layer_json(chi);
  absorb(rep, chi);
  return rep;
}

VerificationReport check_surface(const Polyhedron& polygon, std::uint64_t seed, int retries) {
  VerificationReport rep;
  rep.kind = "surface";
  rep.seed = seed;
  rep.instance = polygon_to_json(polygon);
  Vec heights;
  auto fan = SmoothCompleteFan2D::from_polygon(polygon, &heights);
  auto ring = ToricRing::surface(fan);
  auto d = ring.divisor(heights);
  Rng rng(seed);
  auto f = smooth_polynomial(polygon, rng, retries);
  auto phi = cartier_of(f);
  auto s = TropicalCycle::whole_space(2);
  auto cfan = CompleteFan::normal_fan(polygon);
  long long points = count(polygon), inner = interior(polygon);

  Rational adj = adjunction_rr_surface(ring, d);
  rep.add("adjunction RR = lattice count", rational_to_json(adj), points);
  rep.add("RR(D) = lattice count", rational_to_json(rr_number(ring, d)), points);
  // Pick: area + boundary/2 + 1
  Rational pick = Rational(normalized_volume(polygon)) / 2 + Rational(points - inner, 2) + 1;
  rep.add("Pick = lattice count", rational_to_json(pick), points);
  try {
    auto sc = chi_surface_complement(phi, s, cfan);
    rep.add("chi(S) + chi(C) + chi(|C^2|) = lattice count", sc.total, points);
    rep.instance["chi_terms"] = json::array({sc.chi_surface, sc.chi_curve, sc.chi_square});
  } catch (const std::domain_error& e) {
    rep.hypothesis_flags.push_back(e.what());
  }
  auto chi = chi_complement(phi, power_tower(phi, s, 2), cfan);
  rep.add("sum over powers = local index integral", chi.path_a, chi.path_b);
  absorb(rep, chi);
  return rep;
}

VerificationReport check_bertini(const Polyhedron& ambient, const Polyhedron& newton_d, const Polyhedron& newton_dprime,
                                 std::uint64_t seed, int retries) {
  VerificationReport rep;
  rep.kind = "bertini";
  rep.seed = seed;
  rep.instance = json{{"ambient", polygon_to_json(ambient)},
                      {"d", polygon_to_json(newton_d)},
                      {"dprime", polygon_to_json(newton_dprime)}};
  auto fan = SmoothCompleteFan2D::from_polygon(ambient);
  for (const auto* p : {&newton_d, &newton_dprime})
    if (CompleteFan::normal_fan(*p).cones().size() != CompleteFan::normal_fan(ambient).cones().size())
      throw std::invalid_argument("check_bertini: Newton polygons must share the ambient normal fan");
  auto ring = ToricRing::surface(fan);
  auto d = ring.divisor(support_heights(fan, newton_d));
  auto dp = ring.divisor(support_heights(fan, newton_dprime));
  Rng rng(seed);
  auto fd = smooth_polynomial(newton_d, rng, retries);
  auto fdp = smooth_polynomial(newton_dprime, rng, retries);
  auto rel = chi_relative_pair(cartier_of(fd), cartier_of(fdp), CompleteFan::normal_fan(ambient));
  auto diff = ring.add(dp, ring.scale(d, -1));
  rep.add("chi(X - D') - chi(D - D') = adjunction RR(D' - D)", rel.value, rational_to_json(adjunction_rr_surface(ring, diff)));
  rep.add("adjunction RR(D' - D) = RR(D' - D)", rational_to_json(adjunction_rr_surface(ring, diff)),
          rational_to_json(rr_number(ring, diff)));
  auto rd = rr_difference(ring, dp, d);
  rep.add("RR(D' - D) = RR(D') - RR(D; D'|D)", rational_to_json(rd.difference), rational_to_json(rd.ambient - rd.curve));
  rep.add("chi(X - D') = RR(D')", rel.chi_outside_dprime, rational_to_json(rd.ambient));
  rep.add("chi(D - D') = RR(D; D'|D)", rel.chi_d_minus, rational_to_json(rd.curve));
  rep.instance["terms"] = json::array({rel.chi_outside_dprime, rel.chi_d_minus});
  rep.hypothesis_flags = rel.flags;
  return rep;
}

VerificationReport check_pairing(const Polyhedron& polygon, const Polyhedron& second, std::uint64_t seed, int retries) {
  VerificationReport rep;
  rep.kind = "pairing";
  rep.seed = seed;
  rep.instance = json{{"polygon", polygon_to_json(polygon)}, {"second", polygon_to_json(second)}};
  auto fan = SmoothCompleteFan2D::from_polygon(polygon);
  auto ring = ToricRing::surface(fan);
  Rng rng(seed);
  auto f = smooth_polynomial(polygon, rng, retries);
  auto g = smooth_polynomial(second, rng, retries);
  auto curve = tropical_hypersurface(f);
  long long engine = degree(divisor_intersect(cartier_of(g), curve));
  Rational ringside = intersection_number(ring, {ring.divisor(support_heights(fan, polygon)),
                                                 ring.divisor(support_heights(fan, second))});
  rep.add("engine intersection degree = ring intersection number", engine, rational_to_json(ringside));
  // mixed area, from normalized areas of Minkowski sums
  Matrix sum_pts;
  for (const auto& a : polygon.vertices())
    for (const auto& b : second.vertices()) sum_pts.push_back(add(a, b));
  auto mink = Polyhedron::from_generators(2, sum_pts);
  Rational mixed = Rational(normalized_volume(mink) - normalized_volume(polygon) - normalized_volume(second)) / 2;
  rep.add("ring intersection number = mixed area", rational_to_json(ringside), rational_to_json(mixed));
  return rep;
}

VerificationReport check_curve(const CurveGraph& g, const CurveDivisor& d) {
  VerificationReport rep;
  rep.kind = "curve";
  rep.instance = graph_to_json(g, d);
  long long genus = g.genus();
  long long deg = d.degree();
  rep.add("deg K = 2g - 2", canonical_divisor(g).degree(), 2 * genus - 2);
  rep.add("RR(C;D) = deg D + chi(C)", rr_number_curve(g, d), deg + g.euler_char());

  auto model = loopless_model(g, d);
  std::vector<long long> k(model.graph.vertex_count()), kd(k.size());
  for (std::size_t v = 0; v < k.size(); ++v) {
    k[v] = model.graph.valence(v) - 2;
    kd[v] = k[v] - model.divisor[v];
  }
  long long r = baker_norine_rank(model.graph, model.divisor);
  long long rk = baker_norine_rank(model.graph, kd);
  rep.add("r(D) - r(K - D) = deg D + 1 - g", r - rk, deg + 1 - genus);
  rep.instance["ranks"] = json{{"r(D)+1", r + 1}, {"r(K-D)+1", rk + 1}};

  // complement checks need D reduced and supported on valence-two points
  std::vector<CurvePoint> points;
  bool moderate = !d.values.empty();
  for (const auto& [p, v] : d.values) {
    if (v != 1 || (!p.on_edge && g.valence(p.index) != 2)) moderate = false;
    points.push_back(p);
  }
  if (!moderate) {
    if (!d.values.empty()) rep.hypothesis_flags.push_back("D is not a set of valence-two points");
    return rep;
  }
  auto cc = chi_complement_curve(g, points);
  rep.add("#D + chi(C) = chi(C - D) by surgery", cc.by_formula, cc.by_surgery);
  auto co = complement_cohomology_ranks(g, points);
  rep.add("rank H0_c(C - D) = r(-D) + 1", co.h0c, co.rank_minus_d);
  rep.add("rank H1_c(C - D) = r(K + D) + 1", co.h1c, co.rank_k_plus_d);
  rep.instance["cohomology"] = json{{"h0", co.h0}, {"h1", co.h1}, {"h0c", co.h0c}, {"h1c", co.h1c}};

  bool one_edge = std::all_of(points.begin(), points.end(), [&](const CurvePoint& p) {
    return p.on_edge && p.index == points[0].index;
  });
  if (one_edge) {
    // the edge must lie on a cycle for the cut to keep one cycle fewer
    auto edges = g.edges();
    edges.erase(edges.begin() + static_cast<long>(points[0].index));
    bool on_cycle = true;
    try {
      CurveGraph rest(g.vertex_count(), edges);
    } catch (const std::invalid_argument&) {
      on_cycle = false;
    }
    if (on_cycle) {
      rep.add("rank H0(C - D) = #D", co.h0, static_cast<long long>(points.size()));
      rep.add("rank H1(C - D) = g - 1", co.h1, genus - 1);
    }
  }
  if (deg > 2 * genus - 2) {
    rep.add("r(D) + 1 = #D + 1 - g", co.rank_d, deg + 1 - genus);
    rep.add("r(K - D) + 1 = 0", co.rank_k_minus_d, 0);
  }
  return rep;
}

VerificationReport check_csm(const Matroid& m, const std::string& name) {
  VerificationReport rep;
  rep.kind = "csm";
  rep.instance = matroid_to_json(m);
  rep.instance["name"] = name;
  if (m.has_loop()) {
    rep.hypothesis_flags.push_back("matroid has a loop; its Bergman fan is empty");
    return rep;
  }
  auto fan = bergman_fan(m);
  rep.add("Bergman fan balanced", check_balancing(fan).balanced, true);
  for (int k = 0; k < m.rank(); ++k)
    rep.add("csm_" + std::to_string(k) + " balanced", check_balancing(csm_cycle(m, k)).balanced, true);
  auto top = csm_cycle(m, m.rank() - 1);
  bool ones = true;
  for (const auto& [cell, w] : top.weighted_cells()) ones = ones && w == 1;
  rep.add("top CSM weights are 1", ones, true);
  rep.add("top CSM cycle = Bergman fan", top.weighted_cells() == fan.weighted_cells(), true);
  auto chi = characteristic_polynomial(m);
  Integer slope = 0;
  for (std::size_t i = 1; i < chi.size(); ++i) slope += Integer(static_cast<long long>(i)) * chi[i];
  Integer beta = beta_invariant(m);
  Integer sign = (m.rank() % 2 == 1) ? 1 : -1;
  rep.add("beta = (-1)^(r-1) chi'(1)", beta.str(), Integer(sign * slope).str());
  rep.add("deg csm_0 = chi'(1)", degree(csm_cycle(m, 0)), slope.convert_to<long long>());
  if (name.rfind("U_", 0) == 0) {
    int n = m.size(), r = m.rank();
    // binomial(-1, 0) = 1 covers the single coloop U_{1,1}
    Integer expect = r == 1 ? Integer(1) : (n >= 2 && r >= 1 ? binomial(n - 2, r - 1) : Integer(0));
    rep.add("beta(U_{r,n}) = binomial(n-2, r-1)", beta.str(), expect.str());
  }
  rep.instance["beta"] = beta.str();
  return rep;
}

VerificationReport check_hypersurface(const TropicalPolynomial& f) {
  VerificationReport rep;
  rep.kind = "hypersurface";
  rep.instance = polynomial_to_json(f);
  auto dual = tropical_hypersurface(f);
  auto phi = cartier_of(f);
  auto corner = divisor_intersect(phi, TropicalCycle::whole_space(f.nvars()));
  rep.add("dual subdivision = corner locus", dual.weighted_cells() == corner.weighted_cells(), true);
  rep.add("balanced", check_balancing(dual).balanced, true);
  rep.add("regions = subdivision vertices", static_cast<long long>(phi.domain().top_cells().size()),
          static_cast<long long>(complement_components(f).size()));
  bool smooth = is_smooth(f);
  rep.instance["smooth"] = smooth;
  if (smooth) {
    auto np = newton_polytope(f);
    if (np.dim() == static_cast<int>(f.nvars()))
      rep.add("regions = lattice points (smooth)", static_cast<long long>(complement_components(f).size()), count(np));
  }
  return rep;
}

VerificationReport check_euler(const TropicalPolynomial& f) {
  VerificationReport rep;
  rep.kind = "euler";
  rep.instance = polynomial_to_json(f);
  auto np = newton_polytope(f);
  std::size_t n = f.nvars();
  if (np.dim() != static_cast<int>(n))
    throw std::invalid_argument("check_euler: Newton polytope must be full-dimensional");
  auto fan = CompleteFan::normal_fan(np);
  auto phi = cartier_of(f);
  auto chi = chi_complement(phi, power_tower(phi, TropicalCycle::whole_space(n), static_cast<int>(n)), fan);
  rep.add("sum over powers = local index integral", chi.path_a, chi.path_b);
  rep.instance["chi_complement_pathA"] = chi.path_a;
  rep.instance["chi_complement_pathB"] = chi.path_b;
  rep.instance["lattice_count"] = count(np);
  rep.instance["agrees"] = chi.agrees();
  rep.instance["layer_chis"] = layer_json(chi);
  if (!fan.smooth()) rep.hypothesis_flags.push_back("toric variety of the Newton polytope is singular");
  if (!is_smooth(f)) rep.hypothesis_flags.push_back("subdivision is not unimodular");
  rep.add("chi(complement) = lattice count", chi.path_a, count(np));
  absorb(rep, chi);
  return rep;
}

}  // namespace tropic
