#include "tropic/json_io.hpp"

#include <algorithm>
#include <limits>

namespace tropic {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

long long integer_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

Matrix rows_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  Matrix m;
  for (std::size_t i = 0; i < j.size(); ++i) m.push_back(vec_from_json(j[i], where + "/" + std::to_string(i)));
  return m;
}

json rows_to_json(const Matrix& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(vec_to_json(r));
  return a;
}

}  // namespace

json rational_to_json(const Rational& q) {
  if (is_integer(q)) {
    Integer z = to_integer(q);
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
      return z.convert_to<long long>();
  }
  return format_rational(q);
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

Vec vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
  return v;
}

json polyhedron_to_json(const Polyhedron& p) {
  return json{{"vertices", rows_to_json(p.vertices())},
              {"rays", rows_to_json(p.rays())},
              {"lineality", rows_to_json(p.lineality())}};
}

json cycle_to_json(const TropicalCycle& c) {
  json cells = json::array();
  for (const auto& [cell, w] : c.weighted_cells()) {
    json o = polyhedron_to_json(cell);
    o["weight"] = w;
    cells.push_back(o);
  }
  return json{{"ambient_dim", c.ambient_dim()}, {"dim", c.dim()}, {"cells", cells}};
}

TropicalCycle cycle_from_json(const json& j) {
  auto n = integer_from_json(member(j, "ambient_dim", ""), "/ambient_dim");
  auto d = integer_from_json(member(j, "dim", ""), "/dim");
  if (n < 0 || d < 0 || d > n) fail("/dim", "dimension out of range");
  const auto& cells = member(j, "cells", "");
  if (!cells.is_array()) fail("/cells", "expected an array");
  std::vector<std::pair<Polyhedron, long long>> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string w = "/cells/" + std::to_string(i);
    const auto& c = cells[i];
    Matrix verts = rows_from_json(member(c, "vertices", w), w + "/vertices");
    Matrix rays = c.contains("rays") ? rows_from_json(c["rays"], w + "/rays") : Matrix{};
    Matrix lin = c.contains("lineality") ? rows_from_json(c["lineality"], w + "/lineality") : Matrix{};
    for (const auto* m : {&verts, &rays, &lin})
      for (const auto& r : *m)
        if (r.size() != static_cast<std::size_t>(n)) fail(w, "coordinate count differs from ambient_dim");
    try {
      out.emplace_back(Polyhedron::from_generators(n, verts, rays, lin), integer_from_json(member(c, "weight", w), w + "/weight"));
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      fail(w, e.what());
    }
  }
  try {
    return TropicalCycle::from_cells(n, d, out);
  } catch (const std::exception& e) {
    fail("/cells", e.what());
  }
}

json cartier_to_json(const CartierFunction& f) {
  json pieces = json::array();
  const auto& cx = f.domain().complex();
  for (std::size_t t = 0; t < f.domain().top_cells().size(); ++t) {
    json o = polyhedron_to_json(cx.cell(f.domain().top_cells()[t]));
    o["slope"] = vec_to_json(f.pieces()[t].linear);
    o["constant"] = rational_to_json(f.pieces()[t].constant);
    pieces.push_back(o);
  }
  return json{{"ambient_dim", f.domain().ambient_dim()}, {"pieces", pieces}};
}

json polynomial_to_json(const TropicalPolynomial& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back(json{{"exponent", vec_to_json(t.exponent)}, {"coeff", rational_to_json(t.coeff)}});
  return json{{"nvars", f.nvars()}, {"terms", terms}};
}

TropicalPolynomial polynomial_from_json(const json& j) {
  auto n = integer_from_json(member(j, "nvars", ""), "/nvars");
  if (n < 1) fail("/nvars", "need at least one variable");
  const auto& ts = member(j, "terms", "");
  if (!ts.is_array()) fail("/terms", "expected an array");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::string w = "/terms/" + std::to_string(i);
    Vec e = vec_from_json(member(ts[i], "exponent", w), w + "/exponent");
    if (e.size() != static_cast<std::size_t>(n)) fail(w + "/exponent", "length differs from nvars");
    terms.push_back({e, rational_from_json(member(ts[i], "coeff", w), w + "/coeff")});
  }
  try {
    return TropicalPolynomial(n, terms);
  } catch (const std::invalid_argument& e) {
    fail("/terms", e.what());
  }
}

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (auto b : m.bases()) {
    json s = json::array();
    for (int e = 0; e < m.size(); ++e)
      if (b >> e & 1u) s.push_back(e + 1);
    bases.push_back(s);
  }
  return json{{"n", m.size()}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
  if (j.is_object() && j.contains("uniform")) {
    const auto& u = j["uniform"];
    if (!u.is_array() || u.size() != 2) fail("/uniform", "expected [r, n]");
    auto r = integer_from_json(u[0], "/uniform/0"), n = integer_from_json(u[1], "/uniform/1");
    if (n < 0 || n > Matroid::kMaxSize || r < 0 || r > n) fail("/uniform", "need 0 <= r <= n <= 12");
    return Matroid::uniform(static_cast<int>(r), static_cast<int>(n));
  }
  auto n = integer_from_json(member(j, "n", ""), "/n");
  if (n < 0 || n > Matroid::kMaxSize) fail("/n", "ground set size must be in 0..12");
  const auto& bs = member(j, "bases", "");
  if (!bs.is_array() || bs.empty()) fail("/bases", "expected a nonempty array");
  std::vector<Matroid::Set> bases;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    std::string w = "/bases/" + std::to_string(i);
    if (!bs[i].is_array()) fail(w, "expected an array of elements");
    Matroid::Set s = 0;
    for (std::size_t k = 0; k < bs[i].size(); ++k) {
      auto e = integer_from_json(bs[i][k], w + "/" + std::to_string(k));
      if (e < 1 || e > n) fail(w + "/" + std::to_string(k), "element outside 1..n");
      s |= Matroid::Set{1} << (e - 1);
    }
    bases.push_back(s);
  }
  try {
    return Matroid(static_cast<int>(n), bases);
  } catch (const std::invalid_argument& e) {
    fail("/bases", e.what());
  }
}

json graph_to_json(const CurveGraph& g, const CurveDivisor& d) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
  json div = json::object();
  for (const auto& [p, v] : d.values) div[p.name()] = v;
  return json{{"vertices", g.vertex_count()}, {"edges", edges}, {"divisor", div}};
}

std::pair<CurveGraph, CurveDivisor> graph_from_json(const json& j) {
  auto n = integer_from_json(member(j, "vertices", ""), "/vertices");
  if (n < 1) fail("/vertices", "need at least one vertex");
  const auto& es = member(j, "edges", "");
  if (!es.is_array()) fail("/edges", "expected an array");
  std::vector<CurveGraph::Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string w = "/edges/" + std::to_string(i);
    if (!es[i].is_array() || es[i].size() != 2) fail(w, "expected [u, v]");
    auto a = integer_from_json(es[i][0], w + "/0"), b = integer_from_json(es[i][1], w + "/1");
    if (a < 0 || b < 0 || a >= n || b >= n) fail(w, "vertex index out of range");
    edges.emplace_back(a, b);
  }
  CurveGraph g;
  try {
    g = CurveGraph(n, edges);
  } catch (const std::invalid_argument& e) {
    fail("/edges", e.what());
  }
  CurveDivisor d;
  if (j.contains("divisor")) {
    const auto& dv = j["divisor"];
    if (!dv.is_object()) fail("/divisor", "expected an object");
    for (const auto& [key, val] : dv.items()) {
      std::string w = "/divisor/" + key;
      CurvePoint p;
      try {
        p = CurvePoint::parse(key);
      } catch (const std::invalid_argument& e) {
        fail(w, e.what());
      }
      if (p.on_edge ? p.index >= edges.size() : p.index >= static_cast<std::size_t>(n)) fail(w, "no such vertex or edge");
      if (auto v = integer_from_json(val, w); v != 0) d.values[p] = v;
    }
  }
  return {g, d};
}

Polyhedron polygon_from_json(const json& j) {
  Matrix vs = rows_from_json(member(j, "vertices", ""), "/vertices");
  if (vs.size() < 3) fail("/vertices", "need at least three vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != 2) fail("/vertices/" + std::to_string(i), "expected [x, y]");
    for (const auto& x : vs[i])
      if (!is_integer(x)) fail("/vertices/" + std::to_string(i), "coordinates must be integers");
  }
  auto q = Polyhedron::from_generators(2, vs);
  if (q.dim() != 2) fail("/vertices", "polygon is degenerate");
  return q;
}

json polygon_to_json(const Polyhedron& q) {
  // counterclockwise from the lowest-then-leftmost vertex
  auto vs = q.vertices();
  auto lowest = *std::min_element(vs.begin(), vs.end(), [](const Vec& a, const Vec& b) {
    return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
  });
  std::sort(vs.begin(), vs.end(), [&](const Vec& a, const Vec& b) {
    if (a == lowest) return b != lowest;
    if (b == lowest) return false;
    Rational cross = (a[0] - lowest[0]) * (b[1] - lowest[1]) - (a[1] - lowest[1]) * (b[0] - lowest[0]);
    return cross > 0;
  });
  return json{{"vertices", rows_to_json(vs)}};
}

json fan_to_json(const SmoothCompleteFan2D& fan) {
  json rays = json::array();
  for (const auto& r : fan.rays()) rays.push_back(json::array({r[0].convert_to<long long>(), r[1].convert_to<long long>()}));
  return json{{"rays", rays}};
}

json tpn_fan_to_json(std::size_t n) { return json{{"tpn", n}}; }

json class_to_json(const ToricRing& ring, const CohomologyClass& c) {
  json coeffs = json::object();
  const auto& d = c.parts.at(1);
  if (ring.is_projective_space()) {
    coeffs["H"] = rational_to_json(d[0]);
  } else {
    for (std::size_t i = 0; i < d.size(); ++i)
      if (!d[i].is_zero()) coeffs[std::to_string(i)] = rational_to_json(d[i]);
  }
  return json{{"coeffs", coeffs}};
}

CohomologyClass class_from_json(const ToricRing& ring, const json& j) {
  const auto& cs = member(j, "coeffs", "");
  if (!cs.is_object()) fail("/coeffs", "expected an object");
  Vec d = ring.zero().parts[1];
  for (const auto& [key, val] : cs.items()) {
    std::string w = "/coeffs/" + key;
    if (ring.is_projective_space()) {
      if (key != "H") fail(w, "projective spaces take the key \"H\"");
      d[0] = rational_from_json(val, w);
      continue;
    }
    std::size_t idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(w, "expected a ray index");
    }
    if (idx >= d.size()) fail(w, "ray index out of range");
    d[idx] = rational_from_json(val, w);
  }
  return ring.divisor(d);
}

}  // namespace tropic
