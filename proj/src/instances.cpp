#include "tropic/instances.hpp"

#include "tropic/complex.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tropic {

namespace {

using Pt = std::array<long long, 2>;

long long pick(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Polyhedron to_polyhedron(const std::vector<Pt>& pts) {
  std::vector<Vec> vs;
  for (const auto& p : pts) vs.push_back({Rational(p[0]), Rational(p[1])});
  return Polyhedron::from_generators(2, vs);
}

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Cut the corner at vertex i of a counterclockwise Delzant polygon at depth k.
std::vector<Pt> cut_corner(const std::vector<Pt>& poly, std::size_t i, long long k) {
  std::size_t m = poly.size();
  const Pt& prev = poly[(i + m - 1) % m];
  const Pt& cur = poly[i];
  const Pt& next = poly[(i + 1) % m];
  long long lp = gcd_ll(prev[0] - cur[0], prev[1] - cur[1]);
  long long ln = gcd_ll(next[0] - cur[0], next[1] - cur[1]);
  Pt ep{(prev[0] - cur[0]) / lp, (prev[1] - cur[1]) / lp};
  Pt en{(next[0] - cur[0]) / ln, (next[1] - cur[1]) / ln};
  std::vector<Pt> out;
  for (std::size_t j = 0; j < m; ++j) {
    if (j != i) {
      out.push_back(poly[j]);
      continue;
    }
    out.push_back({cur[0] + k * ep[0], cur[1] + k * ep[1]});
    out.push_back({cur[0] + k * en[0], cur[1] + k * en[1]});
  }
  return out;
}

long long edge_length(const std::vector<Pt>& poly, std::size_t i) {
  const Pt& a = poly[i];
  const Pt& b = poly[(i + 1) % poly.size()];
  return gcd_ll(b[0] - a[0], b[1] - a[1]);
}

}  // namespace

Polyhedron dilated_simplex(std::size_t n, long long d) {
  if (n == 0 || d < 1) throw std::invalid_argument("dilated_simplex: need n >= 1 and d >= 1");
  std::vector<Vec> vs{Vec(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rational(0));
    e[i] = d;
    vs.push_back(e);
  }
  return Polyhedron::from_generators(n, vs);
}

Polyhedron rectangle(long long a, long long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("rectangle: sides must be positive");
  return to_polyhedron({{0, 0}, {a, 0}, {a, b}, {0, b}});
}

DelzantInstance random_delzant_polygon(Rng& rng, long long bound) {
  if (bound < 2) throw std::invalid_argument("random_delzant_polygon: bound too small");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Pt> poly;
    std::string recipe;
    long long span = 2 * bound;
    switch (rng() % 3) {
      case 0: {
        long long k = pick(rng, 2, std::min<long long>(span, 8));
        poly = {{0, 0}, {k, 0}, {0, k}};
        recipe = "triangle " + std::to_string(k);
        break;
      }
      case 1: {
        long long a = pick(rng, 1, std::min<long long>(span, 7)), b = pick(rng, 1, std::min<long long>(span, 7));
        poly = {{0, 0}, {a, 0}, {a, b}, {0, b}};
        recipe = "rectangle " + std::to_string(a) + "x" + std::to_string(b);
        break;
      }
      default: {
        long long c = pick(rng, 1, 2), b = pick(rng, 1, 3), a = pick(rng, 1, 4);
        poly = {{0, 0}, {a + c * b, 0}, {a, b}, {0, b}};
        recipe = "trapezoid a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
      }
    }
    DelzantInstance inst;
    inst.history.push_back(to_polyhedron(poly));
    long long cuts = pick(rng, 0, 3);
    for (long long c = 0; c < cuts; ++c) {
      std::size_t m = poly.size();
      std::size_t i = rng() % m;
      long long room = std::min(edge_length(poly, (i + m - 1) % m), edge_length(poly, i));
      if (room < 2) continue;
      long long k = pick(rng, 1, room - 1);
      poly = cut_corner(poly, i, k);
      recipe += "; cut " + std::to_string(i) + " depth " + std::to_string(k);
      inst.history.push_back(to_polyhedron(poly));
    }
    // center within the box
    long long lo[2] = {poly[0][0], poly[0][1]}, hi[2] = {poly[0][0], poly[0][1]};
    for (const auto& p : poly)
      for (int j = 0; j < 2; ++j) {
        lo[j] = std::min(lo[j], p[j]);
        hi[j] = std::max(hi[j], p[j]);
      }
    if (hi[0] - lo[0] > span || hi[1] - lo[1] > span) continue;
    long long shift[2];
    for (int j = 0; j < 2; ++j) shift[j] = -lo[j] - (hi[j] - lo[j]) / 2;
    Vec t{Rational(shift[0]), Rational(shift[1])};
    Matrix id{{1, 0}, {0, 1}};
    for (auto& h : inst.history) h = h.affine_image(id, t);
    inst.polygon = inst.history.back();
    inst.recipe = recipe;
    return inst;
  }
  throw std::runtime_error("random_delzant_polygon: no polygon fits the box");
}

TropicalPolynomial smooth_polynomial(const std::vector<Vec>& exponents, Rng& rng, int retries) {
  if (exponents.empty()) throw std::invalid_argument("smooth_polynomial: no exponents");
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::vector<Term> terms;
    for (const auto& p : exponents) {
      Rational s = 0, q = 0;
      for (const auto& x : p) {
        q += x * x;
        s += x;
      }
      // strictly concave, then broken ties
      Rational h = -1000 * (q + s * s) + Rational(static_cast<long long>(rng() % 997));
      terms.push_back({p, h});
    }
    TropicalPolynomial f(exponents[0].size(), terms);
    if (is_smooth(f)) return f;
  }
  throw std::runtime_error("smooth_polynomial: no smooth instance after " + std::to_string(retries) + " retries");
}

TropicalPolynomial smooth_polynomial(const Polyhedron& newton, Rng& rng, int retries) {
  return smooth_polynomial(lattice_points(newton), rng, retries);
}

BertiniPair random_bertini_pair(Rng& rng, bool product_surface, long long max_degree, int retries) {
  if (max_degree < 1) throw std::invalid_argument("random_bertini_pair: max_degree must be positive");
  BertiniPair p;
  if (product_surface) {
    p.surface = "TP1xTP1";
    p.ambient = rectangle(1, 1);
    p.newton_d = rectangle(pick(rng, 1, max_degree), pick(rng, 1, max_degree));
    p.newton_dprime = rectangle(pick(rng, 1, max_degree), pick(rng, 1, max_degree));
  } else {
    p.surface = "TP2";
    p.ambient = dilated_simplex(2, 1);
    p.newton_d = dilated_simplex(2, pick(rng, 1, max_degree));
    p.newton_dprime = dilated_simplex(2, pick(rng, 1, max_degree));
  }
  p.d = smooth_polynomial(p.newton_d, rng, retries);
  p.dprime = smooth_polynomial(p.newton_dprime, rng, retries);
  return p;
}

}  // namespace tropic
