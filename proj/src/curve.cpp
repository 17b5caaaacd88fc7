#include "tropic/curve.hpp"

#include "tropic/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace tropic {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CurveGraph::CurveGraph(std::size_t vertices, std::vector<Edge> edges) : n_(vertices), edges_(std::move(edges)) {
  if (n_ == 0) throw std::invalid_argument("CurveGraph: no vertices");
  UnionFind uf(n_);
  for (const auto& [a, b] : edges_) {
    if (a >= n_ || b >= n_) throw std::invalid_argument("CurveGraph: edge endpoint out of range");
    uf.unite(a, b);
  }
  for (std::size_t v = 1; v < n_; ++v)
    if (uf.find(v) != uf.find(0)) throw std::invalid_argument("CurveGraph: graph is disconnected");
}

long long CurveGraph::valence(std::size_t v) const {
  long long val = 0;
  for (const auto& [a, b] : edges_) val += (a == v) + (b == v);
  return val;
}

long long CurveGraph::genus() const {
  return static_cast<long long>(edges_.size()) - static_cast<long long>(n_) + 1;
}

bool CurveGraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
}

long long CurveGraph::multiplicity(std::size_t u, std::size_t v) const {
  long long m = 0;
  for (const auto& [a, b] : edges_)
    if ((a == u && b == v) || (a == v && b == u)) ++m;
  return m;
}

std::string CurvePoint::name() const {
  return on_edge ? "e" + std::to_string(index) + "." + std::to_string(k) : "v" + std::to_string(index);
}

CurvePoint CurvePoint::parse(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("CurvePoint: cannot parse '" + s + "'"); };
  auto number = [&](const std::string& t) -> std::size_t {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) throw bad();
    return std::stoul(t);
  };
  if (s.size() < 2) throw bad();
  if (s[0] == 'v') return {false, number(s.substr(1)), 0};
  if (s[0] != 'e') throw bad();
  auto dot = s.find('.');
  if (dot == std::string::npos) throw bad();
  return {true, number(s.substr(1, dot - 1)), number(s.substr(dot + 1))};
}

long long CurveDivisor::degree() const {
  long long d = 0;
  for (const auto& [p, v] : values) d += v;
  return d;
}

CurveDivisor CurveDivisor::operator+(const CurveDivisor& o) const {
  CurveDivisor r = *this;
  for (const auto& [p, v] : o.values)
    if ((r.values[p] += v) == 0) r.values.erase(p);
  return r;
}

CurveDivisor CurveDivisor::operator-(const CurveDivisor& o) const {
  CurveDivisor neg;
  for (const auto& [p, v] : o.values) neg.values[p] = -v;
  return *this + neg;
}

CurveDivisor canonical_divisor(const CurveGraph& c) {
  CurveDivisor k;
  for (std::size_t v = 0; v < c.vertex_count(); ++v)
    if (long long x = c.valence(v) - 2; x != 0) k.values[{false, v, 0}] = x;
  return k;
}

long long rr_number_curve(const CurveGraph& c, const CurveDivisor& d) { return d.degree() + 1 - c.genus(); }

CurveModel loopless_model(const CurveGraph& c, const CurveDivisor& d) {
  std::vector<std::size_t> marks(c.edges().size(), 0);
  for (const auto& [p, v] : d.values) {
    if (p.on_edge) {
      if (p.index >= c.edges().size()) throw std::invalid_argument("loopless_model: no such edge");
      marks[p.index] = std::max(marks[p.index], p.k + 1);
    } else if (p.index >= c.vertex_count()) {
      throw std::invalid_argument("loopless_model: no such vertex");
    }
  }
  CurveModel m;
  std::size_t n = c.vertex_count();
  std::vector<CurveGraph::Edge> edges;
  for (std::size_t v = 0; v < n; ++v) m.vertex_of[{false, v, 0}] = v;
  for (std::size_t j = 0; j < c.edges().size(); ++j) {
    auto [a, b] = c.edges()[j];
    std::size_t count = std::max<std::size_t>(marks[j], a == b ? 1 : 0);
    std::size_t prev = a;
    for (std::size_t k = 0; k < count; ++k) {
      m.vertex_of[{true, j, k}] = n;
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, b);
  }
  m.graph = CurveGraph(n, edges);
  m.divisor.assign(n, 0);
  for (const auto& [p, v] : d.values) m.divisor[m.vertex_of.at(p)] += v;
  return m;
}

namespace {

struct Surgery {
  long long chi = 0, components = 0, cycles = 0, compact_components = 0;
};

// Cut the model open at the vertices in `cut` (all of valence two).
Surgery cut_open(const CurveGraph& g, const std::set<std::size_t>& cut) {
  std::size_t n = g.vertex_count();
  UnionFind uf(n);
  long long v_kept = static_cast<long long>(n - cut.size()), e_kept = 0, open_edges = 0;
  std::vector<bool> has_end(n, false);
  for (const auto& [a, b] : g.edges()) {
    bool ca = cut.count(a), cb = cut.count(b);
    if (ca && cb) {
      ++open_edges;
    } else if (!ca && !cb) {
      ++e_kept;
      uf.unite(a, b);
    } else {
      has_end[ca ? b : a] = true;
    }
  }
  std::set<std::size_t> roots, roots_with_end;
  for (std::size_t v = 0; v < n; ++v) {
    if (cut.count(v)) continue;
    roots.insert(uf.find(v));
    if (has_end[v]) roots_with_end.insert(uf.find(v));
  }
  Surgery s;
  s.chi = v_kept - e_kept + open_edges;
  s.components = static_cast<long long>(roots.size()) + open_edges;
  s.cycles = e_kept - v_kept + static_cast<long long>(roots.size());
  s.compact_components = static_cast<long long>(roots.size() - roots_with_end.size());
  return s;
}

CurveDivisor point_divisor(const CurveGraph& c, const std::vector<CurvePoint>& points) {
  CurveDivisor d;
  for (const auto& p : points) {
    if (!p.on_edge) {
      if (p.index >= c.vertex_count()) throw std::invalid_argument("point: no such vertex");
      if (c.valence(p.index) != 2)
        throw std::invalid_argument("point " + p.name() + " is a vertex of valence " + std::to_string(c.valence(p.index)));
    }
    if (!d.values.emplace(p, 1).second) throw std::invalid_argument("point " + p.name() + " listed twice");
  }
  return d;
}

std::set<std::size_t> model_points(const CurveModel& m, const std::vector<CurvePoint>& points) {
  std::set<std::size_t> s;
  for (const auto& p : points) s.insert(m.vertex_of.at(p));
  return s;
}

}  // namespace

CurveComplementReport chi_complement_curve(const CurveGraph& c, const std::vector<CurvePoint>& points) {
  auto d = point_divisor(c, points);
  auto m = loopless_model(c, d);
  auto s = cut_open(m.graph, model_points(m, points));
  CurveComplementReport rep;
  rep.by_formula = c.euler_char() + static_cast<long long>(points.size());
  rep.by_surgery = s.chi;
  rep.components = s.components;
  rep.cycles = s.cycles;
  return rep;
}

std::vector<long long> reduce(const CurveGraph& g, std::vector<long long> d, std::size_t q) {
  std::size_t n = g.vertex_count();
  if (g.has_loop()) throw std::invalid_argument("reduce: graph has loops");
  if (d.size() != n || q >= n) throw std::invalid_argument("reduce: divisor size or base vertex");
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // fire a vertex set t times
  auto fire = [&](const std::vector<bool>& set, long long t) {
    for (const auto& [a, b] : g.edges()) {
      if (set[a] == set[b]) continue;
      std::size_t in = set[a] ? a : b, out = set[a] ? b : a;
      d[in] -= t;
      d[out] += t;
    }
  };

  // make d nonnegative away from q, layer by layer from the far end
  std::vector<long long> dist(n, -1);
  std::queue<std::size_t> bfs;
  dist[q] = 0;
  bfs.push(q);
  long long far = 0;
  while (!bfs.empty()) {
    auto v = bfs.front();
    bfs.pop();
    far = std::max(far, dist[v]);
    for (auto u : adj[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        bfs.push(u);
      }
  }
  for (long long k = far; k >= 1; --k) {
    std::vector<bool> ball(n);
    for (std::size_t v = 0; v < n; ++v) ball[v] = dist[v] <= k - 1;
    long long t = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] != k || d[v] >= 0) continue;
      long long in = 0;
      for (auto u : adj[v]) in += ball[u];
      t = std::max(t, (-d[v] + in - 1) / in);
    }
    if (t > 0) fire(ball, t);
  }

  // Dhar burning: fire the unburnt set while it is nonempty
  while (true) {
    std::vector<bool> burnt(n, false);
    burnt[q] = true;
    for (bool spread = true; spread;) {
      spread = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (burnt[v]) continue;
        long long fire_edges = 0;
        for (auto u : adj[v]) fire_edges += burnt[u];
        if (fire_edges > d[v]) {
          burnt[v] = spread = true;
        }
      }
    }
    std::vector<bool> unburnt(n);
    long long t = -1;
    for (std::size_t v = 0; v < n; ++v) {
      unburnt[v] = !burnt[v];
      if (!unburnt[v]) continue;
      long long out = 0;
      for (auto u : adj[v]) out += burnt[u];
      if (out > 0) t = t < 0 ? d[v] / out : std::min(t, d[v] / out);
    }
    if (t < 0) return d;
    fire(unburnt, t);
  }
}

bool equivalent_to_effective(const CurveGraph& g, const std::vector<long long>& d) {
  return reduce(g, d, 0)[0] >= 0;
}

long long baker_norine_rank(const CurveGraph& g, const std::vector<long long>& d) {
  std::size_t n = g.vertex_count();
  if (!equivalent_to_effective(g, d)) return -1;
  long long total = std::accumulate(d.begin(), d.end(), 0LL);
  for (long long k = 1; k <= total + 1; ++k) {
    // every effective E of degree k, as a nondecreasing vertex sequence
    std::vector<long long> e = d;
    bool all = true;
    std::function<void(std::size_t, long long)> rec = [&](std::size_t from, long long left) {
      if (!all) return;
      if (left == 0) {
        if (!equivalent_to_effective(g, e)) all = false;
        return;
      }
      for (std::size_t v = from; v < n && all; ++v) {
        --e[v];
        rec(v, left - 1);
        ++e[v];
      }
    };
    rec(0, k);
    if (!all) return k - 1;
  }
  throw std::logic_error("baker_norine_rank: no obstruction found");
}

DivisorClassOracle::DivisorClassOracle(const CurveGraph& g) : g_(g) {
  if (g.has_loop()) throw std::invalid_argument("DivisorClassOracle: graph has loops");
  std::size_t n = g.vertex_count();
  Matrix l(n - 1, Vec(n - 1, Rational(0)));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) l[i - 1][j - 1] = i == j ? Rational(g.valence(i)) : Rational(-g.multiplicity(i, j));
  inverse_.assign(n - 1, Vec(n - 1, Rational(0)));
  for (std::size_t c = 0; c + 1 < n; ++c) {
    Vec e(n - 1, Rational(0));
    e[c] = 1;
    auto col = linalg::solve(l, e, n - 1);
    if (!col) throw std::logic_error("DivisorClassOracle: reduced Laplacian is singular");
    for (std::size_t r = 0; r + 1 < n; ++r) inverse_[r][c] = (*col)[r];
  }
}

std::vector<Rational> DivisorClassOracle::key(const std::vector<long long>& d) const {
  std::vector<Rational> k;
  for (const auto& row : inverse_) {
    Rational x = 0;
    for (std::size_t j = 0; j < row.size(); ++j) x += row[j] * d[j + 1];
    Integer fl = numerator(x) / denominator(x);
    if (x < 0 && Rational(fl) != x) fl -= 1;
    k.push_back(x - Rational(fl));
  }
  return k;
}

const std::set<std::vector<Rational>>& DivisorClassOracle::effective_keys(long long degree) {
  auto it = cache_.find(degree);
  if (it != cache_.end()) return it->second;
  std::set<std::vector<Rational>> keys;
  std::size_t n = g_.vertex_count();
  std::vector<long long> e(n, 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t from, long long left) {
    if (left == 0) {
      keys.insert(key(e));
      return;
    }
    for (std::size_t v = from; v < n; ++v) {
      ++e[v];
      rec(v, left - 1);
      --e[v];
    }
  };
  if (degree >= 0) rec(0, degree);
  return cache_.emplace(degree, std::move(keys)).first->second;
}

bool DivisorClassOracle::effective(const std::vector<long long>& d) {
  if (d.size() != g_.vertex_count()) throw std::invalid_argument("DivisorClassOracle: divisor size");
  long long deg = std::accumulate(d.begin(), d.end(), 0LL);
  if (deg < 0) return false;
  return effective_keys(deg).count(key(d)) > 0;
}

long long DivisorClassOracle::rank(const std::vector<long long>& d) {
  if (!effective(d)) return -1;
  std::size_t n = g_.vertex_count();
  for (long long k = 1;; ++k) {
    std::vector<long long> x(d);
    bool all = true;
    std::function<void(std::size_t, long long)> rec = [&](std::size_t from, long long left) {
      if (!all) return;
      if (left == 0) {
        all = effective(x);
        return;
      }
      for (std::size_t v = from; v < n && all; ++v) {
        --x[v];
        rec(v, left - 1);
        ++x[v];
      }
    };
    rec(0, k);
    if (!all) return k - 1;
  }
}

ComplementCohomology complement_cohomology_ranks(const CurveGraph& c, const std::vector<CurvePoint>& points) {
  auto d = point_divisor(c, points);
  auto m = loopless_model(c, d);
  const auto& g = m.graph;
  auto s = cut_open(g, model_points(m, points));
  ComplementCohomology r;
  r.h0 = s.components;
  r.h1 = s.cycles;
  r.h0c = s.compact_components;
  // H^2_c vanishes on a graph, so h1c = h0c - chi_c with chi_c(C \ D) = chi(C) - #D
  r.h1c = r.h0c - (c.euler_char() - static_cast<long long>(points.size()));

  std::vector<long long> k(g.vertex_count()), minus(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) k[v] = g.valence(v) - 2;
  std::vector<long long> kpd(k), kmd(k);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    minus[v] = -m.divisor[v];
    kpd[v] += m.divisor[v];
    kmd[v] -= m.divisor[v];
  }
  r.rank_minus_d = baker_norine_rank(g, minus) + 1;
  r.rank_k_plus_d = baker_norine_rank(g, kpd) + 1;
  r.rank_d = baker_norine_rank(g, m.divisor) + 1;
  r.rank_k_minus_d = baker_norine_rank(g, kmd) + 1;
  r.compact_support_matches = r.h0c == r.rank_minus_d && r.h1c == r.rank_k_plus_d;
  return r;
}

}  // namespace tropic
