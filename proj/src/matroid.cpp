#include "tropic/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tropic {

namespace {

using Set = Matroid::Set;

int popcount(Set s) { return std::popcount(s); }

// Drop element e and shift the higher elements down.
Set remove_element(Set s, int e) {
  Set low = s & ((Set{1} << e) - 1);
  Set high = (s >> (e + 1)) << e;
  return low | high;
}

}  // namespace

Matroid::Matroid(int n, std::vector<Set> bases) : n_(n), rank_(0), bases_(std::move(bases)) {
  if (n < 0 || n > kMaxSize) throw std::invalid_argument("matroid: ground set size must be in 0..12");
  if (bases_.empty()) throw std::invalid_argument("matroid: no bases");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_ = popcount(bases_[0]);
  for (auto b : bases_) {
    if (b & ~ground()) throw std::invalid_argument("matroid: basis element outside the ground set");
    if (popcount(b) != rank_) throw std::invalid_argument("matroid: bases of different sizes");
  }
  std::set<Set> lookup(bases_.begin(), bases_.end());
  for (auto b1 : bases_)
    for (auto b2 : bases_) {
      Set only1 = b1 & ~b2, only2 = b2 & ~b1;
      for (int x = 0; x < n_; ++x) {
        if (!(only1 >> x & 1)) continue;
        bool found = false;
        for (int y = 0; y < n_ && !found; ++y)
          if ((only2 >> y & 1) && lookup.count((b1 & ~(Set{1} << x)) | (Set{1} << y))) found = true;
        if (!found) throw std::invalid_argument("matroid: basis exchange axiom fails");
      }
    }
  rank_of_.assign(std::size_t{1} << n_, 0);
  for (Set s = 0; s <= ground(); ++s) {
    int r = 0;
    for (auto b : bases_) r = std::max(r, popcount(b & s));
    rank_of_[s] = r;
    if (s == ground()) break;
  }
}

Matroid Matroid::uniform(int r, int n) {
  if (r < 0 || r > n) throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
  std::vector<Set> bases;
  for (Set s = 0; s < (Set{1} << n); ++s)
    if (popcount(s) == r) bases.push_back(s);
  return Matroid(n, bases);
}

Matroid Matroid::graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
  int n = static_cast<int>(edges.size());
  if (n > kMaxSize) throw std::invalid_argument("graphic matroid: too many edges");
  auto forest_size = [&](Set s) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int joins = 0;
    for (int e = 0; e < n; ++e) {
      if (!(s >> e & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) return -1;
      parent[a] = b;
      ++joins;
    }
    return joins;
  };
  int r = forest_size((Set{1} << n) - 1);
  if (r < 0) {
    // rank = size of a spanning forest
    r = 0;
    for (Set s = 0; s < (Set{1} << n); ++s) r = std::max(r, forest_size(s));
  }
  std::vector<Set> bases;
  for (Set s = 0; s < (Set{1} << n); ++s)
    if (popcount(s) == r && forest_size(s) == r) bases.push_back(s);
  return Matroid(n, bases);
}

Set Matroid::closure(Set s) const {
  Set c = s;
  int r = rank(s);
  for (int e = 0; e < n_; ++e)
    if (!(s >> e & 1) && rank(s | (Set{1} << e)) == r) c |= Set{1} << e;
  return c;
}

std::vector<Set> Matroid::flats() const {
  std::set<Set> fs;
  for (Set s = 0;; ++s) {
    fs.insert(closure(s));
    if (s == ground()) break;
  }
  std::vector<Set> out(fs.begin(), fs.end());
  std::stable_sort(out.begin(), out.end(), [&](Set a, Set b) { return rank(a) < rank(b); });
  return out;
}

bool Matroid::has_loop() const {
  for (int e = 0; e < n_; ++e)
    if (is_loop(e)) return true;
  return false;
}

Matroid Matroid::deletion(int e) const {
  std::vector<Set> bs;
  bool coloop = is_coloop(e);
  for (auto b : bases_)
    if (coloop || !(b >> e & 1)) bs.push_back(remove_element(b & ~(Set{1} << e), e));
  return Matroid(n_ - 1, bs);
}

Matroid Matroid::contraction(int e) const {
  if (is_loop(e)) return deletion(e);
  std::vector<Set> bs;
  for (auto b : bases_)
    if (b >> e & 1) bs.push_back(remove_element(b & ~(Set{1} << e), e));
  return Matroid(n_ - 1, bs);
}

Matroid Matroid::restriction(Set s) const {
  Matroid m = *this;
  for (int e = n_ - 1; e >= 0; --e)
    if (!(s >> e & 1)) m = m.deletion(e);
  return m;
}

Matroid Matroid::interval_minor(Set lower, Set upper) const {
  if ((lower & ~upper) != 0) throw std::invalid_argument("interval_minor: lower not inside upper");
  Matroid m = *this;
  // delete outside upper, contract lower; work from the top index so labels stay valid
  for (int e = n_ - 1; e >= 0; --e) {
    if (!(upper >> e & 1)) m = m.deletion(e);
    else if (lower >> e & 1) m = m.contraction(e);
  }
  return m;
}

Polyhedron flag_cone(const Matroid& m, const std::vector<Set>& chain) {
  std::size_t dim = static_cast<std::size_t>(m.size() - 1);
  Matrix rays;
  int last = m.size() - 1;
  for (auto f : chain) {
    Vec u(dim, Rational(0));
    if (f >> last & 1) {
      for (int i = 0; i < last; ++i)
        if (!(f >> i & 1)) u[i] = 1;
    } else {
      for (int i = 0; i < last; ++i)
        if (f >> i & 1) u[i] = -1;
    }
    rays.push_back(u);
  }
  return Polyhedron::from_generators(dim, {Vec(dim, Rational(0))}, rays);
}

namespace {

// Chains of proper nonempty flats, strictly increasing, of the given length.
void chains_of_length(const Matroid& m, const std::vector<Set>& proper, std::size_t len,
                      std::vector<Set>& cur, std::vector<std::vector<Set>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (auto f : proper) {
    if (!cur.empty() && !((cur.back() & ~f) == 0 && cur.back() != f)) continue;
    cur.push_back(f);
    chains_of_length(m, proper, len, cur, out);
    cur.pop_back();
  }
}

std::vector<Set> proper_flats(const Matroid& m) {
  std::vector<Set> out;
  for (auto f : m.flats())
    if (f != 0 && f != m.ground()) out.push_back(f);
  return out;
}

}  // namespace

TropicalCycle bergman_fan(const Matroid& m) {
  if (m.size() < 1) throw std::invalid_argument("bergman_fan: empty ground set");
  std::size_t dim = static_cast<std::size_t>(m.size() - 1);
  int d = m.rank() - 1;
  if (m.has_loop() || d < 0) return TropicalCycle(dim, std::max(d, 0));
  std::vector<std::vector<Set>> chains;
  std::vector<Set> cur;
  chains_of_length(m, proper_flats(m), static_cast<std::size_t>(d), cur, chains);
  std::vector<std::pair<Polyhedron, long long>> cells;
  for (const auto& c : chains) cells.emplace_back(flag_cone(m, c), 1);
  return TropicalCycle::from_cells(dim, d, cells);
}

namespace {

using MemoKey = std::pair<int, std::vector<Set>>;

Integer beta_rec(const Matroid& m, std::map<MemoKey, Integer>& memo) {
  int n = m.size();
  if (n == 0) return 0;
  if (n == 1) return m.is_coloop(0) ? 1 : 0;
  MemoKey key{n, m.bases()};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Integer result = 0;
  int pivot = -1;
  for (int e = 0; e < n; ++e) {
    if (m.is_loop(e) || m.is_coloop(e)) {
      pivot = -2;
      break;
    }
    if (pivot < 0) pivot = e;
  }
  if (pivot >= 0) result = beta_rec(m.deletion(pivot), memo) + beta_rec(m.contraction(pivot), memo);
  memo.emplace(std::move(key), result);
  return result;
}

std::vector<Integer> poly_sub(std::vector<Integer> a, const std::vector<Integer>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

std::vector<Integer> char_rec(const Matroid& m) {
  if (m.size() == 0) return {1};
  int e = m.size() - 1;
  if (m.is_loop(e)) return {0};
  auto c = char_rec(m.contraction(e));
  if (m.is_coloop(e)) {
    std::vector<Integer> out(c.size() + 1, 0);  // (t - 1) c
    for (std::size_t i = 0; i < c.size(); ++i) {
      out[i + 1] += c[i];
      out[i] -= c[i];
    }
    return out;
  }
  return poly_sub(char_rec(m.deletion(e)), c);
}

}  // namespace

Integer beta_invariant(const Matroid& m) {
  std::map<MemoKey, Integer> memo;
  return beta_rec(m, memo);
}

std::vector<Integer> characteristic_polynomial(const Matroid& m) {
  auto c = char_rec(m);
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

TropicalCycle csm_cycle(const Matroid& m, int k) {
  std::size_t dim = static_cast<std::size_t>(m.size() - 1);
  if (k < 0 || k > m.rank() - 1) throw std::invalid_argument("csm_cycle: k outside 0..rank-1");
  if (m.has_loop()) return TropicalCycle(dim, k);
  std::map<MemoKey, Integer> memo;
  std::vector<std::vector<Set>> chains;
  std::vector<Set> cur;
  chains_of_length(m, proper_flats(m), static_cast<std::size_t>(k), cur, chains);
  std::vector<std::pair<Polyhedron, long long>> cells;
  for (const auto& c : chains) {
    Integer w = ((m.rank() - 1 - k) % 2 == 0) ? 1 : -1;
    Set lower = 0;
    std::vector<Set> steps = c;
    steps.push_back(m.ground());
    for (auto upper : steps) {
      w *= beta_rec(m.interval_minor(lower, upper), memo);
      if (w == 0) break;
      lower = upper;
    }
    if (w != 0) cells.emplace_back(flag_cone(m, c), to_ll(w));
  }
  return TropicalCycle::from_cells(dim, k, cells);
}

std::vector<std::pair<std::string, Matroid>> matroid_catalogue(int max_n) {
  std::vector<std::pair<std::string, Matroid>> out;
  for (int n = 1; n <= max_n; ++n)
    for (int r = 1; r <= n; ++r)
      out.emplace_back("U_{" + std::to_string(r) + "," + std::to_string(n) + "}", Matroid::uniform(r, n));
  out.emplace_back("M(K4)", Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  return out;
}

}  // namespace tropic
