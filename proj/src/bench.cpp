#include "fhtw/bench.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace fhtw {

GapInstance gen_gap_instance(int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("gen_gap_instance: n must lie in [2,12]");
  // integer units: the circle has length 2^{n+1}
  const long len = 1L << (n + 1);
  struct Iv {
    int j, b, k;
    long center, half;
  };
  std::vector<Iv> iv;
  std::vector<std::string> names;
  std::map<std::tuple<int, int, int>, int> id;
  for (int j = 1; j <= n; ++j)
    for (int b = 0; b <= 1; ++b)
      for (int k = 0; k < (1 << (j + 1)); ++k) {
        id[{j, b, k}] = static_cast<int>(iv.size());
        iv.push_back({j, b, k, static_cast<long>(k) << (n - j), 1L << (n - j)});
        names.push_back("I" + std::to_string(j) + "_" + std::to_string(b) + "_" + std::to_string(k));
      }
  std::vector<Edge> edges;
  GapInstance g;
  const int nv = static_cast<int>(iv.size());
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) {
      long d = std::labs(iv[u].center - iv[v].center) % len;
      d = std::min(d, len - d);
      if (d < iv[u].half + iv[v].half) edges.push_back({"s" + std::to_string(g.short_edges++), {u, v}});
    }
  for (int b = 0; b <= 1; ++b)
    for (int k = 0; k < (1 << (n + 1)); ++k) {
      std::vector<int> path;
      int j = n, bb = b, kk = k;
      path.push_back(id.at({j, bb, kk}));
      while (j > 1) {
        bb = kk % 2;
        kk /= 2;
        --j;
        path.push_back(id.at({j, bb, kk}));
      }
      edges.push_back({"L" + std::to_string(g.long_edges++), path});
    }
  g.h = Hypergraph(std::move(names), std::move(edges));
  g.a = id.at({n, 0, 0});
  g.b = id.at({n, 0, 1 << n});
  return g;
}

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  // raw output reduced mod bound, identical on every platform
  int below(int bound) { return static_cast<int>(eng() % static_cast<std::uint64_t>(bound)); }
};

std::vector<int> pick_distinct(Rng& rng, std::vector<int> pool, int k) {
  for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(static_cast<int>(pool.size()) - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<std::string> vnames(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

}  // namespace

Hypergraph gen_random(RandomKind kind, const RandomParams& p, std::uint64_t seed) {
  if (p.n < 1 || p.kmin < 1 || p.kmax < p.kmin) throw std::invalid_argument("gen_random: bad parameters");
  Rng rng(seed);
  std::vector<Edge> edges;
  if (kind == RandomKind::Uniform) {
    if (p.m < 1 || p.kmax > p.n) throw std::invalid_argument("gen_random: need m >= 1 and kmax <= n");
    std::vector<int> all(p.n);
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < p.m; ++i) {
      int k = p.kmin + rng.below(p.kmax - p.kmin + 1);
      edges.push_back({"e" + std::to_string(i), pick_distinct(rng, all, k)});
    }
    // chain components together
    std::vector<int> parent(p.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges)
      for (int v : e.vertices) parent[find(v)] = find(e.vertices.front());
    std::vector<int> reps;
    for (int v = 0; v < p.n; ++v)
      if (find(v) == v) reps.push_back(v);
    for (std::size_t i = 0; i + 1 < reps.size(); ++i)
      edges.push_back({"r" + std::to_string(i), {reps[i], reps[i + 1]}});
  } else {
    if (p.kmax < 2 && p.n > 1) throw std::invalid_argument("gen_random: acyclic needs kmax >= 2");
    std::vector<std::vector<int>> bags;
    int next = 0;
    {
      int k = std::min(p.n, p.kmin + rng.below(p.kmax - p.kmin + 1));
      std::vector<int> b;
      for (int i = 0; i < k; ++i) b.push_back(next++);
      bags.push_back(b);
    }
    while (next < p.n) {
      const auto& par = bags[rng.below(static_cast<int>(bags.size()))];
      int k = std::max(2, p.kmin + rng.below(p.kmax - p.kmin + 1));
      int shared = 1 + rng.below(std::min(static_cast<int>(par.size()), k - 1));
      int fresh = std::min(k - shared, p.n - next);
      std::vector<int> b = pick_distinct(rng, par, shared);
      for (int i = 0; i < fresh; ++i) b.push_back(next++);
      bags.push_back(make_set(b));
    }
    for (std::size_t i = 0; i < bags.size(); ++i) edges.push_back({"e" + std::to_string(i), bags[i]});
  }
  return Hypergraph(vnames(p.n), std::move(edges));
}

ValidationReport validate_td(const Hypergraph& h, const TreeDecomposition& td) {
  ValidationReport r;
  r.violations = check_axioms(h, td);
  for (const auto& v : r.violations) {
    if (v.axiom == "tree") r.tree_ok = false;
    if (v.axiom == "connectivity") r.connectivity_ok = false;
    if (v.axiom == "coverage") r.coverage_ok = false;
  }
  const int n = h.num_vertices();
  for (const auto& bag : td.bags) {
    VertexSet b;
    for (int v : bag)
      if (v >= 0 && v < n) b.push_back(v);
    CoverResult c = frac_cover(h, indicator(n, b));
    r.bag_rho.push_back(c.value);
    r.fhtw_of_td = std::max(r.fhtw_of_td, c.value);
    r.ghtw_upper = std::max(r.ghtw_upper, static_cast<int>(greedy_cover(h, b).size()));
  }
  return r;
}

double oracle_fhtw(const Hypergraph& h) {
  const int n = h.num_vertices();
  if (n > 8) throw std::invalid_argument("oracle_fhtw: at most 8 vertices");
  if (n == 0) return 0;
  std::vector<unsigned> adj0(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w : h.neighbors(v)) adj0[v] |= 1u << w;
  std::unordered_map<unsigned, double> cache;
  auto rho = [&](unsigned m) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    return cache[m] = rho_star(h, s);
  };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double best = kInf;
  do {
    std::vector<unsigned> adj = adj0;
    unsigned gone = 0;
    double w = 0;
    for (int v : order) {
      unsigned nb = adj[v] & ~gone;
      w = std::max(w, rho(nb | 1u << v));
      if (w >= best - 1e-12) break;
      for (int u = 0; u < n; ++u)
        if (nb >> u & 1) adj[u] |= nb & ~(1u << u);
      gone |= 1u << v;
    }
    best = std::min(best, w);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

OracleSeparator oracle_min_separator(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const EdgeSet& e) {
  const int n = h.num_vertices();
  if (n > 14) throw std::invalid_argument("oracle_min_separator: at most 14 vertices");
  OracleSeparator best;
  if (separates(h, a, b, {})) return best;
  best.value = kInf;
  bool found = false;
  for (unsigned m = 1; m < (1u << n); ++m) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    if (!separates(h, a, b, s)) continue;
    // rho* is monotone, so non-minimal separators never win outright
    bool minimal = true;
    for (std::size_t i = 0; i < s.size() && minimal; ++i) {
      VertexSet t = s;
      t.erase(t.begin() + static_cast<long>(i));
      if (separates(h, a, b, t)) minimal = false;
    }
    if (!minimal) continue;
    double val = frac_cover(h, e, indicator(n, s)).value;
    // ties: avoid the terminals, then lexicographic
    auto on_terminals = [&](const VertexSet& x) {
      return set_intersection(x, a).size() + set_intersection(x, b).size();
    };
    bool better = !found || val < best.value - 1e-9;
    if (!better && val <= best.value + 1e-9) {
      auto ts = on_terminals(s), tb = on_terminals(best.s);
      better = ts < tb || (ts == tb && s < best.s);
    }
    if (better) {
      found = true;
      best.s = s;
      best.value = val;
    }
  }
  return best;
}

bool gyo_acyclic(const Hypergraph& h) {
  std::vector<std::set<int>> es;
  for (const auto& e : h.edges()) es.emplace_back(e.vertices.begin(), e.vertices.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, int> occ;
    for (const auto& e : es)
      for (int v : e) ++occ[v];
    for (auto& e : es)
      for (auto it = e.begin(); it != e.end();)
        if (occ[*it] == 1) {
          it = e.erase(it);
          changed = true;
        } else {
          ++it;
        }
    for (std::size_t i = 0; i < es.size(); ++i) {
      bool drop = es[i].empty();
      for (std::size_t j = 0; j < es.size() && !drop; ++j)
        if (j != i && std::includes(es[j].begin(), es[j].end(), es[i].begin(), es[i].end()) &&
            (es[j] != es[i] || j < i))
          drop = true;
      if (drop) {
        es.erase(es.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return es.empty();
}

}  // namespace fhtw
