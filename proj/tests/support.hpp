#pragma once

#include "fhtw/bench.hpp"
#include "fhtw/io.hpp"
#include "fhtw/lp.hpp"
#include "fhtw/menger.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace fhtw::test {

inline Hypergraph hg(const std::string& text) { return parse_hypergraph(text).h; }

inline VertexSet vs(const Hypergraph& h, std::initializer_list<const char*> names) {
  std::vector<std::string> n(names.begin(), names.end());
  return make_set(vertices_by_name(h, n));
}

inline std::string fixture(const std::string& name) { return std::string(FHTW_FIXTURES) + "/" + name; }

// connected random hypergraph with edges of size 2..kmax
inline Hypergraph random_small(std::uint64_t seed, int nmax, int mmax, int kmax) {
  std::mt19937_64 rng(seed);
  auto below = [&](int b) { return static_cast<int>(rng() % static_cast<std::uint64_t>(b)); };
  RandomParams p;
  p.n = 2 + below(nmax - 1);
  p.kmin = 2;
  p.kmax = std::min(kmax, p.n);
  p.m = 1 + below(mmax);
  return gen_random(RandomKind::Uniform, p, rng());
}

// every connected hypergraph on n vertices with at most m distinct edges of size >= 2,
// edge sets taken in increasing mask order
inline std::vector<Hypergraph> all_small(int n, int m) {
  std::vector<unsigned> cand;
  for (unsigned s = 1; s < (1u << n); ++s)
    if (__builtin_popcount(s) >= 2) cand.push_back(s);
  std::vector<Hypergraph> out;
  std::vector<int> pick;
  auto emit = [&]() {
    unsigned cov = 0;
    for (int i : pick) cov |= cand[i];
    if (cov != (1u << n) - 1) return;
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      std::vector<int> e;
      for (int v = 0; v < n; ++v)
        if (cand[pick[i]] >> v & 1) e.push_back(v);
      edges.push_back({"e" + std::to_string(i), e});
    }
    Hypergraph h(names, edges);
    if (connected_components(h).size() == 1) out.push_back(std::move(h));
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) emit();
    if (static_cast<int>(pick.size()) == m) return;
    for (std::size_t i = start; i < cand.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// k internally disjoint a-b paths of length len, one singleton clique per interior vertex
struct DisjointPaths {
  Hypergraph g;
  CliqueFamily f;
  VertexSet a, b;
};

inline DisjointPaths disjoint_paths(int k, int len = 2) {
  std::vector<std::string> names{"a", "b"};
  std::vector<Edge> edges;
  std::vector<VertexSet> cl;
  for (int i = 0; i < k; ++i) {
    int prev = 0;
    for (int s = 0; s < len; ++s) {
      int v = static_cast<int>(names.size());
      names.push_back("p" + std::to_string(i) + "_" + std::to_string(s));
      edges.push_back({"e" + std::to_string(edges.size()), {prev, v}});
      cl.push_back({v});
      prev = v;
    }
    edges.push_back({"e" + std::to_string(edges.size()), {prev, 1}});
  }
  DisjointPaths d;
  d.g = Hypergraph(names, edges);
  d.f = make_clique_family(d.g, cl);
  d.a = {0};
  d.b = {1};
  return d;
}

struct GoldenLp {
  std::string name;
  LinearProgram<double> lp;
  LpStatus status;
  double value;
};

inline LinearProgram<double> cover_lp(int nv, const std::vector<std::vector<int>>& edges) {
  LinearProgram<double> lp(static_cast<int>(edges.size()), 1.0);
  for (int v = 0; v < nv; ++v) {
    std::vector<std::pair<int, double>> t;
    for (std::size_t e = 0; e < edges.size(); ++e)
      for (int u : edges[e])
        if (u == v) t.emplace_back(static_cast<int>(e), 1.0);
    lp.add_row(t, Sense::Ge, 1.0);
  }
  return lp;
}

inline std::vector<GoldenLp> golden_lps() {
  using S = Sense;
  std::vector<GoldenLp> g;
  auto add = [&](std::string n, LinearProgram<double> lp, double v, LpStatus st = LpStatus::Optimal) {
    g.push_back({std::move(n), std::move(lp), st, v});
  };
  {
    LinearProgram<double> lp(2, 1.0);
    lp.add_row({{0, 1.0}}, S::Ge, 1.0);
    lp.add_row({{1, 1.0}}, S::Ge, 1.0);
    add("two unit lower rows", lp, 2.0);
  }
  add("triangle cover", cover_lp(3, {{0, 1}, {1, 2}, {2, 0}}), 1.5);
  {
    LinearProgram<double> lp(1, 1.0);
    lp.add_row({{0, 1.0}}, S::Le, 0.2);
    lp.add_row({{0, 1.0}}, S::Ge, 0.5);
    add("contradictory bounds", lp, 0, LpStatus::Infeasible);
  }
  {
    auto lp = cover_lp(3, {{0, 1}, {1, 2}, {2, 0}});
    lp.upper(2) = 0;
    add("triangle, ca pinned", lp, 2.0);
  }
  {
    LinearProgram<double> lp(1, -1.0);
    add("box only", lp, -1.0);
  }
  {
    LinearProgram<double> lp(2, 1.0);
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Ge, 1.5);
    add("sum at least 1.5", lp, 1.5);
  }
  {
    LinearProgram<double> lp(2, -1.0);
    lp.upper.setConstant(kInf);
    lp.add_row({{0, 1.0}, {1, 2.0}}, S::Le, 2.0);
    lp.add_row({{0, 2.0}, {1, 1.0}}, S::Le, 2.0);
    add("two-constraint max", lp, -4.0 / 3.0);
  }
  {
    LinearProgram<double> lp(2);
    lp.objective << 2, 1;
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Eq, 1.0);
    add("equality split", lp, 1.0);
  }
  {
    LinearProgram<double> lp(1, 1.0);
    lp.add_row({{0, 1.0}}, S::Ge, 0.3);
    add("single ge", lp, 0.3);
  }
  {
    LinearProgram<double> lp(2, -1.0);
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Le, 1.5);
    add("le cap", lp, -1.5);
  }
  {
    LinearProgram<double> lp(1, -1.0);
    lp.upper(0) = kInf;
    add("unbounded ray", lp, 0, LpStatus::Unbounded);
  }
  add("4-cycle cover", cover_lp(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2.0);
  add("K4 cover", cover_lp(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 2.0);
  add("star cover", cover_lp(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 4.0);
  add("Fano cover", cover_lp(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}),
      7.0 / 3.0);
  add("single edge", cover_lp(4, {{0, 1, 2, 3}}), 1.0);
  {
    LinearProgram<double> lp(2, 0.0);
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Ge, 1.0);
    add("zero objective", lp, 0.0);
  }
  {
    LinearProgram<double> lp(2, 0.0);
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Eq, 3.0);
    add("equality beyond box", lp, 0, LpStatus::Infeasible);
  }
  {
    LinearProgram<double> lp(2);
    lp.objective << 0, 1;
    lp.add_row({{0, 1.0}, {1, -1.0}}, S::Le, -0.5);
    add("negative rhs", lp, 0.5);
  }
  {
    LinearProgram<double> lp(1, -1.0);
    lp.add_row({{0, -1.0}}, S::Ge, -0.25);
    add("negated ge", lp, -0.25);
  }
  {
    LinearProgram<double> lp(2);
    lp.objective << 2, 3;
    lp.upper.setConstant(kInf);
    lp.add_row({{0, 1.0}, {1, 2.0}}, S::Ge, 1.0);
    lp.add_row({{0, 3.0}, {1, 1.0}}, S::Ge, 1.0);
    add("diet", lp, 1.6);
  }
  {
    LinearProgram<double> lp(4);
    lp.objective << 1, 2, 3, 1;
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Eq, 1.0);
    lp.add_row({{2, 1.0}, {3, 1.0}}, S::Eq, 1.0);
    lp.add_row({{0, 1.0}, {2, 1.0}}, S::Eq, 1.0);
    lp.add_row({{1, 1.0}, {3, 1.0}}, S::Eq, 1.0);
    add("transportation", lp, 2.0);
  }
  {
    LinearProgram<double> lp(2, 1.0);
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Ge, 1.0);
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Ge, 1.0);
    lp.add_row({{0, 2.0}, {1, 2.0}}, S::Ge, 2.0);
    add("redundant rows", lp, 1.0);
  }
  {
    LinearProgram<double> lp(2);
    lp.objective << -1, -2;
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Le, 1.5);
    add("upper bound active", lp, -2.5);
  }
  {
    LinearProgram<double> lp(2, 1.0);
    lp.lower << 0.2, 0.3;
    add("nonzero lower bounds", lp, 0.5);
  }
  {
    LinearProgram<double> lp(3);
    lp.objective << -4, -2, -1;
    lp.upper.setConstant(kInf);
    lp.add_row({{0, 1.0}}, S::Le, 5.0);
    lp.add_row({{0, 4.0}, {1, 1.0}}, S::Le, 25.0);
    lp.add_row({{0, 8.0}, {1, 4.0}, {2, 1.0}}, S::Le, 125.0);
    add("Klee-Minty 3", lp, -125.0);
  }
  {
    LinearProgram<double> lp(3, -1.0);
    lp.add_row({{0, 1.0}, {2, 1.0}}, S::Le, 1.0);
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Le, 1.0);
    lp.add_row({{1, 1.0}, {2, 1.0}}, S::Le, 1.0);
    add("triangle matching", lp, -1.5);
  }
  add("5-cycle cover", cover_lp(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), 2.5);
  {
    LinearProgram<double> lp(3);
    lp.objective << 1, 2, 3;
    lp.add_row({{0, 1.0}, {1, 1.0}, {2, 1.0}}, S::Eq, 2.0);
    add("equality knapsack", lp, 3.0);
  }
  {
    LinearProgram<double> lp(2);
    lp.objective << 1, -1;
    lp.add_row({{0, 1.0}, {1, 1.0}}, S::Eq, 1.0);
    lp.add_row({{0, 1.0}, {1, -1.0}}, S::Ge, 0.0);
    add("balanced equality", lp, 0.0);
  }
  return g;
}

}  // namespace fhtw::test
