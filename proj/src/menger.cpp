#include "fhtw/menger.hpp"

#include "fhtw/lp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fhtw {

CliqueFamily make_clique_family(const Hypergraph& g, std::vector<VertexSet> cliques, std::vector<std::string> names) {
  CliqueFamily f;
  if (!names.empty() && names.size() != cliques.size()) throw std::invalid_argument("clique names/sets mismatch");
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    VertexSet c = make_set(std::move(cliques[i]));
    if (c.empty()) throw std::invalid_argument("empty clique");
    for (std::size_t p = 0; p < c.size(); ++p) {
      if (c[p] < 0 || c[p] >= g.num_vertices()) throw std::invalid_argument("clique vertex out of range");
      for (std::size_t q = p + 1; q < c.size(); ++q)
        if (!contains(g.neighbors(c[p]), c[q]))
          throw std::invalid_argument("not a clique: " + g.vertex_name(c[p]) + " and " + g.vertex_name(c[q]) +
                                      " are not adjacent");
    }
    f.names.push_back(names.empty() ? "F" + std::to_string(i) : names[i]);
    f.cliques.push_back(std::move(c));
  }
  return f;
}

PathLp path_lp(const Hypergraph& g, const VertexSet& a, const VertexSet& b, const CliqueFamily& f, long path_cap) {
  if (!set_intersection(a, b).empty()) throw std::invalid_argument("path_lp: A and B intersect");
  const int n = g.num_vertices();
  const int k = f.size();
  PathLp out;
  out.y = EdgeWeights::Zero(k);
  std::vector<char> in_a = mask(n, a), in_b = mask(n, b);

  // chordless paths: every other A-B path contains one of them
  std::vector<int> on(n, 0);  // number of path vertices adjacent to v, or on it
  Path cur;
  bool capped = false;
  auto push = [&](int v) {
    cur.push_back(v);
    ++on[v];
    for (int w : g.neighbors(v)) ++on[w];
  };
  auto pop = [&]() {
    int v = cur.back();
    cur.pop_back();
    --on[v];
    for (int w : g.neighbors(v)) --on[w];
  };
  auto dfs = [&](auto&& self) -> void {
    if (capped) return;
    const int last = cur.back();
    for (int w : g.neighbors(last)) {
      // w may touch the path only through last
      if (on[w] != 1 || in_a[w]) continue;
      if (in_b[w]) {
        if (static_cast<long>(out.paths.size()) >= path_cap) {
          capped = true;
          return;
        }
        out.paths.push_back(cur);
        out.paths.back().push_back(w);
        continue;
      }
      push(w);
      self(self);
      pop();
      if (capped) return;
    }
  };
  for (int s : a) {
    push(s);
    dfs(dfs);
    pop();
    if (capped) break;
  }
  if (capped) {
    out.status = PathLpStatus::CapExceeded;
    out.paths.clear();
    return out;
  }
  out.z = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(out.paths.size()));
  if (out.paths.empty()) return out;

  LinearProgram<double> lp(k, 1.0);
  lp.upper.setConstant(kInf);
  for (const auto& p : out.paths) {
    std::vector<char> on_p = mask(n, make_set(p));
    std::vector<std::pair<int, double>> t;
    for (int i = 0; i < k; ++i)
      for (int v : f.cliques[i])
        if (on_p[v]) {
          t.emplace_back(i, 1.0);
          break;
        }
    lp.add_row(std::move(t), Sense::Ge, 1.0);
  }
  auto sol = solve_lp(lp);
  if (sol.status == LpStatus::Infeasible) throw std::invalid_argument("path_lp: some A-B path meets no clique");
  if (!sol.optimal()) throw std::runtime_error(std::string("path_lp: LP ") + to_string(sol.status));
  out.opt = sol.objective;
  for (int i = 0; i < k; ++i) out.y(i) = std::max(0.0, sol.x(i));
  for (Eigen::Index r = 0; r < out.z.size(); ++r) out.z(r) = std::max(0.0, sol.duals(r));
  return out;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

PathSample sample_paths(const std::vector<Path>& paths, const Eigen::VectorXd& z, double f, const CliqueFamily& fam,
                        std::uint64_t seed, int max_attempts) {
  if (paths.empty() || static_cast<Eigen::Index>(paths.size()) != z.size())
    throw std::invalid_argument("sample_paths: path/weight mismatch");
  const double total = z.sum();
  if (!(total > f)) throw std::invalid_argument("sample_paths: dual value must exceed f");
  PathSample out;
  out.t = std::max(1.0, std::log2(static_cast<double>(std::max(fam.size(), 1))));
  out.ell = std::max(1, static_cast<int>(std::floor(f * out.t)));
  out.ell_ceil = std::max(1, static_cast<int>(std::ceil(f * out.t)));

  std::vector<double> cdf(paths.size());
  double acc = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) cdf[i] = (acc += std::max(0.0, z(i)) / total);
  std::vector<std::vector<char>> meets(fam.size(), std::vector<char>(paths.size(), 0));
  for (int c = 0; c < fam.size(); ++c)
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (int v : paths[i])
        if (contains(fam.cliques[c], v)) {
          meets[c][i] = 1;
          break;
        }

  for (int att = 0; att < max_attempts; ++att) {
    out.attempts = att + 1;
    std::vector<int> pick;
    for (int d = 0; d < out.ell; ++d) {
      std::uint64_t u = mix64(mix64(mix64(seed) + static_cast<std::uint64_t>(att)) + static_cast<std::uint64_t>(d));
      double r = static_cast<double>(u >> 11) * 0x1.0p-53;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
      int i = it == cdf.end() ? static_cast<int>(paths.size()) - 1 : static_cast<int>(it - cdf.begin());
      while (z(i) <= 0 && i > 0) --i;
      pick.push_back(i);
    }
    out.counts.assign(fam.size(), 0);
    for (int c = 0; c < fam.size(); ++c)
      for (int i : pick) out.counts[c] += meets[c][i];
    out.paths.clear();
    for (int i : pick) out.paths.push_back(paths[i]);
    out.ok = std::all_of(out.counts.begin(), out.counts.end(), [&](int x) { return x < 6 * out.t; });
    if (out.ok) break;
  }
  return out;
}

Hypergraph menger_hypergraph(const Hypergraph& g, const CliqueFamily& f) {
  std::vector<Edge> edges;
  std::set<std::string> used;
  for (int e = 0; e < g.num_edges(); ++e) used.insert(g.edge_name(e));
  for (int i = 0; i < f.size(); ++i) {
    if (used.count(f.names[i])) throw std::invalid_argument("clique name clashes with an edge name: " + f.names[i]);
    edges.push_back({f.names[i], f.cliques[i]});
  }
  for (const auto& e : g.edges()) edges.push_back(e);
  return Hypergraph(g.vertex_names(), std::move(edges));
}

MengerOutcome clique_menger(const Hypergraph& g, const VertexSet& a, const VertexSet& b, const CliqueFamily& f,
                            double budget, std::uint64_t seed, long path_cap) {
  if (!(budget > 0)) throw std::invalid_argument("clique_menger: f must be positive");
  MengerOutcome out;
  out.lp = path_lp(g, a, b, f, path_cap);
  if (out.lp.status == PathLpStatus::CapExceeded)
    throw PathCapExceeded("clique_menger: more than " + std::to_string(path_cap) + " paths");
  const int n = g.num_vertices();
  out.bound_n = (8 + 4 * std::log(std::max(n, 1))) * budget;

  if (out.lp.opt <= budget + 1e-9) {
    out.branch = MengerOutcome::Branch::Separator;
    Hypergraph h = menger_hypergraph(g, f);
    VertexWeights x = VertexWeights::Zero(n);
    for (int i = 0; i < f.size(); ++i)
      for (int v : f.cliques[i]) x(v) += out.lp.y(i);
    for (int v = 0; v < n; ++v) {
      x(v) = std::min(x(v), 1.0);
      if (x(v) < 1e-9) x(v) = 0;
    }
    EdgeSet fe;
    for (int i = 0; i < f.size(); ++i) fe.push_back(i);
    const double ah = alpha_upper_bound(h, support(x)).bound;
    if (separates(h, a, b, {})) {
      out.separator.cover = frac_cover(h, fe, VertexWeights::Zero(n));
    } else {
      out.separator = round_absep_both(h, a, b, x, fe, ah);
    }
    out.separator.lp_value = out.lp.opt;
    out.bound_alpha = (8 + 4 * std::log(std::max(ah, 1.0))) * budget;
    for (int i = 0; i < f.size(); ++i)
      if (out.separator.cover.weights.size() > i && out.separator.cover.weights(i) > 0)
        out.cover_names.push_back(f.names[i]);
  } else {
    out.branch = MengerOutcome::Branch::Paths;
    out.sample = sample_paths(out.lp.paths, out.lp.z, budget, f, seed);
  }
  return out;
}

}  // namespace fhtw
