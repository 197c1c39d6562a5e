#include "fhtw/covers.hpp"

#include "fhtw/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace fhtw {

CoverResult frac_cover(const Hypergraph& h, const EdgeSet& e, const VertexWeights& demand) {
  const int n = h.num_vertices();
  if (demand.size() != n) throw std::invalid_argument("frac_cover: demand size mismatch");
  CoverResult out;
  out.weights = EdgeWeights::Zero(h.num_edges());
  out.restricted_to = e;

  std::vector<char> in_e(h.num_edges(), 0);
  for (int f : e) in_e[f] = 1;
  std::vector<int> col(h.num_edges(), -1);
  std::vector<int> used;
  std::vector<int> demanded;
  for (int v = 0; v < n; ++v) {
    if (demand(v) <= 0) continue;
    demanded.push_back(v);
    bool any = false;
    for (int f : h.incident(v))
      if (in_e[f]) {
        any = true;
        if (col[f] < 0) {
          col[f] = static_cast<int>(used.size());
          used.push_back(f);
        }
      }
    if (!any) {
      out.value = kInf;
      return out;
    }
  }
  if (demanded.empty()) return out;

  LinearProgram<double> lp(static_cast<int>(used.size()), 1.0);
  for (int v : demanded) {
    std::vector<std::pair<int, double>> terms;
    for (int f : h.incident(v))
      if (in_e[f]) terms.emplace_back(col[f], 1.0);
    lp.add_row(std::move(terms), Sense::Ge, std::min(demand(v), 1.0));
  }
  auto sol = solve_lp(lp);
  if (!sol.optimal())
    throw std::runtime_error(std::string("frac_cover: LP ") + to_string(sol.status));
  for (std::size_t c = 0; c < used.size(); ++c) out.weights(used[c]) = std::clamp(sol.x(c), 0.0, 1.0);
  out.value = sol.objective;
  return out;
}

CoverResult frac_cover(const Hypergraph& h, const VertexWeights& demand) {
  return frac_cover(h, all_edges(h), demand);
}

double rho_star(const Hypergraph& h, const VertexSet& s) {
  return frac_cover(h, indicator(h.num_vertices(), s)).value;
}

double rho_star(const Hypergraph& h, const VertexWeights& x) { return frac_cover(h, x).value; }

double rho_star(const Hypergraph& h, const EdgeSet& e, const VertexSet& s) {
  return frac_cover(h, e, indicator(h.num_vertices(), s)).value;
}

EdgeSet greedy_cover(const Hypergraph& h, const VertexSet& s) {
  std::vector<char> open = mask(h.num_vertices(), s);
  std::size_t left = s.size();
  EdgeSet out;
  while (left > 0) {
    int best = -1, best_count = 0;
    for (int e = 0; e < h.num_edges(); ++e) {
      int c = 0;
      for (int v : h.edge(e)) c += open[v];
      if (c > best_count) {
        best_count = c;
        best = e;
      }
    }
    if (best < 0) throw std::invalid_argument("greedy_cover: uncoverable vertex");
    out.push_back(best);
    for (int v : h.edge(best))
      if (open[v]) {
        open[v] = 0;
        --left;
      }
  }
  return out;
}

bool has_intersection_property(const Hypergraph& h, int i, int j) {
  if (i < 1) throw std::invalid_argument("intersection property needs i >= 1");
  const int m = h.num_edges();
  if (i > m) return true;
  // extend edge tuples while the running intersection still exceeds j
  std::function<bool(int, int, const VertexSet&)> rec = [&](int start, int depth, const VertexSet& acc) {
    if (static_cast<int>(acc.size()) <= j) return true;
    if (depth == i) return false;
    for (int e = start; e <= m - (i - depth); ++e) {
      VertexSet next = depth == 0 ? h.edge(e) : set_intersection(acc, h.edge(e));
      if (!rec(e + 1, depth + 1, next)) return false;
    }
    return true;
  };
  return rec(0, 0, all_vertices(h));
}

BoostedCover boosted_integral_cover(const Hypergraph& h, int i, int j, bool verify) {
  if (i < 1) throw std::invalid_argument("boosted_integral_cover: i must be >= 1");
  BoostedCover out;
  if (verify) {
    if (!has_intersection_property(h, i, j))
      throw std::invalid_argument("boosted_integral_cover: i-j intersection property violated");
    out.verified = true;
  }
  const double jc = std::max(j, 1);
  out.k = rho_star(h, all_vertices(h));
  out.bound = 10.0 * out.k * i * std::log2(std::max(2.0 * out.k * jc, 2.0));

  Hypergraph cur = h;
  while (cur.num_vertices() > 0) {
    if (out.rounds > h.num_edges()) throw std::logic_error("boosted_integral_cover: too many rounds");
    ++out.rounds;
    const double n = cur.num_vertices();
    auto cover = frac_cover(cur, VertexWeights::Ones(cur.num_vertices()));
    const double k = cover.value;
    auto take_greedy = [&] {
      for (int e : greedy_cover(cur, all_vertices(cur))) out.edges.push_back(h.find_edge(cur.edge_name(e)));
    };
    if (n <= jc * std::pow(2.0 * k, i)) {
      take_greedy();
      break;
    }
    int pick = -1;
    for (int e = 0; e < cur.num_edges(); ++e)
      if (cover.weights(e) >= 1.0 / (2.0 * i) - 1e-9) {
        pick = e;
        break;
      }
    if (pick < 0) {
      out.fallback = true;
      take_greedy();
      break;
    }
    out.edges.push_back(h.find_edge(cur.edge_name(pick)));
    cur = induced(cur, set_difference(all_vertices(cur), cur.edge(pick)));
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

int exact_alpha(const Hypergraph& h, const VertexSet& r) {
  const int k = static_cast<int>(r.size());
  if (k > 62) throw std::invalid_argument("exact_alpha: set too large");
  std::vector<std::uint64_t> nb(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && contains(h.neighbors(r[a]), r[b])) nb[a] |= std::uint64_t{1} << b;
  int best = 0;
  std::function<void(std::uint64_t, int)> rec = [&](std::uint64_t cand, int size) {
    if (size + __builtin_popcountll(cand) <= best) return;
    if (!cand) {
      best = size;
      return;
    }
    int v = __builtin_ctzll(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    rec(cand & ~bit & ~nb[v], size + 1);
    rec(cand & ~bit, size);
  };
  rec(k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1, 0);
  return best;
}

AlphaBound alpha_upper_bound(const Hypergraph& h, const VertexSet& r) {
  AlphaBound out;
  if (r.empty()) return out;
  out.rho_star = rho_star(h, r);
  out.bound = std::min<double>(static_cast<double>(r.size()), out.rho_star);
  if (r.size() <= 16) {
    out.exact = exact_alpha(h, r);
    out.bound = std::min<double>(out.bound, out.exact);
  }
  return out;
}

}  // namespace fhtw
