#include "fhtw/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace fhtw {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Decomposition: return "decomposition";
    case Outcome::No: return "no";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

TreeDecomposition trivial_decomposition(const VertexSet& bag) {
  TreeDecomposition td;
  td.bags.push_back(bag);
  return td;
}

TreeDecomposition glue(VertexSet root_bag, std::vector<TreeDecomposition> children) {
  TreeDecomposition td;
  td.bags.push_back(std::move(root_bag));
  for (auto& c : children) {
    if (c.bags.empty()) continue;
    if (c.tree_edges.size() + 1 != c.bags.size()) throw std::logic_error("glue: child is not a tree");
    const int off = td.size();
    for (auto& b : c.bags) td.bags.push_back(std::move(b));
    for (auto [p, q] : c.tree_edges) td.tree_edges.emplace_back(p + off, q + off);
    td.tree_edges.emplace_back(0, c.root + off);
  }
  return td;
}

void certify(const Hypergraph& h, TreeDecomposition& td) {
  td.bag_covers.clear();
  td.width = 0;
  for (const auto& b : td.bags) {
    td.bag_covers.push_back(frac_cover(h, indicator(h.num_vertices(), b)));
    if (!td.bag_covers.back().feasible()) throw std::runtime_error("certify: bag has no fractional cover");
    td.width = std::max(td.width, td.bag_covers.back().value);
  }
}

TreeDecomposition strip_empty_bags(const TreeDecomposition& td) {
  const int k = td.size();
  std::vector<std::set<int>> adj(k);
  for (auto [p, q] : td.tree_edges) {
    adj[p].insert(q);
    adj[q].insert(p);
  }
  std::vector<char> alive(k, 1);
  int root = td.root;
  int remaining = k;
  for (int u = 0; u < k; ++u) {
    if (!td.bags[u].empty() || remaining == 1) continue;
    std::vector<int> nb(adj[u].begin(), adj[u].end());
    for (int w : nb) adj[w].erase(u);
    adj[u].clear();
    for (std::size_t j = 1; j < nb.size(); ++j) {
      adj[nb[0]].insert(nb[j]);
      adj[nb[j]].insert(nb[0]);
    }
    alive[u] = 0;
    --remaining;
    if (root == u) root = nb.empty() ? -1 : nb[0];
  }
  std::vector<int> idx(k, -1);
  TreeDecomposition out;
  for (int u = 0; u < k; ++u)
    if (alive[u]) {
      idx[u] = out.size();
      out.bags.push_back(td.bags[u]);
      if (!td.bag_covers.empty()) out.bag_covers.push_back(td.bag_covers[u]);
    }
  if (root < 0)
    for (int u = 0; u < k && root < 0; ++u)
      if (alive[u]) root = u;
  out.root = root < 0 ? 0 : idx[root];
  // orient away from the root
  std::vector<char> seen(k, 0);
  std::vector<int> stack{root};
  if (root >= 0) seen[root] = 1;
  while (!stack.empty() && root >= 0) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        out.tree_edges.emplace_back(idx[u], idx[w]);
        stack.push_back(w);
      }
  }
  out.width = td.width;
  return out;
}

std::vector<AxiomViolation> check_axioms(const Hypergraph& h, const TreeDecomposition& td) {
  std::vector<AxiomViolation> out;
  const int k = td.size();
  const int n = h.num_vertices();
  if (k == 0) {
    out.push_back({"tree", "no nodes"});
    return out;
  }
  std::vector<std::vector<int>> adj(k);
  bool bad_edge = false;
  for (auto [p, q] : td.tree_edges) {
    if (p < 0 || q < 0 || p >= k || q >= k || p == q) {
      bad_edge = true;
      continue;
    }
    adj[p].push_back(q);
    adj[q].push_back(p);
  }
  {
    std::vector<char> seen(k, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          st.push_back(w);
        }
    }
    if (bad_edge || cnt != k || static_cast<int>(td.tree_edges.size()) != k - 1)
      out.push_back({"tree", "node/edge structure is not a tree"});
  }
  std::vector<std::vector<int>> holders(n);
  for (int u = 0; u < k; ++u)
    for (int v : td.bags[u]) {
      if (v < 0 || v >= n) {
        out.push_back({"coverage", "unknown vertex index " + std::to_string(v)});
        continue;
      }
      holders[v].push_back(u);
    }
  for (int v = 0; v < n; ++v) {
    if (holders[v].empty()) {
      out.push_back({"connectivity", h.vertex_name(v)});
      continue;
    }
    std::vector<char> in(k, 0), seen(k, 0);
    for (int u : holders[v]) in[u] = 1;
    std::vector<int> st{holders[v][0]};
    seen[holders[v][0]] = 1;
    std::size_t cnt = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : adj[u])
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          ++cnt;
          st.push_back(w);
        }
    }
    if (cnt != holders[v].size()) out.push_back({"connectivity", h.vertex_name(v)});
  }
  for (int e = 0; e < h.num_edges(); ++e) {
    bool ok = false;
    for (int u = 0; u < k && !ok; ++u) ok = is_subset(h.edge(e), td.bags[u]);
    if (!ok) out.push_back({"coverage", h.edge_name(e)});
  }
  return out;
}

namespace {

double clog2(double v) { return std::log2(std::max(v, 2.0)); }
double cln(double v) { return std::log(std::max(v, 2.0)); }

}  // namespace

DecomposeParams DecomposeParams::derive(const Hypergraph& h, double omega, double w_T) {
  DecomposeParams p;
  p.omega = omega;
  p.w_T = w_T;
  const double ah = alpha_upper_bound(h, all_vertices(h)).bound;
  const double m = std::min({8 + 4 * cln(omega * w_T), 8 + 4 * cln(ah), 6.0 * degeneracy(h).mu});
  p.w_prime = (m + 1) * (104 + 16 * clog2(omega)) * omega;
  p.lambda = std::max(2 * p.w_prime / p.phi_prime, 6 * omega) + 1;
  return p;
}

void DecomposeParams::validate() const {
  if (!(omega >= 1)) throw std::invalid_argument("omega must be >= 1");
  if (!(phi_prime > 0 && phi_prime < 1)) throw std::invalid_argument("phi' must lie in (0,1)");
  if (!(lambda > 2 * w_prime / phi_prime)) throw std::invalid_argument("lambda must exceed 2w'/phi'");
  if (!(lambda > 6 * omega)) throw std::invalid_argument("lambda must exceed 6 omega");
}

RFamily r_family(const TreeDecomposition& t, double omega, long cap) {
  RFamily out;
  const int p = t.size();
  const int kmax = std::max(1, static_cast<int>(std::floor(omega)));
  std::set<VertexSet> seen;
  std::vector<int> idx;
  bool stop = false;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (stop) return;
    if (left == 0) {
      VertexSet u;
      for (int i : idx) u = set_union(u, t.bags[i]);
      if (u.empty() || !seen.insert(u).second) return;
      if (cap > 0 && static_cast<long>(out.sets.size()) >= cap) {
        out.truncated = true;
        stop = true;
        return;
      }
      out.sets.push_back(std::move(u));
      return;
    }
    for (int i = start; i < p && !stop; ++i) {
      idx.push_back(i);
      rec(i + 1, left - 1);
      idx.pop_back();
    }
  };
  for (int k = 1; k <= std::min(kmax, p) && !stop; ++k) rec(0, k);
  return out;
}

namespace {

struct Decomposer {
  const Hypergraph& h;
  const std::vector<VertexSet>& family;
  const DecomposeParams& p;

  void check(const VertexSet& w, const VertexSet& z) const {
    if (rho_star(h, z) > p.lambda + 1e-7) throw std::logic_error("decompose: rho*(Z) exceeds lambda");
    VertexSet wz = set_difference(w, z);
    if (wz.empty() && w != z) throw std::logic_error("decompose: W minus Z is empty");
    if (connected_components(induced(h, w)).size() > 1) throw std::logic_error("decompose: H[W] disconnected");
    if (!wz.empty()) {
      if (connected_components(induced(h, wz)).size() > 1)
        throw std::logic_error("decompose: H[W minus Z] disconnected");
      if (neighborhood(h, wz) != z) throw std::logic_error("decompose: N(W minus Z) differs from Z");
    }
  }

  std::optional<TreeDecomposition> run(const VertexSet& w, const VertexSet& z0, int depth) const {
    if (depth > h.num_vertices() + 1) throw std::logic_error("decompose: recursion too deep");
    if (p.check_invariants) check(w, z0);

    VertexSet z = z0;
    while (rho_star(h, z) <= p.lambda - 1) {
      if (z == w) return trivial_decomposition(w);
      z = set_union(z, {set_difference(w, z).front()});
    }

    Hypergraph hw = induced(h, w);  // local i is w[i]
    std::vector<int> local(h.num_vertices(), -1);
    for (std::size_t i = 0; i < w.size(); ++i) local[w[i]] = static_cast<int>(i);
    auto to_local = [&](const VertexSet& s) {
      VertexSet out;
      for (int v : s)
        if (local[v] >= 0) out.push_back(local[v]);
      return out;
    };
    const VertexSet zl = to_local(z);
    CoverResult gc = frac_cover(hw, indicator(hw.num_vertices(), zl));
    const EdgeWeights& gamma = gc.weights;

    std::optional<VertexSet> sep;
    for (const auto& r : family) {
      VertexSet rl = to_local(r);
      if (!is_gamma_balanced(hw, gamma, 0.5, rl)) continue;
      BalancedSeparator bs = balanced_separator(hw, zl, gamma, rl);
      if (!is_Z_balanced(hw, zl, 5.0 / 6.0, bs.separator)) continue;
      if (bs.value > p.w_prime + 1e-7) continue;
      VertexSet g;
      for (int i : bs.separator) g.push_back(w[i]);
      sep = std::move(g);
      break;
    }
    if (!sep) return std::nullopt;

    VertexSet shat = set_union(z, *sep);
    std::vector<TreeDecomposition> children;
    for (const auto& cl : connected_components(hw, to_local(shat))) {
      VertexSet c;
      for (int i : cl) c.push_back(w[i]);
      VertexSet nc = neighborhood(h, c);
      auto child = run(set_union(c, nc), nc, depth + 1);
      if (!child) return std::nullopt;
      children.push_back(std::move(*child));
    }
    return glue(shat, std::move(children));
  }
};

}  // namespace

std::optional<TreeDecomposition> decompose(const Hypergraph& h, const VertexSet& w, const VertexSet& z,
                                           const std::vector<VertexSet>& family, const DecomposeParams& params) {
  params.validate();
  Decomposer d{h, family, params};
  return d.run(w, z, 0);
}

BoundReport bound_report(const Hypergraph& h, const DecomposeParams& p) {
  BoundReport b;
  b.omega = p.omega;
  b.w_T = p.w_T;
  b.w_prime = p.w_prime;
  b.lambda = p.lambda;
  b.phi_prime = p.phi_prime;
  b.alpha_hat = alpha_upper_bound(h, all_vertices(h)).bound;
  b.mu = degeneracy(h).mu;
  b.eta = eta(h);
  b.min_term = std::max(std::min({cln(b.alpha_hat), static_cast<double>(b.mu), p.omega * std::max(b.eta, 1)}),
                        std::log(2.0));
  b.bag_limit = (1 + p.phi_prime) * p.lambda;
  b.c = b.bag_limit / (p.omega * clog2(p.omega) * b.min_term);
  b.width_bound = b.c * p.omega * clog2(p.omega) * b.min_term;
  const double c5 = 5 * b.c;
  b.lambda_stop = c5 * cln(c5) * p.omega * clog2(p.omega) * cln(p.omega);
  return b;
}

DecomposeResult approx_fhtw(const Hypergraph& h, double omega, const TreeDecomposition& t_in,
                            std::optional<DecomposeParams> params, long cap) {
  if (!(omega >= 1)) throw std::invalid_argument("omega must be >= 1");
  TreeDecomposition t = t_in;
  if (t.bag_covers.size() != t.bags.size()) certify(h, t);
  DecomposeParams p = params ? *params : DecomposeParams::derive(h, omega, t.width);
  if (!params) p.family_cap = cap;
  p.validate();

  DecomposeResult res;
  RFamily fam = r_family(t, omega, p.family_cap);
  res.report = bound_report(h, p);
  res.report.family_size = static_cast<long>(fam.sets.size());
  res.report.family_truncated = fam.truncated;
  res.iterations = 1;

  std::vector<TreeDecomposition> parts;
  for (const auto& c : connected_components(h)) {
    auto td = decompose(h, c, {}, fam.sets, p);
    if (!td) {
      res.outcome = fam.truncated ? Outcome::Inconclusive : Outcome::No;
      return res;
    }
    parts.push_back(std::move(*td));
  }
  if (parts.size() == 1) res.td = std::move(parts.front());
  else res.td = strip_empty_bags(glue({}, std::move(parts)));
  certify(h, res.td);
  res.outcome = Outcome::Decomposition;
  res.widths.push_back(res.td.width);
  return res;
}

DecomposeResult poly_approx(const Hypergraph& h, double omega, long cap, std::optional<DecomposeParams> params) {
  TreeDecomposition t = trivial_decomposition(all_vertices(h));
  certify(h, t);
  return approx_fhtw(h, omega, t, params, cap);
}

DecomposeResult fpt_approx(const Hypergraph& h, double omega, long cap, std::optional<DecomposeParams> params) {
  TreeDecomposition best = trivial_decomposition(all_vertices(h));
  certify(h, best);
  DecomposeResult out;
  out.widths.push_back(best.width);
  const int guard =
      std::max(1, h.num_vertices() * static_cast<int>(std::ceil(std::log2(std::max(best.width, 2.0)))));
  for (int it = 1;; ++it) {
    DecomposeResult r = approx_fhtw(h, omega, best, params, cap);
    out.iterations = it;
    out.report = r.report;
    if (r.outcome != Outcome::Decomposition) {
      out.outcome = r.outcome;
      return out;
    }
    const bool improved = r.td.width < best.width - 1e-7;
    if (improved) {
      best = std::move(r.td);
      out.widths.push_back(best.width);
    }
    if (!improved || best.width <= r.report.lambda_stop || it >= guard) break;
  }
  out.outcome = Outcome::Decomposition;
  out.td = std::move(best);
  return out;
}

}  // namespace fhtw
