#include "fhtw/absep.hpp"

#include "fhtw/lp.hpp"

#include <algorithm>
#include <cmath>

namespace fhtw {

const char* to_string(BoundKind k) { return k == BoundKind::Alpha ? "8+4ln(alpha)" : "6mu"; }

FracSeparator frac_absep_lp(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& r,
                            std::optional<EdgeSet> e, LpForm form) {
  if (a.empty() || b.empty()) throw std::invalid_argument("frac_absep_lp: A and B must be nonempty");
  if (!set_intersection(a, b).empty()) throw std::invalid_argument("frac_absep_lp: A and B intersect");
  const int n = h.num_vertices();
  std::vector<char> in_r = mask(n, r), in_b = mask(n, b);
  for (int u : a) {
    if (in_r[u]) continue;
    for (int w : h.neighbors(u))
      if (in_b[w] && !in_r[w])
        throw std::invalid_argument("frac_absep_lp: A and B are adjacent outside R, LP infeasible");
  }
  if (!separates(h, a, b, r)) throw std::invalid_argument("frac_absep_lp: R is not an (A,B)-separator");

  const EdgeSet edges = e ? *e : all_edges(h);
  const VertexSet sources = form == LpForm::SourceRows ? a : all_vertices(h);
  const int ne = static_cast<int>(edges.size());
  const int ns = static_cast<int>(sources.size());
  auto xv = [](int v) { return v; };
  auto ye = [&](int i) { return n + i; };
  std::vector<int> src_slot(n, -1);
  for (int i = 0; i < ns; ++i) src_slot[sources[i]] = i;
  auto dv = [&](int s, int v) { return n + ne + src_slot[s] * n + v; };

  LinearProgram<double> lp(n + ne + ns * n);
  for (int i = 0; i < ne; ++i) lp.objective(ye(i)) = 1.0;

  std::vector<std::vector<int>> by_vertex(n);
  for (int i = 0; i < ne; ++i)
    for (int v : h.edge(edges[i])) by_vertex[v].push_back(i);
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, double>> t{{xv(v), -1.0}};
    for (int i : by_vertex[v]) t.emplace_back(ye(i), 1.0);
    lp.add_row(std::move(t), Sense::Ge, 0.0);
  }
  for (int u : a)
    for (int w : b) lp.add_row({{dv(u, w), 1.0}}, Sense::Ge, 1.0);
  for (int s : sources) {
    lp.add_row({{dv(s, s), 1.0}, {xv(s), -1.0}}, Sense::Eq, 0.0);
    for (int v1 = 0; v1 < n; ++v1)
      for (int v2 : h.neighbors(v1))
        lp.add_row({{dv(s, v2), 1.0}, {dv(s, v1), -1.0}, {xv(v2), -1.0}}, Sense::Le, 0.0);
  }

  std::vector<int> zero;
  for (int v = 0; v < n; ++v)
    if (!in_r[v]) zero.push_back(xv(v));
  auto sol = solve_lp_restricted(lp, zero);
  if (!sol.optimal()) throw std::runtime_error(std::string("frac_absep_lp: LP ") + to_string(sol.status));

  FracSeparator out;
  out.x = sol.x.head(n);
  for (int v = 0; v < n; ++v) {
    if (out.x(v) < 1e-9) out.x(v) = 0;
    if (out.x(v) > 1 - 1e-9) out.x(v) = 1;
  }
  out.y = EdgeWeights::Zero(h.num_edges());
  for (int i = 0; i < ne; ++i) out.y(edges[i]) = std::clamp(sol.x(ye(i)), 0.0, 1.0);
  out.value = sol.objective;
  return out;
}

bool is_fractional_separator(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexWeights& x,
                             double tol) {
  if (a.empty() || b.empty()) return true;
  VertexWeights d = vertex_distances(h, x, a);
  for (int v : b)
    if (d(v) < 1 - tol) return false;
  return true;
}

VertexWeights rescale(const Hypergraph& h, const VertexWeights& x, const VertexSet& a, const VertexSet& b, double eps,
                      double alpha_hat) {
  (void)h;
  (void)a;
  (void)b;
  if (!(eps > 0) || (alpha_hat > 0 && !(eps < 1.0 / (2.0 * alpha_hat))))
    throw std::invalid_argument("rescale: eps out of range");
  const double z = 1.0 / (1.0 - 2.0 * eps * alpha_hat);
  VertexWeights out = VertexWeights::Zero(x.size());
  for (Eigen::Index v = 0; v < x.size(); ++v)
    if (x(v) >= eps) out(v) = std::min(z * x(v), 1.0);
  return out;
}

VertexWeights rescale(const Hypergraph& h, const VertexWeights& x, const VertexSet& a, const VertexSet& b,
                      double eps) {
  return rescale(h, x, a, b, eps, alpha_upper_bound(h, support(x)).bound);
}

IntervalFamily rounding_intervals(const Hypergraph& h, const VertexSet& a, const VertexSet& b,
                                  const VertexWeights& x) {
  const int n = h.num_vertices();
  // H' = H plus dummy a, b joined to A and B
  std::vector<std::string> names = h.vertex_names();
  names.push_back("\x01" "a");
  names.push_back("\x01" "b");
  std::vector<Edge> edges = h.edges();
  for (int u : a) edges.push_back({"\x01" "a" + std::to_string(u), {n, u}});
  for (int u : b) edges.push_back({"\x01" "b" + std::to_string(u), {n + 1, u}});
  Hypergraph hp(std::move(names), std::move(edges));
  VertexWeights xp = VertexWeights::Zero(n + 2);
  xp.head(n) = x;
  VertexWeights d = vertex_distances(hp, xp, {n});

  IntervalFamily f;
  f.hi = d;
  f.lo = d - xp;
  for (int e = 0; e < hp.num_edges(); ++e) {
    double l = -kInf, u = kInf;
    for (int v : hp.edge(e)) {
      l = std::max(l, f.lo(v));
      u = std::min(u, f.hi(v));
    }
    if (l > u + 1e-7) f.helly = false;
  }

  std::vector<double> pts{0.0, 1.0};
  for (int v = 0; v < n; ++v)
    if (x(v) > 0) {
      pts.push_back(std::clamp(f.lo(v), 0.0, 1.0));
      pts.push_back(std::clamp(f.hi(v), 0.0, 1.0));
    }
  std::sort(pts.begin(), pts.end());
  std::vector<double> uniq;
  for (double p : pts)
    if (uniq.empty() || p > uniq.back() + 1e-12) uniq.push_back(p);
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    f.candidates.push_back(uniq[i]);
    if (i + 1 < uniq.size()) f.candidates.push_back(0.5 * (uniq[i] + uniq[i + 1]));
  }
  return f;
}

VertexSet level_set(const IntervalFamily& f, const VertexWeights& x, double r) {
  VertexSet s;
  for (Eigen::Index v = 0; v < x.size(); ++v)
    if (x(v) > 0 && f.lo(v) - 1e-12 <= r && r <= f.hi(v) + 1e-12) s.push_back(static_cast<int>(v));
  return s;
}

namespace {

void fill_bounds(SeparatorResult& res, const Hypergraph& h, double alpha_hat) {
  res.alpha_hat = alpha_hat;
  res.mu = degeneracy(h).mu;
  res.bound_alpha = 8.0 + 4.0 * std::log(std::max(alpha_hat, 1.0));
  res.bound_mu = 6.0 * res.mu;
  res.bound_used = res.bound_alpha <= res.bound_mu ? BoundKind::Alpha : BoundKind::Degeneracy;
}

}  // namespace

SeparatorResult round_absep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexWeights& x,
                            const EdgeSet& e) {
  const int n = h.num_vertices();
  IntervalFamily f = rounding_intervals(h, a, b, x);
  if (!f.helly) throw std::logic_error("round_absep: interval family violates the Helly property");

  SeparatorResult best;
  bool found = false;
  for (double r : f.candidates) {
    VertexSet s = level_set(f, x, r);
    if (!separates(h, a, b, s)) continue;
    CoverResult c = frac_cover(h, e, indicator(n, s));
    if (!c.feasible()) continue;
    if (!found || c.value < best.value - 1e-9) {
      found = true;
      best.separator = std::move(s);
      best.cover = std::move(c);
      best.value = best.cover.value;
      best.r_star = r;
    }
  }
  if (!found) throw std::invalid_argument("round_absep: x is not a fractional (A,B)-separator");
  best.candidates = static_cast<int>(f.candidates.size());
  best.rho_x = frac_cover(h, e, x).value;
  fill_bounds(best, h, alpha_upper_bound(h, support(x)).bound);
  return best;
}

SeparatorResult round_absep_both(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexWeights& x,
                                 const EdgeSet& e, double alpha_hat) {
  if (support(x).empty()) return round_absep(h, a, b, x, e);
  const double ah = std::max(alpha_hat, 1.0);
  VertexWeights xt = rescale(h, x, a, b, 1.0 / (4.0 * ah), ah);
  SeparatorResult scaled = round_absep(h, a, b, xt, e);
  SeparatorResult plain = round_absep(h, a, b, x, e);
  const bool use_scaled = scaled.value <= plain.value + 1e-9;
  SeparatorResult out = use_scaled ? std::move(scaled) : std::move(plain);
  out.from_rescaled = use_scaled;
  out.rho_x_tilde = frac_cover(h, e, xt).value;
  out.rho_x = frac_cover(h, e, x).value;
  fill_bounds(out, h, ah);
  return out;
}

SeparatorResult min_cover_absep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& r,
                                const EdgeSet& e) {
  const double ah = alpha_upper_bound(h, r).bound;
  if (separates(h, a, b, {})) {
    SeparatorResult out;
    out.cover = frac_cover(h, e, VertexWeights::Zero(h.num_vertices()));
    fill_bounds(out, h, ah);
    return out;
  }
  FracSeparator frac = frac_absep_lp(h, a, b, r, e);
  SeparatorResult out = round_absep_both(h, a, b, frac.x, e, ah);
  out.lp_value = frac.value;
  return out;
}

SeparatorResult min_cover_absep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& r) {
  return min_cover_absep(h, a, b, r, all_edges(h));
}

}  // namespace fhtw
