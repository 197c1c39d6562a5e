#include "fhtw/balsep.hpp"

#include "fhtw/lp.hpp"

#include <algorithm>
#include <cmath>

namespace fhtw {

double gamma_mass(const Hypergraph& h, const EdgeWeights& gamma, const VertexSet& q) {
  std::vector<char> in = mask(h.num_vertices(), q);
  double s = 0;
  for (int e = 0; e < h.num_edges(); ++e)
    for (int v : h.edge(e))
      if (in[v]) {
        s += gamma(e);
        break;
      }
  return s;
}

bool is_gamma_balanced(const Hypergraph& h, const EdgeWeights& gamma, double phi, const VertexSet& s) {
  const double total = gamma.sum();
  for (const auto& c : connected_components(h, s))
    if (gamma_mass(h, gamma, c) > phi * total + 1e-7) return false;
  return true;
}

bool is_Z_balanced(const Hypergraph& h, const VertexSet& z, double phi, const VertexSet& s) {
  if (z.empty()) return true;
  const double total = rho_star(h, z);
  for (const auto& c : connected_components(h, s)) {
    VertexSet cz = set_intersection(c, z);
    if (cz.empty()) continue;
    if (rho_star(h, cz) > phi * total + 1e-7) return false;
  }
  return true;
}

bool is_fractional_balanced(const Hypergraph& h, const EdgeWeights& gamma, double phi, const VertexWeights& x,
                            double tol) {
  const double total = gamma.sum();
  for (int e = 0; e < h.num_edges(); ++e) {
    VertexWeights d = vertex_distances(h, x, h.edge(e));
    double acc = 0;
    for (int f = 0; f < h.num_edges(); ++f) {
      if (gamma(f) <= 0) continue;
      double m = 1;
      for (int v : h.edge(f)) m = std::min(m, d(v));
      acc += m * gamma(f);
    }
    if (acc < (1 - phi) * total - tol) return false;
  }
  return true;
}

BalancedLp balanced_lp(const Hypergraph& h, const EdgeWeights& gamma, double phi, const VertexSet& r,
                       BalancedForm form) {
  if (!is_gamma_balanced(h, gamma, phi, r))
    throw std::invalid_argument("balanced_lp: R is not a (gamma,phi)-balanced separator");
  const int n = h.num_vertices(), m = h.num_edges();
  const double total = gamma.sum();
  BalancedLp out;
  out.x = VertexWeights::Zero(n);
  if (total <= 0) return out;

  std::vector<int> targets;
  for (int e = 0; e < m; ++e)
    if (form == BalancedForm::AllPairs || gamma(e) > 0) targets.push_back(e);
  const int nt = static_cast<int>(targets.size());

  // x | y | vertex distances | edge distances
  const int src = form == BalancedForm::AllPairs ? n : m;
  auto xv = [](int v) { return v; };
  auto ye = [&](int e) { return n + e; };
  auto dv = [&](int s, int v) { return n + m + s * n + v; };
  auto de = [&](int e, int k) { return n + m + src * n + e * nt + k; };

  LinearProgram<double> lp(n + m + src * n + m * nt);
  for (int e = 0; e < m; ++e) lp.objective(ye(e)) = 1.0;
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, double>> t{{xv(v), -1.0}};
    for (int e : h.incident(v)) t.emplace_back(ye(e), 1.0);
    lp.add_row(std::move(t), Sense::Ge, 0.0);
  }
  for (int e = 0; e < m; ++e) {
    std::vector<std::pair<int, double>> t;
    for (int k = 0; k < nt; ++k)
      if (gamma(targets[k]) != 0) t.emplace_back(de(e, k), gamma(targets[k]));
    lp.add_row(std::move(t), Sense::Ge, (1 - phi) * total);
  }
  for (int s = 0; s < src; ++s) {
    if (form == BalancedForm::AllPairs) {
      lp.add_row({{dv(s, s), 1.0}, {xv(s), -1.0}}, Sense::Eq, 0.0);
    } else {
      for (int u : h.edge(s)) lp.add_row({{dv(s, u), 1.0}, {xv(u), -1.0}}, Sense::Le, 0.0);
    }
    for (int v1 = 0; v1 < n; ++v1)
      for (int v2 : h.neighbors(v1))
        lp.add_row({{dv(s, v2), 1.0}, {dv(s, v1), -1.0}, {xv(v2), -1.0}}, Sense::Le, 0.0);
  }
  for (int e = 0; e < m; ++e)
    for (int k = 0; k < nt; ++k) {
      const int f = targets[k];
      if (form == BalancedForm::AllPairs) {
        for (int v : h.edge(e))
          for (int w : h.edge(f)) lp.add_row({{de(e, k), 1.0}, {dv(v, w), -1.0}}, Sense::Le, 0.0);
      } else {
        for (int w : h.edge(f)) lp.add_row({{de(e, k), 1.0}, {dv(e, w), -1.0}}, Sense::Le, 0.0);
      }
    }

  std::vector<int> zero;
  std::vector<char> in_r = mask(n, r);
  for (int v = 0; v < n; ++v)
    if (!in_r[v]) zero.push_back(xv(v));
  auto sol = solve_lp_restricted(lp, zero);
  if (!sol.optimal()) throw std::runtime_error(std::string("balanced_lp: LP ") + to_string(sol.status));
  out.x = sol.x.head(n);
  for (int v = 0; v < n; ++v) {
    if (out.x(v) < 1e-9) out.x(v) = 0;
    if (out.x(v) > 1 - 1e-9) out.x(v) = 1;
  }
  out.value = sol.objective;
  return out;
}

namespace {

double log_term(double rho_x, double r) { return rho_x > 0 ? std::max(0.0, std::log2(rho_x / r)) : 0.0; }

}  // namespace

CutOffResult cutoff(const Hypergraph& h, const EdgeWeights& gamma, const VertexWeights& x, const VertexSet& q,
                    double phi, double rho_x) {
  if (q.empty()) throw std::invalid_argument("cutoff: empty Q");
  const double r = (1 - phi) / 2;
  const double lg = log_term(rho_x, r);
  const double cap = r / (18 + 4 * lg);
  for (int v : q)
    if (x(v) >= cap) throw std::invalid_argument("cutoff: weight cap violated on Q");
  const double total = gamma.sum();

  CutOffResult out;
  out.delta = r / (9 + 2 * lg);
  for (int v : q) out.q = std::max(out.q, x(v));
  out.center = q.front();

  Hypergraph hq = induced(h, q);  // local index i is q[i]
  VertexWeights xq(static_cast<Eigen::Index>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i) xq(i) = x(q[i]);
  VertexWeights d = vertex_distances(hq, xq, {0});

  auto radius = [&](int i) { return r / 2 + i * out.delta; };
  auto ball = [&](double rad) {
    VertexSet b;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (d(i) <= rad + 1e-12) b.push_back(static_cast<int>(i));
    return b;
  };
  auto global = [&](const VertexSet& local) {
    VertexSet g;
    for (int i : local) g.push_back(q[i]);
    return g;
  };
  auto check_ball = [&](double rad) {
    if (rad < 1 && gamma_mass(h, gamma, global(ball(rad))) > phi / (1 - rad) * total + 1e-7) out.small_ball = false;
  };

  const int imax = static_cast<int>(std::floor(9 + 2 * lg));
  check_ball(radius(0));
  for (int i = 1; i <= imax; ++i) {
    VertexSet prev = global(ball(radius(i - 1)));
    VertexSet layer = global(set_difference(ball(radius(i + 1)), ball(radius(i))));
    check_ball(radius(i));
    check_ball(radius(i + 1));
    if (rho_star(h, restricted(x, layer)) <= rho_star(h, restricted(x, prev)) + 1e-9) {
      out.i_star = i;
      break;
    }
  }
  if (out.i_star == 0) throw std::logic_error("cutoff: no admissible layer index");
  out.radius = radius(out.i_star);

  VertexSet inner = ball(radius(out.i_star));
  VertexSet reach = ball(radius(out.i_star + 1));
  VertexSet layer = set_difference(reach, inner);
  VertexSet outer = set_difference(all_vertices(hq), reach);

  VertexSet s_local;
  if (!inner.empty() && !outer.empty() && !separates(hq, inner, outer, {})) {
    VertexWeights xt = VertexWeights::Zero(hq.num_vertices());
    for (int i : layer) xt(i) = std::min(xq(i) / (out.delta - out.q), 1.0);
    double ah = alpha_upper_bound(hq, support(xt)).bound;
    s_local = round_absep_both(hq, inner, outer, xt, all_edges(hq), ah).separator;
  }
  VertexSet p_local;
  for (const auto& c : connected_components(hq, s_local))
    if (!set_intersection(c, inner).empty()) p_local = set_union(p_local, c);
  out.s = global(s_local);
  out.p = global(p_local);
  out.mass_ok = gamma_mass(h, gamma, out.p) <= phi / (1 - r) * total + 1e-7;
  return out;
}

BallGrowing ball_growing(const Hypergraph& h, const EdgeWeights& gamma, const VertexWeights& x, double phi) {
  BallGrowing out;
  const int n = h.num_vertices();
  const double total = gamma.sum();
  if (total <= 0) return out;
  out.rho_x = rho_star(h, x);
  const double r = (1 - phi) / 2;
  const double cap = r / (18 + 4 * log_term(out.rho_x, r));
  const double phi2 = (1 - r + phi) / (2 - 2 * r);

  for (int v = 0; v < n; ++v)
    if (x(v) >= cap) out.heavy.push_back(v);
  VertexSet s = out.heavy, p, q = set_difference(all_vertices(h), s);
  std::vector<VertexSet> pieces;
  while (!q.empty() && gamma_mass(h, gamma, q) >= phi2 * total - 1e-7) {
    if (static_cast<int>(out.steps.size()) >= n) throw std::logic_error("ball_growing: no progress");
    CutOffResult step = cutoff(h, gamma, x, q, phi, out.rho_x);
    if (step.p.empty()) throw std::logic_error("ball_growing: empty piece");
    p = set_union(p, step.p);
    s = set_union(s, step.s);
    q = set_difference(q, set_union(step.p, step.s));
    pieces.push_back(step.p);
    out.small_ball_ok = out.small_ball_ok && step.small_ball;
    out.mass_ok = out.mass_ok && step.mass_ok;
    out.steps.push_back(std::move(step));

    bool disjoint = set_intersection(p, s).empty() && set_intersection(p, q).empty() &&
                    set_intersection(s, q).empty() && p.size() + s.size() + q.size() == static_cast<std::size_t>(n);
    if (!disjoint || !separates(h, p, q, s)) out.partition_ok = false;
  }
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (int v : pieces[i]) owner[v] = static_cast<int>(i);
  for (int e = 0; e < h.num_edges(); ++e) {
    int seen = -1;
    for (int v : h.edge(e)) {
      if (owner[v] < 0) continue;
      if (seen >= 0 && owner[v] != seen) out.independent_ok = false;
      seen = owner[v];
    }
  }
  out.separator = s;
  return out;
}

BalancedSeparator balanced_separator(const Hypergraph& h, const VertexSet& z, const EdgeWeights& gamma,
                                     const VertexSet& r) {
  const int n = h.num_vertices();
  if (gamma.size() != h.num_edges()) throw std::invalid_argument("balanced_separator: gamma size mismatch");
  const double rz = rho_star(h, z);
  if (std::abs(gamma.sum() - rz) > 1e-6)
    throw std::invalid_argument("balanced_separator: gamma is not a minimum cover of Z");
  VertexWeights covered = VertexWeights::Zero(n);
  for (int e = 0; e < h.num_edges(); ++e)
    for (int v : h.edge(e)) covered(v) += gamma(e);
  for (int v : z)
    if (covered(v) < 1 - 1e-7) throw std::invalid_argument("balanced_separator: gamma does not cover Z");
  if (!is_gamma_balanced(h, gamma, 0.5, r))
    throw std::invalid_argument("balanced_separator: R is not a (gamma,1/2)-balanced separator");

  BalancedSeparator out;
  if (gamma.sum() <= 0) return out;
  BalancedLp lp = balanced_lp(h, gamma, 0.5, r);
  out.lp_value = lp.value;
  out.trace = ball_growing(h, gamma, lp.x, 0.5);
  out.separator = out.trace.separator;
  out.value = rho_star(h, out.separator);

  const double rr = 0.25;
  const double rho_x = out.trace.rho_x;
  const double t = (18 + 4 * log_term(rho_x, rr)) / rr;
  const double ah = std::max(alpha_upper_bound(h, r).bound, 1.0);
  const double factor = std::min(8 + 4 * std::log(ah), 6.0 * degeneracy(h).mu) + 1;
  out.bound = factor * t * rho_x;
  out.bound_ok = out.value <= out.bound + 1e-6;
  return out;
}

}  // namespace fhtw
