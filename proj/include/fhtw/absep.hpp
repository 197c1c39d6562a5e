#pragma once

#include "fhtw/covers.hpp"

#include <optional>

namespace fhtw {

// SourceRows keeps distance rows d_{s,.} only for s in A; AllPairs builds every d_{v,v'}.
enum class LpForm { SourceRows, AllPairs };

struct FracSeparator {
  VertexWeights x;
  EdgeWeights y;
  double value = 0;
};

FracSeparator frac_absep_lp(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& r,
                            std::optional<EdgeSet> e = std::nullopt, LpForm form = LpForm::SourceRows);

bool is_fractional_separator(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexWeights& x,
                             double tol = 1e-7);

// zero below eps, scale the rest by 1/(1-2 eps alpha_hat), cap at 1
VertexWeights rescale(const Hypergraph& h, const VertexWeights& x, const VertexSet& a, const VertexSet& b, double eps,
                      double alpha_hat);
VertexWeights rescale(const Hypergraph& h, const VertexWeights& x, const VertexSet& a, const VertexSet& b, double eps);

enum class BoundKind { Alpha, Degeneracy };
const char* to_string(BoundKind k);

struct SeparatorResult {
  VertexSet separator;
  CoverResult cover;
  double value = 0;        // rho*_{H,E}(separator)
  double r_star = 0;
  int candidates = 0;
  // bound bookkeeping
  double alpha_hat = 0;
  int mu = 0;
  double bound_alpha = 0;  // 8 + 4 ln alpha_hat
  double bound_mu = 0;     // 6 mu
  BoundKind bound_used = BoundKind::Alpha;
  double rho_x = 0;        // rho*_{H,E}(x) of the rounded input
  double rho_x_tilde = 0;  // rho*_{H,E}(rescaled x), when rescaling ran
  bool from_rescaled = false;
  double lp_value = 0;     // optimum of the separator LP, when it ran

  double bound() const { return std::min(bound_alpha, bound_mu); }
};

struct IntervalFamily {
  Eigen::VectorXd lo, hi;         // I_v = [d_v - x(v), d_v]
  std::vector<double> candidates; // sorted
  bool helly = true;
};

IntervalFamily rounding_intervals(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexWeights& x);
VertexSet level_set(const IntervalFamily& f, const VertexWeights& x, double r);

SeparatorResult round_absep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexWeights& x,
                            const EdgeSet& e);

// rounds both the rescaled x (eps = 1/(4 alpha_hat)) and x itself, keeps the cheaper separator
SeparatorResult round_absep_both(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexWeights& x,
                                 const EdgeSet& e, double alpha_hat);

SeparatorResult min_cover_absep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& r,
                                const EdgeSet& e);
SeparatorResult min_cover_absep(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& r);

}  // namespace fhtw
