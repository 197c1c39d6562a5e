#pragma once

#include "fhtw/absep.hpp"

namespace fhtw {

// gamma(Q): mass of edges meeting Q
double gamma_mass(const Hypergraph& h, const EdgeWeights& gamma, const VertexSet& q);

bool is_gamma_balanced(const Hypergraph& h, const EdgeWeights& gamma, double phi, const VertexSet& s);
bool is_Z_balanced(const Hypergraph& h, const VertexSet& z, double phi, const VertexSet& s);

// sum_e' dist*(e,e') gamma(e') >= (1-phi) sum gamma for every e
bool is_fractional_balanced(const Hypergraph& h, const EdgeWeights& gamma, double phi, const VertexWeights& x,
                            double tol = 1e-7);

// EdgeSources: distances from each edge, only gamma-supported targets.
// AllPairs: d_{v,v'} and d_{e,e'} for every pair.
enum class BalancedForm { EdgeSources, AllPairs };

struct BalancedLp {
  VertexWeights x;
  double value = 0;
};

BalancedLp balanced_lp(const Hypergraph& h, const EdgeWeights& gamma, double phi, const VertexSet& r,
                       BalancedForm form = BalancedForm::EdgeSources);

struct CutOffResult {
  VertexSet p, s;
  int i_star = 0;
  int center = -1;
  double delta = 0, q = 0, radius = 0;
  bool small_ball = true;  // gamma(B(r_i)) <= phi/(1-r_i) gamma(V) on every radius used
  bool mass_ok = true;     // gamma(P) <= phi/(1-r) gamma(V)
};

CutOffResult cutoff(const Hypergraph& h, const EdgeWeights& gamma, const VertexWeights& x, const VertexSet& q,
                    double phi, double rho_x);

struct BallGrowing {
  VertexSet separator;
  VertexSet heavy;  // S_0
  std::vector<CutOffResult> steps;
  bool partition_ok = true;
  bool independent_ok = true;
  bool small_ball_ok = true;
  bool mass_ok = true;
  double rho_x = 0;
};

// Algorithm 1 for a given fractional (gamma,phi)-balanced separator x
BallGrowing ball_growing(const Hypergraph& h, const EdgeWeights& gamma, const VertexWeights& x, double phi);

struct BalancedSeparator {
  VertexSet separator;
  double value = 0;     // rho*(separator)
  double lp_value = 0;  // rho*(x) of the LP optimum
  double bound = 0;     // (min{8+4 ln a, 6 mu}+1)(104+16 log rho*(x)) rho*(x)
  bool bound_ok = true;
  BallGrowing trace;
};

BalancedSeparator balanced_separator(const Hypergraph& h, const VertexSet& z, const EdgeWeights& gamma,
                                     const VertexSet& r);

}  // namespace fhtw
