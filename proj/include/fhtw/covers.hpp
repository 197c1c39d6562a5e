#pragma once

#include "fhtw/hypergraph.hpp"

#include <cmath>

namespace fhtw {

struct CoverResult {
  double value = 0;      // kInf when some demanded vertex lies in no edge of E
  EdgeWeights weights;   // indexed by edge of the hypergraph that was passed in
  EdgeSet restricted_to;

  bool feasible() const { return std::isfinite(value); }
};

CoverResult frac_cover(const Hypergraph& h, const EdgeSet& e, const VertexWeights& demand);
CoverResult frac_cover(const Hypergraph& h, const VertexWeights& demand);

double rho_star(const Hypergraph& h, const VertexSet& s);
double rho_star(const Hypergraph& h, const VertexWeights& x);
double rho_star(const Hypergraph& h, const EdgeSet& e, const VertexSet& s);

EdgeSet greedy_cover(const Hypergraph& h, const VertexSet& s);

struct BoostedCover {
  EdgeSet edges;
  double k = 0;          // rho*(V(H))
  double bound = 0;      // 10 k i log(2kj)
  bool fallback = false; // no edge reached 1/(2i)
  bool verified = false; // i-j property checked exhaustively
  int rounds = 0;
};

// exhaustive; i edges sharing more than j vertices -> false
bool has_intersection_property(const Hypergraph& h, int i, int j);

BoostedCover boosted_integral_cover(const Hypergraph& h, int i, int j, bool verify = true);

struct AlphaBound {
  double bound = 0;
  double rho_star = 0;
  int exact = -1;  // set when |R| <= 16
};

AlphaBound alpha_upper_bound(const Hypergraph& h, const VertexSet& r);
// maximum independent set of the primal graph restricted to r
int exact_alpha(const Hypergraph& h, const VertexSet& r);

}  // namespace fhtw
