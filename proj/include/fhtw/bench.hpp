#pragma once

#include "fhtw/decomp.hpp"

#include <cstdint>

namespace fhtw {

struct GapInstance {
  Hypergraph h;
  int a = -1, b = -1;
  int short_edges = 0, long_edges = 0;
};

// circle-interval instance, n in [2,12]
GapInstance gen_gap_instance(int n);

enum class RandomKind { Uniform, Acyclic };

struct RandomParams {
  int n = 10;
  int m = 10;     // uniform only
  int kmin = 2;
  int kmax = 3;
};

Hypergraph gen_random(RandomKind kind, const RandomParams& p, std::uint64_t seed);

struct ValidationReport {
  bool tree_ok = true;
  bool connectivity_ok = true;
  bool coverage_ok = true;
  double fhtw_of_td = 0;
  int ghtw_upper = 0;
  std::vector<double> bag_rho;
  std::vector<AxiomViolation> violations;

  bool ok() const { return tree_ok && connectivity_ok && coverage_ok; }
};

ValidationReport validate_td(const Hypergraph& h, const TreeDecomposition& td);

// exact fhtw by elimination orderings, |V| <= 8
double oracle_fhtw(const Hypergraph& h);

struct OracleSeparator {
  VertexSet s;
  double value = 0;
};

// exhaustive, |V| <= 14; ties broken by the lexicographically smallest set
OracleSeparator oracle_min_separator(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const EdgeSet& e);

bool gyo_acyclic(const Hypergraph& h);

}  // namespace fhtw
