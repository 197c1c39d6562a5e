#pragma once

#include "fhtw/balsep.hpp"

#include <optional>
#include <string>
#include <utility>

namespace fhtw {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;  // (parent, child)
  int root = 0;
  std::vector<CoverResult> bag_covers;  // filled by certify
  double width = 0;

  int size() const { return static_cast<int>(bags.size()); }
};

TreeDecomposition trivial_decomposition(const VertexSet& bag);
TreeDecomposition glue(VertexSet root_bag, std::vector<TreeDecomposition> children);
// per-bag fractional covers against E(H) and the width
void certify(const Hypergraph& h, TreeDecomposition& td);
// drops empty bags, reconnecting their neighbours
TreeDecomposition strip_empty_bags(const TreeDecomposition& td);

struct AxiomViolation {
  std::string axiom;    // "tree", "connectivity", "coverage"
  std::string witness;  // vertex or edge name
};
std::vector<AxiomViolation> check_axioms(const Hypergraph& h, const TreeDecomposition& td);

struct DecomposeParams {
  double omega = 1;
  double w_T = 0;
  double w_prime = 0;
  double lambda = 0;
  double phi_prime = 1.0 / 6;
  long family_cap = 20000;  // <= 0 disables the cap
  bool check_invariants = true;

  // w' and lambda from the width formulas
  static DecomposeParams derive(const Hypergraph& h, double omega, double w_T);
  void validate() const;
};

// unions of at most floor(omega) bags, by size then lexicographic index tuple
struct RFamily {
  std::vector<VertexSet> sets;
  bool truncated = false;
};
RFamily r_family(const TreeDecomposition& t, double omega, long cap);

// nullopt means NO
std::optional<TreeDecomposition> decompose(const Hypergraph& h, const VertexSet& w, const VertexSet& z,
                                           const std::vector<VertexSet>& family, const DecomposeParams& params);

enum class Outcome { Decomposition, No, Inconclusive };
const char* to_string(Outcome o);

struct BoundReport {
  double omega = 0, w_T = 0, w_prime = 0, lambda = 0, phi_prime = 1.0 / 6;
  double alpha_hat = 0;
  int mu = 0, eta = 0;
  double min_term = 0;     // min{ln alpha, mu, omega eta}
  double c = 0;
  double width_bound = 0;  // c omega log(omega) min_term
  double bag_limit = 0;    // (1+phi') lambda
  double lambda_stop = 0;
  long family_size = 0;
  bool family_truncated = false;
};

struct DecomposeResult {
  Outcome outcome = Outcome::No;
  TreeDecomposition td;
  BoundReport report;
  std::vector<double> widths;  // accepted widths, fpt mode
  int iterations = 0;
};

DecomposeResult approx_fhtw(const Hypergraph& h, double omega, const TreeDecomposition& t_in,
                            std::optional<DecomposeParams> params = std::nullopt, long cap = 20000);
DecomposeResult poly_approx(const Hypergraph& h, double omega, long cap = 20000,
                            std::optional<DecomposeParams> params = std::nullopt);
DecomposeResult fpt_approx(const Hypergraph& h, double omega, long cap = 20000,
                           std::optional<DecomposeParams> params = std::nullopt);

BoundReport bound_report(const Hypergraph& h, const DecomposeParams& p);

}  // namespace fhtw
