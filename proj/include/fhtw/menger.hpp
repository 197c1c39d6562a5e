#pragma once

#include "fhtw/absep.hpp"

#include <cstdint>

namespace fhtw {

struct CliqueFamily {
  std::vector<std::string> names;
  std::vector<VertexSet> cliques;

  int size() const { return static_cast<int>(cliques.size()); }
};

// throws if some set is not a clique of g's primal graph
CliqueFamily make_clique_family(const Hypergraph& g, std::vector<VertexSet> cliques,
                                std::vector<std::string> names = {});

using Path = std::vector<int>;

class PathCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PathLpStatus { Ok, CapExceeded };

struct PathLp {
  PathLpStatus status = PathLpStatus::Ok;
  double opt = 0;
  EdgeWeights y;             // over the family
  std::vector<Path> paths;   // chordless A-B paths, lexicographic
  Eigen::VectorXd z;         // dual packing over paths
};

PathLp path_lp(const Hypergraph& g, const VertexSet& a, const VertexSet& b, const CliqueFamily& f,
               long path_cap = 100000);

struct PathSample {
  std::vector<Path> paths;
  std::vector<int> counts;  // per clique
  int ell = 0;              // floor(f t), at least 1
  int ell_ceil = 0;         // ceil(f t)
  double t = 1;             // max(1, log2 |F|)
  int attempts = 0;
  bool ok = false;
};

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t x);

PathSample sample_paths(const std::vector<Path>& paths, const Eigen::VectorXd& z, double f, const CliqueFamily& fam,
                        std::uint64_t seed, int max_attempts = 64);

// E(H) = F followed by E(G)
Hypergraph menger_hypergraph(const Hypergraph& g, const CliqueFamily& f);

struct MengerOutcome {
  enum class Branch { Separator, Paths } branch = Branch::Separator;
  PathLp lp;
  SeparatorResult separator;  // edges of the cover index menger_hypergraph
  std::vector<std::string> cover_names;
  PathSample sample;
  double bound_n = 0;      // (8+4 ln n) f
  double bound_alpha = 0;  // (8+4 ln alpha) f
};

MengerOutcome clique_menger(const Hypergraph& g, const VertexSet& a, const VertexSet& b, const CliqueFamily& f,
                            double budget, std::uint64_t seed, long path_cap = 100000);

}  // namespace fhtw
