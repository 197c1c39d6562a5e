#pragma once

#include "fhtw/bench.hpp"
#include "fhtw/menger.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace fhtw {

std::string read_file(const std::string& path);
// temp file in the same directory, then rename
void write_file_atomic(const std::string& path, const std::string& content);

struct DecompositionMeta {
  std::string mode = "poly";
  double omega = 1;
  std::uint64_t seed = 0;
  const BoundReport* report = nullptr;
  std::vector<double> widths;
};

// empty bags are dropped before writing
std::string decomposition_to_json(const Hypergraph& h, const TreeDecomposition& td, const DecompositionMeta& meta);
// bags come back as vertex indices of h; covers are not read
TreeDecomposition decomposition_from_json(const Hypergraph& h, std::string_view text);

std::string validation_to_json(const Hypergraph& h, const ValidationReport& r);

// one clique per line, .hg syntax
CliqueFamily parse_clique_family(const Hypergraph& g, std::string_view text);

}  // namespace fhtw
