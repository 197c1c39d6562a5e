#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fhtw {

// sorted, duplicate free
using VertexSet = std::vector<int>;
using EdgeSet = std::vector<int>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// x, d, 1_S live here; values in [0,1]
using VertexWeights = Eigen::VectorXd;
// gamma, y live here
using EdgeWeights = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kTol = 1e-9;

struct Edge {
  std::string name;
  std::vector<int> vertices;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  // Vertex indices inside edges are sorted/deduplicated here.
  Hypergraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& edge(int e) const { return edges_[e].vertices; }
  const std::string& edge_name(int e) const { return edges_[e].name; }
  const std::string& vertex_name(int v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& incident(int v) const { return incident_[v]; }
  // primal graph adjacency, sorted
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  int find_vertex(std::string_view name) const;  // -1 if absent
  int find_edge(std::string_view name) const;

  // Index of this vertex/edge in the hypergraph this one was induced from
  // (identity for hypergraphs that were built directly).
  int vertex_origin(int v) const { return vorigin_[v]; }
  int edge_origin(int e) const { return eorigin_[e]; }

  friend Hypergraph induced(const Hypergraph& h, const VertexSet& x);

 private:
  void build_indices();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> vorigin_, eorigin_;
  std::unordered_map<std::string, int> vindex_, eindex_;
};

struct ParsedHypergraph {
  Hypergraph h;
  std::vector<std::string> warnings;
};

ParsedHypergraph parse_hypergraph(std::string_view text);
std::string to_hg(const Hypergraph& h);

std::vector<std::vector<int>> primal_graph(const Hypergraph& h);

// Edge traces e∩X; empty traces dropped, duplicates kept with their identity.
Hypergraph induced(const Hypergraph& h, const VertexSet& x);

std::vector<VertexSet> connected_components(const Hypergraph& h, const VertexSet& removed = {});

struct Degeneracy {
  int mu = 0;
  // incidence-graph nodes: vertex v is v, edge e is num_vertices()+e
  std::vector<int> ordering;
};
Degeneracy degeneracy(const Hypergraph& h);

int eta(const Hypergraph& h);

// min over sources of node-weighted path length (both endpoints count), capped at 1
VertexWeights vertex_distances(const Hypergraph& h, const VertexWeights& x, const VertexSet& sources);

// true if no path of the primal graph minus s joins a∖s to b∖s
bool separates(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& s);

// vertices outside s reachable from a∖s
VertexSet reachable(const Hypergraph& h, const VertexSet& a, const VertexSet& s);

// N(X): vertices outside X adjacent to X
VertexSet neighborhood(const Hypergraph& h, const VertexSet& x);

// ---- small set/weight helpers ----

VertexSet make_set(std::vector<int> v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, int v);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet all_vertices(const Hypergraph& h);
EdgeSet all_edges(const Hypergraph& h);

VertexWeights indicator(int n, const VertexSet& s);
VertexSet support(const VertexWeights& x, double tol = 0.0);
// x⋒Q: x on Q, zero elsewhere
VertexWeights restricted(const VertexWeights& x, const VertexSet& q);
std::vector<char> mask(int n, const VertexSet& s);

VertexSet vertices_by_name(const Hypergraph& h, const std::vector<std::string>& names);
std::vector<std::string> names_of(const Hypergraph& h, const VertexSet& s);

}  // namespace fhtw
