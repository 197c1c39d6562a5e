#include "fhtw/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fhtw {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

namespace {

ojson report_json(const BoundReport& b) {
  ojson j;
  j["omega"] = b.omega;
  j["w_T"] = b.w_T;
  j["w_prime"] = b.w_prime;
  j["lambda"] = b.lambda;
  j["phi_prime"] = b.phi_prime;
  j["alpha_hat"] = b.alpha_hat;
  j["mu"] = b.mu;
  j["eta"] = b.eta;
  j["min_term"] = b.min_term;
  j["c"] = b.c;
  j["width_bound"] = b.width_bound;
  j["bag_limit"] = b.bag_limit;
  j["lambda_stop"] = b.lambda_stop;
  j["family_size"] = b.family_size;
  j["family_truncated"] = b.family_truncated;
  return j;
}

}  // namespace

std::string decomposition_to_json(const Hypergraph& h, const TreeDecomposition& td_in, const DecompositionMeta& meta) {
  TreeDecomposition td = strip_empty_bags(td_in);
  if (td.bag_covers.size() != td.bags.size()) certify(h, td);
  ojson j;
  ojson nodes = ojson::array();
  double width = 0;
  for (int u = 0; u < td.size(); ++u) {
    ojson node;
    node["id"] = u;
    node["bag"] = names_of(h, td.bags[u]);
    ojson cover = ojson::object();
    const auto& c = td.bag_covers[u];
    for (Eigen::Index e = 0; e < c.weights.size(); ++e)
      if (c.weights(e) > 0) cover[h.edge_name(static_cast<int>(e))] = c.weights(e);
    node["cover"] = cover;
    node["rho_star"] = c.value;
    width = std::max(width, c.value);
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  ojson edges = ojson::array();
  for (auto [p, q] : td.tree_edges) edges.push_back({p, q});
  j["edges"] = edges;
  j["root"] = td.root;
  j["fhtw"] = width;
  j["mode"] = meta.mode;
  j["omega"] = meta.omega;
  j["seed"] = meta.seed;
  if (meta.report) j["bound_report"] = report_json(*meta.report);
  if (!meta.widths.empty()) j["widths"] = meta.widths;
  return j.dump(2) + "\n";
}

TreeDecomposition decomposition_from_json(const Hypergraph& h, std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed decomposition JSON: ") + e.what());
  }
  try {
    TreeDecomposition td;
    const auto& nodes = j.at("nodes");
    std::map<long, int> index;
    for (const auto& node : nodes) {
      index[node.at("id").get<long>()] = td.size();
      td.bags.push_back(make_set(vertices_by_name(h, node.at("bag").get<std::vector<std::string>>())));
    }
    auto at = [&](long id) {
      auto it = index.find(id);
      if (it == index.end()) throw std::runtime_error("unknown node id " + std::to_string(id));
      return it->second;
    };
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::runtime_error("tree edge must be a pair of ids");
      td.tree_edges.emplace_back(at(e[0].get<long>()), at(e[1].get<long>()));
    }
    td.root = j.contains("root") ? at(j["root"].get<long>()) : 0;
    return td;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed decomposition JSON: ") + e.what());
  }
}

std::string validation_to_json(const Hypergraph& h, const ValidationReport& r) {
  (void)h;
  ojson j;
  j["valid"] = r.ok();
  j["axioms"] = {{"tree", r.tree_ok}, {"connectivity", r.connectivity_ok}, {"coverage", r.coverage_ok}};
  j["fhtw_of_td"] = r.fhtw_of_td;
  j["ghtw_upper"] = r.ghtw_upper;
  j["bag_rho_star"] = r.bag_rho;
  ojson v = ojson::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
  j["violations"] = v;
  return j.dump(2) + "\n";
}

CliqueFamily parse_clique_family(const Hypergraph& g, std::string_view text) {
  ParsedHypergraph p = parse_hypergraph(text);
  std::vector<VertexSet> sets;
  std::vector<std::string> names;
  for (const auto& e : p.h.edges()) {
    std::vector<std::string> vs;
    for (int v : e.vertices) vs.push_back(p.h.vertex_name(v));
    sets.push_back(vertices_by_name(g, vs));
    names.push_back(e.name);
  }
  return make_clique_family(g, std::move(sets), std::move(names));
}

}  // namespace fhtw
