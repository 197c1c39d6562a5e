#include "fhtw/cli.hpp"

#include "fhtw/io.hpp"
#include "fhtw/lp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace fhtw {

namespace {

struct RunConfig {
  std::string command;
  std::string input, out, td, a, b, cliques, kind;
  std::string mode = "poly";
  std::string format;
  std::string log = "warn";
  double omega = 1;
  double f = 1;
  std::uint64_t seed = 0;
  long cap = 20000;
  int n = 0, m = 0, kmin = 2, kmax = 3;
};

class Logger {
 public:
  Logger(std::ostream& err, const std::string& level) : err_(err) {
    static const char* names[] = {"error", "warn", "info", "debug"};
    for (int i = 0; i < 4; ++i)
      if (level == names[i]) level_ = i;
  }
  void operator()(int level, const std::string& msg) const {
    static const char* tags[] = {"error", "warn", "info", "debug"};
    if (level <= level_) err_ << "[" << tags[level] << "] " << msg << "\n";
  }

 private:
  std::ostream& err_;
  int level_ = 1;
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(10) << v;
  return ss.str();
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

Hypergraph load(const RunConfig& c, const Logger& log) {
  if (c.input.empty()) throw std::invalid_argument("--input is required");
  ParsedHypergraph p = parse_hypergraph(read_file(c.input));
  for (const auto& w : p.warnings) log(1, c.input + ": " + w);
  log(2, "loaded " + std::to_string(p.h.num_vertices()) + " vertices, " + std::to_string(p.h.num_edges()) + " edges");
  return std::move(p.h);
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) out << text;
  else write_file_atomic(c.out, text);
}

int cmd_decompose(const RunConfig& c, std::ostream& out, const Logger& log) {
  if (!(c.omega >= 1)) throw std::invalid_argument("invalid omega " + fmt(c.omega) + ": must be >= 1");
  if (c.mode != "poly" && c.mode != "fpt") throw std::invalid_argument("--mode must be poly or fpt");
  Hypergraph h = load(c, log);
  DecomposeResult r = c.mode == "poly" ? poly_approx(h, c.omega, c.cap) : fpt_approx(h, c.omega, c.cap);
  log(2, "lambda " + fmt(r.report.lambda) + ", w' " + fmt(r.report.w_prime) + ", family " +
             std::to_string(r.report.family_size));
  if (r.outcome == Outcome::No) {
    out << "fhtw > omega (omega = " << fmt(c.omega) << ")\n";
    return kExitNo;
  }
  if (r.outcome == Outcome::Inconclusive) {
    out << "inconclusive: bag-union family truncated at " << c.cap << "\n";
    return kExitInconclusive;
  }
  DecompositionMeta meta;
  meta.mode = c.mode;
  meta.omega = c.omega;
  meta.seed = c.seed;
  meta.report = &r.report;
  if (c.mode == "fpt") meta.widths = r.widths;
  if (c.format == "text") {
    TreeDecomposition td = strip_empty_bags(r.td);
    certify(h, td);
    std::ostringstream ss;
    ss << "fhtw " << fmt(td.width) << "\nnodes " << td.size() << "\n";
    for (int u = 0; u < td.size(); ++u)
      ss << "bag " << u << " {" << join(names_of(h, td.bags[u])) << "} rho* " << fmt(td.bag_covers[u].value) << "\n";
    for (auto [p, q] : td.tree_edges) ss << "edge " << p << " " << q << "\n";
    emit(c, ss.str(), out);
  } else {
    emit(c, decomposition_to_json(h, r.td, meta), out);
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& c, std::ostream& out, const Logger& log) {
  if (c.td.empty()) throw std::invalid_argument("--td is required");
  Hypergraph h = load(c, log);
  TreeDecomposition td = decomposition_from_json(h, read_file(c.td));
  ValidationReport r = validate_td(h, td);
  if (c.format == "json") {
    emit(c, validation_to_json(h, r), out);
  } else {
    std::ostringstream ss;
    ss << "valid " << (r.ok() ? "yes" : "no") << "\n";
    ss << "tree " << (r.tree_ok ? "ok" : "violated") << "\n";
    ss << "connectivity " << (r.connectivity_ok ? "ok" : "violated") << "\n";
    ss << "coverage " << (r.coverage_ok ? "ok" : "violated") << "\n";
    ss << "fhtw_of_td " << fmt(r.fhtw_of_td) << "\nghtw_upper " << r.ghtw_upper << "\n";
    for (const auto& v : r.violations) ss << "violation " << v.axiom << " " << v.witness << "\n";
    emit(c, ss.str(), out);
  }
  return r.ok() ? kExitOk : kExitError;
}

int cmd_width(const RunConfig& c, std::ostream& out, const Logger& log) {
  Hypergraph h = load(c, log);
  nlohmann::ordered_json j;
  j["vertices"] = h.num_vertices();
  j["edges"] = h.num_edges();
  j["rho_star"] = rho_star(h, all_vertices(h));
  j["mu"] = degeneracy(h).mu;
  j["eta"] = eta(h);
  j["alpha_hat"] = alpha_upper_bound(h, all_vertices(h)).bound;
  j["acyclic"] = gyo_acyclic(h);
  if (h.num_vertices() <= 8) j["fhtw"] = oracle_fhtw(h);
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::ostringstream ss;
    for (auto it = j.begin(); it != j.end(); ++it) ss << it.key() << " " << it.value().dump() << "\n";
    emit(c, ss.str(), out);
  }
  return kExitOk;
}

int cmd_separator(const RunConfig& c, std::ostream& out, const Logger& log) {
  Hypergraph h = load(c, log);
  VertexSet a = make_set(vertices_by_name(h, split_names(c.a)));
  VertexSet b = make_set(vertices_by_name(h, split_names(c.b)));
  if (a.empty() || b.empty()) throw std::invalid_argument("--a and --b must name vertices");
  if (!set_intersection(a, b).empty()) throw std::invalid_argument("--a and --b must be disjoint");
  // keep the terminals out of the separator whenever that is possible
  VertexSet r = set_difference(all_vertices(h), set_union(a, b));
  if (!separates(h, a, b, r)) r = all_vertices(h);
  SeparatorResult s = min_cover_absep(h, a, b, r);
  nlohmann::ordered_json j;
  j["separator"] = names_of(h, s.separator);
  j["rho_star"] = s.value;
  j["lp_value"] = s.lp_value;
  j["bound_used"] = to_string(s.bound_used);
  j["bound"] = s.bound();
  j["alpha_hat"] = s.alpha_hat;
  j["mu"] = s.mu;
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::ostringstream ss;
    ss << "separator {" << join(names_of(h, s.separator)) << "}\n";
    ss << "rho_star " << fmt(s.value) << "\nlp_value " << fmt(s.lp_value) << "\n";
    ss << "bound_used " << to_string(s.bound_used) << " = " << fmt(s.bound()) << "\n";
    emit(c, ss.str(), out);
  }
  return kExitOk;
}

int cmd_menger(const RunConfig& c, std::ostream& out, const Logger& log) {
  Hypergraph g = load(c, log);
  if (c.cliques.empty()) throw std::invalid_argument("--cliques is required");
  CliqueFamily fam = parse_clique_family(g, read_file(c.cliques));
  VertexSet a = make_set(vertices_by_name(g, split_names(c.a)));
  VertexSet b = make_set(vertices_by_name(g, split_names(c.b)));
  MengerOutcome m;
  try {
    m = clique_menger(g, a, b, fam, c.f, c.seed);
  } catch (const PathCapExceeded& e) {
    out << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  }
  nlohmann::ordered_json j;
  j["lp_opt"] = m.lp.opt;
  j["f"] = c.f;
  j["paths_enumerated"] = m.lp.paths.size();
  if (m.branch == MengerOutcome::Branch::Separator) {
    j["branch"] = "separator";
    j["separator"] = names_of(g, m.separator.separator);
    j["rho_star"] = m.separator.value;
    nlohmann::ordered_json cover = nlohmann::ordered_json::object();
    for (int i = 0; i < fam.size(); ++i)
      if (m.separator.cover.weights.size() > i && m.separator.cover.weights(i) > 0)
        cover[fam.names[i]] = m.separator.cover.weights(i);
    j["cover"] = cover;
    j["bound_ln_n"] = m.bound_n;
    j["bound_ln_alpha"] = m.bound_alpha;
  } else {
    j["branch"] = "paths";
    nlohmann::ordered_json paths = nlohmann::ordered_json::array();
    for (const auto& p : m.sample.paths) paths.push_back(names_of(g, p));
    j["paths"] = paths;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (int i = 0; i < fam.size(); ++i) counts[fam.names[i]] = m.sample.counts[i];
    j["counts"] = counts;
    j["threshold"] = 6 * m.sample.t;
    j["ell"] = m.sample.ell;
    j["ell_ceil"] = m.sample.ell_ceil;
    j["attempts"] = m.sample.attempts;
    j["ok"] = m.sample.ok;
  }
  if (c.format == "json") {
    emit(c, j.dump(2) + "\n", out);
  } else {
    std::ostringstream ss;
    ss << j["branch"].get<std::string>() << "\n";
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "branch") ss << it.key() << " " << it.value().dump() << "\n";
    emit(c, ss.str(), out);
  }
  if (m.branch == MengerOutcome::Branch::Paths && !m.sample.ok) return kExitInconclusive;
  return kExitOk;
}

int cmd_gen(const RunConfig& c, std::ostream& out, const Logger& log) {
  std::string text;
  if (c.kind == "gap") {
    GapInstance g = gen_gap_instance(c.n);
    text = "# gap instance n=" + std::to_string(c.n) + "\n# a = " + g.h.vertex_name(g.a) +
           "\n# b = " + g.h.vertex_name(g.b) + "\n" + to_hg(g.h);
  } else if (c.kind == "uniform" || c.kind == "acyclic") {
    RandomParams p;
    p.n = c.n;
    p.m = c.m > 0 ? c.m : c.n;
    p.kmin = c.kmin;
    p.kmax = c.kmax;
    Hypergraph h = gen_random(c.kind == "uniform" ? RandomKind::Uniform : RandomKind::Acyclic, p, c.seed);
    text = "# " + c.kind + " n=" + std::to_string(c.n) + " seed=" + std::to_string(c.seed) + "\n" + to_hg(h);
  } else {
    throw std::invalid_argument("unknown generator '" + c.kind + "' (gap, uniform, acyclic)");
  }
  log(2, "generated " + c.kind);
  emit(c, text, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"fractional hypertree width decompositions"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto common = [&](CLI::App* s) {
    s->add_option("--input", c.input, "hypergraph in .hg format");
    s->add_option("--out", c.out, "output file (default stdout)");
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--log", c.log, "error, warn, info or debug")
        ->check(CLI::IsMember({"error", "warn", "info", "debug"}));
    s->add_option("--seed", c.seed, "random seed");
  };
  auto* dec = app.add_subcommand("decompose", "compute a tree decomposition");
  common(dec);
  dec->add_option("--omega", c.omega, "target width, >= 1");
  dec->add_option("--mode", c.mode, "poly or fpt");
  dec->add_option("--cap", c.cap, "limit on the bag-union family, <= 0 for none");
  auto* val = app.add_subcommand("validate", "check a decomposition");
  common(val);
  val->add_option("--td", c.td, "decomposition JSON")->required();
  auto* wid = app.add_subcommand("width", "structural parameters of a hypergraph");
  common(wid);
  auto* sep = app.add_subcommand("separator", "separator with small fractional cover");
  common(sep);
  sep->add_option("--a", c.a, "comma separated vertex names")->required();
  sep->add_option("--b", c.b, "comma separated vertex names")->required();
  auto* men = app.add_subcommand("menger", "clique Menger either/or");
  common(men);
  men->add_option("--a", c.a, "comma separated vertex names")->required();
  men->add_option("--b", c.b, "comma separated vertex names")->required();
  men->add_option("--f", c.f, "budget f > 0");
  men->add_option("--cliques", c.cliques, "clique family file");
  auto* gen = app.add_subcommand("gen", "generate an instance");
  common(gen);
  gen->add_option("kind", c.kind, "gap, uniform or acyclic")->required();
  gen->add_option("--n", c.n, "size parameter")->required();
  gen->add_option("--m", c.m, "edges (uniform)");
  gen->add_option("--kmin", c.kmin, "smallest edge");
  gen->add_option("--kmax", c.kmax, "largest edge");

  std::vector<std::string> argv_s{"fhtw"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  if (const char* env = std::getenv("FHTW_LOG")) c.log = env;
  Logger log(err, c.log);
  try {
    if (dec->parsed()) return cmd_decompose(c, out, log);
    if (val->parsed()) return cmd_validate(c, out, log);
    if (wid->parsed()) return cmd_width(c, out, log);
    if (sep->parsed()) return cmd_separator(c, out, log);
    if (men->parsed()) return cmd_menger(c, out, log);
    if (gen->parsed()) return cmd_gen(c, out, log);
  } catch (const ParseError& e) {
    log(0, c.input + ": " + e.what());
    return kExitError;
  } catch (const std::exception& e) {
    log(0, e.what());
    return kExitError;
  }
  return kExitError;
}

}  // namespace fhtw
