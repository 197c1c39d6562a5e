#include "fhtw/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

namespace fhtw {

Hypergraph::Hypergraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)) {
  const int n = num_vertices();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& vs = edges_[e].vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.empty()) throw std::invalid_argument("empty edge " + edges_[e].name);
    if (vs.front() < 0 || vs.back() >= n)
      throw std::invalid_argument("edge " + edges_[e].name + " has an unknown vertex");
  }
  vorigin_.resize(n);
  std::iota(vorigin_.begin(), vorigin_.end(), 0);
  eorigin_.resize(edges_.size());
  std::iota(eorigin_.begin(), eorigin_.end(), 0);
  build_indices();
}

void Hypergraph::build_indices() {
  const int n = num_vertices();
  vindex_.clear();
  eindex_.clear();
  for (int v = 0; v < n; ++v) {
    if (!vindex_.emplace(names_[v], v).second)
      throw std::invalid_argument("duplicate vertex " + names_[v]);
  }
  for (int e = 0; e < num_edges(); ++e) {
    if (!eindex_.emplace(edges_[e].name, e).second)
      throw std::invalid_argument("duplicate edge name " + edges_[e].name);
  }
  incident_.assign(n, {});
  adj_.assign(n, {});
  for (int e = 0; e < num_edges(); ++e)
    for (int v : edges_[e].vertices) incident_[v].push_back(e);
  for (int v = 0; v < n; ++v)
    if (incident_[v].empty()) throw std::invalid_argument("isolated vertex " + names_[v]);

  std::vector<int> stamp(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int e : incident_[v])
      for (int w : edges_[e].vertices)
        if (w != v && stamp[w] != v) {
          stamp[w] = v;
          adj_[v].push_back(w);
        }
    std::sort(adj_[v].begin(), adj_[v].end());
  }
}

int Hypergraph::find_vertex(std::string_view name) const {
  auto it = vindex_.find(std::string(name));
  return it == vindex_.end() ? -1 : it->second;
}

int Hypergraph::find_edge(std::string_view name) const {
  auto it = eindex_.find(std::string(name));
  return it == eindex_.end() ? -1 : it->second;
}

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == ':' || c == '-';
}

struct LineLexer {
  std::string_view s;
  std::size_t i = 0;
  int line;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t j = i;
    while (j < s.size() && ident_char(s[j])) ++j;
    if (j == i) throw ParseError(line, "expected identifier");
    std::string out(s.substr(i, j - i));
    i = j;
    return out;
  }
};

}  // namespace

ParsedHypergraph parse_hypergraph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  std::set<std::string> edge_names;
  std::vector<std::string> warnings;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    auto cut = line.find_first_of("#%");
    if (cut != std::string_view::npos) line = line.substr(0, cut);

    LineLexer lx{line, 0, lineno};
    while (!lx.done()) {
      Edge e;
      e.name = lx.ident();
      if (!lx.eat('(')) throw ParseError(lineno, "expected '(' after " + e.name);
      if (!edge_names.insert(e.name).second) throw ParseError(lineno, "duplicate edge name " + e.name);
      std::set<int> seen;
      if (!lx.eat(')')) {
        do {
          std::string v = lx.ident();
          auto [it, fresh] = index.emplace(v, static_cast<int>(names.size()));
          if (fresh) names.push_back(v);
          if (!seen.insert(it->second).second)
            warnings.push_back("line " + std::to_string(lineno) + ": duplicate vertex " + v + " in " + e.name);
          else
            e.vertices.push_back(it->second);
        } while (lx.eat(','));
        if (!lx.eat(')')) throw ParseError(lineno, "expected ')' in " + e.name);
      }
      if (e.vertices.empty()) throw ParseError(lineno, "empty edge " + e.name);
      edges.push_back(std::move(e));
      if (lx.eat('.')) {
        if (!lx.done()) throw ParseError(lineno, "trailing text after '.'");
        break;
      }
      lx.eat(',');
    }
    if (nl == text.size()) break;
  }
  return {Hypergraph(std::move(names), std::move(edges)), std::move(warnings)};
}

std::string to_hg(const Hypergraph& h) {
  std::string out;
  for (int e = 0; e < h.num_edges(); ++e) {
    out += h.edge_name(e);
    out += '(';
    bool first = true;
    for (int v : h.edge(e)) {
      if (!first) out += ',';
      first = false;
      out += h.vertex_name(v);
    }
    out += ")\n";
  }
  return out;
}

std::vector<std::vector<int>> primal_graph(const Hypergraph& h) {
  std::vector<std::vector<int>> g(h.num_vertices());
  for (int v = 0; v < h.num_vertices(); ++v) g[v] = h.neighbors(v);
  return g;
}

Hypergraph induced(const Hypergraph& h, const VertexSet& x) {
  const int n = h.num_vertices();
  std::vector<int> local(n, -1);
  Hypergraph out;
  for (int v : x) {
    if (v < 0 || v >= n) throw std::invalid_argument("induced: unknown vertex");
    if (local[v] >= 0) continue;
    local[v] = static_cast<int>(out.names_.size());
    out.names_.push_back(h.names_[v]);
    out.vorigin_.push_back(h.vorigin_[v]);
  }
  for (int e = 0; e < h.num_edges(); ++e) {
    Edge t{h.edges_[e].name, {}};
    for (int v : h.edges_[e].vertices)
      if (local[v] >= 0) t.vertices.push_back(local[v]);
    if (t.vertices.empty()) continue;
    std::sort(t.vertices.begin(), t.vertices.end());
    out.edges_.push_back(std::move(t));
    out.eorigin_.push_back(h.eorigin_[e]);
  }
  out.build_indices();
  return out;
}

std::vector<VertexSet> connected_components(const Hypergraph& h, const VertexSet& removed) {
  const int n = h.num_vertices();
  std::vector<char> seen = mask(n, removed);
  std::vector<VertexSet> comps;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet c;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      c.push_back(u);
      for (int w : h.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(c.begin(), c.end());
    comps.push_back(std::move(c));
  }
  return comps;
}

Degeneracy degeneracy(const Hypergraph& h) {
  const int n = h.num_vertices(), m = h.num_edges();
  std::vector<int> deg(n + m);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(h.incident(v).size());
  for (int e = 0; e < m; ++e) deg[n + e] = static_cast<int>(h.edge(e).size());
  std::set<std::pair<int, int>> queue;
  for (int i = 0; i < n + m; ++i) queue.emplace(deg[i], i);
  std::vector<char> gone(n + m, 0);
  Degeneracy out;
  while (!queue.empty()) {
    auto [d, u] = *queue.begin();
    queue.erase(queue.begin());
    gone[u] = 1;
    out.mu = std::max(out.mu, d);
    out.ordering.push_back(u);
    auto touch = [&](int w) {
      if (gone[w]) return;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    };
    if (u < n)
      for (int e : h.incident(u)) touch(n + e);
    else
      for (int v : h.edge(u - n)) touch(v);
  }
  return out;
}

int eta(const Hypergraph& h) {
  int best = 0;
  const int n = h.num_vertices();
  std::vector<char> in(n, 0);
  for (int e = 0; e < h.num_edges(); ++e) {
    for (int v : h.edge(e)) in[v] = 1;
    for (int f = e + 1; f < h.num_edges(); ++f) {
      int c = 0;
      for (int v : h.edge(f)) c += in[v];
      best = std::max(best, c);
    }
    for (int v : h.edge(e)) in[v] = 0;
  }
  return best;
}

VertexWeights vertex_distances(const Hypergraph& h, const VertexWeights& x, const VertexSet& sources) {
  const int n = h.num_vertices();
  if (sources.empty()) throw std::invalid_argument("vertex_distances: no sources");
  VertexWeights d = VertexWeights::Constant(n, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (int s : sources) {
    if (x(s) < d(s)) {
      d(s) = x(s);
      pq.emplace(d(s), s);
    }
  }
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du > d(u)) continue;
    for (int w : h.neighbors(u)) {
      double nd = du + x(w);
      if (nd < d(w)) {
        d(w) = nd;
        pq.emplace(nd, w);
      }
    }
  }
  return d.cwiseMin(1.0);
}

VertexSet reachable(const Hypergraph& h, const VertexSet& a, const VertexSet& s) {
  const int n = h.num_vertices();
  std::vector<char> seen = mask(n, s);
  std::vector<int> stack;
  VertexSet out;
  for (int v : a)
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (int w : h.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool separates(const Hypergraph& h, const VertexSet& a, const VertexSet& b, const VertexSet& s) {
  VertexSet r = reachable(h, a, s);
  for (int v : b)
    if (!contains(s, v) && contains(r, v)) return false;
  return true;
}

VertexSet neighborhood(const Hypergraph& h, const VertexSet& x) {
  std::vector<char> in = mask(h.num_vertices(), x), hit(h.num_vertices(), 0);
  VertexSet out;
  for (int v : x)
    for (int w : h.neighbors(v))
      if (!in[w] && !hit[w]) {
        hit[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet make_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet all_vertices(const Hypergraph& h) {
  VertexSet v(h.num_vertices());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

EdgeSet all_edges(const Hypergraph& h) {
  EdgeSet e(h.num_edges());
  std::iota(e.begin(), e.end(), 0);
  return e;
}

VertexWeights indicator(int n, const VertexSet& s) {
  VertexWeights x = VertexWeights::Zero(n);
  for (int v : s) x(v) = 1.0;
  return x;
}

VertexSet support(const VertexWeights& x, double tol) {
  VertexSet s;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) > tol) s.push_back(static_cast<int>(i));
  return s;
}

VertexWeights restricted(const VertexWeights& x, const VertexSet& q) {
  VertexWeights out = VertexWeights::Zero(x.size());
  for (int v : q) out(v) = x(v);
  return out;
}

std::vector<char> mask(int n, const VertexSet& s) {
  std::vector<char> m(n, 0);
  for (int v : s) m[v] = 1;
  return m;
}

VertexSet vertices_by_name(const Hypergraph& h, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& nm : names) {
    int v = h.find_vertex(nm);
    if (v < 0) throw std::invalid_argument("unknown vertex " + nm);
    out.push_back(v);
  }
  return make_set(std::move(out));
}

std::vector<std::string> names_of(const Hypergraph& h, const VertexSet& s) {
  std::vector<std::string> out;
  for (int v : s) out.push_back(h.vertex_name(v));
  return out;
}

}  // namespace fhtw
