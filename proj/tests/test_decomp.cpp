#include "support.hpp"

#include <doctest.h>

using namespace fhtw;
using namespace fhtw::test;

namespace {

Hypergraph long_path(int n) {
  std::string text;
  for (int i = 0; i + 1 < n; ++i)
    text += "e" + std::to_string(i) + "(v" + std::to_string(i) + ",v" + std::to_string(i + 1) + ")\n";
  return hg(text);
}

void check_valid(const Hypergraph& h, const TreeDecomposition& td) {
  auto r = validate_td(h, td);
  std::string why;
  for (const auto& v : r.violations) why += v.axiom + " " + v.witness + "; ";
  INFO(why);
  CHECK(r.ok());
}

}  // namespace

TEST_SUITE("decomp") {
  TEST_CASE("glue") {
    auto one = glue({0, 1}, {});
    CHECK(one.size() == 1);
    CHECK(one.tree_edges.empty());
    auto two = glue({0, 1}, {trivial_decomposition({1, 2})});
    CHECK(two.size() == 2);
    REQUIRE(two.tree_edges.size() == 1);
    CHECK(two.tree_edges[0].first == two.root);

    auto p = hg("e1(a,b)\ne2(b,c)");
    auto split = glue(vs(p, {"b"}), {trivial_decomposition(vs(p, {"a", "b"})), trivial_decomposition(vs(p, {"b", "c"}))});
    check_valid(p, split);
  }

  TEST_CASE("axiom checks find witnesses") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto td = glue(vs(p, {"b"}), {trivial_decomposition(vs(p, {"a", "b"})), trivial_decomposition(vs(p, {"b", "c"}))});
    TreeDecomposition broken = td;
    broken.bags.pop_back();
    broken.tree_edges.pop_back();
    auto v = check_axioms(p, broken);
    bool coverage = false;
    for (const auto& x : v) coverage = coverage || x.axiom == "coverage";
    CHECK(coverage);

    TreeDecomposition gap;
    gap.bags = {vs(p, {"a", "b"}), vs(p, {"c"}), vs(p, {"b", "c"})};
    gap.tree_edges = {{0, 1}, {1, 2}};
    auto w = check_axioms(p, gap);
    REQUIRE_FALSE(w.empty());
    CHECK(w[0].axiom == "connectivity");
    CHECK(w[0].witness == "b");
  }

  TEST_CASE("strip empty bags keeps a tree") {
    TreeDecomposition td;
    td.bags = {{}, {0, 1}, {1, 2}, {}};
    td.tree_edges = {{0, 1}, {0, 2}, {2, 3}};
    auto s = strip_empty_bags(td);
    CHECK(s.size() == 2);
    CHECK(s.tree_edges.size() == 1);
    check_valid(hg("e1(a,b)\ne2(b,c)"), s);
  }

  TEST_CASE("r family order and cap") {
    TreeDecomposition t;
    t.bags = {{0, 1}, {1, 2}, {0, 1}};
    t.tree_edges = {{0, 1}, {1, 2}};
    auto f = r_family(t, 2, 0);
    REQUIRE(f.sets.size() == 3);
    CHECK(f.sets[0] == VertexSet{0, 1});
    CHECK(f.sets[1] == VertexSet{1, 2});
    CHECK(f.sets[2] == VertexSet{0, 1, 2});
    auto capped = r_family(t, 2, 2);
    CHECK(capped.truncated);
    CHECK(capped.sets.size() == 2);
  }

  TEST_CASE("params") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto d = DecomposeParams::derive(p, 1, 2);
    CHECK_NOTHROW(d.validate());
    CHECK(d.lambda > 2 * d.w_prime / d.phi_prime);
    DecomposeParams bad = d;
    bad.lambda = 1;
    CHECK_THROWS(bad.validate());
    bad = d;
    bad.omega = 0.5;
    CHECK_THROWS(bad.validate());
  }

  TEST_CASE("one edge") {
    auto h = hg("e(a,b,c)");
    auto td = decompose(h, all_vertices(h), {}, {all_vertices(h)}, DecomposeParams::derive(h, 1, 1));
    REQUIRE(td);
    CHECK(td->size() == 1);
    auto r = poly_approx(h, 1);
    REQUIRE(r.outcome == Outcome::Decomposition);
    CHECK(r.td.width == doctest::Approx(1));
    auto f = fpt_approx(h, 1);
    REQUIRE(f.outcome == Outcome::Decomposition);
    CHECK(f.td.width == doctest::Approx(1));
    CHECK(f.iterations == 1);
  }

  TEST_CASE("path with omega 1") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto r = poly_approx(p, 1);
    REQUIRE(r.outcome == Outcome::Decomposition);
    check_valid(p, r.td);
    for (const auto& c : r.td.bag_covers) CHECK(c.value <= r.report.bag_limit + 1e-9);
  }

  TEST_CASE("disjoint edges give one bag each") {
    auto h = hg("e1(a,b)\ne2(c,d)\ne3(f,g)");
    auto r = poly_approx(h, 1);
    REQUIRE(r.outcome == Outcome::Decomposition);
    check_valid(h, r.td);
    CHECK(r.td.size() == 3);
    CHECK(r.td.width == doctest::Approx(1));
  }

  TEST_CASE("recursion with tight parameters") {
    auto h = long_path(30);
    DecomposeParams p;
    p.omega = 1;
    p.w_prime = 1;
    p.lambda = 13;
    auto r = poly_approx(h, 1, 20000, p);
    REQUIRE(r.outcome == Outcome::Decomposition);
    check_valid(h, r.td);
    CHECK(r.td.size() > 1);
    for (const auto& c : r.td.bag_covers) CHECK(c.value <= (1 + p.phi_prime) * p.lambda + 1e-9);
  }

  TEST_CASE("below the optimum: NO or valid, never silent garbage") {
    auto tri = hg("ab(a,b)\nbc(b,c)\nca(c,a)");
    CHECK(oracle_fhtw(tri) == doctest::Approx(1.5));
    DecomposeParams p;
    p.omega = 1;
    p.w_prime = 0.5;
    p.lambda = 7;
    auto r = poly_approx(tri, 1, 20000, p);
    if (r.outcome == Outcome::Decomposition) check_valid(tri, r.td);
    else CHECK(r.outcome == Outcome::No);
  }

  TEST_CASE("acyclic instances") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      RandomParams rp;
      rp.n = 12;
      auto h = gen_random(RandomKind::Acyclic, rp, seed);
      auto r = poly_approx(h, 1);
      REQUIRE(r.outcome == Outcome::Decomposition);
      check_valid(h, r.td);
      CHECK(r.td.width <= r.report.bag_limit + 1e-9);
      auto f = fpt_approx(h, 1);
      REQUIRE(f.outcome == Outcome::Decomposition);
      for (std::size_t i = 1; i < f.widths.size(); ++i) CHECK(f.widths[i] <= f.widths[i - 1] + 1e-9);
      CHECK(f.td.width <= f.widths.front() + 1e-9);
    }
  }

  TEST_CASE("family cap makes NO inconclusive") {
    auto tri = hg("ab(a,b)\nbc(b,c)\nca(c,a)");
    TreeDecomposition t;
    t.bags = {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}};
    t.tree_edges = {{3, 0}, {3, 1}, {3, 2}};
    DecomposeParams p;
    p.omega = 1;
    p.w_prime = 0.1;
    p.lambda = 7;
    p.family_cap = 1;
    auto r = approx_fhtw(tri, 1, t, p);
    if (r.outcome != Outcome::Decomposition) CHECK(r.outcome == Outcome::Inconclusive);
  }

  TEST_CASE("bound report") {
    auto h = hg("e1(a,b)\ne2(b,c)");
    auto p = DecomposeParams::derive(h, 2, 2);
    auto b = bound_report(h, p);
    CHECK(b.bag_limit == doctest::Approx((1 + 1.0 / 6) * p.lambda));
    CHECK(b.width_bound == doctest::Approx(b.bag_limit));
    CHECK(b.min_term > 0);
    CHECK(b.lambda_stop > 0);
  }
}
