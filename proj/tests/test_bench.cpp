#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace fhtw;
using namespace fhtw::test;

TEST_SUITE("bench") {
  TEST_CASE("gap instance sizes") {
    auto g2 = gen_gap_instance(2);
    CHECK(g2.h.num_vertices() == 24);
    CHECK(g2.h.num_edges() == g2.short_edges + g2.long_edges);
    CHECK(gen_gap_instance(3).h.num_vertices() == 56);
    CHECK_THROWS(gen_gap_instance(1));
    CHECK_THROWS(gen_gap_instance(13));
  }

  TEST_CASE("gap instance structure") {
    auto g = gen_gap_instance(3);
    const auto& h = g.h;
    CHECK_FALSE(contains(h.neighbors(g.a), g.b));
    // long edges are cliques; sibling leaves share neighbourhoods
    for (int e = g.short_edges; e < h.num_edges(); ++e) {
      const auto& ed = h.edge(e);
      for (std::size_t i = 0; i < ed.size(); ++i)
        for (std::size_t j = i + 1; j < ed.size(); ++j) CHECK(contains(h.neighbors(ed[i]), ed[j]));
    }
    for (int v = 0; v < h.num_vertices(); ++v) {
      const std::string& n = h.vertex_name(v);
      if (n.rfind("I3_0_", 0) != 0) continue;
      std::string sib = n;
      sib.replace(n.find("_0_"), 3, "_1_");
      int w = h.find_vertex(sib);
      REQUIRE(w >= 0);
      VertexSet nv = h.neighbors(v), nw = h.neighbors(w);
      nv.erase(std::remove(nv.begin(), nv.end(), w), nv.end());
      nw.erase(std::remove(nw.begin(), nw.end(), v), nw.end());
      CHECK(nv == nw);
    }
  }

  TEST_CASE("gap instance separators split the terminals") {
    auto g = gen_gap_instance(2);
    VertexSet a{g.a}, b{g.b};
    auto s = min_cover_absep(g.h, a, b, set_difference(all_vertices(g.h), {g.a, g.b}));
    auto comps = connected_components(g.h, s.separator);
    CHECK(comps.size() >= 2);
    for (const auto& c : comps) CHECK_FALSE((contains(c, g.a) && contains(c, g.b)));
  }

  TEST_CASE("random generators") {
    RandomParams p;
    p.n = 10;
    auto a = gen_random(RandomKind::Acyclic, p, 1);
    CHECK(gyo_acyclic(a));
    CHECK(to_hg(a) == to_hg(gen_random(RandomKind::Acyclic, p, 1)));
    auto u = gen_random(RandomKind::Uniform, p, 5);
    CHECK(connected_components(u).size() == 1);
    CHECK(to_hg(u) == to_hg(gen_random(RandomKind::Uniform, p, 5)));
    RandomParams full;
    full.n = 5;
    full.m = 3;
    full.kmin = full.kmax = 5;
    CHECK(oracle_fhtw(gen_random(RandomKind::Uniform, full, 2)) == doctest::Approx(1));
    RandomParams bad;
    bad.kmin = 4;
    bad.kmax = 2;
    CHECK_THROWS(gen_random(RandomKind::Uniform, bad, 1));
  }

  TEST_CASE("gyo") {
    CHECK(gyo_acyclic(hg("e1(a,b)\ne2(b,c)")));
    CHECK_FALSE(gyo_acyclic(hg("ab(a,b)\nbc(b,c)\nca(c,a)")));
    CHECK(gyo_acyclic(hg("ab(a,b)\nbc(b,c)\nca(c,a)\nabc(a,b,c)")));
  }

  TEST_CASE("validator") {
    auto tri = hg("ab(a,b)\nbc(b,c)\nca(c,a)");
    auto r = validate_td(tri, trivial_decomposition(all_vertices(tri)));
    CHECK(r.ok());
    CHECK(r.fhtw_of_td == doctest::Approx(1.5));
    CHECK(r.ghtw_upper == 2);

    auto p = hg("e1(a,b)\ne2(b,c)");
    auto td = glue(vs(p, {"b"}), {trivial_decomposition(vs(p, {"a", "b"})), trivial_decomposition(vs(p, {"b", "c"}))});
    td.bags.pop_back();
    td.tree_edges.pop_back();
    auto bad = validate_td(p, td);
    CHECK_FALSE(bad.ok());
    REQUIRE_FALSE(bad.violations.empty());
    bool e2 = false;
    for (const auto& v : bad.violations) e2 = e2 || (v.axiom == "coverage" && v.witness == "e2");
    CHECK(e2);
  }

  TEST_CASE("oracle fhtw") {
    CHECK(oracle_fhtw(hg("e(a,b,c)")) == doctest::Approx(1));
    CHECK(oracle_fhtw(hg("ab(a,b)\nbc(b,c)\nca(c,a)")) == doctest::Approx(1.5));
    RandomParams p;
    p.n = 8;
    CHECK(oracle_fhtw(gen_random(RandomKind::Acyclic, p, 3)) == doctest::Approx(1));
    CHECK(oracle_fhtw(hg("e1(a,b)\ne2(b,c)\ne3(c,d)\ne4(d,a)")) == doctest::Approx(2));
  }

  TEST_CASE("oracle fhtw never beats a computed decomposition") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      Hypergraph h = random_small(seed, 7, 6, 3);
      double opt = oracle_fhtw(h);
      auto r = poly_approx(h, std::max(1.0, opt));
      REQUIRE(r.outcome == Outcome::Decomposition);
      CHECK(r.td.width >= opt - 1e-7);
    }
  }

  TEST_CASE("oracle separator") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto o = oracle_min_separator(p, vs(p, {"a"}), vs(p, {"c"}), all_edges(p));
    CHECK(o.s == vs(p, {"b"}));
    CHECK(o.value == doctest::Approx(1));
    auto d = hg("e1(a,b)\ne2(c,d)");
    auto e = oracle_min_separator(d, vs(d, {"a"}), vs(d, {"d"}), all_edges(d));
    CHECK(e.s.empty());
    CHECK(e.value == doctest::Approx(0));
  }

  TEST_CASE("oracle agrees with rounding on a reduced gap instance") {
    auto g = gen_gap_instance(2);
    // keep the terminals and the first layer
    VertexSet keep;
    for (int v = 0; v < g.h.num_vertices(); ++v)
      if (g.h.vertex_name(v).rfind("I1_", 0) == 0 || v == g.a || v == g.b) keep.push_back(v);
    keep = make_set(keep);
    REQUIRE(keep.size() <= 14);
    Hypergraph h = induced(g.h, keep);
    int a = static_cast<int>(std::find(keep.begin(), keep.end(), g.a) - keep.begin());
    int b = static_cast<int>(std::find(keep.begin(), keep.end(), g.b) - keep.begin());
    auto o = oracle_min_separator(h, {a}, {b}, all_edges(h));
    auto s = min_cover_absep(h, {a}, {b}, all_vertices(h));
    CHECK(s.value >= o.value - 1e-7);
    CHECK(s.value <= s.bound() * o.value + 1e-6);
  }

  TEST_CASE("width chain on validated outputs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      RandomParams p;
      p.n = 10 + static_cast<int>(seed);
      auto h = gen_random(RandomKind::Acyclic, p, seed);
      auto r = poly_approx(h, 1);
      REQUIRE(r.outcome == Outcome::Decomposition);
      auto v = validate_td(h, r.td);
      CHECK(v.ok());
      CHECK(v.fhtw_of_td <= v.ghtw_upper + 1e-7);
      CHECK(v.ghtw_upper <= v.fhtw_of_td * (1 + std::log(h.num_vertices())) + 1e-6);
    }
  }
}
