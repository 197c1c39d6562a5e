#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace fhtw;
using namespace fhtw::test;

TEST_SUITE("menger") {
  TEST_CASE("clique family validation") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    CHECK_NOTHROW(make_clique_family(p, {vs(p, {"a", "b"})}));
    CHECK_THROWS(make_clique_family(p, {vs(p, {"a", "c"})}));
    CHECK_THROWS(make_clique_family(p, {{}}));
  }

  TEST_CASE("path LP examples") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto f = make_clique_family(p, {vs(p, {"b"})});
    auto lp = path_lp(p, vs(p, {"a"}), vs(p, {"c"}), f);
    CHECK(lp.opt == doctest::Approx(1));
    CHECK(lp.y(0) == doctest::Approx(1));
    REQUIRE(lp.paths.size() == 1);
    CHECK(lp.z(0) == doctest::Approx(1));

    auto d = hg("e1(a,b)\ne2(c,d)");
    auto fd = make_clique_family(d, {vs(d, {"b"})});
    CHECK(path_lp(d, vs(d, {"a"}), vs(d, {"d"}), fd).opt == doctest::Approx(0));

    auto two = disjoint_paths(2, 1);
    CHECK(path_lp(two.g, two.a, two.b, two.f).opt == doctest::Approx(2));
  }

  TEST_CASE("path cap") {
    auto k = disjoint_paths(5, 1);
    auto lp = path_lp(k.g, k.a, k.b, k.f, 3);
    CHECK(lp.status == PathLpStatus::CapExceeded);
    CHECK_THROWS_AS(clique_menger(k.g, k.a, k.b, k.f, 1, 0, 3), PathCapExceeded);
  }

  TEST_CASE("chordless paths suffice") {
    // the chord a-c makes a-b-c-d redundant
    auto g = hg("ab(a,b)\nbc(b,c)\nac(a,c)\ncd(c,d)");
    auto f = make_clique_family(g, {vs(g, {"b"}), vs(g, {"c"})});
    auto lp = path_lp(g, vs(g, {"a"}), vs(g, {"d"}), f);
    REQUIRE(lp.paths.size() == 1);
    CHECK(lp.paths[0] == std::vector<int>{0, 2, 3});
    CHECK(lp.opt == doctest::Approx(1));
  }

  TEST_CASE("sample examples") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto f = make_clique_family(p, {vs(p, {"b"}), vs(p, {"a", "b"})});
    Eigen::VectorXd z(1);
    z << 1.5;
    auto s = sample_paths({{0, 1, 2}}, z, 1, f, 1);
    CHECK(s.ell == 1);
    CHECK(s.paths.size() == 1);
    CHECK(s.ok);

    auto four = disjoint_paths(4, 1);
    auto lp = path_lp(four.g, four.a, four.b, four.f);
    REQUIRE(lp.opt == doctest::Approx(4));
    auto u = sample_paths(lp.paths, lp.z, 2, four.f, 7);
    CHECK(u.ell == 4);
    CHECK(u.t == doctest::Approx(2));
    for (int c : u.counts) CHECK(c <= 12);
    CHECK(u.ok);
  }

  TEST_CASE("sampler reports failure when the threshold is unreachable") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto f = make_clique_family(p, {vs(p, {"b"})});
    Eigen::VectorXd z(1);
    z << 11.0;
    auto s = sample_paths({{0, 1, 2}}, z, 10, f, 3, 5);
    CHECK_FALSE(s.ok);
    CHECK(s.attempts == 5);
    CHECK(s.counts[0] == 10);
  }

  TEST_CASE("separator branch on the path") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto f = make_clique_family(p, {vs(p, {"b"})});
    auto m = clique_menger(p, vs(p, {"a"}), vs(p, {"c"}), f, 1, 0);
    REQUIRE(m.branch == MengerOutcome::Branch::Separator);
    CHECK(m.separator.separator == vs(p, {"b"}));
    CHECK(m.separator.value == doctest::Approx(1));
    CHECK(m.separator.value <= 8 + 4 * std::log(3.0));
    CHECK(m.cover_names == std::vector<std::string>{"F0"});
  }

  TEST_CASE("paths branch with clamped ell") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto f = make_clique_family(p, {vs(p, {"b"})});
    auto m = clique_menger(p, vs(p, {"a"}), vs(p, {"c"}), f, 0.5, 0);
    REQUIRE(m.branch == MengerOutcome::Branch::Paths);
    CHECK(m.sample.ell == 1);
    CHECK(m.sample.ok);
  }

  TEST_CASE("k disjoint paths") {
    for (int k = 2; k <= 6; ++k) {
      auto d = disjoint_paths(k);
      auto m = clique_menger(d.g, d.a, d.b, d.f, k - 0.5, 42);
      REQUIRE(m.branch == MengerOutcome::Branch::Paths);
      CHECK(m.sample.ell == static_cast<int>(std::floor((k - 0.5) * std::log2(2.0 * k))));
      for (int c : m.sample.counts) CHECK(c < 6 * m.sample.t);
      auto again = clique_menger(d.g, d.a, d.b, d.f, k - 0.5, 42);
      CHECK(again.sample.paths == m.sample.paths);
    }
  }

  TEST_CASE("separator branch certificates") {
    for (int k = 1; k <= 4; ++k) {
      auto d = disjoint_paths(k, 3);
      auto m = clique_menger(d.g, d.a, d.b, d.f, k, 0);
      REQUIRE(m.branch == MengerOutcome::Branch::Separator);
      CHECK(separates(d.g, d.a, d.b, m.separator.separator));
      Hypergraph h = menger_hypergraph(d.g, d.f);
      for (int e = 0; e < m.separator.cover.weights.size(); ++e)
        if (m.separator.cover.weights(e) > 0) CHECK(e < d.f.size());
      CHECK(m.separator.value <= (8 + 4 * std::log(std::max(m.separator.alpha_hat, 1.0))) * k + 1e-6);
      CHECK(m.separator.value <= m.bound_n + 1e-6);
    }
  }

  TEST_CASE("dual packing respects cliques") {
    auto d = disjoint_paths(3, 2);
    auto lp = path_lp(d.g, d.a, d.b, d.f);
    for (int c = 0; c < d.f.size(); ++c) {
      double load = 0;
      for (std::size_t i = 0; i < lp.paths.size(); ++i)
        for (int v : lp.paths[i])
          if (contains(d.f.cliques[c], v)) {
            load += lp.z(i);
            break;
          }
      CHECK(load <= 1 + 1e-7);
    }
  }

  TEST_CASE("name clash") {
    auto p = hg("e1(a,b)\ne2(b,c)");
    auto f = make_clique_family(p, {vs(p, {"b"})}, {"e1"});
    CHECK_THROWS(menger_hypergraph(p, f));
  }
}
