#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <string>
#include <utility>

#include "augcycle/cycles.hpp"
#include "augcycle/rng.hpp"
#include "helpers.hpp"

using namespace augcycle;
using test::s1;
using test::s2;

namespace {

struct AdjDigraph {
  int n = 0;
  std::set<std::pair<int, int>> arcs;
  int vertex_count() const { return n; }
  bool arc(int u, int v) const { return arcs.contains({u, v}); }
};

// Rotation-insensitive recount, independent of the DFS enumerator: try every
// ordered tuple of distinct vertices and dedupe by canonical rotation.
template <typename G>
long recount_dicycles(const G& g, int k) {
  const int n = g.vertex_count();
  std::set<std::vector<int>> seen;
  std::vector<int> tuple(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  long count = 0;
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      for (int i = 0; i < k; ++i)
        if (!g.arc(tuple[i], tuple[(i + 1) % k])) return;
      std::vector<int> canon = tuple;
      std::rotate(canon.begin(), std::min_element(canon.begin(), canon.end()), canon.end());
      if (seen.insert(canon).second) ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace

TEST_CASE("for_each_dicycle visits known cycles") {
  AdjDigraph triangle{3, {{0, 1}, {1, 2}, {2, 0}}};
  int hits = 0;
  for_each_dicycle(triangle, 3, [&](const std::vector<int>& c) {
    ++hits;
    CHECK(c == std::vector<int>{0, 1, 2});
  });
  CHECK(hits == 1);

  AdjDigraph both{3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {2, 1}, {0, 2}}};
  hits = 0;
  for_each_dicycle(both, 3, [&](const std::vector<int>&) { ++hits; });
  CHECK(hits == 2);

  AdjDigraph square{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  hits = 0;
  for_each_dicycle(square, 3, [&](const std::vector<int>&) { ++hits; });
  CHECK(hits == 0);
  for_each_dicycle(square, 4, [&](const std::vector<int>&) { ++hits; });
  CHECK(hits == 1);
}

TEST_CASE("enumerator counts match an independent recount on random tournaments") {
  Lcg64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    AdjDigraph g{6, {}};
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        if (rng.coin())
          g.arcs.insert({i, j});
        else
          g.arcs.insert({j, i});
      }
    for (int k = 3; k <= 6; ++k) {
      long via_enum = 0;
      for_each_dicycle(g, k, [&](const std::vector<int>&) { ++via_enum; });
      CHECK(via_enum == recount_dicycles(g, k));
    }
  }
}

TEST_CASE("bipartite tournaments have no odd dicycles") {
  test::for_each_bipartite(2, 3, [](const BipartiteTournament& d) {
    CHECK(dicycles_of_length(d, 3).empty());
    CHECK(dicycles_of_length(d, 5).empty());
  });
}

TEST_CASE("length validation") {
  const BipartiteTournament d = test::double_fan();
  CHECK_THROWS_AS(dicycles_of_length(d, 2), std::invalid_argument);
  CHECK_THROWS_AS(dicycles_of_length(d, 7), std::invalid_argument);
  CHECK_THROWS_AS(dicycles_of_length(test::from_mask(1, 2, 0), 4), std::invalid_argument);
}

TEST_CASE("signatures split the length and reject foreign vertices") {
  const Completion t = test::double_fan_completion();
  const BipartiteTournament& d = t.base();
  for (int k = 3; k <= 6; ++k)
    for (const Dicycle& c : dicycles_of_length(t, k)) {
      const Signature s = signature_of(c, d);
      CHECK(s.major + s.minor == k);
    }
  CHECK_THROWS_AS(signature_of(Dicycle({s1(0), s1(1), s2(5)}), d), std::invalid_argument);
}

TEST_CASE("augmented dicycles of the double fan completion") {
  const Completion t = test::double_fan_completion();

  const std::set<Dicycle> expected21 = {
      Dicycle({s1(0), s1(1), s2(2)}),  // u1 u2 v3
      Dicycle({s1(0), s1(1), s2(3)}),  // u1 u2 v4
      Dicycle({s1(0), s2(0), s2(2)}),  // u1 v1 v3
      Dicycle({s1(0), s2(1), s2(2)}),  // u1 v2 v3
      Dicycle({s1(0), s2(1), s2(3)}),  // u1 v2 v4
      Dicycle({s1(1), s2(3), s2(0)}),  // u2 v4 v1
  };
  const auto got21 = augmented_dicycles(t, 3, {Signature{2, 1}});
  CHECK(std::set<Dicycle>(got21.begin(), got21.end()) == expected21);
  CHECK(got21.size() == expected21.size());

  const auto got30 = augmented_dicycles(t, 3, {Signature{3, 0}});
  CHECK(std::set<Dicycle>(got30.begin(), got30.end()) ==
        std::set<Dicycle>{Dicycle({s2(0), s2(1), s2(3)})});  // v1 v2 v4

  CHECK(augmented_dicycles(t, 3, {Signature{2, 1}, Signature{3, 0}}).size() == 7);

  const auto got22 = augmented_dicycles(t, 4, {Signature{2, 2}});
  const std::set<Dicycle> set22(got22.begin(), got22.end());
  CHECK(set22.contains(Dicycle({s1(0), s1(1), s2(3), s2(2)})));  // u1 u2 v4 v3

  // u1 v2 u2 v3 is a 4-dicycle of t but all its arcs are cross arcs.
  const Dicycle alternating({s1(0), s2(1), s1(1), s2(2)});
  const auto all4 = dicycles_of_length(t, 4);
  CHECK(std::count(all4.begin(), all4.end(), alternating) == 1);
  CHECK(!set22.contains(alternating));

  // every reported dicycle really uses an added arc
  const SignatureSet sigs3 = {Signature{2, 1}, Signature{3, 0}};
  const SignatureSet sigs4 = {Signature{2, 2}, Signature{3, 1}, Signature{4, 0}};
  for (const auto& [k, want] : {std::pair{3, sigs3}, std::pair{4, sigs4}})
    for (const Dicycle& c : augmented_dicycles(t, k, want)) {
      bool added = false;
      const auto& vs = c.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i)
        added = added || t.added_arc(vs[i], vs[(i + 1) % vs.size()]);
      CHECK(added);
    }
}

TEST_CASE("augmented dicycle signatures must split k") {
  const Completion t = test::double_fan_completion();
  CHECK_THROWS_AS(augmented_dicycles(t, 3, {Signature{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(augmented_dicycles(t, 4, {Signature{2, 1}}), std::invalid_argument);
}
