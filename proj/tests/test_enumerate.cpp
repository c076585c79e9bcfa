#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "trd/canonical.hpp"
#include "trd/enumerate.hpp"
#include "trd/graph.hpp"

using namespace trd;

namespace {

// Brute-force class counter: canonicalize all 2^C(n,2) labeled graphs.
std::set<std::string> labeled_brute_force(int n, bool connected_only) {
  std::set<std::string> classes;
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  for (long mask = 0; mask < (1L << m); ++mask) {
    Graph g(n);
    for (int b = 0; b < m; ++b)
      if ((mask >> b) & 1) g.connect(slots[b].first, slots[b].second);
    if (connected_only && !is_connected(g)) continue;
    classes.insert(canonical_graph6(g));
  }
  return classes;
}

}  // namespace

TEST_CASE("enumerator agrees with the labeled brute force up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    auto all_classes = labeled_brute_force(n, false);
    auto connected_classes = labeled_brute_force(n, true);

    std::set<std::string> from_enum;
    for (const Graph& g : enumerate_graphs(n, {})) {
      CHECK(g.order() == n);
      CHECK(from_enum.insert(canonical_graph6(g)).second);  // no duplicates
    }
    CHECK(from_enum == all_classes);

    EnumFilter connected;
    connected.connected = true;
    std::set<std::string> from_enum_connected;
    for (const Graph& g : enumerate_graphs(n, connected))
      CHECK(from_enum_connected.insert(canonical_graph6(g)).second);
    CHECK(from_enum_connected == connected_classes);
  }
}

TEST_CASE("spec counts") {
  EnumFilter connected;
  connected.connected = true;
  CHECK(count_graphs(4, connected) == 6);
  CHECK(count_graphs(5, connected) == 21);

  EnumFilter trees;
  trees.trees_only = true;
  CHECK(count_graphs(5, trees) == 3);
}

TEST_CASE("known sequence values") {
  CHECK(count_graphs(6, {}) == 156);
  CHECK(count_graphs(7, {}) == 1044);
  EnumFilter connected;
  connected.connected = true;
  CHECK(count_graphs(6, connected) == 112);
  CHECK(count_graphs(7, connected) == 853);

  EnumFilter trees;
  trees.trees_only = true;
  std::uint64_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(count_graphs(n, trees) == expected[n - 1]);
}

TEST_CASE("tree mode emits only trees, exactly once per class") {
  EnumFilter trees;
  trees.trees_only = true;
  std::set<std::string> seen;
  for (const Graph& t : enumerate_graphs(8, trees)) {
    CHECK(is_tree(t));
    CHECK(seen.insert(canonical_graph6(t)).second);
  }
  CHECK(seen.size() == 23);
}

TEST_CASE("filters") {
  EnumFilter no_isolated;
  no_isolated.no_isolated = true;
  for (const Graph& g : enumerate_graphs(5, no_isolated))
    CHECK_FALSE(g.has_isolated_vertex());

  EnumFilter min3;
  min3.min_degree = 3;
  for (const Graph& g : enumerate_graphs(6, min3)) CHECK(g.min_degree() >= 3);

  CHECK_THROWS_AS(count_graphs(11, {}), std::invalid_argument);
  CHECK_THROWS_AS(count_graphs(0, {}), std::invalid_argument);
}

TEST_CASE("early stop") {
  int seen = 0;
  for_each_graph(6, {}, [&](const Graph&) { return ++seen < 10; });
  CHECK(seen == 10);
}
