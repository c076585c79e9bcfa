#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "trd/canonical.hpp"
#include "trd/criticality.hpp"
#include "trd/enumerate.hpp"
#include "trd/families.hpp"
#include "trd/solvers.hpp"

using namespace trd;
using namespace trd::families;

namespace {

// All family-f parameter vectors of the given total order: n >= 1 leaves and
// a partition of order-1-n pendants into at most n non-increasing parts.
void all_family_f_params(int order, std::vector<std::vector<int>>& out) {
  for (int n = 1; n < order; ++n) {
    int rest = order - 1 - n;
    std::vector<int> ks;
    std::function<void(int, int, int)> rec = [&](int left, int parts, int cap) {
      if (parts == 0) {
        if (left == 0) out.push_back(ks);
        return;
      }
      for (int k = std::min(left, cap); k >= 0; --k) {
        if (left - k > (parts - 1) * k) continue;
        ks.push_back(k);
        rec(left - k, parts - 1, k);
        ks.pop_back();
      }
    };
    rec(rest, n, rest);
  }
}

}  // namespace

TEST_CASE("construction shapes") {
  CHECK(star(3).order() == 4);
  CHECK(star(3).edge_count() == 3);

  Graph ds = double_star(2, 2);
  CHECK(ds.order() == 6);
  CHECK(ds.degree(0) == 3);
  CHECK(ds.degree(1) == 3);
  CHECK(ds.has_edge(0, 1));

  CHECK(gamma_tr(cycle(5)) == 5);

  CHECK(corona(complete(1)) == complete(2));
  CHECK(corona(complete(4)).order() == 8);
  CHECK(gamma_tr(corona(complete(4))) == 8);

  Graph sstar = subdivided_star(3);
  CHECK(sstar.order() == 7);
  CHECK(gamma_tr(sstar) == 7);
  CHECK(has_adjacent_endpaths(sstar));

  Graph g10 = family_g(1, 0);
  CHECK(g10.order() == 6);
  CHECK(gamma_tr(g10) == 6);

  Graph h110 = family_h(1, 1, 0);
  CHECK(h110.order() == 6);
  CHECK(is_path(h110));  // P_6
  CHECK(gamma_tr(h110) == 6);

  Graph g2 = g_r(2);
  CHECK(g2.order() == 9);
  CHECK(gamma_tr(g2) == 6);
  CHECK(diameter(g2) == 3);

  CHECK(disjoint_union(complete(3), complete(3)).order() == 6);
  CHECK(gamma_tr(disjoint_union(complete(3), complete(3))) == 6);
  CHECK(gamma_tr(disjoint_union(complete(2), complete(5))) == 5);
}

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(star(0), std::invalid_argument);
  CHECK_THROWS_AS(double_star(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(subdivided_star(2), std::invalid_argument);
  CHECK_THROWS_AS(family_g(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_h(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_f({}), std::invalid_argument);
  CHECK_THROWS_AS(g_r(1), std::invalid_argument);

  // unsorted parameters sort by default and reject in strict mode
  CHECK(family_f({0, 3}) == family_f({3, 0}));
  CHECK_THROWS_AS(family_f({0, 3}, true), std::invalid_argument);
}

TEST_CASE("order formulas") {
  for (int r = 2; r <= 6; ++r) CHECK(g_r(r).order() == 5 + 2 * r);
  for (int k = 3; k <= 6; ++k) CHECK(subdivided_star(k).order() == 2 * k + 1);
  for (int n = 1; n <= 5; ++n) {
    EnumFilter connected;
    connected.connected = true;
    for (const Graph& h : enumerate_graphs(n, connected))
      CHECK(corona(h).order() == 2 * h.order());
  }
  CHECK(family_f({3, 3, 0, 0}).order() == 11);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= a; ++b)
      for (int r = 0; r <= 3; ++r)
        CHECK(family_h(a, b, r).order() == 2 * (a + b) + r + 2);
}

TEST_CASE("gamma_tR = n for every constructed family instance up to order 14") {
  std::vector<Graph> instances;
  for (int n = 3; n <= 12; ++n) instances.push_back(path(n));
  for (int n = 3; n <= 12; ++n) instances.push_back(cycle(n));
  for (int r = 3; r <= 7; ++r) instances.push_back(corona(complete(r)));
  for (int k = 3; k <= 6; ++k) instances.push_back(subdivided_star(k));
  instances.push_back(family_g(1, 0));
  instances.push_back(family_g(2, 1));
  instances.push_back(family_g(3, 2));
  instances.push_back(family_h(1, 1, 2));
  instances.push_back(family_h(2, 2, 1));
  instances.push_back(family_h(3, 2, 0));
  for (const Graph& g : instances) {
    if (g.order() > 14) continue;
    CHECK(gamma_tr(g) == g.order());
  }
}

TEST_CASE("family g and h edge-criticality instances") {
  GraphClass g11 = classify_graph(family_g(1, 1), Mode::kAddition,
                                  Invariant::kTotalRoman, 4);
  CHECK(g11.k == 8);
  CHECK(is_edge_critical(g11));

  GraphClass h221 = classify_graph(family_h(2, 2, 1), Mode::kAddition,
                                   Invariant::kTotalRoman, 4);
  CHECK(h221.k == 11);
  CHECK(is_edge_critical(h221));

  GraphClass h222 = classify_graph(family_h(2, 2, 2), Mode::kAddition,
                                   Invariant::kTotalRoman, 4);
  CHECK_FALSE(is_edge_critical(h222));

  GraphClass s4 = classify_graph(subdivided_star(4), Mode::kAddition,
                                 Invariant::kTotalRoman, 4);
  CHECK(s4.k == 9);
  CHECK(is_edge_critical(s4));
}

TEST_CASE("shape recognizers") {
  CHECK(is_path(path(4)));
  CHECK(is_cycle(cycle(5)));
  CHECK_FALSE(is_cycle(path(4)));
  CHECK(is_star(complete(2)));
  CHECK(is_star(star(5)));
  CHECK_FALSE(is_star(double_star(1, 1)));
  CHECK(is_double_star(double_star(1, 1)));  // P_4
  CHECK(is_double_star(double_star(2, 3)));
  CHECK_FALSE(is_double_star(path(5)));
  CHECK(is_corona(complete(2)));
  CHECK(is_corona(corona(cycle(4))));
  CHECK_FALSE(is_corona(star(3)));
  CHECK(is_subdivided_star(subdivided_star(3)));
  CHECK_FALSE(is_subdivided_star(path(5)));  // spider needs a degree-3 centre
}

TEST_CASE("family f recognition") {
  auto star4 = is_in_family_f(star(4));
  REQUIRE(star4.has_value());
  CHECK(*star4 == std::vector<int>({0, 0, 0, 0}));

  CHECK_FALSE(is_in_family_f(cycle(5)).has_value());
  CHECK_THROWS_AS(is_in_family_f(disjoint_union(complete(2), complete(2))),
                  std::invalid_argument);

  auto fig2 = is_in_family_f(family_f({3, 3, 0, 0}));
  REQUIRE(fig2.has_value());
  CHECK(*fig2 == std::vector<int>({3, 3, 0, 0}));

  // the recognizer's parameters rebuild an isomorphic tree, and re-recognition
  // is stable
  for (int order = 2; order <= 12; ++order) {
    std::vector<std::vector<int>> params;
    all_family_f_params(order, params);
    for (const auto& ks : params) {
      Graph g = family_f(ks);
      auto rec = is_in_family_f(g);
      REQUIRE(rec.has_value());
      CHECK(is_isomorphic(family_f(*rec), g));
      CHECK(*is_in_family_f(family_f(*rec)) == *rec);
      // parameters rooted at a maximum-degree centre come back verbatim
      int max_k = *std::max_element(ks.begin(), ks.end());
      if ((int)ks.size() >= max_k + 1) CHECK(*rec == ks);
    }
  }
}

TEST_CASE("family f recognition duality over all trees up to order 10") {
  EnumFilter trees;
  trees.trees_only = true;
  for (int order = 2; order <= 10; ++order) {
    std::set<std::string> member_certs;
    std::vector<std::vector<int>> params;
    all_family_f_params(order, params);
    for (const auto& ks : params)
      member_certs.insert(canonical_graph6(family_f(ks)));
    for (const Graph& t : enumerate_graphs(order, trees)) {
      bool recognized = is_in_family_f(t).has_value();
      bool constructed = member_certs.count(canonical_graph6(t)) > 0;
      CHECK(recognized == constructed);
    }
  }
}

TEST_CASE("unit tuft quantification over rootings") {
  // one pendant below one leaf of a star: the max-degree rooting reads a
  // unit tuft, the leaf rooting avoids it
  Graph g = family_f({1, 0, 0});
  auto rec = is_in_family_f(g);
  REQUIRE(rec.has_value());
  CHECK(*rec == std::vector<int>({1, 0, 0}));
  CHECK(is_in_family_f_without_unit_tufts(g));

  // two unit tufts cannot be rooted away
  CHECK_FALSE(is_in_family_f_without_unit_tufts(family_f({1, 1})));
  CHECK(is_in_family_f_without_unit_tufts(family_f({2, 2, 2, 2})));
  CHECK(is_in_family_f_without_unit_tufts(star(4)));
}

TEST_CASE("family t recognition") {
  CHECK(is_in_family_t(star(1)));
  CHECK(is_in_family_t(star(4)));
  CHECK(is_in_family_t(double_star(2, 3)));
  CHECK(is_in_family_t(subdivided_star(3)));
  CHECK(is_in_family_t(path(5)));  // subdivided star on two legs
  CHECK_FALSE(is_in_family_t(path(6)));
  CHECK_FALSE(is_in_family_t(cycle(4)));

  // subdivided star plus pendants on the non-leaf vertices stays inside
  Graph g = subdivided_star(3);
  int centre_pendant = g.order();
  Graph with_pendants(g.order() + 2);
  for (Edge e : g.edges()) with_pendants.connect(e.u, e.v);
  with_pendants.connect(0, centre_pendant);      // pendant on the centre
  with_pendants.connect(1, centre_pendant + 1);  // pendant on a middle vertex
  CHECK(is_in_family_t(with_pendants));

  // pendant on a leg leaf leaves the family
  Graph bad(g.order() + 1);
  for (Edge e : g.edges()) bad.connect(e.u, e.v);
  bad.connect(4, g.order());  // vertex 4 is a leg leaf of subdivided_star(3)
  CHECK_FALSE(is_in_family_t(bad));
}

TEST_CASE("family f edge-removal criticality instances") {
  ClassificationCache cache;
  GraphClass crit = cache.classify(family_f({2, 2, 2, 2}), Mode::kRemoval,
                                   Invariant::kTotalRoman);
  CHECK(is_edge_critical(crit));

  GraphClass not_crit =
      cache.classify(family_f({2, 1}), Mode::kRemoval, Invariant::kTotalRoman);
  CHECK_FALSE(is_edge_critical(not_crit));
}
