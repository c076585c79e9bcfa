#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trd/graph.hpp"

namespace trd {

// A function V(G) -> {0,1,2}, stored as the two disjoint positive classes.
class Labeling {
 public:
  Labeling(VertexSet ones, VertexSet twos);

  VertexSet ones() const { return ones_; }
  VertexSet twos() const { return twos_; }
  VertexSet positive() const { return ones_ | twos_; }

  int value(int v) const {
    return contains(twos_, v) ? 2 : contains(ones_, v) ? 1 : 0;
  }
  int weight() const { return set_size(ones_) + 2 * set_size(twos_); }

  // Per-vertex digit string, e.g. "02120" for P_5.
  std::string to_digits(int n) const;

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.ones_ == b.ones_ && a.twos_ == b.twos_;
  }

 private:
  VertexSet ones_;
  VertexSet twos_;
};

bool is_dominating(const Graph& g, VertexSet s);
bool is_total_dominating(const Graph& g, VertexSet s);

// Total Roman domination check: every 0-vertex sees a 2, and the positive
// vertices induce a subgraph without isolated vertices. Requires g
// isolate-free.
bool is_trd_function(const Graph& g, const Labeling& f);

// Domination number. Defined for every graph (isolated vertices simply
// belong to every dominating set).
int gamma(const Graph& g);

// Total domination number; throws std::invalid_argument on graphs with
// isolated vertices.
int gamma_t(const Graph& g);

// Total Roman domination number, exact. Throws on isolated vertices.
int gamma_tr(const Graph& g);

// Streams every optimal total Roman dominating function exactly once.
// fn returns false to stop; returns false iff stopped early.
bool for_each_optimal_trd(const Graph& g,
                          const std::function<bool(const Labeling&)>& fn);

std::vector<Labeling> optimal_trd_functions(const Graph& g);

struct NestedPairWitness {
  VertexSet dominating;        // a gamma(G)-set S
  VertexSet total_dominating;  // a gamma_t(G)-set T with S strictly inside T
};

// Searches for a minimum dominating set strictly contained in some minimum
// total dominating set. Requires g connected and isolate-free.
std::optional<NestedPairWitness> exists_nested_pair(const Graph& g);

}  // namespace trd
