#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trd/graph.hpp"

namespace trd {

struct EnumFilter {
  bool connected = false;
  bool no_isolated = false;
  bool trees_only = false;
  int min_degree = 0;
};

// Streams exactly one representative per isomorphism class of graphs of
// order n that satisfy the filter. Built-in generation runs by canonical
// augmentation: graphs on n-1 vertices are extended by one vertex, and a
// child survives iff deleting its canonical deletion vertex recovers the
// parent (plus per-parent certificate dedup). Caps: n <= 10 in general,
// n <= 14 for trees_only. fn returns false to stop early.
void for_each_graph(int n, const EnumFilter& filter,
                    const std::function<bool(const Graph&)>& fn);

std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter);

std::uint64_t count_graphs(int n, const EnumFilter& filter);

}  // namespace trd
