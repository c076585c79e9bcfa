#include "trd/enumerate.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "trd/canonical.hpp"
#include "trd/graph6.hpp"

namespace trd {

namespace {

bool passes(const Graph& g, const EnumFilter& f) {
  if (f.no_isolated && g.has_isolated_vertex()) return false;
  if (f.min_degree > 0 && g.min_degree() < f.min_degree) return false;
  if (f.connected && !is_connected(g)) return false;
  return true;
}

// Extends `parent` (order k) by vertex k joined to every subset of the old
// vertices; keeps a child iff deleting its canonical deletion vertex gives
// back the parent's isomorphism class. Children of one parent are deduped
// by certificate, so each class on k+1 vertices is emitted exactly once
// across all parents.
bool augment(const Graph& parent, const std::string& parent_cert,
             const std::function<bool(const Graph&)>& emit) {
  int k = parent.order();
  std::unordered_set<std::string> seen;
  for (VertexSet mask = 0; mask <= full_set(k); ++mask) {
    Graph child(k + 1);
    for (auto e : parent.edges()) child.connect(e.u, e.v);
    for_each_vertex(mask, [&](int v) { child.connect(v, k); });

    auto lab = canonical_labeling(child);
    int del = lab[k];  // vertex at the last canonical position
    bool canonical_parent =
        del == k ? true : canonical_graph6(child.delete_vertex(del)) == parent_cert;
    if (!canonical_parent) continue;
    std::string cert = to_graph6(apply_labeling(child, lab));
    if (!seen.insert(cert).second) continue;
    if (!emit(child)) return false;
  }
  return true;
}

// Tree analogue: attach one leaf everywhere; the canonical deletion vertex
// is the leaf at the latest canonical position, so parents stay trees.
bool augment_tree(const Graph& parent, const std::string& parent_cert,
                  const std::function<bool(const Graph&)>& emit) {
  int k = parent.order();
  std::unordered_set<std::string> seen;
  for (int attach = 0; attach < k; ++attach) {
    Graph child(k + 1);
    for (auto e : parent.edges()) child.connect(e.u, e.v);
    child.connect(attach, k);

    auto lab = canonical_labeling(child);
    int del = -1;
    for (int p = k; p >= 0; --p)
      if (child.degree(lab[p]) == 1) {
        del = lab[p];
        break;
      }
    bool canonical_parent =
        del == k ? true : canonical_graph6(child.delete_vertex(del)) == parent_cert;
    if (!canonical_parent) continue;
    std::string cert = to_graph6(apply_labeling(child, lab));
    if (!seen.insert(cert).second) continue;
    if (!emit(child)) return false;
  }
  return true;
}

// Depth-first over the augmentation tree; only the path from K_1 to the
// current graph is alive at any moment.
bool grow(const Graph& g, int target, bool trees,
          const std::function<bool(const Graph&)>& fn) {
  if (g.order() == target) return fn(g);
  std::string cert = canonical_graph6(g);
  auto recurse = [&](const Graph& child) { return grow(child, target, trees, fn); };
  return trees ? augment_tree(g, cert, recurse) : augment(g, cert, recurse);
}

}  // namespace

void for_each_graph(int n, const EnumFilter& filter,
                    const std::function<bool(const Graph&)>& fn) {
  int cap = filter.trees_only ? 14 : 10;
  if (n < 1 || n > cap)
    throw std::invalid_argument("built-in enumeration supports n <= " +
                                std::to_string(cap) + ", got " + std::to_string(n));
  auto sink = [&](const Graph& g) { return passes(g, filter) ? fn(g) : true; };
  grow(Graph(1), n, filter.trees_only, sink);
}

std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter) {
  std::vector<Graph> out;
  for_each_graph(n, filter, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::uint64_t count_graphs(int n, const EnumFilter& filter) {
  std::uint64_t count = 0;
  for_each_graph(n, filter, [&](const Graph&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace trd
