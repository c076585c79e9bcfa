#include "trd/canonical.hpp"

#include <algorithm>
#include <map>

#include "trd/graph6.hpp"

namespace trd {

// Canonical labelling by individualization-refinement. A search node holds
// an ordered equitable partition; at each node the first non-singleton cell
// is split by individualizing each of its vertices in turn, and the leaf
// (discrete partition) with the largest relabelled adjacency matrix wins.
// Every pair of equal leaves yields an automorphism of the input graph;
// discovered automorphisms that fix the current branching prefix pointwise
// prune sibling branches, which keeps highly symmetric graphs (empty,
// complete, unions of cliques) from exploding the search.
namespace {

struct Searcher {
  const Graph& g;
  int n;
  std::vector<int> best_rows_perm;     // position -> vertex at best leaf
  std::vector<VertexSet> best_rows;    // relabelled adjacency of best leaf
  bool have_best = false;
  std::vector<std::vector<int>> automorphisms;  // vertex -> vertex maps

  explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

  // Splits every cell by degree towards each splitter until stable. Cell
  // order (and therefore the eventual labelling) depends only on the
  // structure, never on vertex names.
  void refine(std::vector<VertexSet>& cells) const {
    std::vector<VertexSet> queue = cells;
    while (!queue.empty()) {
      VertexSet splitter = queue.back();
      queue.pop_back();
      std::vector<VertexSet> next;
      next.reserve(cells.size());
      for (VertexSet cell : cells) {
        if (set_size(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<int, VertexSet> buckets;
        for_each_vertex(cell, [&](int v) {
          buckets[set_size(g.neighbors(v) & splitter)] |= vbit(v);
        });
        if (buckets.size() == 1) {
          next.push_back(cell);
          continue;
        }
        for (auto& [deg, part] : buckets) {
          next.push_back(part);
          queue.push_back(part);
        }
      }
      cells.swap(next);
    }
  }

  void process_leaf(const std::vector<VertexSet>& cells) {
    std::vector<int> perm(n);   // position -> vertex
    std::vector<int> pos(n);    // vertex -> position
    for (int p = 0; p < n; ++p) {
      perm[p] = first_vertex(cells[p]);
      pos[perm[p]] = p;
    }
    std::vector<VertexSet> rows(n, 0);
    for (int p = 0; p < n; ++p)
      for_each_vertex(g.neighbors(perm[p]), [&](int w) { rows[p] |= vbit(pos[w]); });

    if (!have_best) {
      best_rows = rows;
      best_rows_perm = perm;
      have_best = true;
      return;
    }
    if (rows == best_rows) {
      // leaf equals the current best: the two labellings differ by an
      // automorphism of g
      std::vector<int> aut(n);
      for (int p = 0; p < n; ++p) aut[perm[p]] = best_rows_perm[p];
      bool identity = true;
      for (int v = 0; v < n; ++v)
        if (aut[v] != v) identity = false;
      if (!identity) automorphisms.push_back(std::move(aut));
      return;
    }
    if (rows > best_rows) {
      best_rows = rows;
      best_rows_perm = perm;
    }
  }

  // Orbit partition of the subgroup generated by the automorphisms that fix
  // every vertex of `fixed` pointwise.
  std::vector<int> orbits_fixing(const std::vector<int>& fixed) const {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& aut : automorphisms) {
      bool ok = true;
      for (int f : fixed)
        if (aut[f] != f) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(aut[v]);
        if (a != b) parent[a] = b;
      }
    }
    for (int v = 0; v < n; ++v) parent[v] = find(v);
    return parent;
  }

  void search(std::vector<VertexSet> cells, std::vector<int>& base) {
    refine(cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i)
      if (set_size(cells[i]) > 1) {
        target = i;
        break;
      }
    if (target == cells.size()) {
      process_leaf(cells);
      return;
    }
    VertexSet cell = cells[target];
    std::vector<int> tried;
    for_each_vertex(cell, [&](int v) {
      auto orbit = orbits_fixing(base);
      for (int u : tried)
        if (orbit[u] == orbit[v]) return;
      tried.push_back(v);
      std::vector<VertexSet> child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < target; ++i) child.push_back(cells[i]);
      child.push_back(vbit(v));
      child.push_back(cell & ~vbit(v));
      for (size_t i = target + 1; i < cells.size(); ++i) child.push_back(cells[i]);
      base.push_back(v);
      search(std::move(child), base);
      base.pop_back();
    });
  }

  void run() {
    std::vector<VertexSet> cells{full_set(n)};
    std::vector<int> base;
    search(std::move(cells), base);
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  Searcher s(g);
  s.run();
  return s.best_rows_perm;
}

Graph apply_labeling(const Graph& g, const std::vector<int>& lab) {
  int n = g.order();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[lab[p]] = p;
  Graph out(n);
  for (auto e : g.edges()) out.connect(pos[e.u], pos[e.v]);
  return out;
}

Graph canonical_copy(const Graph& g) {
  Searcher s(g);
  s.run();
  Graph out(g.order());
  for (int p = 0; p < g.order(); ++p)
    for_each_vertex(s.best_rows[p], [&](int q) {
      if (q > p) out.connect(p, q);
    });
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{to_graph6(canonical_copy(g))};
}

std::string canonical_graph6(const Graph& g) {
  return canonical_form(g).certificate;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace trd
