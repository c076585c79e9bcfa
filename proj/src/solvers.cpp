#include "trd/solvers.hpp"

#include <algorithm>
#include <stdexcept>

namespace trd {

namespace {

void require_isolate_free(const Graph& g, const char* op) {
  if (g.has_isolated_vertex())
    throw std::invalid_argument(std::string(op) +
                                ": graph has an isolated vertex");
}

// --- minimum (total) dominating sets -------------------------------------
//
// Iterative deepening over the target size with cover branching: pick an
// uncovered vertex with the fewest candidate coverers and branch on them.

VertexSet closed_cover(const Graph& g, VertexSet s) {
  VertexSet covered = s;
  for_each_vertex(s, [&](int v) { covered |= g.neighbors(v); });
  return covered;
}

VertexSet open_cover(const Graph& g, VertexSet s) {
  VertexSet covered = 0;
  for_each_vertex(s, [&](int v) { covered |= g.neighbors(v); });
  return covered;
}

template <bool Total>
bool cover_exists(const Graph& g, VertexSet chosen, VertexSet covered, int left) {
  if (covered == g.vertices()) return true;
  if (left == 0) return false;
  // each chosen vertex covers at most max_degree (+1) new vertices
  int reach = g.max_degree() + (Total ? 0 : 1);
  if (set_size(g.vertices() & ~covered) > left * reach) return false;
  VertexSet uncovered = g.vertices() & ~covered;
  int pick = -1, best = kMaxVertices + 1;
  for_each_vertex(uncovered, [&](int v) {
    VertexSet cands = Total ? g.neighbors(v) : g.closed_neighborhood(v);
    int c = set_size(cands & ~chosen);
    if (c < best) {
      best = c;
      pick = v;
    }
  });
  VertexSet cands = (Total ? g.neighbors(pick) : g.closed_neighborhood(pick)) & ~chosen;
  bool found = false;
  for_each_vertex(cands, [&](int v) {
    if (found) return;
    VertexSet nc = covered | (Total ? g.neighbors(v) : g.closed_neighborhood(v));
    if (cover_exists<Total>(g, chosen | vbit(v), nc, left - 1)) found = true;
  });
  return found;
}

template <bool Total>
int minimum_cover(const Graph& g) {
  for (int k = 1; k <= g.order(); ++k)
    if (cover_exists<Total>(g, 0, 0, k)) return k;
  return g.order();  // unreachable for valid inputs
}

// --- gamma_tr core --------------------------------------------------------
//
// Decomposition over the set D of 2-labelled vertices: vertices with no
// neighbour in D are forced to be positive, so V1 must contain them; the
// rest of V1 exists only to kill isolated vertices of the induced positive
// subgraph, a small hitting-set problem solved exactly. Iterating D by
// increasing size with an incumbent cut and the gamma_t lower bound keeps
// the sweep far below the raw 3^n labelings.

// Exact minimum hitting set over the neighbourhood lists of the isolated
// positives; returns kMaxVertices when no hitting set of size <= max_allowed
// exists.
int min_hitting_set(const std::vector<VertexSet>& needs, int max_allowed) {
  size_t pick = needs.size();
  int fewest = kMaxVertices + 1;
  for (size_t i = 0; i < needs.size(); ++i) {
    int c = set_size(needs[i]);
    if (c < fewest) {
      fewest = c;
      pick = i;
    }
  }
  if (pick == needs.size()) return 0;
  if (max_allowed <= 0) return kMaxVertices;
  int result = kMaxVertices;
  for_each_vertex(needs[pick], [&](int x) {
    std::vector<VertexSet> rest;
    rest.reserve(needs.size());
    for (VertexSet nd : needs)
      if (!contains(nd, x)) rest.push_back(nd);
    int sub = min_hitting_set(rest, std::min(max_allowed, result) - 1);
    if (sub != kMaxVertices) result = std::min(result, sub + 1);
  });
  return result;
}

// Minimum |V1| completing D into a TRD-function, or kMaxVertices when the
// completion cannot stay below `budget`.
int completion_cost(const Graph& g, VertexSet d, int budget) {
  VertexSet dominated = open_cover(g, d);
  VertexSet forced = g.vertices() & ~dominated & ~d;
  int base = set_size(forced);
  if (base >= budget) return kMaxVertices;
  VertexSet positive = d | forced;
  std::vector<VertexSet> needs;
  for_each_vertex(positive, [&](int p) {
    if ((g.neighbors(p) & positive) == 0) needs.push_back(g.neighbors(p));
  });
  if (needs.empty()) return base;
  int h = min_hitting_set(needs, budget - base - 1);
  return h == kMaxVertices ? kMaxVertices : base + h;
}

template <typename Fn>
void for_each_subset_up_to(VertexSet pool, int max_size, Fn&& fn) {
  // subsets in increasing size order
  for (int s = 0; s <= max_size; ++s) {
    bool keep_going = true;
    for_each_subset_of_size(pool, s, [&](VertexSet d) {
      keep_going = fn(d, s);
      return keep_going;
    });
    if (!keep_going) break;
  }
}

}  // namespace

Labeling::Labeling(VertexSet ones, VertexSet twos) : ones_(ones), twos_(twos) {
  if (ones & twos)
    throw std::invalid_argument("labeling classes must be disjoint");
}

std::string Labeling::to_digits(int n) const {
  std::string out(n, '0');
  for (int v = 0; v < n; ++v) out[v] = char('0' + value(v));
  return out;
}

bool is_dominating(const Graph& g, VertexSet s) {
  return (closed_cover(g, s) & g.vertices()) == g.vertices();
}

bool is_total_dominating(const Graph& g, VertexSet s) {
  return (open_cover(g, s) & g.vertices()) == g.vertices();
}

bool is_trd_function(const Graph& g, const Labeling& f) {
  require_isolate_free(g, "is_trd_function");
  VertexSet positive = f.positive();
  if (positive & ~g.vertices())
    throw std::invalid_argument("labeling mentions vertices outside the graph");
  VertexSet zeros = g.vertices() & ~positive;
  VertexSet twos_cover = open_cover(g, f.twos());
  if (zeros & ~twos_cover) return false;
  bool ok = true;
  for_each_vertex(positive, [&](int p) {
    if ((g.neighbors(p) & positive) == 0) ok = false;
  });
  return ok;
}

int gamma(const Graph& g) { return minimum_cover<false>(g); }

int gamma_t(const Graph& g) {
  require_isolate_free(g, "gamma_t");
  return minimum_cover<true>(g);
}

int gamma_tr(const Graph& g) {
  require_isolate_free(g, "gamma_tr");
  int lower = gamma_t(g);
  int best = g.order();  // the all-ones labeling is always total Roman
  if (best == lower) return best;
  for_each_subset_up_to(g.vertices(), g.order() / 2, [&](VertexSet d, int s) {
    if (2 * s >= best) return false;
    int completion = completion_cost(g, d, best - 2 * s);
    if (completion != kMaxVertices) best = std::min(best, 2 * s + completion);
    return best != lower;
  });
  return best;
}

bool for_each_optimal_trd(const Graph& g,
                          const std::function<bool(const Labeling&)>& fn) {
  int opt = gamma_tr(g);
  for (int s = 0; 2 * s <= opt; ++s) {
    bool keep_going = for_each_subset_of_size(g.vertices(), s, [&](VertexSet d) {
      VertexSet dominated = open_cover(g, d);
      VertexSet forced = g.vertices() & ~dominated & ~d;
      int extra = opt - 2 * s - set_size(forced);
      if (extra < 0) return true;
      VertexSet free = g.vertices() & ~d & ~forced;
      return for_each_subset_of_size(free, extra, [&](VertexSet x) {
        VertexSet ones = forced | x;
        VertexSet positive = d | ones;
        bool valid = true;
        for_each_vertex(positive, [&](int p) {
          if ((g.neighbors(p) & positive) == 0) valid = false;
        });
        if (!valid) return true;
        return fn(Labeling(ones, d));
      });
    });
    if (!keep_going) return false;
  }
  return true;
}

std::vector<Labeling> optimal_trd_functions(const Graph& g) {
  std::vector<Labeling> out;
  for_each_optimal_trd(g, [&](const Labeling& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<NestedPairWitness> exists_nested_pair(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("exists_nested_pair: graph is disconnected");
  require_isolate_free(g, "exists_nested_pair");
  int k = gamma(g);
  int kt = gamma_t(g);
  if (k >= kt) return std::nullopt;  // strict containment needs |S| < |T|
  std::optional<NestedPairWitness> witness;
  for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
    if (!is_dominating(g, s)) return true;
    return for_each_subset_of_size(g.vertices() & ~s, kt - k, [&](VertexSet x) {
      if (!is_total_dominating(g, s | x)) return true;
      witness = NestedPairWitness{s, s | x};
      return false;
    });
  });
  return witness;
}

}  // namespace trd
