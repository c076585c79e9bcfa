#include "trd/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace trd {
namespace families {

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.connect(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = path(n);
  g.connect(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.connect(u, v);
  return g;
}

Graph star(int k) {
  if (k < 1) throw std::invalid_argument("star needs at least one leaf");
  Graph g(k + 1);
  for (int v = 1; v <= k; ++v) g.connect(0, v);
  return g;
}

Graph double_star(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("double_star needs a, b >= 1");
  Graph g(a + b + 2);
  g.connect(0, 1);
  for (int i = 0; i < a; ++i) g.connect(0, 2 + i);
  for (int i = 0; i < b; ++i) g.connect(1, 2 + a + i);
  return g;
}

Graph corona(const Graph& base) {
  int n = base.order();
  if (2 * n > kMaxVertices)
    throw std::invalid_argument("corona would exceed 64 vertices");
  Graph g(2 * n);
  for (Edge e : base.edges()) g.connect(e.u, e.v);
  for (int v = 0; v < n; ++v) g.connect(v, n + v);
  return g;
}

Graph subdivided_star(int k) {
  if (k < 3) throw std::invalid_argument("subdivided_star needs k >= 3");
  Graph g(2 * k + 1);
  for (int i = 1; i <= k; ++i) {
    g.connect(0, i);
    g.connect(i, k + i);
  }
  return g;
}

Graph family_g(int k1, int k2) {
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1)
    throw std::invalid_argument("family_g needs k1, k2 >= 0 with k1 + k2 >= 1");
  Graph g(4 + 2 * (k1 + k2));
  g.connect(0, 1);
  g.connect(1, 2);
  g.connect(2, 3);
  g.connect(3, 0);
  int next = 4;
  for (int i = 0; i < k1; ++i, next += 2) {
    g.connect(0, next);
    g.connect(next, next + 1);
  }
  for (int i = 0; i < k2; ++i, next += 2) {
    g.connect(1, next);
    g.connect(next, next + 1);
  }
  return g;
}

Graph family_h(int a, int b, int r) {
  if (a < 1 || b < 1 || r < 0)
    throw std::invalid_argument("family_h needs a, b >= 1 and r >= 0");
  Graph g(2 * (a + b) + r + 2);
  // centre path 0, 2, 3, ..., r+1, 1
  int prev = 0;
  for (int i = 0; i < r; ++i) {
    g.connect(prev, 2 + i);
    prev = 2 + i;
  }
  g.connect(prev, 1);
  int next = 2 + r;
  for (int i = 0; i < a; ++i, next += 2) {
    g.connect(0, next);
    g.connect(next, next + 1);
  }
  for (int i = 0; i < b; ++i, next += 2) {
    g.connect(1, next);
    g.connect(next, next + 1);
  }
  return g;
}

Graph family_f(const std::vector<int>& ks, bool strict) {
  if (ks.empty()) throw std::invalid_argument("family_f needs n >= 1 leaves");
  for (int k : ks)
    if (k < 0) throw std::invalid_argument("family_f pendant counts must be >= 0");
  std::vector<int> sorted = ks;
  if (!std::is_sorted(sorted.rbegin(), sorted.rend())) {
    if (strict)
      throw std::invalid_argument("family_f: pendant counts must be non-increasing");
    std::sort(sorted.rbegin(), sorted.rend());
  }
  int n = (int)sorted.size();
  int total = 1 + n;
  for (int k : sorted) total += k;
  Graph g(total);
  int next = 1 + n;
  for (int i = 1; i <= n; ++i) {
    g.connect(0, i);
    for (int j = 0; j < sorted[i - 1]; ++j, ++next) g.connect(i, next);
  }
  return g;
}

Graph g_r(int r) {
  if (r < 2) throw std::invalid_argument("g_r needs r >= 2");
  int n = 5 + 2 * r;
  if (n > kMaxVertices) throw std::invalid_argument("g_r would exceed 64 vertices");
  const int x = 0, y = 1, z = 2, u0 = 3;
  const int w0 = r + 4;
  auto u = [&](int i) { return 3 + i; };      // u_1..u_r
  auto w = [&](int i) { return r + 4 + i; };  // w_1..w_r
  Graph g(n);
  g.connect(x, y);
  g.connect(y, z);
  g.connect(x, z);
  g.connect(x, u0);
  g.connect(y, w0);
  for (int i = 1; i <= r; ++i) {
    g.connect(z, u(i));
    g.connect(z, w(i));
    g.connect(y, u(i));
    g.connect(u0, u(i));
    g.connect(w0, w(i));
    for (int j = i + 1; j <= r; ++j) {
      g.connect(u(i), u(j));
      g.connect(w(i), w(j));
    }
    for (int j = 1; j <= r; ++j)
      if (i != j) g.connect(u(i), w(j));
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxVertices)
    throw std::invalid_argument("union would exceed 64 vertices");
  Graph g(a.order() + b.order());
  for (Edge e : a.edges()) g.connect(e.u, e.v);
  for (Edge e : b.edges()) g.connect(a.order() + e.u, a.order() + e.v);
  return g;
}

bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  return g.max_degree() <= 2;
}

bool is_cycle(const Graph& g) {
  if (!is_connected(g) || g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_star(const Graph& g) {
  if (!is_tree(g)) return false;
  int high = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 1) ++high;
  return high <= 1;  // K_2 has none, larger stars exactly one
}

bool is_double_star(const Graph& g) {
  if (!is_tree(g)) return false;
  std::vector<int> centres;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 2) centres.push_back(v);
  return centres.size() == 2 && g.has_edge(centres[0], centres[1]);
}

bool is_corona(const Graph& g) {
  int n = g.order();
  if (n % 2 != 0) return false;
  if (n == 2) return g.edge_count() == 1;  // cor(K_1)
  VertexSet leaves = 0, supports = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 1) continue;
    int s = first_vertex(g.neighbors(v));
    if (contains(supports, s)) return false;  // two pendants share a support
    leaves |= vbit(v);
    supports |= vbit(s);
  }
  return set_size(leaves) == n / 2 && (leaves & supports) == 0;
}

bool is_subdivided_star(const Graph& g) {
  if (!is_tree(g)) return false;
  int centre = -1;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) {
      if (centre != -1) return false;
      centre = v;
    }
  if (centre == -1) return false;
  int k = g.degree(centre);
  if (g.order() != 2 * k + 1) return false;
  bool ok = true;
  for_each_vertex(g.neighbors(centre), [&](int m) {
    if (g.degree(m) != 2) {
      ok = false;
      return;
    }
    int leaf = first_vertex(g.neighbors(m) & ~vbit(centre));
    if (g.degree(leaf) != 1) ok = false;
  });
  return ok;
}

namespace {

// Vertices of a tree that can serve as the centre of a star rooting: every
// other vertex within distance two.
std::vector<int> valid_star_roots(const Graph& g) {
  std::vector<int> roots;
  for (int c = 0; c < g.order(); ++c) {
    VertexSet within2 = g.closed_neighborhood(c);
    for_each_vertex(g.neighbors(c), [&](int u) { within2 |= g.neighbors(u); });
    if (within2 == g.vertices()) roots.push_back(c);
  }
  return roots;
}

std::vector<int> tuft_sizes(const Graph& g, int root) {
  std::vector<int> ks;
  for_each_vertex(g.neighbors(root), [&](int u) {
    ks.push_back(set_size(g.neighbors(u) & ~vbit(root)));
  });
  std::sort(ks.rbegin(), ks.rend());
  return ks;
}

}  // namespace

std::optional<std::vector<int>> is_in_family_f(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("is_in_family_f: graph is disconnected");
  if (!is_tree(g)) return std::nullopt;
  if (g.order() == 1) return std::nullopt;  // smallest member is S_1 = K_2

  // The parameter list is read off the representation rooted at a valid
  // centre of maximum degree (ties cannot change the sorted counts).
  int best_root = -1;
  for (int c : valid_star_roots(g))
    if (best_root == -1 || g.degree(c) > g.degree(best_root)) best_root = c;
  if (best_root == -1) return std::nullopt;
  return tuft_sizes(g, best_root);
}

bool is_in_family_f_without_unit_tufts(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("is_in_family_f_without_unit_tufts: disconnected");
  if (!is_tree(g) || g.order() == 1) return false;
  for (int c : valid_star_roots(g)) {
    auto ks = tuft_sizes(g, c);
    bool ok = true;
    for (int k : ks)
      if (k == 1) ok = false;
    if (ok) return true;
  }
  return false;
}

bool is_in_family_t(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("is_in_family_t: graph is disconnected");
  if (is_star(g) || is_double_star(g)) return true;
  if (!is_tree(g)) return false;
  // subdivided star with pendant edges added to the non-leaf vertices:
  // the non-pendant vertices must induce a star on >= 3 vertices whose
  // non-centre members each keep a pendant neighbour
  VertexSet inner = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 2) inner |= vbit(v);
  if (set_size(inner) < 3) return false;
  int centre = -1;
  bool shape_ok = true;
  for_each_vertex(inner, [&](int v) {
    int inner_deg = set_size(g.neighbors(v) & inner);
    if (inner_deg == set_size(inner) - 1 && inner_deg >= 2) {
      if (centre != -1) shape_ok = false;
      centre = v;
    } else if (inner_deg != 1) {
      shape_ok = false;
    }
  });
  if (!shape_ok || centre == -1) return false;
  bool arms_ok = true;
  for_each_vertex(inner & ~vbit(centre), [&](int m) {
    if (!contains(g.neighbors(m), centre)) arms_ok = false;
    if ((g.neighbors(m) & ~inner) == 0) arms_ok = false;  // needs its leaf
  });
  return arms_ok;
}

}  // namespace families
}  // namespace trd
