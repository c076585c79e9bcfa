#include "trd/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace trd {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
  if (a < 0 || b < 0) throw std::invalid_argument("negative vertex index");
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph order must be in 1..64, got " +
                                std::to_string(n));
  adj_.fill(0);
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.connect(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " + std::to_string(n_));
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += set_size(adj_[v]);
  return total / 2;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return set_size(adj_[v]);
}

int Graph::min_degree() const {
  int best = kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, set_size(adj_[v]));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, set_size(adj_[v]));
  return best;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (adj_[v] == 0) return true;
  return false;
}

void Graph::connect(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("no loops");
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
}

void Graph::disconnect(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~vbit(v);
  adj_[v] &= ~vbit(u);
}

Graph Graph::add_edge(Edge e) const {
  check_vertex(e.v);
  if (has_edge(e.u, e.v))
    throw std::invalid_argument("add_edge: edge already present");
  Graph g = *this;
  g.connect(e.u, e.v);
  return g;
}

Graph Graph::remove_edge(Edge e) const {
  check_vertex(e.v);
  if (!has_edge(e.u, e.v))
    throw std::invalid_argument("remove_edge: edge not present");
  Graph g = *this;
  g.disconnect(e.u, e.v);
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v) g.adj_[v] = full_set(n_) & ~adj_[v] & ~vbit(v);
  return g;
}

Graph Graph::delete_vertex(int v) const {
  check_vertex(v);
  if (n_ == 1) throw std::invalid_argument("cannot delete the only vertex");
  Graph g(n_ - 1);
  VertexSet low = v == 0 ? 0 : full_set(v);
  for (int w = 0; w < n_; ++w) {
    if (w == v) continue;
    VertexSet row = adj_[w];
    VertexSet packed = (row & low) | ((row >> (v + 1)) << v);
    g.adj_[w < v ? w : w - 1] = packed;
  }
  return g;
}

Graph Graph::induced_subgraph(VertexSet keep) const {
  if (keep == 0) throw std::invalid_argument("induced subgraph must be non-empty");
  if (keep & ~vertices())
    throw std::invalid_argument("induced subgraph mentions unknown vertices");
  std::array<int, kMaxVertices> relabel{};
  int m = 0;
  for_each_vertex(keep, [&](int v) { relabel[v] = m++; });
  Graph g(m);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(neighbors(u) & keep, [&](int v) {
      if (u < v) g.connect(relabel[u], relabel[v]);
    });
  });
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for_each_vertex(adj_[u] & ~full_set(u + 1), [&](int v) { out.emplace_back(u, v); });
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  for (int v = 0; v < a.n_; ++v)
    if (a.adj_[v] != b.adj_[v]) return false;
  return true;
}

DomValue distance(const Graph& g, int u, int v) {
  if (u == v) return DomValue::finite(0);
  VertexSet seen = vbit(u);
  VertexSet frontier = vbit(u);
  int d = 0;
  while (frontier) {
    ++d;
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int w) { next |= g.neighbors(w); });
    next &= ~seen;
    if (contains(next, v)) return DomValue::finite(d);
    seen |= next;
    frontier = next;
  }
  return DomValue::infinite();
}

DomValue diameter(const Graph& g) {
  int best = 0;
  for (int u = 0; u < g.order(); ++u) {
    // one BFS per source
    VertexSet seen = vbit(u);
    VertexSet frontier = seen;
    int d = 0;
    while (frontier) {
      ++d;
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int w) { next |= g.neighbors(w); });
      next &= ~seen;
      if (next) best = std::max(best, d);
      seen |= next;
      frontier = next;
    }
    if (seen != g.vertices()) return DomValue::infinite();
  }
  return DomValue::finite(best);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.vertices();
  while (remaining) {
    int start = first_vertex(remaining);
    VertexSet comp = vbit(start);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int w) { next |= g.neighbors(w); });
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.order() - 1;
}

bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

std::vector<std::vector<int>> endpaths(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (int p = 0; p < g.order(); ++p) {
    if (g.degree(p) != 1) continue;
    // Walk inward from the pendant vertex through degree-2 vertices.
    std::vector<int> path{p};
    int prev = p;
    int cur = first_vertex(g.neighbors(p));
    while (g.degree(cur) == 2) {
      path.push_back(cur);
      int next = first_vertex(g.neighbors(cur) & ~vbit(prev));
      prev = cur;
      cur = next;
    }
    if (g.degree(cur) < 3) continue;  // whole component is a path
    path.push_back(cur);
    std::reverse(path.begin(), path.end());
    out.push_back(std::move(path));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_adjacent_endpaths(const Graph& g) {
  auto paths = endpaths(g);
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = i + 1; j < paths.size(); ++j)
      if (paths[i].front() == paths[j].front()) return true;
  return false;
}

}  // namespace trd
