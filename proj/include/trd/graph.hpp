#pragma once

#include <array>
#include <initializer_list>
#include <utility>
#include <vector>

#include "trd/bits.hpp"
#include "trd/dom_value.hpp"

namespace trd {

// An edge {u, v}, stored with u < v.
struct Edge {
  int u;
  int v;
  Edge(int a, int b);
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Simple undirected graph on 1..64 vertices, adjacency held as one machine
// word per vertex. Value type: the classifier sweeps copy graphs freely, so
// the public edge operations return modified copies and never touch the
// receiver.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const { return adj_[v] | vbit(v); }
  VertexSet vertices() const { return full_set(n_); }

  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;
  bool has_isolated_vertex() const;

  // In-place mutation, used while building a graph.
  void connect(int u, int v);
  void disconnect(int u, int v);

  // Copy-with-edge-toggled. add_edge requires a non-edge, remove_edge an
  // edge; both throw std::invalid_argument otherwise.
  Graph add_edge(Edge e) const;
  Graph remove_edge(Edge e) const;

  Graph complement() const;

  // Removes vertex v and relabels vertices above it downwards.
  Graph delete_vertex(int v) const;

  // Subgraph induced by a non-empty vertex set, relabelled densely in
  // increasing vertex order.
  Graph induced_subgraph(VertexSet keep) const;

  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;
  int n_;
  std::array<VertexSet, kMaxVertices> adj_;
};

// BFS distance; INFINITE when u and v lie in different components.
DomValue distance(const Graph& g, int u, int v);

// Largest finite distance; INFINITE when g is disconnected.
DomValue diameter(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

// An endpath runs from a vertex of degree >= 3 (the origin, first element)
// to a pendant vertex, with every internal vertex of degree 2.
std::vector<std::vector<int>> endpaths(const Graph& g);

// Two endpaths are adjacent when they share their origin.
bool has_adjacent_endpaths(const Graph& g);

}  // namespace trd
