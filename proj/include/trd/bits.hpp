#pragma once

#include <bit>
#include <cstdint>

namespace trd {

// A set of vertices of a graph on at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, int v) { return (s >> v) & VertexSet{1}; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

// First (lowest-index) vertex of a non-empty set.
constexpr int first_vertex(VertexSet s) { return std::countr_zero(s); }

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

// Calls fn(subset) for every subset of `pool` with exactly k elements.
// fn returns false to stop early; the function returns false iff stopped.
template <typename Fn>
bool for_each_subset_of_size(VertexSet pool, int k, Fn&& fn) {
  if (k == 0) return fn(VertexSet{0});
  if (set_size(pool) < k) return true;
  int vs[kMaxVertices];
  int m = 0;
  for_each_vertex(pool, [&](int v) { vs[m++] = v; });
  int idx[kMaxVertices];
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet sub = 0;
    for (int i = 0; i < k; ++i) sub |= vbit(vs[idx[i]]);
    if (!fn(sub)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace trd
