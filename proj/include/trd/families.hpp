#pragma once

#include <optional>
#include <vector>

#include "trd/graph.hpp"

namespace trd {
namespace families {

// Constructors use fixed vertex numbering (documented per function) so the
// emitted graph6 strings are reproducible byte for byte.

// Vertices 0..n-1 along the path.
Graph path(int n);

// Vertices 0..n-1 around the cycle. n >= 3.
Graph cycle(int n);

Graph complete(int n);

// K_{1,k}: centre 0, leaves 1..k. k >= 1.
Graph star(int k);

// Adjacent centres 0 and 1; a leaves 2..a+1 on centre 0, b leaves a+2..a+b+1
// on centre 1. a, b >= 1.
Graph double_star(int a, int b);

// Each original vertex v gains the pendant neighbour n+v.
Graph corona(const Graph& g);

// Star K_{1,k} with every edge subdivided once: centre 0, middle vertices
// 1..k, leaf of middle i at k+i. k >= 3, order 2k+1.
Graph subdivided_star(int k);

// 4-cycle 0,1,2,3 with k1 pendant two-vertex paths on vertex 0 and k2 on
// vertex 1; legs come consecutively after the cycle. k1 + k2 >= 1.
Graph family_g(int k1, int k2);

// Double star with a and b leaves, every pendant edge subdivided once and
// the centre edge subdivided r times. Centres 0 and 1; the r inner path
// vertices follow, then the legs of centre 0, then those of centre 1.
// Order 2(a+b) + r + 2.
Graph family_h(int a, int b, int r);

// Star S_n with ks[i] extra pendant vertices hung below leaf u_{i+1}.
// Vertices: centre 0, then u_1..u_n, then the v_{i,j} blocks in order.
// ks must be non-increasing unless strict = false, in which case it is
// sorted first.
Graph family_f(const std::vector<int>& ks, bool strict = false);

// The 5+2r vertex construction: x=0, y=1, z=2, u_0=3, u_1..u_r=4..r+3,
// w_0=r+4, w_1..w_r=r+5..2r+4. Two r-cliques {u_i}, {w_i} joined by all
// cross edges except the matching u_i w_i; z sees every u_i and w_i, y every
// u_i; u_0 joins x and every u_i, w_0 joins y and every w_i; x,y,z form a
// triangle. r >= 2.
Graph g_r(int r);

// Side-by-side union; vertices of b are shifted by |V(a)|.
Graph disjoint_union(const Graph& a, const Graph& b);

// Recognizes members of the family built from a star by hanging extra
// pendants below each leaf. Returns the non-increasing pendant counts of
// the representation rooted at a maximum-degree valid root, or nullopt.
// Requires g connected.
std::optional<std::vector<int>> is_in_family_f(const Graph& g);

// True when g admits some star rooting in which no leaf carries exactly one
// pendant. The same tree can hide a unit tuft in one rooting and avoid it
// in another, so this quantifies over every valid root.
bool is_in_family_f_without_unit_tufts(const Graph& g);

// Recognizes the total-domination edge-removal-critical family: nontrivial
// stars, double stars, and subdivided stars with extra pendant edges on the
// non-leaf vertices. Requires g connected.
bool is_in_family_t(const Graph& g);

bool is_star(const Graph& g);
bool is_double_star(const Graph& g);

// Connected graphs of the form cor(H).
bool is_corona(const Graph& g);

// Spider whose legs all have length exactly two (k >= 2 legs).
bool is_subdivided_star(const Graph& g);

bool is_path(const Graph& g);
bool is_cycle(const Graph& g);

}  // namespace families
}  // namespace trd
