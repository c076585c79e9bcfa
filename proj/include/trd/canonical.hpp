#pragma once

#include <string>
#include <vector>

#include "trd/graph.hpp"

namespace trd {

// Label-invariant certificate. Two graphs have equal certificates iff they
// are isomorphic; the certificate of a graph is the graph6 encoding of its
// canonically relabelled copy.
struct CanonicalForm {
  std::string certificate;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.certificate == b.certificate;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.certificate < b.certificate;
  }
};

CanonicalForm canonical_form(const Graph& g);

// Shorthand for canonical_form(g).certificate.
std::string canonical_graph6(const Graph& g);

// lab[p] = the vertex placed at position p in the canonical order.
std::vector<int> canonical_labeling(const Graph& g);

// Relabels g so that position p holds the vertex lab[p].
Graph apply_labeling(const Graph& g, const std::vector<int>& lab);

Graph canonical_copy(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace trd
