#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trd/dom_value.hpp"
#include "trd/graph.hpp"
#include "trd/solvers.hpp"

namespace trd {

enum class Invariant { kDomination, kTotalDomination, kTotalRoman };

enum class Mode { kAddition, kRemoval };

enum class EdgeVerdict { kStable, kCritical, kSupercritical };

struct EdgeClass {
  Edge edge;
  DomValue before;
  DomValue after;
  EdgeVerdict verdict;
};

enum class GraphVerdict {
  kEdgeCritical,
  kEdgeSupercritical,
  kEdgeStable,
  kMixed,
  kVacuous,  // no edges to classify (complete graph under addition)
};

struct GraphClass {
  Mode mode;
  Invariant invariant;
  GraphVerdict verdict;
  DomValue k;  // invariant value of the unmodified graph
  std::vector<EdgeClass> per_edge;
};

const char* to_string(Invariant inv);
const char* to_string(Mode mode);
const char* to_string(EdgeVerdict v);
const char* to_string(GraphVerdict v);

// Value of the selected invariant on g. gamma_t / gamma_tr throw on graphs
// with isolated vertices.
DomValue invariant_value(const Graph& g, Invariant inv);

// Edges of g not incident with a degree-1 vertex (deletion keeps the graph
// isolate-free).
std::vector<Edge> pendant_free_edges(const Graph& g);

// Classifies adding the non-edge e. addition: after is one of before,
// before-1, before-2; supercritical means a drop of two or more.
EdgeClass classify_added_edge(const Graph& g, Edge e, Invariant inv);

// Classifies removing the edge e. For gamma_t / gamma_tr a pendant edge
// yields after = INFINITE; gamma stays finite since domination is defined
// for graphs with isolated vertices.
EdgeClass classify_removed_edge(const Graph& g, Edge e, Invariant inv);

// Classifies every relevant edge (non-edges under addition, edges under
// removal) and aggregates a whole-graph verdict. jobs > 1 fans the edges
// out over worker threads.
GraphClass classify_graph(const Graph& g, Mode mode, Invariant inv, int jobs = 1);

// Whole-graph predicates following the containment convention: every edge
// supercritical implies critical. A vacuous addition classification counts
// as edge-stable.
bool is_edge_critical(const GraphClass& gc);
bool is_edge_supercritical(const GraphClass& gc);
bool is_edge_stable(const GraphClass& gc);

// Observed {f(u), f(v)} value pairs over a full optimal-function stream,
// checked against the pair sets the critical-edge propositions allow.
struct PairConstraintReport {
  Edge edge;
  Mode mode;
  EdgeVerdict verdict;  // of e under total Roman domination
  std::vector<std::pair<int, int>> pairs;  // distinct, (low, high) sorted
  std::uint64_t functions_seen = 0;
  bool allowed_ok = false;        // all pairs within the allowed set
  bool exists_super_ok = false;   // some pair in {{2,2},{2,0},{1,1}}
  bool exists_one_one_ok = false; // some pair {1,1} (pendant-pendant additions)
};

// mode == kAddition: e must be a TRD-critical non-edge; streams the optimal
// functions of g+e. mode == kRemoval: e must be a TRD-ER-critical edge of g;
// streams the optimal functions of g itself. Throws when the edge is stable.
PairConstraintReport optimal_function_constraints(const Graph& g, Edge e, Mode mode);

// Cache of classification sweeps keyed by canonical form; shared by the
// verification runner where the same small graphs recur across checks.
class ClassificationCache {
 public:
  GraphClass classify(const Graph& g, Mode mode, Invariant inv, int jobs = 1);
  DomValue value(const Graph& g, Invariant inv);

 private:
  std::mutex mu_;
  std::unordered_map<std::string, GraphClass> classes_;
  std::unordered_map<std::string, DomValue> values_;
};

}  // namespace trd
