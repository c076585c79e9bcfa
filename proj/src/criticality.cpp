#include "trd/criticality.hpp"

#include <algorithm>
#include <stdexcept>

#include "trd/canonical.hpp"
#include "trd/parallel.hpp"

namespace trd {

const char* to_string(Invariant inv) {
  switch (inv) {
    case Invariant::kDomination: return "gamma";
    case Invariant::kTotalDomination: return "gamma_t";
    case Invariant::kTotalRoman: return "gamma_tR";
  }
  return "?";
}

const char* to_string(Mode mode) {
  return mode == Mode::kAddition ? "addition" : "removal";
}

const char* to_string(EdgeVerdict v) {
  switch (v) {
    case EdgeVerdict::kStable: return "STABLE";
    case EdgeVerdict::kCritical: return "CRITICAL";
    case EdgeVerdict::kSupercritical: return "SUPERCRITICAL";
  }
  return "?";
}

const char* to_string(GraphVerdict v) {
  switch (v) {
    case GraphVerdict::kEdgeCritical: return "EDGE_CRITICAL";
    case GraphVerdict::kEdgeSupercritical: return "EDGE_SUPERCRITICAL";
    case GraphVerdict::kEdgeStable: return "EDGE_STABLE";
    case GraphVerdict::kMixed: return "MIXED";
    case GraphVerdict::kVacuous: return "VACUOUS";
  }
  return "?";
}

DomValue invariant_value(const Graph& g, Invariant inv) {
  switch (inv) {
    case Invariant::kDomination: return DomValue::finite(gamma(g));
    case Invariant::kTotalDomination: return DomValue::finite(gamma_t(g));
    case Invariant::kTotalRoman: return DomValue::finite(gamma_tr(g));
  }
  throw std::logic_error("unknown invariant");
}

std::vector<Edge> pendant_free_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Edge e : g.edges())
    if (g.degree(e.u) >= 2 && g.degree(e.v) >= 2) out.push_back(e);
  return out;
}

namespace {

EdgeVerdict addition_verdict(DomValue before, DomValue after) {
  if (after > before)
    throw std::logic_error("edge addition increased a domination invariant");
  if (after <= before.value() - 2) return EdgeVerdict::kSupercritical;
  if (after < before) return EdgeVerdict::kCritical;
  return EdgeVerdict::kStable;
}

EdgeVerdict removal_verdict(DomValue before, DomValue after) {
  if (after < before)
    throw std::logic_error("edge removal decreased a domination invariant");
  if (after.is_infinite() || after.value() >= before.value() + 2)
    return EdgeVerdict::kSupercritical;
  if (after > before) return EdgeVerdict::kCritical;
  return EdgeVerdict::kStable;
}

}  // namespace

EdgeClass classify_added_edge(const Graph& g, Edge e, Invariant inv) {
  if (g.has_edge(e.u, e.v))
    throw std::invalid_argument("classify_added_edge: edge already present");
  DomValue before = invariant_value(g, inv);
  DomValue after = invariant_value(g.add_edge(e), inv);
  return EdgeClass{e, before, after, addition_verdict(before, after)};
}

EdgeClass classify_removed_edge(const Graph& g, Edge e, Invariant inv) {
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("classify_removed_edge: edge not present");
  DomValue before = invariant_value(g, inv);
  bool pendant = g.degree(e.u) == 1 || g.degree(e.v) == 1;
  DomValue after = pendant && inv != Invariant::kDomination
                       ? DomValue::infinite()
                       : invariant_value(g.remove_edge(e), inv);
  return EdgeClass{e, before, after, removal_verdict(before, after)};
}

GraphClass classify_graph(const Graph& g, Mode mode, Invariant inv, int jobs) {
  std::vector<Edge> targets =
      mode == Mode::kAddition ? g.non_edges() : g.edges();
  DomValue k = invariant_value(g, inv);
  GraphClass gc{mode, inv, GraphVerdict::kVacuous, k, {}};
  if (targets.empty()) return gc;

  gc.per_edge.resize(targets.size(), EdgeClass{Edge(0, 1), k, k, EdgeVerdict::kStable});
  parallel_for(targets.size(), jobs, [&](size_t i) {
    Edge e = targets[i];
    gc.per_edge[i] = mode == Mode::kAddition ? classify_added_edge(g, e, inv)
                                             : classify_removed_edge(g, e, inv);
  });

  bool all_super = true, all_crit = true, all_stable = true;
  for (const EdgeClass& ec : gc.per_edge) {
    all_super &= ec.verdict == EdgeVerdict::kSupercritical;
    all_crit &= ec.verdict != EdgeVerdict::kStable;
    all_stable &= ec.verdict == EdgeVerdict::kStable;
  }
  gc.verdict = all_super    ? GraphVerdict::kEdgeSupercritical
               : all_crit   ? GraphVerdict::kEdgeCritical
               : all_stable ? GraphVerdict::kEdgeStable
                            : GraphVerdict::kMixed;
  return gc;
}

bool is_edge_critical(const GraphClass& gc) {
  return gc.verdict == GraphVerdict::kEdgeCritical ||
         gc.verdict == GraphVerdict::kEdgeSupercritical;
}

bool is_edge_supercritical(const GraphClass& gc) {
  return gc.verdict == GraphVerdict::kEdgeSupercritical;
}

bool is_edge_stable(const GraphClass& gc) {
  if (gc.verdict == GraphVerdict::kEdgeStable) return true;
  // a graph with empty complement is edge-stable by definition
  return gc.mode == Mode::kAddition && gc.verdict == GraphVerdict::kVacuous;
}

PairConstraintReport optimal_function_constraints(const Graph& g, Edge e, Mode mode) {
  EdgeClass ec = mode == Mode::kAddition
                     ? classify_added_edge(g, e, Invariant::kTotalRoman)
                     : classify_removed_edge(g, e, Invariant::kTotalRoman);
  PairConstraintReport report{e, mode, ec.verdict, {}, 0, false, false, false};
  if (ec.verdict == EdgeVerdict::kStable)
    throw std::invalid_argument(
        "optimal_function_constraints: edge is stable, no proposition applies");

  // Addition inspects the optimal functions of g+e, removal those of g.
  const Graph target = mode == Mode::kAddition ? g.add_edge(e) : g;

  std::vector<std::pair<int, int>> pairs;
  for_each_optimal_trd(target, [&](const Labeling& f) {
    int a = f.value(e.u), b = f.value(e.v);
    if (a > b) std::swap(a, b);
    ++report.functions_seen;
    if (std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) == pairs.end())
      pairs.emplace_back(a, b);
    return true;
  });
  std::sort(pairs.begin(), pairs.end());
  report.pairs = pairs;

  // Both the added-edge and the removed-edge propositions allow exactly
  // {2,2}, {2,1}, {2,0}, {1,1}.
  auto allowed = [](std::pair<int, int> p) {
    return p == std::make_pair(2, 2) || p == std::make_pair(1, 2) ||
           p == std::make_pair(0, 2) || p == std::make_pair(1, 1);
  };
  report.allowed_ok = std::all_of(pairs.begin(), pairs.end(), allowed);
  report.exists_super_ok =
      std::any_of(pairs.begin(), pairs.end(), [](std::pair<int, int> p) {
        return p == std::make_pair(2, 2) || p == std::make_pair(0, 2) ||
               p == std::make_pair(1, 1);
      });
  report.exists_one_one_ok =
      std::find(pairs.begin(), pairs.end(), std::make_pair(1, 1)) != pairs.end();
  return report;
}

GraphClass ClassificationCache::classify(const Graph& g, Mode mode,
                                         Invariant inv, int jobs) {
  std::string key = canonical_graph6(g) + "|" + to_string(mode) + "|" +
                    to_string(inv);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = classes_.find(key);
    if (it != classes_.end()) return it->second;
  }
  // classification runs against the canonical copy so cached per-edge
  // entries mean the same thing for every isomorphic query graph
  GraphClass gc = classify_graph(canonical_copy(g), mode, inv, jobs);
  std::lock_guard<std::mutex> lock(mu_);
  return classes_.emplace(std::move(key), std::move(gc)).first->second;
}

DomValue ClassificationCache::value(const Graph& g, Invariant inv) {
  std::string key = canonical_graph6(g) + "|" + to_string(inv);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
  }
  DomValue v = invariant_value(g, inv);
  std::lock_guard<std::mutex> lock(mu_);
  return values_.emplace(std::move(key), v).first->second;
}

}  // namespace trd
