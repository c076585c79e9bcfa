#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trd/criticality.hpp"
#include "trd/enumerate.hpp"
#include "trd/graph.hpp"

namespace trd {
namespace verify {

enum class ScopeKind {
  kIsolateFree,             // all graphs without isolated vertices
  kConnected,               // connected graphs
  kDisconnectedIsolateFree, // disconnected and isolate-free
  kTrees,
  kInstances,               // fixed list of constructed graphs
};

// Shared state for one verification run: solver caches plus lazily built
// certificate sets of family members.
class Context {
 public:
  ClassificationCache cache;

  int gtr(const Graph& g) { return cache.value(g, Invariant::kTotalRoman).value(); }
  int gt(const Graph& g) { return cache.value(g, Invariant::kTotalDomination).value(); }
  int gd(const Graph& g) { return cache.value(g, Invariant::kDomination).value(); }

  // Certificates of the connected graphs of order n with total Roman
  // domination number n (paths, cycles, coronas, subdivided stars, the two
  // one-parameter tree families).
  const std::set<std::string>& trn_members(int n);

  // Certificates of the connected n-vertex graphs that are n-edge-critical.
  const std::set<std::string>& n_edge_crit_members(int n);

 private:
  std::mutex mu_;
  std::map<int, std::set<std::string>> trn_;
  std::map<int, std::set<std::string>> crit_;
};

struct TheoremCheck {
  std::string id;
  std::string description;
  ScopeKind scope;
  int min_n;
  int default_max_n;
  std::function<std::optional<std::string>(const Graph&, Context&)> predicate;
  std::function<std::vector<Graph>()> instances;  // kInstances only
};

struct TheoremReport {
  std::string id;
  std::uint64_t graphs_checked = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // (graph6, detail)
  double wall_ms = 0;
  bool ok() const { return failures.empty(); }
};

struct Options {
  int max_n = 0;  // 0 = each check's default scope
  int jobs = 1;
  std::string source;  // "" = builtin enumeration, "-" = stdin, else a file
  std::ostream* progress = nullptr;
  std::uint64_t checkpoint_every = 0;  // searches: progress line cadence
  std::uint64_t resume_index = 0;      // searches: skip this many graphs
  unsigned sample_seed = 0x5eed;       // filter-soundness sampling
};

const std::vector<TheoremCheck>& registry();
const TheoremCheck* find_check(const std::string& id);

TheoremReport run_check(const std::string& id, const Options& opts = {});
TheoremReport run_check(const TheoremCheck& check, const Options& opts,
                        Context& ctx);

std::vector<TheoremReport> run_all(const Options& opts = {});

struct ConjectureSearch {
  std::string id;
  int max_n = 0;
  std::uint64_t graphs_checked = 0;
  // conjecture ids report violations; the open question reports witnesses
  std::vector<std::pair<std::string, std::string>> found;
  double wall_ms = 0;
};

extern const char* const kConjectureIds[3];  // conj-1-Vf-plus, conj-2-union-Kn,
                                             // question-diam2-6super

ConjectureSearch search_counterexample(const std::string& id,
                                       const Options& opts = {});

// Every edge-supercritical isolate-free graph of order <= max_n, one
// representative per isomorphism class. Feeds the structural necessary-
// condition checks and the conjecture pools.
std::vector<Graph> find_edge_supercritical(int max_n, Context& ctx, int jobs = 1);

}  // namespace verify
}  // namespace trd
