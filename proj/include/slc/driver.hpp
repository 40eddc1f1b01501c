#pragma once

#include <deque>

#include "slc/extend.hpp"
#include "slc/graph.hpp"
#include "slc/oracle.hpp"

namespace slc {

// Deduplicating queue of low-degree vertices with three priority rings:
// degree <= 1, degree 2 with a degree-2 neighbor, plain degree 2. Entries
// are revalidated at pop time; every degree change must be announced via
// push so the front of the highest non-empty ring is always current.
class Worklist {
 public:
  enum Ring { kPend = 0, kPair = 1, kPlain = 2 };

  void push(const Graph& g, Vertex v);
  // Returns {-1, -1} when empty.
  std::pair<Vertex, int> pop(const Graph& g);
  size_t size() const {
    return ring_[0].size() + ring_[1].size() + ring_[2].size();
  }
  static int classify(const Graph& g, Vertex v);

 private:
  std::deque<Vertex> ring_[3];
};

struct ComponentReport {
  Vertex rep = -1;  // smallest vertex id
  int size = 0;
  bool colored = false;
  bool infeasible = false;
  std::string certificate;  // exhausted-search transcript when infeasible
};

struct RunReport {
  std::vector<ComponentReport> components;
  uint64_t steps = 0;
  size_t peak_worklist = 0;
  double wall_ms = 0;
  bool fallback_used = false;

  bool all_colored() const {
    for (const auto& c : components)
      if (!c.colored) return false;
    return true;
  }
  // Line-oriented key=value text for the bench harness.
  std::string serialize() const;
};

struct RunOptions {
  bool parallel_components = false;
  bool petersen_fast_path = true;
  // Test flag: color a stuck component by exhaustive search instead of
  // aborting. Must never trigger on well-formed inputs.
  bool defensive_fallback = false;
  ExtendObserver* observer = nullptr;
};

struct ColorGraphResult {
  Coloring coloring;
  RunReport report;
  bool success = false;  // every component colored
};

// Colors every component of the alive subgraph: brute force for orders up to
// ten (emitting an infeasibility certificate when no coloring exists, which
// only happens for C5/K3,3-like components with adversarial lists),
// the low-degree worklist reduction for non-cubic components, and the
// structure finder plus extension for cubic ones. The graph's alive mask is
// used as scratch during the run and fully restored before returning.
ColorGraphResult color_graph(Graph& g, const ListAssignment& L,
                             const RunOptions& opts = {});

// The non-cubic reduction. `wl` must contain every vertex of degree <= 2 of
// the components to color; colors them all into `f`. Exposed for tests.
struct DriverStats {
  uint64_t steps = 0;
  size_t peak_worklist = 0;
  bool fallback_used = false;
};
void subroutine1(Graph& g, const ListAssignment& L, Worklist& wl, Coloring& f,
                 const RunOptions& opts, DriverStats& stats);

// Structure finder for a connected cubic component of order >= 11: an
// induced triangle, an induced K2,3, or a good cycle.
VertexSet subroutine2(const Graph& g, const VertexSet& comp);

// Locates a deletable configuration around the plain degree-2 vertex v,
// deletes it (and any 5-cycle components its removal isolates), and returns
// the step together with the surviving boundary vertices. Preconditions:
// deg(v) == 2, no vertex of degree <= 1 and no adjacent degree-2 pair
// anywhere in v's component, component order > 10.
struct ReductionOutcome {
  ReductionStep step;
  VertexSet deleted;   // everything removed, including isolated 5-cycles
  VertexSet boundary;  // surviving vertices that lost a neighbor
};
ReductionOutcome find_reduction(Graph& g, const ListAssignment& L, Vertex v,
                                const RunOptions& opts, DriverStats& stats);

// The explicit coloring of the Petersen graph used when every list is the
// same: locates a 5-cycle and applies the fixed pattern.
bool petersen_explicit_coloring(const Graph& g, const VertexSet& comp,
                                const ListAssignment& L, Coloring& f);

}  // namespace slc
