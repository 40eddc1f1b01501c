#pragma once

#include "slc/coloring.hpp"
#include "slc/graph.hpp"

namespace slc {

struct SearchBudget {
  int max_vertices = 12;
  uint64_t max_nodes = 50'000'000;
};

enum class OracleStatus { kFound, kNone, kBudget };

struct OracleResult {
  OracleStatus status = OracleStatus::kNone;
  Coloring coloring;
  uint64_t nodes = 0;

  bool found() const { return status == OracleStatus::kFound; }
  bool none() const { return status == OracleStatus::kNone; }
};

// Exhaustive backtracking search for a superlinear L-coloring of the alive
// subgraph (or of `domain`, which must be a union of alive components).
// Deterministic: vertices in id order, colors in list order. kNone is a
// definitive no; kBudget means the node budget ran out.
OracleResult solve_superlinear(const Graph& g, const ListAssignment& L,
                               SearchBudget budget = {},
                               const VertexSet* domain = nullptr);

// Same, but the distinct-neighbors condition is waived at `anchor` (which
// must be an alive degree-2 vertex in the searched domain).
OracleResult solve_relaxed(const Graph& g, const ListAssignment& L,
                           Vertex anchor, SearchBudget budget = {},
                           const VertexSet* domain = nullptr);

// Exact number of superlinear L-colorings. Throws ContractError when the
// budget is exhausted, so a returned count is always exact.
uint64_t enumerate_all(const Graph& g, const ListAssignment& L,
                       SearchBudget budget = {},
                       const VertexSet* domain = nullptr);

}  // namespace slc
