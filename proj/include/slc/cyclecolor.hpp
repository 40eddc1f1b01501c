#pragma once

#include "slc/coloring.hpp"
#include "slc/graph.hpp"

namespace slc {

// An ordered cycle v0..v{k-1}, consecutive vertices adjacent and v{k-1}
// adjacent to v0.
struct CycleInstance {
  std::vector<Vertex> order;

  int k() const { return (int)order.size(); }
  void validate(const Graph& g) const;
};

// Superlinear coloring of a whole cycle component: equivalent to a proper
// list coloring of the squared cycle, found by seeding the first two colors
// and propagating (prev, cur) states around the cycle. Throws
// InfeasibleError for a 5-cycle whose five lists are identical (provably no
// solution); any other failure is a ContractError.
Coloring color_cycle_component(const CycleInstance& c,
                               const ListAssignment& L);

// Linear coloring of a cycle from restricted lists of size >= 2: greedy
// around the cycle with an end repair when the result is two-colored.
// Returns nullopt when all lists are equal with size exactly two (the one
// shape with no linear coloring). Lists of size <= 1 are a ContractError.
std::optional<Coloring> color_cycle_linear(const CycleInstance& c,
                                           const RestrictedLists& lp);

// Superlinear coloring of a 5-cycle, or nullopt (identical lists).
std::optional<Coloring> color_c5_superlinear(const CycleInstance& c,
                                             const ListAssignment& L);

// Relaxed coloring of a 5-cycle: only the two neighbors of `anchor` may
// share a color; the other three vertices get mutually distinct colors.
// Always possible with 4-lists.
Coloring color_c5_relaxed(const CycleInstance& c, const ListAssignment& L,
                          Vertex anchor);

}  // namespace slc
