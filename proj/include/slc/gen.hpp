#pragma once

#include <cstdint>

#include "slc/coloring.hpp"
#include "slc/graph.hpp"

namespace slc {

// Small deterministic RNG wrapper; all randomness in generators and tests
// flows through this so runs reproduce across platforms.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

// Fixed families.
Graph gen_c5();
Graph gen_k33();
Graph gen_k23();
Graph gen_prism();
Graph gen_cycle(int n);
// 5-cycle + path of k degree-2 vertices + 5-cycle.
Graph gen_two_c5_bridge(int k);

// Random families. random_cubic uses the pairing model with rejection of
// loops and parallel edges; throws ContractError for odd n or when no
// simple pairing is found.
Graph gen_random_subcubic(int n, Rng& rng);
Graph gen_random_cubic(int n, Rng& rng);

// Planted lemma-trigger families: a specific configuration completed to a
// (mostly) cubic graph by randomly pairing the remaining degree deficits.
Graph gen_planted_eyeglass(Rng& rng);
Graph gen_planted_c4_bridge(Rng& rng);
Graph gen_planted_k23(Rng& rng);
Graph gen_planted_triangle(Rng& rng);
// 5-cycle hanging off a path so the deletion of a degree-2 chain isolates
// it; drives the relaxed-anchor handling.
Graph gen_planted_c5_anchor(Rng& rng);

ListAssignment gen_lists_identical(int n, int universe = 8);
ListAssignment gen_lists_random(int n, Rng& rng, int universe = 8);

bool is_connected(const Graph& g);

}  // namespace slc
