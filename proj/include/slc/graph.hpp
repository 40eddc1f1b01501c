#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slc {

using Vertex = int32_t;

// Colors are small non-negative integers drawn from a configurable universe.
using Color = int16_t;
inline constexpr Color kNoColor = -1;
inline constexpr int kListSize = 4;

// Contract violations: preconditions broken by the caller, or internal
// invariants that the reduction machinery proves impossible.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// A cycle coloring request that provably has no solution (C5 with identical
// lists). Distinct from ContractError: the input is well-formed.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A small set of forbidden colors. add() ignores kNoColor, so reading the
// color of an undefined/uncolored vertex contributes nothing.
struct ForbiddenSet {
  std::array<Color, 8> c{};
  int n = 0;
  void add(Color x) {
    if (x == kNoColor) return;
    for (int i = 0; i < n; ++i)
      if (c[i] == x) return;
    c[n++] = x;
  }
  bool contains(Color x) const {
    for (int i = 0; i < n; ++i)
      if (c[i] == x) return true;
    return false;
  }
  std::string str() const;
};

// Ordered set of vertex ids, no duplicates.
struct VertexSet {
  std::vector<Vertex> v;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init) : v(init) {}
  explicit VertexSet(std::vector<Vertex> verts) : v(std::move(verts)) {}

  size_t size() const { return v.size(); }
  bool empty() const { return v.empty(); }
  bool contains(Vertex x) const {
    for (Vertex u : v)
      if (u == x) return true;
    return false;
  }
  auto begin() const { return v.begin(); }
  auto end() const { return v.end(); }
  bool operator==(const VertexSet&) const = default;
};

// Simple undirected graph with maximum degree three. Vertices are dense ids
// 0..n-1. Deletion is an alive-mask view so one coloring run can delete and
// restore subsets in O(1) per vertex; the static adjacency never changes.
class Graph {
 public:
  Graph() = default;
  // Throws ContractError on self-loops, parallel edges, or degree > 3.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  int alive_count() const;

  bool alive(Vertex v) const { return alive_[v]; }
  bool valid(Vertex v) const { return v >= 0 && v < n_; }
  int full_degree(Vertex v) const { return full_deg_[v]; }
  int degree(Vertex v) const { return live_deg_[v]; }  // among alive vertices

  // Static neighbor list (sorted ascending), including dead vertices.
  const Vertex* nbr(Vertex v) const { return adj_[v].data(); }
  // Calls fn(u) for each alive neighbor of v; fn may return void.
  template <typename F>
  void for_live_nbrs(Vertex v, F&& fn) const {
    for (int i = 0; i < full_deg_[v]; ++i) {
      Vertex u = adj_[v][i];
      if (alive_[u]) fn(u);
    }
  }
  // Alive neighbors as a small array.
  std::array<Vertex, 3> live_nbrs(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  // The alive neighbor of v other than `a` (and `b`), or -1.
  Vertex other_nbr(Vertex v, Vertex a, Vertex b = -1) const;

  // N_k(v): alive vertices at distance 1..k from v. Throws ContractError if
  // v is dead or out of range, or k < 1.
  VertexSet neighborhood_k(Vertex v, int k) const;

  // Connected components of the alive subgraph, ordered by smallest id.
  std::vector<VertexSet> components() const;
  // Component of v, but stops early and returns nullopt once more than
  // `cap` vertices are seen. Vertices in BFS order from v.
  std::optional<VertexSet> component_capped(Vertex v, size_t cap) const;

  // Deletes the (alive) vertices of q; returns the alive vertices that lost
  // at least one neighbor, sorted ascending. Reversible via restore().
  VertexSet delete_set(const VertexSet& q);
  void restore_set(const VertexSet& q);

  // Exact isomorphism checks for whole components.
  bool is_component_c5(const VertexSet& comp) const;
  bool is_component_k33(const VertexSet& comp) const;

  // Brute-force scan for an induced K3 (3 vertices) or induced K2,3
  // (5 vertices: two centers then three common neighbors). Scans the whole
  // alive subgraph, or just `domain` when given.
  std::optional<VertexSet> find_triangle_or_k23(
      const VertexSet* domain = nullptr) const;

  // An induced cycle such that no alive vertex outside it has two or more
  // neighbors on it. Requires: the scanned subgraph (alive, or `domain`)
  // connected, cubic, order >= 11, triangle-free and K2,3-free; throws
  // ContractError otherwise.
  VertexSet find_good_cycle(const VertexSet* domain = nullptr) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_ && alive_ == o.alive_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::array<Vertex, 3>> adj_;
  std::vector<uint8_t> full_deg_;
  std::vector<uint8_t> live_deg_;
  std::vector<uint8_t> alive_;
};

// Breadth-first ball around v, reusable scratch to keep hot paths
// allocation-free. dist[u] is valid only for vertices in `verts`.
struct BallScratch {
  std::vector<Vertex> verts;
  std::vector<int16_t> dist;
  std::vector<uint32_t> seen;
  uint32_t ver = 0;

  void ensure(int n) {
    if ((int)seen.size() < n) {
      seen.resize(n, 0);
      dist.resize(n, 0);
    }
  }
  bool in_ball(Vertex u) const { return seen[u] == ver; }
};

// BFS from v over alive vertices up to depth k. Fills scratch.verts in BFS
// order (v first) with scratch.dist distances.
void ball_bfs(const Graph& g, Vertex v, int k, BallScratch& s);

// Petersen graph on the conventional labeling: 0..4 outer cycle, 5..9 inner
// pentagram, spokes i -- i+5.
Graph petersen_graph();
// True iff the alive subgraph of g is connected, cubic, of order 10 and
// girth 5 (which characterizes the Petersen graph).
bool is_petersen(const Graph& g);
// Same check restricted to one component.
bool is_petersen_component(const Graph& g, const VertexSet& comp);

}  // namespace slc
