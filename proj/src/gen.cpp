#include "slc/gen.hpp"

#include <algorithm>
#include <numeric>

namespace slc {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

bool has_edge(const EdgeList& e, Vertex u, Vertex v) {
  for (auto [a, b] : e)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

// Pairs up the remaining degree deficits (3 - deg) at random; retries until
// the pairing is simple. Leftover odd stubs attach to fresh vertices.
// `frozen` vertices keep their current degree.
Graph complete_cubic(EdgeList edges, int n, Rng& rng,
                     const std::vector<Vertex>& frozen = {}, int tries = 400) {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  for (Vertex v : frozen) deg[v] = 3;
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < n; ++v)
    for (int i = deg[v]; i < 3; ++i) stubs.push_back(v);
  if (stubs.size() % 2) {
    // One dangling stub: absorb it with a pendant path of two vertices so
    // every degree stays at most three.
    edges.push_back({stubs.back(), n});
    edges.push_back({(Vertex)n, (Vertex)(n + 1)});
    stubs.pop_back();
    n += 2;
  }
  for (int att = 0; att < tries; ++att) {
    std::vector<Vertex> p = stubs;
    for (size_t i = p.size(); i > 1; --i)
      std::swap(p[i - 1], p[rng.below(i)]);
    EdgeList trial = edges;
    bool ok = true;
    for (size_t i = 0; i + 1 < p.size() && ok; i += 2) {
      Vertex u = p[i], v = p[i + 1];
      if (u == v || has_edge(trial, u, v)) ok = false;
      trial.push_back({u, v});
    }
    if (ok) return Graph(n, trial);
  }
  throw ContractError("complete_cubic: no simple pairing found");
}

}  // namespace

Graph gen_c5() { return gen_cycle(5); }

Graph gen_k33() {
  EdgeList e;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) e.push_back({i, j});
  return Graph(6, e);
}

Graph gen_k23() {
  EdgeList e;
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 5; ++j) e.push_back({i, j});
  return Graph(5, e);
}

Graph gen_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                   {0, 3}, {1, 4}, {2, 5}});
}

Graph gen_cycle(int n) {
  if (n < 3) throw ContractError("cycle needs at least three vertices");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph gen_two_c5_bridge(int k) {
  if (k < 1) throw ContractError("bridge path needs at least one vertex");
  // 0..4 first 5-cycle (0 is its attachment), 5..5+k-1 the path,
  // 5+k..9+k the second 5-cycle attached at 5+k.
  EdgeList e;
  for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
  int p0 = 5, q0 = 5 + k;
  for (int i = 0; i + 1 < k; ++i) e.push_back({p0 + i, p0 + i + 1});
  for (int i = 0; i < 5; ++i) e.push_back({q0 + i, q0 + (i + 1) % 5});
  e.push_back({0, p0});
  e.push_back({p0 + k - 1, q0});
  return Graph(10 + k, e);
}

Graph gen_random_subcubic(int n, Rng& rng) {
  if (n <= 0) return Graph(0, {});
  int target = (int)rng.below(3 * (uint64_t)n / 2 + 1);
  EdgeList edges;
  std::vector<int> deg(n, 0);
  int attempts = 8 * n + 40;
  while ((int)edges.size() < target && attempts-- > 0) {
    Vertex u = (Vertex)rng.below(n), v = (Vertex)rng.below(n);
    if (u == v || deg[u] >= 3 || deg[v] >= 3 || has_edge(edges, u, v))
      continue;
    edges.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  return Graph(n, edges);
}

Graph gen_random_cubic(int n, Rng& rng) {
  if (n % 2 || n < 4) throw ContractError("cubic graphs need even n >= 4");
  std::vector<Vertex> stubs(3 * (size_t)n);
  for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3;
  for (int att = 0; att < 600; ++att) {
    std::vector<Vertex> p = stubs;
    for (size_t i = p.size(); i > 1; --i)
      std::swap(p[i - 1], p[rng.below(i)]);
    // Adjacency bitcheck via sorted pair list to stay O(n log n).
    std::vector<std::pair<Vertex, Vertex>> e;
    e.reserve(p.size() / 2);
    bool ok = true;
    for (size_t i = 0; i < p.size() && ok; i += 2) {
      Vertex u = p[i], v = p[i + 1];
      if (u == v) ok = false;
      if (u > v) std::swap(u, v);
      e.push_back({u, v});
    }
    if (!ok) continue;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
    return Graph(n, e);
  }
  throw ContractError("gen_random_cubic: rejection limit reached");
}

Graph gen_planted_eyeglass(Rng& rng) {
  // v1 v2 v3 v4 path; u1 adjacent to v1 and v3, u4 adjacent to v4 and v2.
  // The endpoints stay degree two.
  EdgeList e{{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 2}, {5, 3}, {5, 1}};
  int extra = 9 + 2 * (int)rng.below(4);
  return complete_cubic(e, 6 + extra, rng, {0, 3});
}

Graph gen_planted_c4_bridge(Rng& rng) {
  // Path 0..4 with degree-2 endpoints, w3=5 adjacent to 1 and 3, x=6 its
  // third neighbor.
  EdgeList e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 3}, {5, 6}};
  int extra = 9 + 2 * (int)rng.below(4);
  return complete_cubic(e, 7 + extra, rng, {0, 4});
}

Graph gen_planted_k23(Rng& rng) {
  EdgeList e;
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 5; ++j) e.push_back({i, j});
  int extra = 7 + 2 * (int)rng.below(4);
  return complete_cubic(e, 5 + extra, rng);
}

Graph gen_planted_triangle(Rng& rng) {
  EdgeList e{{0, 1}, {1, 2}, {2, 0}};
  int extra = 9 + 2 * (int)rng.below(4);
  return complete_cubic(e, 3 + extra, rng);
}

Graph gen_planted_c5_anchor(Rng& rng) {
  // Degree-2 path 0..k-1 between a frozen 5-cycle (attached at k) and the
  // rest of the graph; deleting the path isolates the 5-cycle, anchored at
  // vertex k. Low path ids make the worklist reach the path first.
  int k = 2 + (int)rng.below(3);
  EdgeList e;
  for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
  for (int i = 0; i < 5; ++i) e.push_back({k + i, k + (i + 1) % 5});
  e.push_back({0, k});
  int far = k + 5;
  e.push_back({k - 1, far});
  std::vector<Vertex> frozen;
  for (int i = 0; i < k; ++i) frozen.push_back(i);
  for (int i = 1; i < 5; ++i) frozen.push_back(k + i);
  int extra = 11 + 2 * (int)rng.below(4);
  return complete_cubic(e, far + 1 + extra, rng, frozen);
}

ListAssignment gen_lists_identical(int n, int universe) {
  return ListAssignment::identical(n, {0, 1, 2, 3}, universe);
}

ListAssignment gen_lists_random(int n, Rng& rng, int universe) {
  ListAssignment L;
  L.universe = universe;
  L.lists.resize(n);
  for (int v = 0; v < n; ++v) {
    std::array<Color, kListSize> l{};
    int filled = 0;
    while (filled < kListSize) {
      Color c = (Color)rng.below(universe);
      bool dup = false;
      for (int i = 0; i < filled; ++i) dup = dup || l[i] == c;
      if (!dup) l[filled++] = c;
    }
    std::sort(l.begin(), l.end());
    L.lists[v] = l;
  }
  return L;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  Vertex root = -1;
  int order = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!g.alive(v)) continue;
    ++order;
    if (root < 0) root = v;
  }
  if (order == 0) return true;
  auto comp = g.component_capped(root, (size_t)order);
  return comp && (int)comp->size() == order;
}

}  // namespace slc
