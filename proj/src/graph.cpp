#include "slc/graph.hpp"

#include <algorithm>
#include <deque>

namespace slc {

std::string ForbiddenSet::str() const {
  std::string s = "{";
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "}";
}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), m_(0), adj_(n, {-1, -1, -1}), full_deg_(n, 0),
      live_deg_(n, 0), alive_(n, 1) {
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ContractError("edge endpoint out of range");
    if (u == v) throw ContractError("self-loop");
    for (int i = 0; i < full_deg_[u]; ++i)
      if (adj_[u][i] == v) throw ContractError("parallel edge");
    if (full_deg_[u] == 3 || full_deg_[v] == 3)
      throw ContractError("degree exceeds three");
    adj_[u][full_deg_[u]++] = v;
    adj_[v][full_deg_[v]++] = u;
    ++m_;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj_[v].begin(), adj_[v].begin() + full_deg_[v]);
    live_deg_[v] = full_deg_[v];
  }
}

int Graph::alive_count() const {
  int c = 0;
  for (int v = 0; v < n_; ++v) c += alive_[v];
  return c;
}

std::array<Vertex, 3> Graph::live_nbrs(Vertex v) const {
  std::array<Vertex, 3> out{-1, -1, -1};
  int k = 0;
  for (int i = 0; i < full_deg_[v]; ++i)
    if (alive_[adj_[v][i]]) out[k++] = adj_[v][i];
  return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  for (int i = 0; i < full_deg_[u]; ++i)
    if (adj_[u][i] == v) return true;
  return false;
}

Vertex Graph::other_nbr(Vertex v, Vertex a, Vertex b) const {
  for (int i = 0; i < full_deg_[v]; ++i) {
    Vertex u = adj_[v][i];
    if (alive_[u] && u != a && u != b) return u;
  }
  return -1;
}

void ball_bfs(const Graph& g, Vertex v, int k, BallScratch& s) {
  s.ensure(g.n());
  ++s.ver;
  s.verts.clear();
  s.verts.push_back(v);
  s.seen[v] = s.ver;
  s.dist[v] = 0;
  for (size_t head = 0; head < s.verts.size(); ++head) {
    Vertex u = s.verts[head];
    if (s.dist[u] == k) break;
    g.for_live_nbrs(u, [&](Vertex w) {
      if (s.seen[w] != s.ver) {
        s.seen[w] = s.ver;
        s.dist[w] = s.dist[u] + 1;
        s.verts.push_back(w);
      }
    });
  }
}

VertexSet Graph::neighborhood_k(Vertex v, int k) const {
  if (!valid(v) || !alive_[v]) throw ContractError("invalid vertex");
  if (k < 1) throw ContractError("k must be positive");
  BallScratch s;
  ball_bfs(*this, v, k, s);
  VertexSet out;
  out.v.assign(s.verts.begin() + 1, s.verts.end());
  std::sort(out.v.begin(), out.v.end());
  return out;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::vector<uint8_t> seen(n_, 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n_; ++s) {
    if (!alive_[s] || seen[s]) continue;
    queue.clear();
    queue.push_back(s);
    seen[s] = 1;
    for (size_t head = 0; head < queue.size(); ++head)
      for_live_nbrs(queue[head], [&](Vertex w) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      });
    std::sort(queue.begin(), queue.end());
    out.emplace_back(queue);
  }
  return out;
}

std::optional<VertexSet> Graph::component_capped(Vertex v, size_t cap) const {
  if (!valid(v) || !alive_[v]) throw ContractError("invalid vertex");
  std::vector<Vertex> queue{v};
  std::vector<uint8_t> local;  // sparse marking via sorted probe
  // Small caps only; membership by linear scan keeps this allocation-light.
  for (size_t head = 0; head < queue.size(); ++head) {
    bool overflow = false;
    for_live_nbrs(queue[head], [&](Vertex w) {
      if (std::find(queue.begin(), queue.end(), w) == queue.end()) {
        queue.push_back(w);
        if (queue.size() > cap) overflow = true;
      }
    });
    if (overflow) return std::nullopt;
  }
  return VertexSet{queue};
}

VertexSet Graph::delete_set(const VertexSet& q) {
  std::vector<Vertex> boundary;
  for (Vertex v : q) {
    if (!valid(v) || !alive_[v]) throw ContractError("deleting dead vertex");
    alive_[v] = 0;
  }
  for (Vertex v : q) {
    for (int i = 0; i < full_deg_[v]; ++i) {
      Vertex u = adj_[v][i];
      if (alive_[u]) {
        --live_deg_[u];
        boundary.push_back(u);
      }
    }
    live_deg_[v] = 0;
  }
  std::sort(boundary.begin(), boundary.end());
  boundary.erase(std::unique(boundary.begin(), boundary.end()),
                 boundary.end());
  return VertexSet{boundary};
}

void Graph::restore_set(const VertexSet& q) {
  for (Vertex v : q) {
    if (alive_[v]) throw ContractError("restoring alive vertex");
    alive_[v] = 1;
  }
  for (Vertex v : q) {
    int d = 0;
    for (int i = 0; i < full_deg_[v]; ++i) {
      Vertex u = adj_[v][i];
      if (alive_[u]) {
        ++d;
        if (!q.contains(u)) ++live_deg_[u];
      }
    }
    live_deg_[v] = d;
  }
}

bool Graph::is_component_c5(const VertexSet& comp) const {
  if (comp.size() != 5) return false;
  for (Vertex v : comp)
    if (!alive_[v] || live_deg_[v] != 2) return false;
  return true;  // 5 vertices, all degree two, connected: a 5-cycle
}

bool Graph::is_component_k33(const VertexSet& comp) const {
  if (comp.size() != 6) return false;
  for (Vertex v : comp)
    if (!alive_[v] || live_deg_[v] != 3) return false;
  Vertex a = comp.v[0];
  auto side = live_nbrs(a);
  for (Vertex v : comp) {
    bool in_side = v == side[0] || v == side[1] || v == side[2];
    if (v == a || in_side) continue;
    auto nb = live_nbrs(v);  // must equal `side` exactly
    for (Vertex u : nb)
      if (u != side[0] && u != side[1] && u != side[2]) return false;
  }
  return true;
}

std::optional<VertexSet> Graph::find_triangle_or_k23(
    const VertexSet* domain) const {
  std::vector<Vertex> all;
  if (!domain) {
    for (Vertex v = 0; v < n_; ++v)
      if (alive_[v]) all.push_back(v);
  }
  const std::vector<Vertex>& verts = domain ? domain->v : all;
  for (Vertex v : verts) {
    if (!alive_[v]) continue;
    auto nb = live_nbrs(v);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (nb[i] >= 0 && nb[j] >= 0 && adjacent(nb[i], nb[j]))
          return VertexSet{v, nb[i], nb[j]};
  }
  // K2,3: a vertex pair with three common neighbors. Count distance-two
  // multiplicities; degree <= 3 keeps this constant work per vertex.
  std::vector<Vertex> hits;
  std::vector<uint8_t> cnt(n_, 0);
  for (Vertex v : verts) {
    if (!alive_[v]) continue;
    hits.clear();
    for_live_nbrs(v, [&](Vertex a) {
      for_live_nbrs(a, [&](Vertex b) {
        if (b != v) {
          if (cnt[b]++ == 0) hits.push_back(b);
        }
      });
    });
    Vertex partner = -1;
    for (Vertex b : hits) {
      if (cnt[b] >= 3 && partner < 0) partner = b;
      cnt[b] = 0;
    }
    if (partner >= 0) {
      VertexSet out{v, partner};
      for_live_nbrs(v, [&](Vertex a) {
        if (adjacent(a, partner)) out.v.push_back(a);
      });
      out.v.resize(5);
      return out;
    }
  }
  return std::nullopt;
}

namespace {

// First cycle met by BFS from `root`: short, though not necessarily girth.
std::vector<Vertex> bfs_first_cycle(const Graph& g, Vertex root) {
  std::vector<Vertex> parent(g.n(), -2), depth(g.n(), 0);
  std::deque<Vertex> queue{root};
  parent[root] = -1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (int i = 0; i < g.full_degree(u); ++i) {
      Vertex w = g.nbr(u)[i];
      if (!g.alive(w) || w == parent[u]) continue;
      if (parent[w] == -2) {
        parent[w] = u;
        depth[w] = depth[u] + 1;
        queue.push_back(w);
        continue;
      }
      // Non-tree edge u-w closes a cycle through their tree paths.
      std::vector<Vertex> pu{u}, pw{w};
      Vertex a = u, b = w;
      while (a != b) {
        if (depth[a] >= depth[b]) {
          a = parent[a];
          pu.push_back(a);
        } else {
          b = parent[b];
          pw.push_back(b);
        }
      }
      pu.pop_back();  // drop the meeting vertex from one side
      std::reverse(pw.begin(), pw.end());
      for (Vertex x : pu) pw.push_back(x);
      return pw;
    }
  }
  return {};
}

}  // namespace

VertexSet Graph::find_good_cycle(const VertexSet* domain) const {
  // Validate the contract: connected cubic scanned subgraph of order >= 11,
  // no triangle, no K2,3.
  std::vector<Vertex> all;
  if (!domain) {
    for (Vertex v = 0; v < n_; ++v)
      if (alive_[v]) all.push_back(v);
  }
  const std::vector<Vertex>& verts = domain ? domain->v : all;
  Vertex root = -1;
  int order = 0;
  for (Vertex v : verts) {
    if (!alive_[v]) throw ContractError("good cycle: dead vertex in domain");
    ++order;
    if (root < 0) root = v;
    if (live_deg_[v] != 3) throw ContractError("good cycle: not cubic");
  }
  if (order < 11) throw ContractError("good cycle: order below 11");
  auto comp = component_capped(root, (size_t)order);
  if (!comp || (int)comp->size() != order)
    throw ContractError("good cycle: not connected");
  VertexSet domain_set{verts};
  if (find_triangle_or_k23(&domain_set))
    throw ContractError("good cycle: triangle or K2,3 present");

  std::vector<Vertex> cyc = bfs_first_cycle(*this, root);
  if (cyc.empty()) throw ContractError("good cycle: acyclic input");

  std::vector<int> pos(n_, -1);
  auto set_pos = [&](bool on) {
    for (int i = 0; i < (int)cyc.size(); ++i) pos[cyc[i]] = on ? i : -1;
  };
  auto arc_cycle = [&](int i, int j, Vertex via) {
    // cyc[i..j] walking forward cyclically, then `via` (skipped when < 0).
    std::vector<Vertex> out;
    int k = (int)cyc.size();
    for (int t = i;; t = (t + 1) % k) {
      out.push_back(cyc[t]);
      if (t == j) break;
    }
    if (via >= 0) out.push_back(via);
    return out;
  };

  for (;;) {
    int k = (int)cyc.size();
    set_pos(true);
    std::vector<Vertex> next;
    // Chords first: keep the shorter side plus the chord.
    for (int i = 0; i < k && next.empty(); ++i) {
      for (int t = 0; t < full_deg_[cyc[i]]; ++t) {
        Vertex z = adj_[cyc[i]][t];
        if (!alive_[z] || pos[z] < 0) continue;
        int j = pos[z];
        int d = (j - i + k) % k;
        if (d == 1 || d == k - 1) continue;
        next = d <= k - d ? arc_cycle(i, j, -1) : arc_cycle(j, i, -1);
        break;
      }
    }
    // External vertex with two or more neighbors on the cycle: close through
    // it along the arc containing the successor vertex; when that arc does
    // not shrink the cycle, fall back to the shortest arc, which does.
    for (int i = 0; i < k && next.empty(); ++i) {
      Vertex u = other_nbr(cyc[i], cyc[(i + 1) % k], cyc[(i + k - 1) % k]);
      if (u < 0) continue;
      int fwd = -1, best_j = -1, best_len = k + 3;
      bool best_forward = true;
      for (int d = 2; d <= k - 2; ++d) {
        int j = (i + d) % k;
        if (!adjacent(u, cyc[j])) continue;
        if (fwd < 0) fwd = j;
        if (d + 2 < best_len) {
          best_len = d + 2;
          best_j = j;
          best_forward = true;
        }
        if ((k - d) + 2 < best_len) {
          best_len = (k - d) + 2;
          best_j = j;
          best_forward = false;
        }
      }
      if (fwd < 0) continue;
      if ((fwd - i + k) % k + 2 < k)
        next = arc_cycle(i, fwd, u);
      else if (best_len < k)
        next = best_forward ? arc_cycle(i, best_j, u)
                            : arc_cycle(best_j, i, u);
    }
    set_pos(false);
    if (next.empty()) break;
    cyc = std::move(next);
  }
  return VertexSet{cyc};
}

Graph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});        // outer cycle
    e.push_back({i, i + 5});              // spokes
    e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph(10, e);
}

bool is_petersen(const Graph& g) {
  std::vector<Vertex> alive;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.alive(v)) alive.push_back(v);
  return is_petersen_component(g, VertexSet{alive});
}

bool is_petersen_component(const Graph& g, const VertexSet& comp) {
  if (comp.size() != 10) return false;
  for (Vertex v : comp)
    if (!g.alive(v) || g.degree(v) != 3) return false;
  auto full = g.component_capped(comp.v.front(), 10);
  if (!full || full->size() != 10) return false;
  // Girth 5 <=> no triangle and no 4-cycle; the unique such cubic graph on
  // ten vertices is the Petersen graph.
  std::vector<uint8_t> cnt(g.n(), 0);
  std::vector<Vertex> hits;
  for (Vertex v : comp) {
    auto nb = g.live_nbrs(v);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (g.adjacent(nb[i], nb[j])) return false;
    hits.clear();
    g.for_live_nbrs(v, [&](Vertex a) {
      g.for_live_nbrs(a, [&](Vertex b) {
        if (b != v) {
          if (cnt[b]++ == 0) hits.push_back(b);
        }
      });
    });
    bool c4 = false;
    for (Vertex b : hits) {
      if (cnt[b] >= 2) c4 = true;
      cnt[b] = 0;
    }
    if (c4) return false;
  }
  return true;
}

}  // namespace slc
