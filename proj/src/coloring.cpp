#include "slc/coloring.hpp"

#include <algorithm>

namespace slc {

void ListAssignment::set(Vertex v, std::array<Color, kListSize> l) {
  std::sort(l.begin(), l.end());
  lists[v] = l;
}

void ListAssignment::validate() const {
  for (const auto& l : lists) {
    for (int i = 0; i < kListSize; ++i) {
      if (l[i] < 0 || l[i] >= universe)
        throw ContractError("list color outside universe");
      if (i && l[i] == l[i - 1]) throw ContractError("duplicate list color");
      if (i && l[i] < l[i - 1]) throw ContractError("list not sorted");
    }
  }
}

bool ListAssignment::all_identical() const {
  for (size_t v = 1; v < lists.size(); ++v)
    if (lists[v] != lists[0]) return false;
  return true;
}

ListAssignment ListAssignment::identical(int n, std::array<Color, kListSize> l,
                                         int universe) {
  std::sort(l.begin(), l.end());
  ListAssignment L;
  L.universe = universe;
  L.lists.assign(n, l);
  L.validate();
  return L;
}

std::string Violation::describe() const {
  switch (kind) {
    case kNone:
      return "ok";
    case kUncolored:
      return "uncolored vertex " + std::to_string(a);
    case kNotInList:
      return "color of vertex " + std::to_string(a) + " not in its list";
    case kImproperEdge:
      return "improper edge " + std::to_string(a) + "-" + std::to_string(b);
    case kThreeSameNeighbors:
      return "vertex " + std::to_string(a) +
             " has three same-colored neighbors";
    case kBicoloredCycle: {
      std::string s = "bicolored cycle";
      for (Vertex v : cycle) s += " " + std::to_string(v);
      return s;
    }
    case kDeg2NeighborClash:
      return "neighbors of degree-2 vertex " + std::to_string(a) +
             " share a color";
  }
  return "?";
}

BicoloredWalk bicolored_path_through(const Graph& g, const Coloring& f,
                                     Vertex u, Vertex v) {
  if (!g.alive(u) || !g.alive(v) || !g.adjacent(u, v))
    throw ContractError("bicolored walk: bad seed edge");
  Color a = f.at(u), b = f.at(v);
  if (a == kNoColor || b == kNoColor || a == b)
    throw ContractError("bicolored walk: endpoints not differently colored");
  // Walk each direction; degree in the two-color subgraph is at most 2 when
  // the no-three-same-neighbors condition holds, and at most a bounded
  // branch otherwise (we follow the first continuation).
  auto step = [&](Vertex prev, Vertex cur) -> Vertex {
    Color want = f.at(cur) == a ? b : a;
    Vertex nxt = -1;
    g.for_live_nbrs(cur, [&](Vertex w) {
      if (w != prev && nxt < 0 && f.at(w) == want) nxt = w;
    });
    return nxt;
  };
  BicoloredWalk out;
  std::vector<Vertex> back{u};
  Vertex prev = v, cur = u;
  for (;;) {
    Vertex nxt = step(prev, cur);
    if (nxt < 0) break;
    if (nxt == v && cur != v) {  // closed through the seed edge's far end
      // Only a true cycle if v continues back to u, i.e. we walked around.
      out.closed = true;
      break;
    }
    back.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  if (out.closed) {
    out.path = back;
    out.path.push_back(v);
    return out;
  }
  std::reverse(back.begin(), back.end());  // ends at u
  back.push_back(v);
  prev = u;
  cur = v;
  for (;;) {
    Vertex nxt = step(prev, cur);
    if (nxt < 0) break;
    back.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  out.path = back;
  return out;
}

namespace {

// Bicolored cycle scan: walks each bicolored edge once with a visited stamp
// per (vertex, incident-slot) so total work is linear. Precondition for
// correctness of the early exits: no vertex has three same-colored
// neighbors (checked by the caller first).
bool find_bicolored_cycle(const Graph& g, const Coloring& f,
                          std::vector<Vertex>* witness,
                          const VertexSet* domain = nullptr) {
  std::vector<uint8_t> done(3 * (size_t)g.n(), 0);
  auto slot = [&](Vertex v, Vertex w) {
    for (int i = 0; i < g.full_degree(v); ++i)
      if (g.nbr(v)[i] == w) return 3 * (size_t)v + i;
    throw ContractError("slot: not a neighbor");
  };
  std::vector<Vertex> all;
  if (!domain) {
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.alive(v)) all.push_back(v);
  }
  const std::vector<Vertex>& seeds = domain ? domain->v : all;
  for (Vertex u : seeds) {
    if (!g.alive(u)) continue;
    for (int i = 0; i < g.full_degree(u); ++i) {
      Vertex v = g.nbr(u)[i];
      if (!g.alive(v) || v < u) continue;
      if (done[3 * (size_t)u + i]) continue;
      Color a = f.at(u), b = f.at(v);
      if (a == b || a == kNoColor || b == kNoColor) continue;
      // Walk the maximal two-colored path containing u-v; mark every edge
      // visited along the way.
      auto walk = bicolored_path_through(g, f, u, v);
      for (size_t t = 0; t + 1 < walk.path.size(); ++t) {
        done[slot(walk.path[t], walk.path[t + 1])] = 1;
        done[slot(walk.path[t + 1], walk.path[t])] = 1;
      }
      if (walk.closed) {
        if (witness) {
          *witness = walk.path;
          witness->pop_back();  // drop repeated seed endpoint
        }
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Violation check_superlinear(const Graph& g, const ListAssignment& L,
                            const Coloring& f, Vertex relaxed_anchor,
                            bool check_list, const VertexSet* domain) {
  Violation out;
  if (relaxed_anchor >= 0 &&
      (!g.alive(relaxed_anchor) || g.degree(relaxed_anchor) != 2))
    throw ContractError("relaxed anchor must be an alive degree-2 vertex");
  std::vector<Vertex> all;
  if (!domain) {
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.alive(v)) all.push_back(v);
  }
  const std::vector<Vertex>& verts = domain ? domain->v : all;
  for (Vertex v : verts) {
    if (!g.alive(v)) throw ContractError("check domain has dead vertex");
    Color c = f.at(v);
    if (c == kNoColor) {
      out.kind = Violation::kUncolored;
      out.a = v;
      return out;
    }
    if (check_list && !L.has(v, c)) {
      out.kind = Violation::kNotInList;
      out.a = v;
      return out;
    }
  }
  for (Vertex v : verts) {
    Vertex bad = -1;
    g.for_live_nbrs(v, [&](Vertex w) {
      if (f.at(w) == f.at(v) && bad < 0) bad = w;
    });
    if (bad >= 0) {
      out.kind = Violation::kImproperEdge;
      out.a = v;
      out.b = bad;
      return out;
    }
  }
  for (Vertex v : verts) {
    if (g.degree(v) != 3) continue;
    auto nb = g.live_nbrs(v);
    if (f.at(nb[0]) == f.at(nb[1]) && f.at(nb[1]) == f.at(nb[2])) {
      out.kind = Violation::kThreeSameNeighbors;
      out.a = v;
      return out;
    }
  }
  for (Vertex v : verts) {
    if (g.degree(v) != 2 || v == relaxed_anchor) continue;
    auto nb = g.live_nbrs(v);
    if (f.at(nb[0]) == f.at(nb[1])) {
      out.kind = Violation::kDeg2NeighborClash;
      out.a = v;
      return out;
    }
  }
  std::vector<Vertex> cyc;
  if (find_bicolored_cycle(g, f, &cyc, domain)) {
    out.kind = Violation::kBicoloredCycle;
    out.cycle = cyc;
    return out;
  }
  return out;
}

bool is_proper(const Graph& g, const ListAssignment& L, const Coloring& f) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!g.alive(v)) continue;
    if (f.at(v) == kNoColor || !L.has(v, f.at(v))) return false;
    bool bad = false;
    g.for_live_nbrs(v, [&](Vertex w) {
      if (f.at(w) == f.at(v)) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

bool is_linear(const Graph& g, const Coloring& f) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!g.alive(v)) continue;
    if (f.at(v) == kNoColor) return false;
    if (g.degree(v) == 3) {
      auto nb = g.live_nbrs(v);
      if (f.at(nb[0]) == f.at(nb[1]) && f.at(nb[1]) == f.at(nb[2]))
        return false;
    }
  }
  return !find_bicolored_cycle(g, f, nullptr);
}

bool is_superlinear(const Graph& g, const ListAssignment& L,
                    const Coloring& f) {
  return check_superlinear(g, L, f).kind == Violation::kNone;
}

bool is_relaxed_superlinear(const Graph& g, const ListAssignment& L,
                            const Coloring& f, Vertex anchor) {
  if (anchor < 0 || !g.alive(anchor) || g.degree(anchor) != 2)
    throw ContractError("relaxed anchor must be an alive degree-2 vertex");
  return check_superlinear(g, L, f, anchor).kind == Violation::kNone;
}

}  // namespace slc
