#include "slc/oracle.hpp"

#include <algorithm>

namespace slc {

namespace {

struct Searcher {
  const Graph& g;
  const ListAssignment& L;
  Vertex anchor;
  uint64_t max_nodes;
  std::vector<Vertex> order;
  Coloring f;
  uint64_t nodes = 0;
  uint64_t count = 0;
  bool counting = false;
  bool budget_hit = false;

  Searcher(const Graph& g_, const ListAssignment& L_, Vertex anchor_,
           SearchBudget b, const VertexSet* domain)
      : g(g_), L(L_), anchor(anchor_), max_nodes(b.max_nodes), f(g_.n()) {
    if (domain) {
      order = domain->v;
      std::sort(order.begin(), order.end());
    } else {
      for (Vertex v = 0; v < g.n(); ++v)
        if (g.alive(v)) order.push_back(v);
    }
    for (Vertex v : order)
      if (!g.alive(v)) throw ContractError("oracle: dead vertex in domain");
    if ((int)order.size() > b.max_vertices)
      throw ContractError("oracle: instance larger than budget");
    if (anchor >= 0) {
      if (std::find(order.begin(), order.end(), anchor) == order.end())
        throw ContractError("oracle: anchor not in graph");
      if (g.degree(anchor) != 2)
        throw ContractError("oracle: anchor not of degree two");
    }
  }

  // Local feasibility right after assigning f(v). Checks only conditions
  // that the assignment can newly violate.
  bool ok_after(Vertex v) {
    Color c = f.at(v);
    bool ok = true;
    g.for_live_nbrs(v, [&](Vertex u) {
      if (!ok) return;
      Color cu = f.at(u);
      if (cu == c) {
        ok = false;
        return;
      }
      // u gaining a third same-colored neighbor.
      int same = 0;
      g.for_live_nbrs(u, [&](Vertex w) {
        if (f.at(w) == c) ++same;
      });
      if (same == 3) {
        ok = false;
        return;
      }
      // Degree-two u whose two neighbors are now both colored.
      if (g.degree(u) == 2 && u != anchor) {
        auto nb = g.live_nbrs(u);
        Color c0 = f.at(nb[0]), c1 = f.at(nb[1]);
        if (c0 != kNoColor && c0 == c1) {
          ok = false;
          return;
        }
      }
      // A bicolored cycle closing through edge v-u.
      if (cu != kNoColor) {
        if (bicolored_path_through(g, f, v, u).closed) ok = false;
      }
    });
    return ok;
  }

  // Returns true to stop the search (found, when not counting).
  bool rec(size_t i) {
    if (i == order.size()) {
      ++count;
      return !counting;
    }
    Vertex v = order[i];
    for (Color c : L.list(v)) {
      if (++nodes > max_nodes) {
        budget_hit = true;
        return true;
      }
      f.set(v, c);
      if (ok_after(v) && rec(i + 1)) return true;
      f.clear(v);
    }
    return false;
  }
};

}  // namespace

OracleResult solve_superlinear(const Graph& g, const ListAssignment& L,
                               SearchBudget budget, const VertexSet* domain) {
  Searcher s(g, L, -1, budget, domain);
  bool stopped = s.rec(0);
  OracleResult out;
  out.nodes = s.nodes;
  if (s.budget_hit) {
    out.status = OracleStatus::kBudget;
  } else if (stopped) {
    out.status = OracleStatus::kFound;
    out.coloring = s.f;
  }
  return out;
}

OracleResult solve_relaxed(const Graph& g, const ListAssignment& L,
                           Vertex anchor, SearchBudget budget,
                           const VertexSet* domain) {
  Searcher s(g, L, anchor, budget, domain);
  bool stopped = s.rec(0);
  OracleResult out;
  out.nodes = s.nodes;
  if (s.budget_hit) {
    out.status = OracleStatus::kBudget;
  } else if (stopped) {
    out.status = OracleStatus::kFound;
    out.coloring = s.f;
  }
  return out;
}

uint64_t enumerate_all(const Graph& g, const ListAssignment& L,
                       SearchBudget budget, const VertexSet* domain) {
  Searcher s(g, L, -1, budget, domain);
  s.counting = true;
  s.rec(0);
  if (s.budget_hit) throw ContractError("enumerate_all: budget exhausted");
  return s.count;
}

}  // namespace slc
