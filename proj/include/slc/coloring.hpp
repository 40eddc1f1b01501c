#pragma once

#include <string>

#include "slc/graph.hpp"

namespace slc {

// Per-vertex lists of exactly four distinct colors over a small universe.
struct ListAssignment {
  int universe = 8;
  std::vector<std::array<Color, kListSize>> lists;  // each sorted ascending

  int n() const { return (int)lists.size(); }
  const std::array<Color, kListSize>& list(Vertex v) const { return lists[v]; }
  bool has(Vertex v, Color c) const {
    for (Color x : lists[v])
      if (x == c) return true;
    return false;
  }
  void set(Vertex v, std::array<Color, kListSize> l);
  // Throws ContractError if any list is malformed for the universe.
  void validate() const;
  bool all_identical() const;

  static ListAssignment identical(int n, std::array<Color, kListSize> l,
                                  int universe = 8);
};

// Total or partial map vertex -> color.
struct Coloring {
  std::vector<Color> color;

  Coloring() = default;
  explicit Coloring(int n) : color(n, kNoColor) {}

  Color at(Vertex v) const { return v < 0 ? kNoColor : color[v]; }
  void set(Vertex v, Color c) { color[v] = c; }
  void clear(Vertex v) { color[v] = kNoColor; }
  bool total_on_alive(const Graph& g) const {
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.alive(v) && color[v] == kNoColor) return false;
    return true;
  }
};

// Derived per-vertex lists (L+, L-, L') of size >= 0.
struct RestrictedLists {
  std::vector<std::vector<Color>> lists;
  const std::vector<Color>& list(Vertex v) const { return lists[v]; }
};

// First violated condition, with witnesses, for diagnostics.
struct Violation {
  enum Kind {
    kNone,
    kUncolored,
    kNotInList,
    kImproperEdge,
    kThreeSameNeighbors,
    kBicoloredCycle,
    kDeg2NeighborClash,
  } kind = kNone;
  Vertex a = -1, b = -1;
  std::vector<Vertex> cycle;
  std::string describe() const;
};

// Full check of the superlinear conditions on the alive subgraph (or on
// `domain`, which must be a union of alive components). Waives the
// distinct-neighbor condition at `relaxed_anchor` when >= 0 (which must then
// be an alive degree-2 vertex). check_list=false skips membership in L.
Violation check_superlinear(const Graph& g, const ListAssignment& L,
                            const Coloring& f, Vertex relaxed_anchor = -1,
                            bool check_list = true,
                            const VertexSet* domain = nullptr);

// f proper and within lists; f must be total on alive vertices.
bool is_proper(const Graph& g, const ListAssignment& L, const Coloring& f);

// Every pair of color classes induces a union of disjoint paths. Assumes f
// total and proper.
bool is_linear(const Graph& g, const Coloring& f);

// Proper + linear + neighbors of every degree-2 vertex differently colored.
bool is_superlinear(const Graph& g, const ListAssignment& L,
                    const Coloring& f);

// Like is_superlinear but the distinct-neighbors condition is waived at the
// single degree-2 vertex `anchor`. Throws ContractError if anchor is not an
// alive degree-2 vertex.
bool is_relaxed_superlinear(const Graph& g, const ListAssignment& L,
                            const Coloring& f, Vertex anchor);

struct BicoloredWalk {
  std::vector<Vertex> path;  // maximal walk through the seed edge
  bool closed = false;       // true when it closes into a cycle
};

// The maximal walk through edge (u,v) in the two colors {f(u), f(v)}.
// Endpoints must be differently colored alive vertices.
BicoloredWalk bicolored_path_through(const Graph& g, const Coloring& f,
                                     Vertex u, Vertex v);

}  // namespace slc
