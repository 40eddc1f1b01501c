#include "slc/extend.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <ostream>
#include <tuple>

#include "slc/cyclecolor.hpp"

namespace slc {

void TraceWriter::on_choice(std::string_view step, Vertex v,
                            const ForbiddenSet& forbid, Color chosen) {
  if (!out) return;
  *out << "step=" << step << " vertex=" << v << " forbidden=" << forbid.str()
       << " chose=" << chosen << "\n";
}

const char* step_name(const ReductionStep& s) {
  static const char* names[] = {
      "pendant",    "deg2_path",    "special_path", "eyeglass",
      "c4_bridge",  "triangle",     "c4_with_deg2", "c4_near_deg2",
      "c5_with_deg2", "cubic_tail", "k23",          "good_cycle"};
  return names[s.index()];
}

namespace {

Color pick(const ListAssignment& L, Vertex v, const ForbiddenSet& forbid,
           std::string_view step, Coloring& f, ExtendObserver* obs) {
  for (Color c : L.list(v)) {
    if (!forbid.contains(c)) {
      if (obs) obs->on_choice(step, v, forbid, c);
      f.set(v, c);
      return c;
    }
  }
  throw ContractError(std::string("extension forbidden set exhausted: step=") +
                      std::string(step) + " vertex=" + std::to_string(v) +
                      " forbidden=" + forbid.str());
}

// Colors of the currently colored alive neighbors of u, except `skip`.
ForbiddenSet colored_nbr_colors(const Graph& g, const Coloring& f, Vertex u,
                                Vertex skip = -1) {
  ForbiddenSet out;
  if (u < 0) return out;
  g.for_live_nbrs(u, [&](Vertex w) {
    if (w != skip) out.add(f.at(w));
  });
  return out;
}

// "Different from the f-value of some neighbor of u": binding only when all
// colored neighbors of u share a single color, which is then returned.
Color lone_nbr_color(const Graph& g, const Coloring& f, Vertex u) {
  if (u < 0) return kNoColor;
  Color c = kNoColor;
  bool multi = false;
  g.for_live_nbrs(u, [&](Vertex w) {
    Color cw = f.at(w);
    if (cw == kNoColor) return;
    if (c == kNoColor)
      c = cw;
    else if (cw != c)
      multi = true;
  });
  return multi ? kNoColor : c;
}

bool all_alive(const Graph& g, std::initializer_list<Vertex> vs) {
  for (Vertex v : vs)
    if (v < 0 || !g.valid(v) || !g.alive(v)) return false;
  return true;
}

bool pairwise_distinct(std::initializer_list<Vertex> vs) {
  std::vector<Vertex> t(vs);
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) == t.end();
}

bool validate_c5(const Graph& g, const RemovedC5& c) {
  for (int i = 0; i < 5; ++i) {
    Vertex v = c.cycle[i];
    if (!g.valid(v) || !g.alive(v)) return false;
    if (!g.adjacent(v, c.cycle[(i + 1) % 5])) return false;
  }
  return c.anchor < 0 ||
         std::find(c.cycle.begin(), c.cycle.end(), c.anchor) != c.cycle.end();
}

bool validate_c5s(const Graph& g, const std::vector<RemovedC5>& cs) {
  for (const auto& c : cs)
    if (!validate_c5(g, c)) return false;
  return true;
}

void require_valid(const Graph& g, const ReductionStep& s) {
  if (!validate_any(g, s))
    throw ContractError(std::string("step validation failed at extension: ") +
                        step_name(s));
}

// All superlinear conditions that touch the just-colored vertices `q`:
// list membership and properness on q, the degree-2 and three-same-neighbor
// conditions on q and around it, and no bicolored cycle through any q-edge.
bool extension_locally_valid(const Graph& g, const ListAssignment& L,
                             const Coloring& f,
                             const std::vector<Vertex>& q) {
  std::vector<Vertex> around = q;
  for (Vertex v : q)
    g.for_live_nbrs(v, [&](Vertex w) { around.push_back(w); });
  std::sort(around.begin(), around.end());
  around.erase(std::unique(around.begin(), around.end()), around.end());
  for (Vertex v : q) {
    Color c = f.at(v);
    if (c == kNoColor || !L.has(v, c)) return false;
    bool bad = false;
    g.for_live_nbrs(v, [&](Vertex w) {
      if (f.at(w) == c) bad = true;
    });
    if (bad) return false;
  }
  for (Vertex v : around) {
    auto nb = g.live_nbrs(v);
    if (g.degree(v) == 2 && f.at(nb[0]) != kNoColor &&
        f.at(nb[0]) == f.at(nb[1]))
      return false;
    if (g.degree(v) == 3 && f.at(nb[0]) != kNoColor &&
        f.at(nb[0]) == f.at(nb[1]) && f.at(nb[1]) == f.at(nb[2]))
      return false;
  }
  for (Vertex v : q) {
    bool bad = false;
    g.for_live_nbrs(v, [&](Vertex w) {
      if (bad || f.at(w) == kNoColor || f.at(w) == f.at(v)) return;
      if (bicolored_path_through(g, f, v, w).closed) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

}  // namespace

void color_removed_c5s(const Graph& g, const ListAssignment& L,
                       const std::vector<RemovedC5>& c5s, Coloring& f,
                       std::string_view step, ExtendObserver* obs) {
  (void)g;
  for (const auto& c : c5s) {
    CycleInstance ci{std::vector<Vertex>(c.cycle.begin(), c.cycle.end())};
    if (auto plain = color_c5_superlinear(ci, L)) {
      for (Vertex v : ci.order) f.set(v, plain->at(v));
      if (obs) obs->on_branch(step, "c5-plain");
      continue;
    }
    if (c.anchor < 0)
      throw ContractError("removed 5-cycle has no plain coloring and no "
                          "relaxed anchor");
    Coloring relaxed = color_c5_relaxed(ci, L, c.anchor);
    for (Vertex v : ci.order) f.set(v, relaxed.at(v));
    if (obs) obs->on_branch(step, "c5-relaxed");
  }
}

// --- Validators -----------------------------------------------------------

bool validate_step(const Graph& g, const PendantStep& s) {
  if (!all_alive(g, {s.v})) return false;
  if (g.degree(s.v) > 1) return false;
  if (g.degree(s.v) == 1 && g.other_nbr(s.v, -1) != s.u) return false;
  if (g.degree(s.v) == 0 && s.u >= 0) return false;
  return validate_c5s(g, s.c5s);
}

bool validate_step(const Graph& g, const Deg2PathStep& s) {
  int k = (int)s.path.size();
  if (k < 1) return false;
  for (int i = 0; i < k; ++i) {
    Vertex v = s.path[i];
    if (!all_alive(g, {v}) || g.degree(v) != 2) return false;
    if (i + 1 < k && !g.adjacent(v, s.path[i + 1])) return false;
  }
  if (s.u1 >= 0 && !g.adjacent(s.path.front(), s.u1)) return false;
  if (s.uk >= 0 && !g.adjacent(s.path.back(), s.uk)) return false;
  return validate_c5s(g, s.c5s);
}

bool validate_step(const Graph& g, const SpecialPathStep& s) {
  int k = (int)s.path.size();
  if (k < 3 || (int)s.us.size() != k || (int)s.xs.size() != k) return false;
  for (int i = 0; i < k; ++i)
    if (!all_alive(g, {s.path[i]})) return false;
  // Induced path with degree-2 endpoints and degree-3 interior.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool adj = g.adjacent(s.path[i], s.path[j]);
      if ((j == i + 1) != adj) return false;
    }
  }
  if (g.degree(s.path[0]) != 2 || g.degree(s.path[k - 1]) != 2) return false;
  for (int i = 1; i + 1 < k; ++i)
    if (g.degree(s.path[i]) != 3) return false;
  // Attachments and pendants.
  std::vector<Vertex> q = s.path;
  for (int i = 0; i < k; ++i)
    if (s.xs[i] >= 0) q.push_back(s.xs[i]);
  auto in_q = [&](Vertex z) {
    return std::find(q.begin(), q.end(), z) != q.end();
  };
  for (int i = 0; i < k; ++i) {
    Vertex u = s.us[i], x = s.xs[i];
    if (u < 0 || !g.alive(u) || g.degree(u) != 3 || in_q(u)) return false;
    if (x >= 0) {
      if (!g.alive(x) || g.degree(x) != 2) return false;
      if (!g.adjacent(x, s.path[i]) || !g.adjacent(x, u)) return false;
      for (int j = 0; j < k; ++j)
        if (j != i && s.xs[j] == x) return false;  // pendants distinct
    } else if (!g.adjacent(s.path[i], u)) {
      return false;
    }
  }
  // u1 must not see three pairwise nonadjacent vertices of Q; no other
  // attachment may see two nonadjacent vertices of Q.
  for (int i = 0; i < k; ++i) {
    Vertex u = s.us[i];
    std::vector<Vertex> hit;
    for (Vertex z : q)
      if (g.adjacent(u, z)) hit.push_back(z);
    int limit = (u == s.us[0]) ? 3 : 2;
    // Any `limit` pairwise nonadjacent members of `hit`?
    int h = (int)hit.size();
    bool bad = false;
    for (int a = 0; a < h && !bad; ++a)
      for (int b = a + 1; b < h && !bad; ++b) {
        if (g.adjacent(hit[a], hit[b])) continue;
        if (limit == 2) bad = true;
        for (int c = b + 1; c < h && limit == 3 && !bad; ++c)
          if (!g.adjacent(hit[a], hit[c]) && !g.adjacent(hit[b], hit[c]))
            bad = true;
      }
    if (bad) return false;
  }
  return validate_c5s(g, s.c5s);
}

bool validate_step(const Graph& g, const EyeglassStep& s) {
  auto [v1, v2, v3, v4] = std::tuple(s.path[0], s.path[1], s.path[2],
                                     s.path[3]);
  if (!all_alive(g, {v1, v2, v3, v4, s.u1, s.u4})) return false;
  if (!pairwise_distinct({v1, v2, v3, v4, s.u1, s.u4})) return false;
  if (!g.adjacent(v1, v2) || !g.adjacent(v2, v3) || !g.adjacent(v3, v4))
    return false;
  if (g.adjacent(v1, v3) || g.adjacent(v2, v4) || g.adjacent(v1, v4))
    return false;  // induced
  if (g.degree(v1) != 2 || g.degree(v4) != 2) return false;
  if (g.degree(v2) != 3 || g.degree(v3) != 3) return false;
  if (!g.adjacent(v1, s.u1) || !g.adjacent(v4, s.u4)) return false;
  if (!g.adjacent(s.u1, v3) || !g.adjacent(s.u4, v2)) return false;
  return g.degree(s.u1) == 3 && g.degree(s.u4) == 3;
}

bool validate_step(const Graph& g, const C4BridgeStep& s) {
  auto& p = s.path;
  for (Vertex v : p)
    if (!all_alive(g, {v})) return false;
  if (!all_alive(g, {s.w3, s.x, s.u1, s.u3, s.u5})) return false;
  if (!pairwise_distinct({p[0], p[1], p[2], p[3], p[4], s.w3, s.x}))
    return false;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if ((j == i + 1) != g.adjacent(p[i], p[j])) return false;  // induced P5
  if (g.degree(p[0]) != 2 || g.degree(p[4]) != 2) return false;
  for (int i = 1; i < 4; ++i)
    if (g.degree(p[i]) != 3) return false;
  if (!g.adjacent(p[0], s.u1) || !g.adjacent(p[2], s.u3) ||
      !g.adjacent(p[4], s.u5))
    return false;
  if (!g.adjacent(s.w3, p[1]) || !g.adjacent(s.w3, p[3])) return false;
  if (g.other_nbr(s.w3, p[1], p[3]) != s.x) return false;
  if (s.w3 == s.u1 || s.w3 == s.u5) return false;
  if (g.degree(s.x) != 3 || g.degree(s.u3) != 3) return false;
  return validate_c5s(g, s.c5s);
}

bool validate_step(const Graph& g, const TriangleStep& s) {
  auto& t = s.tri;
  if (!all_alive(g, {t[0], t[1], t[2]})) return false;
  if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[1], t[2]) ||
      !g.adjacent(t[0], t[2]))
    return false;
  int deg2 = 0;
  for (Vertex v : t) deg2 += g.degree(v) == 2;
  if (deg2 > 1) return false;
  if (deg2 == 1 && g.degree(t[2]) != 2) return false;  // v3 carries it
  for (int i = 0; i < 3; ++i) {
    if (g.degree(t[i]) == 2) continue;
    Vertex third = g.other_nbr(t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
    if (g.degree(third) == 2) {
      if (s.xs[i] != third) return false;
      Vertex far = g.other_nbr(third, t[i]);
      bool merged = far == t[(i + 1) % 3] || far == t[(i + 2) % 3];
      if (merged ? s.us[i] != -1 : s.us[i] != far) return false;
      if (!merged && g.degree(s.us[i]) != 3) return false;
    } else {
      if (s.xs[i] != -1 || s.us[i] != third) return false;
    }
  }
  // An attachment reached through a pendant must not also touch the rest of
  // the configuration; shared direct attachments (K4-like) are fine.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (s.us[i] < 0 || s.us[i] != s.us[j]) continue;
      if (s.xs[i] >= 0 || s.xs[j] >= 0) return false;
    }
  for (int i = 0; i < 3; ++i) {
    if (s.us[i] < 0) continue;
    for (int j = 0; j < 3; ++j)
      if (j != i && s.xs[j] >= 0 && s.xs[j] != s.xs[i] &&
          g.adjacent(s.us[i], s.xs[j]))
        return false;
  }
  return true;
}

bool validate_step(const Graph& g, const C4WithDeg2Step& s) {
  auto& c = s.cyc;
  for (Vertex v : c)
    if (!all_alive(g, {v})) return false;
  if (!pairwise_distinct({c[0], c[1], c[2], c[3]})) return false;
  for (int i = 0; i < 4; ++i)
    if (!g.adjacent(c[i], c[(i + 1) % 4])) return false;
  if (g.adjacent(c[0], c[2]) || g.adjacent(c[1], c[3])) return false;
  if (g.degree(c[0]) != 2) return false;
  for (int i = 1; i < 4; ++i) {
    if (g.degree(c[i]) != 3) return false;
    Vertex u = g.other_nbr(c[i], c[(i + 1) % 4], c[(i + 3) % 4]);
    if (s.us[i] != u || g.degree(u) != 3) return false;
  }
  return s.us[1] != s.us[2] && s.us[2] != s.us[3];
}

bool validate_step(const Graph& g, const C4NearDeg2Step& s) {
  auto& c = s.cyc;
  if (!all_alive(g, {s.v})) return false;
  for (Vertex v : c)
    if (!all_alive(g, {v})) return false;
  if (!pairwise_distinct({s.v, c[0], c[1], c[2], c[3]})) return false;
  for (int i = 0; i < 4; ++i)
    if (!g.adjacent(c[i], c[(i + 1) % 4])) return false;
  if (g.adjacent(c[0], c[2]) || g.adjacent(c[1], c[3])) return false;
  if (g.degree(s.v) != 2 || !g.adjacent(s.v, c[0])) return false;
  if (g.other_nbr(s.v, c[0]) != s.us[0]) return false;
  for (Vertex v : c)
    if (g.degree(v) != 3) return false;
  for (int i = 1; i < 4; ++i) {
    Vertex u = g.other_nbr(c[i], c[(i + 1) % 4], c[(i + 3) % 4]);
    if (s.us[i] != u) return false;
  }
  for (Vertex u : s.us)
    if (u < 0 || g.degree(u) != 3) return false;
  if (s.us[0] == s.us[2] || s.us[2] == s.v) return false;
  if (s.us[0] == s.us[1] || s.us[0] == s.us[3]) return false;
  if (s.us[2] == s.us[1] || s.us[2] == s.us[3]) return false;
  return s.us[1] != s.us[2] && s.us[2] != s.us[3];
}

bool validate_step(const Graph& g, const C5WithDeg2Step& s) {
  auto& c = s.cyc;
  for (Vertex v : c)
    if (!all_alive(g, {v})) return false;
  if (!pairwise_distinct({c[0], c[1], c[2], c[3], c[4]})) return false;
  for (int i = 0; i < 5; ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % 5])) return false;
    if (g.adjacent(c[i], c[(i + 2) % 5])) return false;  // induced
  }
  if (g.degree(c[0]) != 2) return false;
  for (int i = 1; i < 5; ++i) {
    if (g.degree(c[i]) != 3) return false;
    Vertex u = g.other_nbr(c[i], c[(i + 1) % 5], c[(i + 4) % 5]);
    if (s.us[i] != u || u < 0 || g.degree(u) != 3) return false;
  }
  return pairwise_distinct({s.us[1], s.us[2], s.us[3], s.us[4]});
}

bool validate_step(const Graph& g, const CubicTailStep& s) {
  auto& p = s.path;
  for (Vertex v : p)
    if (!all_alive(g, {v})) return false;
  if (!all_alive(g, {s.w})) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if ((j == i + 1) != g.adjacent(p[i], p[j])) return false;  // induced
  if (g.degree(p[3]) != 2) return false;
  for (int i = 0; i < 3; ++i)
    if (g.degree(p[i]) != 3) return false;
  if (!g.adjacent(p[0], s.us[0]) || !g.adjacent(p[0], s.w)) return false;
  if (g.other_nbr(p[1], p[0], p[2]) != s.us[1]) return false;
  if (g.other_nbr(p[2], p[1], p[3]) != s.us[2]) return false;
  if (g.other_nbr(p[3], p[2]) != s.us[3]) return false;
  if (!pairwise_distinct(
          {s.us[0], s.w, s.us[1], s.us[2], s.us[3], p[0], p[1], p[2], p[3]}))
    return false;
  for (Vertex u : {s.us[0], s.w, s.us[1], s.us[2], s.us[3]})
    if (g.degree(u) != 3) return false;
  return true;
}

bool validate_step(const Graph& g, const K23Step& s) {
  if (!all_alive(g, {s.v1, s.v2, s.us[0], s.us[1], s.us[2]})) return false;
  for (Vertex u : s.us) {
    if (!g.adjacent(s.v1, u) || !g.adjacent(s.v2, u)) return false;
    if (g.degree(u) != 3) return false;
  }
  if (g.adjacent(s.v1, s.v2) || g.degree(s.v1) != 3 || g.degree(s.v2) != 3)
    return false;
  if (!pairwise_distinct({s.v1, s.v2, s.us[0], s.us[1], s.us[2]}))
    return false;
  if (s.v3 >= 0) {
    if (!all_alive(g, {s.v3, s.x, s.y})) return false;
    if (!g.adjacent(s.us[0], s.v3) || !g.adjacent(s.us[1], s.v3))
      return false;
    if (g.other_nbr(s.us[2], s.v1, s.v2) != s.x) return false;
    if (g.other_nbr(s.v3, s.us[0], s.us[1]) != s.y) return false;
    if (s.v3 == s.v1 || s.v3 == s.v2) return false;
    return s.x != s.v3;  // u3 adjacent to v3 would close a K3,3
  }
  // Case (b): outside neighbors, pairwise distinct (a shared one would be a
  // case (a) common neighbor instead).
  for (int i = 0; i < 3; ++i) {
    Vertex out = g.other_nbr(s.us[i], s.v1, s.v2);
    if (s.abc[i] != out || out < 0) return false;
  }
  return pairwise_distinct({s.abc[0], s.abc[1], s.abc[2]});
}

bool validate_step(const Graph& g, const GoodCycleStep& s) {
  int k = (int)s.cycle.size();
  if (k < 4 || (int)s.us.size() != k) return false;
  for (int i = 0; i < k; ++i) {
    Vertex v = s.cycle[i];
    if (!all_alive(g, {v}) || g.degree(v) != 3) return false;
    if (!g.adjacent(v, s.cycle[(i + 1) % k])) return false;
    Vertex u = g.other_nbr(v, s.cycle[(i + 1) % k], s.cycle[(i + k - 1) % k]);
    if (u != s.us[i] || u < 0) return false;
  }
  // No outside vertex adjacent to two or more cycle vertices (also rules
  // out chords, since a chord endpoint is its own second neighbor).
  for (int i = 0; i < k; ++i) {
    Vertex u = s.us[i];
    for (int j = i + 1; j < k; ++j)
      if (s.us[j] == u) return false;
    for (int j = 0; j < k; ++j)
      if (s.cycle[j] == u) return false;
  }
  return true;
}

bool validate_any(const Graph& g, const ReductionStep& s) {
  return std::visit([&](const auto& st) { return validate_step(g, st); }, s);
}

// --- Extension recipes ----------------------------------------------------

void extend_pendant(const Graph& g, const ListAssignment& L,
                    const PendantStep& s, Coloring& f, ExtendObserver* obs) {
  require_valid(g, s);
  color_removed_c5s(g, L, s.c5s, f, "pendant", obs);
  ForbiddenSet forbid;
  if (s.u >= 0) {
    forbid.add(f.at(s.u));
    ForbiddenSet around = colored_nbr_colors(g, f, s.u, s.v);
    for (int i = 0; i < around.n; ++i) forbid.add(around.c[i]);
    if (obs) obs->on_branch("pendant", "deg1");
  } else if (obs) {
    obs->on_branch("pendant", "isolated");
  }
  pick(L, s.v, forbid, "pendant", f, obs);
}

void extend_deg2_path(const Graph& g, const ListAssignment& L,
                      const Deg2PathStep& s, Coloring& f,
                      ExtendObserver* obs) {
  require_valid(g, s);
  color_removed_c5s(g, L, s.c5s, f, "deg2_path", obs);
  int k = (int)s.path.size();
  ForbiddenSet first;
  if (s.u1 >= 0) {
    first.add(f.at(s.u1));
    ForbiddenSet around = colored_nbr_colors(g, f, s.u1, s.path[0]);
    for (int i = 0; i < around.n; ++i) first.add(around.c[i]);
  }
  pick(L, s.path[0], first, "deg2_path", f, obs);
  Color cuk = f.at(s.uk);
  for (int i = 1; i < k; ++i) {
    ForbiddenSet forbid;
    forbid.add(i >= 2 ? f.at(s.path[i - 2]) : f.at(s.u1));
    forbid.add(f.at(s.path[i - 1]));
    forbid.add(cuk);
    pick(L, s.path[i], forbid, "deg2_path", f, obs);
  }
  if (obs) obs->on_branch("deg2_path", s.u1 == s.uk ? "loop" : "base");
}

namespace {

// Exhaustive assignment over a three-vertex special path plus its optional
// pendant: the transcribed recipe has one corner (the last interior choice
// cannot avoid u1 and the endpoint attachments simultaneously) that only a
// direct search resolves for every coloring of the rest.
bool special_path3_exhaustive(const Graph& g, const ListAssignment& L,
                              const SpecialPathStep& s, Coloring& f,
                              ExtendObserver* obs) {
  std::vector<Vertex> q = s.path;
  if (s.xs[1] >= 0) q.push_back(s.xs[1]);
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == q.size()) return extension_locally_valid(g, L, f, q);
    for (Color c : L.list(q[i])) {
      f.set(q[i], c);
      if (rec(i + 1)) return true;
    }
    f.clear(q[i]);
    return false;
  };
  if (!rec(0)) return false;
  if (obs) {
    obs->on_branch("special_path", "k3-exhaustive");
    for (Vertex v : q) obs->on_choice("special_path", v, {}, f.at(v));
  }
  return true;
}

}  // namespace

void extend_special_path(const Graph& g, const ListAssignment& L,
                         const SpecialPathStep& s, Coloring& f,
                         ExtendObserver* obs) {
  require_valid(g, s);
  color_removed_c5s(g, L, s.c5s, f, "special_path", obs);
  int k = (int)s.path.size();
  auto fu = [&](int i) { return f.at(s.us[i]); };

  // The choice of f(v_{k-2}) maximizes how much room v_{k-1} keeps.
  auto room = [&](Color cand) {
    ForbiddenSet used;
    used.add(cand);
    used.add(fu(k - 3));
    used.add(fu(k - 2));
    used.add(fu(k - 1));
    int r = 0;
    for (Color c : L.list(s.path[k - 2]))
      if (!used.contains(c)) ++r;
    return r;
  };
  auto pick_maximizing = [&](Vertex v, const ForbiddenSet& forbid) {
    Color best = kNoColor;
    int best_room = -1;
    for (Color c : L.list(v)) {
      if (forbid.contains(c)) continue;
      int r = room(c);
      if (r > best_room) {
        best_room = r;
        best = c;
      }
    }
    if (best == kNoColor)
      throw ContractError("special_path: maximizer exhausted");
    if (obs) obs->on_choice("special_path", v, forbid, best);
    f.set(v, best);
    return best;
  };

  auto run_recipe = [&]() {
    ForbiddenSet first;
    first.add(fu(0));
    {
      ForbiddenSet around = colored_nbr_colors(g, f, s.us[0], s.path[0]);
      for (int i = 0; i < around.n; ++i) first.add(around.c[i]);
    }
    if (k == 3)
      pick_maximizing(s.path[0], first);
    else
      pick(L, s.path[0], first, "special_path", f, obs);

    for (int i = 1; i <= k - 3; ++i) {
      ForbiddenSet forbid;
      forbid.add(f.at(s.path[i - 1]));
      forbid.add(fu(i - 1));
      forbid.add(fu(i));
      if (i == k - 3)
        pick_maximizing(s.path[i], forbid);
      else
        pick(L, s.path[i], forbid, "special_path", f, obs);
    }

    Color ck2 = f.at(s.path[k - 3]);
    bool distinct = ck2 != fu(k - 2) && ck2 != fu(k - 1) &&
                    fu(k - 2) != fu(k - 1);
    ForbiddenSet pen;
    pen.add(ck2);
    if (!distinct) pen.add(fu(k - 3));
    pen.add(fu(k - 2));
    pen.add(fu(k - 1));
    if (obs)
      obs->on_branch("special_path", distinct ? "k1-distinct" : "k1-joint");
    pick(L, s.path[k - 2], pen, "special_path", f, obs);

    ForbiddenSet last;
    last.add(f.at(s.path[k - 3]));
    last.add(f.at(s.path[k - 2]));
    last.add(fu(k - 1));
    pick(L, s.path[k - 1], last, "special_path", f, obs);

    for (int i = 1; i + 1 < k; ++i) {
      if (s.xs[i] < 0) continue;
      ForbiddenSet forbid;
      forbid.add(f.at(s.path[i - 1]));
      forbid.add(f.at(s.path[i]));
      forbid.add(fu(i));
      pick(L, s.xs[i], forbid, "special_path", f, obs);
    }
  };

  if (k > 3) {
    run_recipe();
    return;
  }
  // k == 3: the transcription can pin f(v2) to f(u1), clashing at the
  // degree-2 endpoint, so fall back to a direct search when the greedy
  // outcome is not locally clean.
  std::vector<Vertex> q = s.path;
  if (s.xs[1] >= 0) q.push_back(s.xs[1]);
  bool ok = true;
  try {
    run_recipe();
  } catch (const ContractError&) {
    ok = false;
  }
  if (ok && extension_locally_valid(g, L, f, q)) return;
  for (Vertex v : q) f.clear(v);
  if (!special_path3_exhaustive(g, L, s, f, obs))
    throw ContractError("special_path: no local assignment exists");
}

void extend_eyeglass(const Graph& g, const ListAssignment& L,
                     const EyeglassStep& s, Coloring& f, ExtendObserver* obs) {
  require_valid(g, s);
  Color cu1 = f.at(s.u1), cu4 = f.at(s.u4);
  ForbiddenSet mid;
  mid.add(cu1);
  mid.add(cu4);
  Color c2 = pick(L, s.path[1], mid, "eyeglass", f, obs);
  ForbiddenSet mid2 = mid;
  mid2.add(c2);
  Color c3 = pick(L, s.path[2], mid2, "eyeglass", f, obs);
  ForbiddenSet end1;
  end1.add(cu1);
  end1.add(c2);
  end1.add(c3);
  pick(L, s.path[0], end1, "eyeglass", f, obs);
  ForbiddenSet end4;
  end4.add(cu4);
  end4.add(c2);
  end4.add(c3);
  pick(L, s.path[3], end4, "eyeglass", f, obs);
  if (obs) obs->on_branch("eyeglass", "base");
}

void extend_c4_bridge(const Graph& g, const ListAssignment& L,
                      const C4BridgeStep& s, Coloring& f,
                      ExtendObserver* obs) {
  require_valid(g, s);
  color_removed_c5s(g, L, s.c5s, f, "c4_bridge", obs);
  // Orientation-sensitive names; mirrored in case 2 when needed.
  Vertex v1 = s.path[0], v2 = s.path[1], v3 = s.path[2], v4 = s.path[3],
         v5 = s.path[4];
  Vertex u1 = s.u1, u5 = s.u5;
  Color lone1 = lone_nbr_color(g, f, u1), lone5 = lone_nbr_color(g, f, u5);
  Color lone3 = lone_nbr_color(g, f, s.u3);
  Color cu1 = f.at(u1), cu3 = f.at(s.u3), cu5 = f.at(u5), cx = f.at(s.x);

  auto inA = [&](Color c) {  // L(v2) - {f(u1), f(u3)}
    return L.has(v2, c) && c != cu1 && c != cu3;
  };
  auto inB = [&](Color c) {  // L(v4) - {f(u5), f(x)}
    return L.has(v4, c) && c != cu5 && c != cx;
  };
  Color common = kNoColor;
  for (Color c = 0; c < (Color)L.universe; ++c)
    if (inA(c) && inB(c)) {
      common = c;
      break;
    }

  if (common != kNoColor) {
    if (obs) obs->on_branch("c4_bridge", "case1");
    if (obs) obs->on_choice("c4_bridge", v2, ForbiddenSet{}, common);
    f.set(v2, common);
    f.set(v4, common);
    ForbiddenSet f1;
    f1.add(cu1);
    f1.add(common);
    f1.add(lone1);
    pick(L, v1, f1, "c4_bridge", f, obs);
    ForbiddenSet f5;
    f5.add(common);
    f5.add(cu5);
    f5.add(lone5);
    pick(L, v5, f5, "c4_bridge", f, obs);
    ForbiddenSet f3;
    f3.add(common);
    f3.add(cu3);
    f3.add(lone3);
    Color c3 = pick(L, v3, f3, "c4_bridge", f, obs);
    ForbiddenSet fw;
    fw.add(common);
    fw.add(c3);
    fw.add(cx);
    pick(L, s.w3, fw, "c4_bridge", f, obs);
    return;
  }

  // Case 2: the two sides exclude each other; f(v3) can avoid one of them.
  ForbiddenSet f3;
  f3.add(cu3);
  f3.add(lone3);
  Color c3 = pick(L, v3, f3, "c4_bridge", f, obs);
  bool mirrored = false;
  if (inB(c3)) {  // then c3 is not in A; swap the two ends
    std::swap(v1, v5);
    std::swap(v2, v4);
    std::swap(u1, u5);
    std::swap(cu1, cu5);
    std::swap(lone1, lone5);
    mirrored = true;
  }
  if (obs)
    obs->on_branch("c4_bridge", mirrored ? "case2-mirrored" : "case2");
  // After normalization c3 lies outside L(v4') - {f(u5'), f(x)}.
  ForbiddenSet f2;
  f2.add(cu1);
  f2.add(cu3);
  f2.add(c3);
  Color c2 = pick(L, v2, f2, "c4_bridge", f, obs);
  ForbiddenSet f1;
  f1.add(cu1);
  f1.add(c2);
  f1.add(lone1);
  pick(L, v1, f1, "c4_bridge", f, obs);
  ForbiddenSet fw;
  fw.add(c2);
  fw.add(c3);
  fw.add(cx);
  Color cw = pick(L, s.w3, fw, "c4_bridge", f, obs);
  ForbiddenSet f4;
  f4.add(cw);
  f4.add(cu5);
  f4.add(cx);
  Color c4 = pick(L, v4, f4, "c4_bridge", f, obs);
  ForbiddenSet f5;
  f5.add(c4);
  f5.add(cu5);
  f5.add(lone5);
  pick(L, v5, f5, "c4_bridge", f, obs);
}

void extend_triangle(const Graph& g, const ListAssignment& L,
                     const TriangleStep& s, Coloring& f, ExtendObserver* obs) {
  require_valid(g, s);
  Color cu1 = f.at(s.us[0]), cu2 = f.at(s.us[1]), cu3 = f.at(s.us[2]);
  ForbiddenSet f1;
  f1.add(cu1);
  f1.add(cu2);
  f1.add(cu3);
  Color c1 = pick(L, s.tri[0], f1, "triangle", f, obs);
  ForbiddenSet f2;
  f2.add(c1);
  f2.add(cu2);
  f2.add(cu3);
  Color c2 = pick(L, s.tri[1], f2, "triangle", f, obs);
  ForbiddenSet f3;
  f3.add(c1);
  f3.add(c2);
  f3.add(cu3);
  pick(L, s.tri[2], f3, "triangle", f, obs);
  bool merged_any = false;
  for (int i = 0; i < 3; ++i) {
    Vertex x = s.xs[i];
    if (x < 0 || f.at(x) != kNoColor) continue;
    bool merged = false;
    ForbiddenSet fx;
    fx.add(f.at(s.tri[i]));
    for (int j = i + 1; j < 3; ++j)
      if (s.xs[j] == x) {
        merged = true;
        fx.add(f.at(s.tri[j]));
      }
    if (!merged) fx.add(f.at(s.us[i]));
    merged_any = merged_any || merged;
    pick(L, x, fx, "triangle", f, obs);
  }
  if (obs) obs->on_branch("triangle", merged_any ? "merged-x" : "plain");
}

void extend_c4_with_deg2(const Graph& g, const ListAssignment& L,
                         const C4WithDeg2Step& s, Coloring& f,
                         ExtendObserver* obs) {
  require_valid(g, s);
  Color lone2 = lone_nbr_color(g, f, s.us[1]);
  ForbiddenSet f3;
  f3.add(f.at(s.us[1]));
  f3.add(f.at(s.us[2]));
  f3.add(f.at(s.us[3]));
  Color c3 = pick(L, s.cyc[2], f3, "c4_with_deg2", f, obs);
  ForbiddenSet f2;
  f2.add(f.at(s.us[1]));
  f2.add(c3);
  f2.add(lone2);
  Color c2 = pick(L, s.cyc[1], f2, "c4_with_deg2", f, obs);
  ForbiddenSet f4;
  f4.add(c2);
  f4.add(c3);
  f4.add(f.at(s.us[3]));
  Color c4 = pick(L, s.cyc[3], f4, "c4_with_deg2", f, obs);
  ForbiddenSet f1;
  f1.add(c2);
  f1.add(c3);
  f1.add(c4);
  pick(L, s.cyc[0], f1, "c4_with_deg2", f, obs);
  if (obs)
    obs->on_branch("c4_with_deg2",
                   s.us[1] == s.us[3] ? "shared-u24" : "base");
}

void extend_c4_near_deg2(const Graph& g, const ListAssignment& L,
                         const C4NearDeg2Step& s, Coloring& f,
                         ExtendObserver* obs) {
  require_valid(g, s);
  Color lone2 = lone_nbr_color(g, f, s.us[1]);
  Color lone1 = lone_nbr_color(g, f, s.us[0]);
  ForbiddenSet f3;
  f3.add(f.at(s.us[1]));
  f3.add(f.at(s.us[2]));
  f3.add(f.at(s.us[3]));
  Color c3 = pick(L, s.cyc[2], f3, "c4_near_deg2", f, obs);
  ForbiddenSet f2;
  f2.add(f.at(s.us[1]));
  f2.add(c3);
  f2.add(lone2);
  Color c2 = pick(L, s.cyc[1], f2, "c4_near_deg2", f, obs);
  ForbiddenSet f4;
  f4.add(c2);
  f4.add(c3);
  f4.add(f.at(s.us[3]));
  Color c4 = pick(L, s.cyc[3], f4, "c4_near_deg2", f, obs);
  ForbiddenSet f1;
  f1.add(f.at(s.us[0]));
  f1.add(c2);
  f1.add(c4);
  Color c1 = pick(L, s.cyc[0], f1, "c4_near_deg2", f, obs);
  ForbiddenSet fv;
  fv.add(f.at(s.us[0]));
  fv.add(c1);
  fv.add(lone1);
  pick(L, s.v, fv, "c4_near_deg2", f, obs);
  if (obs) obs->on_branch("c4_near_deg2", "base");
}

void extend_c5_with_deg2(const Graph& g, const ListAssignment& L,
                         const C5WithDeg2Step& s, Coloring& f,
                         ExtendObserver* obs) {
  require_valid(g, s);
  ForbiddenSet f3;
  f3.add(f.at(s.us[1]));
  f3.add(f.at(s.us[2]));
  f3.add(f.at(s.us[3]));
  Color c3 = pick(L, s.cyc[2], f3, "c5_with_deg2", f, obs);
  ForbiddenSet f4;
  f4.add(c3);
  f4.add(f.at(s.us[3]));
  f4.add(f.at(s.us[4]));
  Color c4 = pick(L, s.cyc[3], f4, "c5_with_deg2", f, obs);
  ForbiddenSet f2;
  f2.add(f.at(s.us[1]));
  f2.add(c3);
  f2.add(c4);
  Color c2 = pick(L, s.cyc[1], f2, "c5_with_deg2", f, obs);
  ForbiddenSet f5;
  f5.add(c2);
  f5.add(c4);
  f5.add(f.at(s.us[4]));
  Color c5 = pick(L, s.cyc[4], f5, "c5_with_deg2", f, obs);
  ForbiddenSet f1;
  f1.add(c2);
  f1.add(c5);
  pick(L, s.cyc[0], f1, "c5_with_deg2", f, obs);
  if (obs) obs->on_branch("c5_with_deg2", "base");
}

void extend_cubic_tail(const Graph& g, const ListAssignment& L,
                       const CubicTailStep& s, Coloring& f,
                       ExtendObserver* obs) {
  require_valid(g, s);
  Color cu1 = f.at(s.us[0]), cu2 = f.at(s.us[1]), cu3 = f.at(s.us[2]),
        cu4 = f.at(s.us[3]), cw = f.at(s.w);
  auto [v1, v2, v3, v4] = std::tuple(s.path[0], s.path[1], s.path[2],
                                     s.path[3]);
  if (cu1 != cw) {
    if (obs) obs->on_branch("cubic_tail", "u1-ne-w");
    ForbiddenSet f1;
    f1.add(cu1);
    f1.add(cw);
    f1.add(cu2);
    Color c1 = pick(L, v1, f1, "cubic_tail", f, obs);
    ForbiddenSet f2;
    f2.add(c1);
    f2.add(cu2);
    f2.add(cu3);
    Color c2 = pick(L, v2, f2, "cubic_tail", f, obs);
    ForbiddenSet f3;
    f3.add(c2);
    f3.add(cu3);
    f3.add(cu4);
    Color c3 = pick(L, v3, f3, "cubic_tail", f, obs);
    ForbiddenSet f4;
    f4.add(cu3);
    f4.add(c3);
    f4.add(cu4);
    pick(L, v4, f4, "cubic_tail", f, obs);
    return;
  }
  ForbiddenSet f1 = colored_nbr_colors(g, f, s.w, v1);
  f1.add(cw);
  Color c1 = pick(L, v1, f1, "cubic_tail", f, obs);
  if (c1 == cu2) {
    if (obs) obs->on_branch("cubic_tail", "u1-eq-w-v1-eq-u2");
    ForbiddenSet f3;
    f3.add(cu2);
    f3.add(cu3);
    f3.add(cu4);
    Color c3 = pick(L, v3, f3, "cubic_tail", f, obs);
    ForbiddenSet f2;
    f2.add(cu1);
    f2.add(cu2);
    f2.add(c3);
    pick(L, v2, f2, "cubic_tail", f, obs);
    ForbiddenSet f4;
    f4.add(cu3);
    f4.add(c3);
    f4.add(cu4);
    pick(L, v4, f4, "cubic_tail", f, obs);
    return;
  }
  ForbiddenSet f2;
  f2.add(cu1);
  f2.add(c1);
  f2.add(cu2);
  Color c2 = pick(L, v2, f2, "cubic_tail", f, obs);
  ForbiddenSet f3;
  if (c2 == cu3) {
    if (obs) obs->on_branch("cubic_tail", "u1-eq-w-v2-eq-u3");
    f3.add(cu2);
    f3.add(c2);
    f3.add(cu4);
  } else {
    if (obs) obs->on_branch("cubic_tail", "u1-eq-w-plain");
    f3.add(c2);
    f3.add(cu3);
    f3.add(cu4);
  }
  Color c3 = pick(L, v3, f3, "cubic_tail", f, obs);
  ForbiddenSet f4;
  f4.add(cu3);
  f4.add(c3);
  f4.add(cu4);
  pick(L, v4, f4, "cubic_tail", f, obs);
}

void extend_k23(const Graph& g, const ListAssignment& L, const K23Step& s,
                Coloring& f, ExtendObserver* obs) {
  require_valid(g, s);
  Vertex u1 = s.us[0], u2 = s.us[1], u3 = s.us[2];
  if (s.v3 >= 0) {
    // Case (a): u1 and u2 share the extra neighbor v3.
    ForbiddenSet fu3 = colored_nbr_colors(g, f, s.x, u3);
    fu3.add(f.at(s.x));
    Color cu3 = pick(L, u3, fu3, "k23", f, obs);
    ForbiddenSet fv3 = colored_nbr_colors(g, f, s.y, s.v3);
    fv3.add(f.at(s.y));
    Color cv3 = pick(L, s.v3, fv3, "k23", f, obs);
    ForbiddenSet fu2;
    fu2.add(cu3);
    fu2.add(cv3);
    fu2.add(f.at(s.y));
    Color cu2 = pick(L, u2, fu2, "k23", f, obs);
    ForbiddenSet fv2;
    fv2.add(cu2);
    fv2.add(cu3);
    fv2.add(f.at(s.x));
    Color cv2 = pick(L, s.v2, fv2, "k23", f, obs);
    ForbiddenSet fv1;
    fv1.add(cu2);
    fv1.add(cv2);
    fv1.add(cu3);
    Color cv1 = pick(L, s.v1, fv1, "k23", f, obs);
    bool distinct = cv1 != cv2 && cv2 != cv3 && cv1 != cv3;
    ForbiddenSet fu1;
    fu1.add(cv1);
    fu1.add(cv2);
    fu1.add(cv3);
    if (!distinct) fu1.add(cu2);
    if (obs) obs->on_branch("k23", distinct ? "case-a-distinct" : "case-a-joint");
    pick(L, u1, fu1, "k23", f, obs);
    return;
  }
  // Case (b).
  Vertex a = s.abc[0], b = s.abc[1], c = s.abc[2];
  ForbiddenSet fu1 = colored_nbr_colors(g, f, a, u1);
  fu1.add(f.at(a));
  Color cu1 = pick(L, u1, fu1, "k23", f, obs);
  ForbiddenSet fu2;
  fu2.add(cu1);
  fu2.add(f.at(b));
  Color cu2 = pick(L, u2, fu2, "k23", f, obs);
  ForbiddenSet fv1;
  fv1.add(cu1);
  fv1.add(cu2);
  fv1.add(f.at(c));
  Color cv1 = pick(L, s.v1, fv1, "k23", f, obs);
  ForbiddenSet fv2;
  fv2.add(cv1);
  fv2.add(cu1);
  fv2.add(cu2);
  Color cv2 = pick(L, s.v2, fv2, "k23", f, obs);
  // f(u3) avoids {f(c), f(v1), f(v2)} and, if possible, f(u2).
  ForbiddenSet fu3;
  fu3.add(f.at(c));
  fu3.add(cv1);
  fu3.add(cv2);
  Color chosen = kNoColor;
  for (Color cc : L.list(u3))
    if (!fu3.contains(cc) && cc != cu2) {
      chosen = cc;
      break;
    }
  if (chosen != kNoColor) {
    if (obs) {
      obs->on_branch("k23", "case-b-pref");
      obs->on_choice("k23", u3, fu3, chosen);
    }
    f.set(u3, chosen);
  } else {
    if (obs) obs->on_branch("k23", "case-b-nopref");
    pick(L, u3, fu3, "k23", f, obs);
  }
}

void extend_good_cycle(const Graph& g, const ListAssignment& L,
                       const GoodCycleStep& s, Coloring& f,
                       ExtendObserver* obs) {
  require_valid(g, s);
  int k = (int)s.cycle.size();
  auto fu = [&](int i) { return f.at(s.us[((i % k) + k) % k]); };

  const VertexSet* domain = s.comp.empty() ? nullptr : &s.comp;
  auto try_candidate = [&](const std::vector<Color>& cand,
                           std::string_view branch) {
    for (int i = 0; i < k; ++i)
      if (cand[i] == kNoColor || !L.has(s.cycle[i], cand[i])) return false;
    for (int i = 0; i < k; ++i) f.set(s.cycle[i], cand[i]);
    if (check_superlinear(g, L, f, -1, true, domain).kind ==
        Violation::kNone) {
      if (obs) obs->on_branch("good_cycle", branch);
      return true;
    }
    for (int i = 0; i < k; ++i) f.clear(s.cycle[i]);
    return false;
  };

  // Candidates 1 and 2: linear colorings from the L+ / L- derived lists.
  for (int side = 0; side < 2; ++side) {
    RestrictedLists lp;
    lp.lists.resize(L.n());
    for (int i = 0; i < k; ++i) {
      Color drop = side == 0 ? fu(i + 1) : fu(i - 1);
      std::vector<Color> l;
      for (Color c : L.list(s.cycle[i]))
        if (c != fu(i) && c != drop) l.push_back(c);
      lp.lists[s.cycle[i]] = l;
    }
    bool ok = true;
    for (int i = 0; i < k; ++i)
      ok = ok && lp.lists[s.cycle[i]].size() >= 2;
    if (!ok) continue;  // a repeated attachment color collapses nothing; skip
    CycleInstance ci{s.cycle};
    if (auto lin = color_cycle_linear(ci, lp)) {
      std::vector<Color> cand(k);
      for (int i = 0; i < k; ++i) cand[i] = lin->at(s.cycle[i]);
      if (try_candidate(cand, side == 0 ? "lplus" : "lminus")) return;
    }
  }

  // Degenerate case: every derived list is the same pair {c1, c2}. Base
  // two-colorings with one recolored vertex, then the explicit pattern.
  std::vector<Color> base(L.n(), kNoColor);
  Color c1 = kNoColor, c2 = kNoColor;
  {
    std::vector<Color> l;
    for (Color c : L.list(s.cycle[0]))
      if (c != fu(0) && c != fu(1)) l.push_back(c);
    if (l.size() >= 2) {
      c1 = l[0];
      c2 = l[1];
    }
  }
  if (c1 != kNoColor && k % 2 == 0) {
    auto recolor_candidates = [&](int i, bool swapped,
                                  std::string_view branch) {
      std::vector<Color> cand(k);
      for (int t = 0; t < k; ++t)
        cand[t] = (t % 2 == 0) == !swapped ? c1 : c2;
      ForbiddenSet forbid;
      forbid.add(fu(i));
      forbid.add(cand[(i + k - 1) % k]);
      forbid.add(cand[i]);
      for (Color c : L.list(s.cycle[i])) {
        if (forbid.contains(c)) continue;
        std::vector<Color> c2v = cand;
        c2v[i] = c;
        if (try_candidate(c2v, branch)) return true;
      }
      return false;
    };
    for (int swapped = 0; swapped < 2; ++swapped)
      if (recolor_candidates(0, swapped, "degenerate-recolor")) return;
    // Explicit pattern: v0 and v1 take their attachments' colors, the rest
    // alternate.
    for (int swapped = 0; swapped < 2; ++swapped) {
      std::vector<Color> cand(k);
      cand[0] = fu(1);
      cand[1] = fu(0);
      for (int t = 2; t < k; ++t)
        cand[t] = (t % 2 == 0) == !swapped ? c1 : c2;
      if (try_candidate(cand, "degenerate-explicit")) return;
    }
    for (int i = 1; i < k; ++i)
      for (int swapped = 0; swapped < 2; ++swapped)
        if (recolor_candidates(i, swapped, "degenerate-recolor-sweep"))
          return;
  }
  throw ContractError("good_cycle: all candidates failed");
}

void extend_any(const Graph& g, const ListAssignment& L,
                const ReductionStep& s, Coloring& f, ExtendObserver* obs) {
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, PendantStep>)
          extend_pendant(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, Deg2PathStep>)
          extend_deg2_path(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, SpecialPathStep>)
          extend_special_path(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, EyeglassStep>)
          extend_eyeglass(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, C4BridgeStep>)
          extend_c4_bridge(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, TriangleStep>)
          extend_triangle(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, C4WithDeg2Step>)
          extend_c4_with_deg2(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, C4NearDeg2Step>)
          extend_c4_near_deg2(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, C5WithDeg2Step>)
          extend_c5_with_deg2(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, CubicTailStep>)
          extend_cubic_tail(g, L, st, f, obs);
        else if constexpr (std::is_same_v<T, K23Step>)
          extend_k23(g, L, st, f, obs);
        else
          extend_good_cycle(g, L, st, f, obs);
      },
      s);
}

}  // namespace slc
