#include "slc/cyclecolor.hpp"

#include <algorithm>
#include <cassert>

#include "slc/oracle.hpp"

namespace slc {

void CycleInstance::validate(const Graph& g) const {
  int n = k();
  if (n < 3) throw ContractError("cycle has fewer than three vertices");
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (!g.valid(v) || !g.alive(v)) throw ContractError("cycle: dead vertex");
    if (!g.adjacent(v, order[(i + 1) % n]))
      throw ContractError("cycle: consecutive vertices not adjacent");
    for (int j = i + 1; j < n; ++j)
      if (order[j] == v) throw ContractError("cycle: repeated vertex");
  }
}

namespace {

// Squared-cycle DP for one seed pair (c0, c1). On success fills `out` along
// the cycle and returns true.
bool squared_cycle_dp(const CycleInstance& c, const ListAssignment& L,
                      Color c0, Color c1, Coloring& out) {
  int k = c.k();
  auto list_at = [&](int i) -> const std::array<Color, kListSize>& {
    return L.list(c.order[i]);
  };
  if (k == 3) {
    for (Color c2 : list_at(2)) {
      if (c2 != c0 && c2 != c1) {
        out.set(c.order[0], c0);
        out.set(c.order[1], c1);
        out.set(c.order[2], c2);
        return true;
      }
    }
    return false;
  }
  // reach[i] bit (a*4+b): colors (list_at(i-1)[a], list_at(i)[b]) feasible
  // for the prefix; 16 states per position.
  std::vector<uint16_t> reach(k, 0);
  auto bit = [](int a, int b) { return (uint16_t)(1u << (a * 4 + b)); };
  int i1 = -1;
  for (int b = 0; b < kListSize; ++b)
    if (list_at(1)[b] == c1) i1 = b;
  int i0 = -1;
  for (int a = 0; a < kListSize; ++a)
    if (list_at(0)[a] == c0) i0 = a;
  assert(i0 >= 0 && i1 >= 0);
  reach[1] = bit(i0, i1);
  for (int i = 2; i < k; ++i) {
    uint16_t cur = 0;
    for (int a = 0; a < kListSize; ++a) {
      for (int b = 0; b < kListSize; ++b) {
        if (!(reach[i - 1] & bit(a, b))) continue;
        Color ca = list_at(i - 2)[a], cb = list_at(i - 1)[b];
        for (int t = 0; t < kListSize; ++t) {
          Color ct = list_at(i)[t];
          if (ct != ca && ct != cb) cur |= bit(b, t);
        }
      }
    }
    reach[i] = cur;
    if (!cur) return false;
  }
  // Closure: last color differs from c0 and c1; second-to-last differs
  // from c0.
  int accept_a = -1, accept_b = -1;
  for (int a = 0; a < kListSize && accept_a < 0; ++a) {
    for (int b = 0; b < kListSize; ++b) {
      if (!(reach[k - 1] & bit(a, b))) continue;
      Color ca = list_at(k - 2)[a], cb = list_at(k - 1)[b];
      if (cb != c0 && cb != c1 && ca != c0) {
        accept_a = a;
        accept_b = b;
        break;
      }
    }
  }
  if (accept_a < 0) return false;
  // Reconstruct backwards.
  std::vector<int> pick(k);
  pick[k - 1] = accept_b;
  pick[k - 2] = accept_a;
  for (int i = k - 2; i >= 2; --i) {
    int found = -1;
    for (int a = 0; a < kListSize && found < 0; ++a) {
      if (!(reach[i] & bit(a, pick[i]))) continue;
      // (a, pick[i]) must transition into (pick[i], pick[i+1]).
      Color ca = list_at(i - 1)[a];
      Color ct = list_at(i + 1)[pick[i + 1]];
      if (ct != ca && ct != list_at(i)[pick[i]]) found = a;
    }
    if (found < 0) return false;  // unreachable by construction
    pick[i - 1] = found;
  }
  out.set(c.order[0], c0);
  out.set(c.order[1], c1);
  for (int i = 2; i < k; ++i) out.set(c.order[i], list_at(i)[pick[i]]);
  return true;
}

bool lists_identical_on_cycle(const CycleInstance& c, const ListAssignment& L) {
  for (int i = 1; i < c.k(); ++i)
    if (L.list(c.order[i]) != L.list(c.order[0])) return false;
  return true;
}

std::optional<Coloring> try_cycle_component(const CycleInstance& c,
                                            const ListAssignment& L) {
  for (Color c0 : L.list(c.order[0])) {
    for (Color c1 : L.list(c.order[1])) {
      if (c0 == c1) continue;
      Coloring out((int)L.n());
      if (squared_cycle_dp(c, L, c0, c1, out)) return out;
    }
  }
  return std::nullopt;
}

}  // namespace

Coloring color_cycle_component(const CycleInstance& c,
                               const ListAssignment& L) {
  if (c.k() < 3) throw ContractError("cycle too short");
  if (auto got = try_cycle_component(c, L)) return *got;
  if (c.k() == 5 && lists_identical_on_cycle(c, L))
    throw InfeasibleError("5-cycle with identical lists");
  throw ContractError("cycle coloring unexpectedly infeasible");
}

std::optional<Coloring> color_c5_superlinear(const CycleInstance& c,
                                             const ListAssignment& L) {
  if (c.k() != 5) throw ContractError("color_c5_superlinear: k != 5");
  return try_cycle_component(c, L);
}

std::optional<Coloring> color_cycle_linear(const CycleInstance& c,
                                           const RestrictedLists& lp) {
  int k = c.k();
  std::vector<std::vector<Color>> ls(k);
  for (int i = 0; i < k; ++i) {
    ls[i] = lp.list(c.order[i]);
    std::sort(ls[i].begin(), ls[i].end());
    if (ls[i].size() < 2)
      throw ContractError("color_cycle_linear: list of size below two");
  }
  // Hypothesis: some list of size >= 3, or two different lists.
  int big = -1, unequal = -1;
  for (int i = 0; i < k; ++i) {
    if (ls[i].size() >= 3 && big < 0) big = i;
    if (ls[i] != ls[(i + 1) % k] && unequal < 0) unequal = i;
  }
  if (big < 0 && unequal < 0) return std::nullopt;

  // Rotate so the paper's end conditions hold at position k-1: either
  // |L'(v_k)| >= 3 or L'(v_1) != L'(v_k).
  int last = big >= 0 ? big : unequal;
  auto at = [&](int i) -> const std::vector<Color>& {
    return ls[(last + 1 + i) % k];
  };
  auto vert = [&](int i) { return c.order[(last + 1 + i) % k]; };

  std::vector<Color> f(k, kNoColor);
  // f(v1): a color outside L'(v_k) if possible, smallest such.
  for (Color x : at(0))
    if (std::find(at(k - 1).begin(), at(k - 1).end(), x) == at(k - 1).end()) {
      f[0] = x;
      break;
    }
  if (f[0] == kNoColor) f[0] = at(0)[0];
  for (int i = 1; i < k - 1; ++i) {
    for (Color x : at(i))
      if (x != f[i - 1]) {
        f[i] = x;
        break;
      }
  }
  for (Color x : at(k - 1))
    if (x != f[0] && x != f[k - 2]) {
      f[k - 1] = x;
      break;
    }
  if (f[k - 1] == kNoColor)
    throw ContractError("color_cycle_linear: end list exhausted");
  // Two-colored cycles are the only non-linear outcome on a cycle; repair
  // the last vertex with a third color.
  Color lo = f[0], hi = f[0];
  for (Color x : f) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  bool two_colored = true;
  for (Color x : f) two_colored = two_colored && (x == lo || x == hi);
  if (two_colored && lo != hi) {
    Color repl = kNoColor;
    for (Color x : at(k - 1))
      if (x != f[0] && x != f[k - 3]) {
        repl = x;
        break;
      }
    if (repl == kNoColor)
      throw ContractError("color_cycle_linear: repair exhausted");
    f[k - 1] = repl;
  }
  Coloring out((int)lp.lists.size());
  for (int i = 0; i < k; ++i) out.set(vert(i), f[i]);
  return out;
}

Coloring color_c5_relaxed(const CycleInstance& c, const ListAssignment& L,
                          Vertex anchor) {
  if (c.k() != 5) throw ContractError("color_c5_relaxed: k != 5");
  int p = -1;
  for (int i = 0; i < 5; ++i)
    if (c.order[i] == anchor) p = i;
  if (p < 0) throw ContractError("color_c5_relaxed: anchor outside cycle");
  auto vert = [&](int i) { return c.order[(p + i) % 5]; };
  Vertex n1 = vert(1), n2 = vert(4), x = vert(2), y = vert(3);
  Color common = kNoColor;
  for (Color a : L.list(n1))
    if (L.has(n2, a)) {
      common = a;
      break;
    }
  if (common != kNoColor) {
    Coloring out((int)L.n());
    out.set(n1, common);
    out.set(n2, common);
    auto pick = [&](Vertex v, ForbiddenSet forbid) {
      for (Color cc : L.list(v))
        if (!forbid.contains(cc)) return cc;
      throw ContractError("color_c5_relaxed: list exhausted");
    };
    ForbiddenSet fa;
    fa.add(common);
    Color b = pick(anchor, fa);
    out.set(anchor, b);
    ForbiddenSet fx;
    fx.add(common);
    fx.add(b);
    Color cx = pick(x, fx);
    out.set(x, cx);
    ForbiddenSet fy;
    fy.add(common);
    fy.add(b);
    fy.add(cx);
    out.set(y, pick(y, fy));
    return out;
  }
  // No shared color for the anchor's neighbors: exhaustive relaxed search on
  // the 5-cycle alone.
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  ListAssignment sub;
  sub.universe = L.universe;
  sub.lists.resize(5);
  for (int i = 0; i < 5; ++i) sub.lists[i] = L.list(c.order[i]);
  auto res = solve_relaxed(c5, sub, p, SearchBudget{5, 1'000'000});
  if (!res.found())
    throw ContractError("color_c5_relaxed: no relaxed coloring found");
  Coloring out((int)L.n());
  for (int i = 0; i < 5; ++i) out.set(c.order[i], res.coloring.at(i));
  return out;
}

}  // namespace slc
