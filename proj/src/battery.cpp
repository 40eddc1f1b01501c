#include "slc/battery.hpp"

#include <algorithm>

#include "slc/coloring.hpp"

namespace slc {

namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

ListAssignment uniform_lists(int n) {
  return ListAssignment::identical(n, {1, 2, 3, 4});
}

void verify(const Graph& g, const ListAssignment& L, const Coloring& f,
            const char* what) {
  auto v = check_superlinear(g, L, f);
  if (v.kind != Violation::kNone)
    throw ContractError(std::string("battery fixture not superlinear: ") +
                        what + ": " + v.describe());
}

void pendant_fixtures(BranchCoverage* cov) {
  {  // isolated vertex
    Graph g(1, {});
    auto L = uniform_lists(1);
    Coloring f(1);
    PendantStep st;
    st.v = 0;
    extend_pendant(g, L, st, f, cov);
    verify(g, L, f, "pendant isolated");
  }
  {  // leaf
    Graph g(2, {{0, 1}});
    auto L = uniform_lists(2);
    Coloring f(2);
    f.set(1, 1);
    PendantStep st;
    st.v = 0;
    st.u = 1;
    extend_pendant(g, L, st, f, cov);
    verify(g, L, f, "pendant leaf");
  }
  // Pendant on a 5-cycle: plain coloring when some list differs, relaxed at
  // the attachment when all five are identical.
  for (int relaxed = 0; relaxed < 2; ++relaxed) {
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}};
    Graph g(6, e);
    auto L = uniform_lists(6);
    if (!relaxed) L.set(2, {1, 2, 3, 5});
    Coloring f(6);
    PendantStep st;
    st.v = 5;
    st.u = 0;
    st.c5s.push_back(RemovedC5{{0, 1, 2, 3, 4}, 0});
    extend_pendant(g, L, st, f, cov);
    if (relaxed)
      verify(g, L, f, "pendant relaxed 5-cycle");
    else
      verify(g, L, f, "pendant plain 5-cycle");
  }
}

void deg2_path_fixtures(BranchCoverage* cov) {
  {  // plain path between two attachments
    Edges e{{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {3, 7}};
    Graph g(8, e);
    auto L = uniform_lists(8);
    Coloring f(8);
    f.set(0, 1);
    f.set(3, 2);
    f.set(4, 2);
    f.set(5, 3);
    f.set(6, 1);
    f.set(7, 3);
    Deg2PathStep st;
    st.path = {1, 2};
    st.u1 = 0;
    st.uk = 3;
    extend_deg2_path(g, L, st, f, cov);
    verify(g, L, f, "deg2 path base");
  }
  {  // both ends on the same attachment (the re-seeded 5-cycle interior)
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}};
    Graph g(6, e);
    auto L = uniform_lists(6);
    Coloring f(6);
    f.set(0, 1);
    f.set(5, 2);
    Deg2PathStep st;
    st.path = {1, 2, 3, 4};
    st.u1 = 0;
    st.uk = 0;
    extend_deg2_path(g, L, st, f, cov);
    verify(g, L, f, "deg2 path loop");
  }
  {  // path whose deletion isolated a relaxed 5-cycle at u1
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},   // 5-cycle
            {0, 5}, {5, 6}, {6, 7}, {7, 8}, {7, 9}};  // path 5,6 then blob
    Graph g(10, e);
    auto L = uniform_lists(10);
    Coloring f(10);
    f.set(7, 1);
    f.set(8, 2);
    f.set(9, 3);
    Deg2PathStep st;
    st.path = {5, 6};
    st.u1 = 0;
    st.uk = 7;
    st.c5s.push_back(RemovedC5{{0, 1, 2, 3, 4}, 0});
    extend_deg2_path(g, L, st, f, cov);
    verify(g, L, f, "deg2 path with relaxed 5-cycle");
  }
}

void special_path_fixtures(BranchCoverage* cov) {
  // Distance-2 pair; 0 - 1 - 2 path; u1 = 3 (leaves 9, 10), u2 = 4, u3 = 5.
  struct Case {
    Color u1, l9, l10, u2, l11, l12, u3, l13, l14;
    const char* name;
  };
  for (auto cs : {Case{1, 2, 3, 1, 2, 4, 2, 3, 4, "special path distinct"},
                  Case{1, 3, 4, 2, 1, 3, 3, 1, 4, "special path joint"}}) {
    Edges e{{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5},
            {3, 6}, {3, 7}, {4, 8}, {4, 9}, {5, 10}, {5, 11}};
    Graph g(12, e);
    auto L = uniform_lists(12);
    Coloring f(12);
    f.set(3, cs.u1);
    f.set(6, cs.l9);
    f.set(7, cs.l10);
    f.set(4, cs.u2);
    f.set(8, cs.l11);
    f.set(9, cs.l12);
    f.set(5, cs.u3);
    f.set(10, cs.l13);
    f.set(11, cs.l14);
    SpecialPathStep st;
    st.path = {0, 1, 2};
    st.us = {3, 4, 5};
    st.xs = {-1, -1, -1};
    extend_special_path(g, L, st, f, cov);
    verify(g, L, f, cs.name);
  }
  {  // the local-search corner: f(v2) pinned to f(u1) by the greedy
    Edges e{{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5},
            {3, 6}, {3, 7}, {4, 8}, {4, 9}, {5, 10}, {5, 11}};
    Graph g(12, e);
    auto L = uniform_lists(12);
    Coloring f(12);
    f.set(3, 1);
    f.set(6, 2);
    f.set(7, 3);
    f.set(4, 2);
    f.set(8, 1);
    f.set(9, 3);
    f.set(5, 3);
    f.set(10, 1);
    f.set(11, 2);
    SpecialPathStep st;
    st.path = {0, 1, 2};
    st.us = {3, 4, 5};
    st.xs = {-1, -1, -1};
    extend_special_path(g, L, st, f, cov);
    verify(g, L, f, "special path local search");
  }
  {  // interior pendant x_2 present
    Edges e{{0, 1}, {1, 2}, {0, 3}, {2, 5}, {1, 6}, {6, 4},
            {3, 7}, {3, 8}, {4, 9}, {4, 10}, {5, 11}, {5, 12}};
    Graph g(13, e);
    auto L = uniform_lists(13);
    Coloring f(13);
    f.set(3, 1);
    f.set(7, 3);
    f.set(8, 4);
    f.set(4, 2);
    f.set(9, 1);
    f.set(10, 3);
    f.set(5, 3);
    f.set(11, 1);
    f.set(12, 4);
    SpecialPathStep st;
    st.path = {0, 1, 2};
    st.us = {3, 4, 5};
    st.xs = {-1, 6, -1};
    extend_special_path(g, L, st, f, cov);
    verify(g, L, f, "special path with pendant");
  }
}

void eyeglass_fixture(BranchCoverage* cov) {
  Edges e{{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 2}, {5, 3}, {5, 1},
          {4, 6}, {5, 7}};
  Graph g(8, e);
  auto L = uniform_lists(8);
  Coloring f(8);
  f.set(4, 1);
  f.set(5, 2);
  f.set(6, 3);
  f.set(7, 3);
  EyeglassStep st;
  st.path = {0, 1, 2, 3};
  st.u1 = 4;
  st.u4 = 5;
  extend_eyeglass(g, L, st, f, cov);
  verify(g, L, f, "eyeglass");
}

void c4_bridge_fixtures(BranchCoverage* cov) {
  // Path 0..4, w3 = 5 adjacent to 1 and 3, x = 6; attachments u1 = 7,
  // u3 = 8, u5 = 9; pads 10.. keep degrees at three.
  auto build = [&](Graph& g) {
    Edges e{{0, 1},  {1, 2},  {2, 3},  {3, 4},  {5, 1},  {5, 3},
            {5, 6},  {0, 7},  {2, 8},  {4, 9},  {6, 10}, {6, 11},
            {7, 12}, {7, 13}, {8, 14}, {8, 15}, {9, 16}, {9, 17}};
    g = Graph(18, e);
  };
  auto set_pads = [](Coloring& f, Color p10, Color p11, Color p12, Color p13,
                     Color p14, Color p15, Color p16, Color p17) {
    f.set(10, p10);
    f.set(11, p11);
    f.set(12, p12);
    f.set(13, p13);
    f.set(14, p14);
    f.set(15, p15);
    f.set(16, p16);
    f.set(17, p17);
  };
  {  // case 1: the two side lists share a color
    Graph g;
    build(g);
    auto L = uniform_lists(18);
    Coloring f(18);
    f.set(7, 1);
    f.set(8, 2);
    f.set(9, 1);
    f.set(6, 3);
    set_pads(f, 1, 2, 2, 3, 1, 3, 2, 3);
    C4BridgeStep st;
    st.path = {0, 1, 2, 3, 4};
    st.w3 = 5;
    st.x = 6;
    st.u1 = 7;
    st.u3 = 8;
    st.u5 = 9;
    extend_c4_bridge(g, L, st, f, cov);
    verify(g, L, f, "c4 bridge case 1");
  }
  for (int mirrored = 0; mirrored < 2; ++mirrored) {  // case 2
    Graph g;
    build(g);
    auto L = uniform_lists(18);
    L.set(4, {4, 5, 6, 7});  // v5
    L.set(3, {4, 5, 6, 7});  // B = L(v4) - {f(u5), f(x)} stays disjoint
    if (mirrored) {
      L.set(2, {4, 5, 6, 7});  // v3's choice lands inside B
      L.set(6, {3, 4, 5, 7});  // x carries color 7
      L.set(9, {2, 3, 4, 6});  // u5 carries color 6
    } else {
      L.set(6, {3, 4, 5, 6});  // x carries color 6
      L.set(9, {2, 3, 4, 5});  // u5 carries color 5
    }
    Coloring f(18);
    f.set(7, 1);                 // u1
    f.set(8, 4);                 // u3
    f.set(9, mirrored ? 6 : 5);  // u5
    f.set(6, mirrored ? 7 : 6);  // x
    set_pads(f, 1, 2, 2, 3, 1, 2, 1, 2);
    C4BridgeStep st;
    st.path = {0, 1, 2, 3, 4};
    st.w3 = 5;
    st.x = 6;
    st.u1 = 7;
    st.u3 = 8;
    st.u5 = 9;
    extend_c4_bridge(g, L, st, f, cov);
    verify(g, L, f, mirrored ? "c4 bridge case 2 mirrored"
                             : "c4 bridge case 2");
  }
}

void triangle_fixtures(BranchCoverage* cov) {
  {  // plain, with one pendant
    Edges e{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {1, 5}, {2, 6},
            {4, 7}, {4, 8}, {5, 9}, {5, 10}, {6, 11}, {6, 12}};
    Graph g(13, e);
    auto L = uniform_lists(13);
    Coloring f(13);
    f.set(4, 1);
    f.set(5, 2);
    f.set(6, 3);
    f.set(7, 2);
    f.set(8, 3);
    f.set(9, 1);
    f.set(10, 3);
    f.set(11, 1);
    f.set(12, 2);
    TriangleStep st;
    st.tri = {0, 1, 2};
    st.xs = {3, -1, -1};
    st.us = {4, 5, 6};
    extend_triangle(g, L, st, f, cov);
    verify(g, L, f, "triangle with pendant");
  }
  {  // merged pendant shared by two triangle corners
    Edges e{{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {2, 4},
            {4, 5}, {4, 6}};
    Graph g(7, e);
    auto L = uniform_lists(7);
    Coloring f(7);
    f.set(4, 1);
    f.set(5, 2);
    f.set(6, 3);
    TriangleStep st;
    st.tri = {0, 1, 2};
    st.xs = {3, 3, -1};
    st.us = {-1, -1, 4};
    extend_triangle(g, L, st, f, cov);
    verify(g, L, f, "triangle merged pendant");
  }
}

void c4_fixtures(BranchCoverage* cov) {
  {  // 4-cycle containing a degree-2 vertex, u2 == u4
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 1}, {4, 3}, {2, 5},
            {4, 6}, {5, 7}, {5, 8}};
    Graph g(9, e);
    auto L = uniform_lists(9);
    Coloring f(9);
    f.set(4, 1);
    f.set(5, 2);
    f.set(6, 2);
    f.set(7, 1);
    f.set(8, 3);
    C4WithDeg2Step st;
    st.cyc = {0, 1, 2, 3};
    st.us = {-1, 4, 5, 4};
    extend_c4_with_deg2(g, L, st, f, cov);
    verify(g, L, f, "c4 containing degree-2, shared");
  }
  {  // distinct attachments
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 5}, {3, 6},
            {4, 7}, {4, 8}, {5, 9}, {5, 10}, {6, 11}, {6, 12}};
    Graph g(13, e);
    auto L = uniform_lists(13);
    Coloring f(13);
    f.set(4, 1);
    f.set(5, 2);
    f.set(6, 3);
    f.set(7, 2);
    f.set(8, 3);
    f.set(9, 1);
    f.set(10, 3);
    f.set(11, 1);
    f.set(12, 2);
    C4WithDeg2Step st;
    st.cyc = {0, 1, 2, 3};
    st.us = {-1, 4, 5, 6};
    extend_c4_with_deg2(g, L, st, f, cov);
    verify(g, L, f, "c4 containing degree-2");
  }
  {  // 4-cycle adjacent to a degree-2 vertex
    Edges e{{8, 0},  {0, 1},  {1, 2},  {2, 3},  {3, 0},  {8, 4},
            {1, 5},  {2, 6},  {3, 7},  {4, 9},  {4, 10}, {5, 11},
            {5, 12}, {6, 13}, {6, 14}, {7, 15}, {7, 16}};
    Graph g(17, e);
    auto L = uniform_lists(17);
    Coloring f(17);
    f.set(4, 1);
    f.set(5, 2);
    f.set(6, 3);
    f.set(7, 4);
    f.set(9, 2);
    f.set(10, 3);
    f.set(11, 1);
    f.set(12, 3);
    f.set(13, 1);
    f.set(14, 2);
    f.set(15, 1);
    f.set(16, 2);
    C4NearDeg2Step st;
    st.v = 8;
    st.cyc = {0, 1, 2, 3};
    st.us = {4, 5, 6, 7};
    extend_c4_near_deg2(g, L, st, f, cov);
    verify(g, L, f, "c4 adjacent to degree-2");
  }
}

void c5_with_deg2_fixture(BranchCoverage* cov) {
  Edges e{{0, 1},  {1, 2},  {2, 3},  {3, 4},  {4, 0},  {1, 5},  {2, 6},
          {3, 7},  {4, 8},  {5, 9},  {5, 10}, {6, 11}, {6, 12}, {7, 13},
          {7, 14}, {8, 15}, {8, 16}};
  Graph g(17, e);
  auto L = uniform_lists(17);
  Coloring f(17);
  f.set(5, 1);
  f.set(6, 2);
  f.set(7, 3);
  f.set(8, 4);
  f.set(9, 2);
  f.set(10, 3);
  f.set(11, 1);
  f.set(12, 3);
  f.set(13, 1);
  f.set(14, 2);
  f.set(15, 1);
  f.set(16, 2);
  C5WithDeg2Step st;
  st.cyc = {0, 1, 2, 3, 4};
  st.us = {-1, 5, 6, 7, 8};
  extend_c5_with_deg2(g, L, st, f, cov);
  verify(g, L, f, "c5 containing degree-2");
}

void cubic_tail_fixtures(BranchCoverage* cov) {
  // Path 0-1-2-3, deg(3) = 2; u1 = 4, w = 5, u2 = 6, u3 = 7, u4 = 8.
  auto build = [&](Graph& g) {
    Edges e{{0, 1},  {1, 2},  {2, 3},  {0, 4},  {0, 5},  {1, 6},
            {2, 7},  {3, 8},  {4, 9},  {4, 10}, {5, 11}, {5, 12},
            {6, 13}, {6, 14}, {7, 15}, {7, 16}, {8, 17}, {8, 18}};
    g = Graph(19, e);
  };
  struct Case {
    Color u1, w, u2, u3, wpad1, wpad2;
    const char* name;
  };
  // Branches: u1 != w; u1 == w with f(v1) == f(u2); then the two inner
  // choices on f(v2) vs f(u3).
  for (auto cs : {Case{1, 2, 3, 4, 1, 3, "tail branch ne"},
                  Case{1, 1, 4, 2, 2, 3, "tail branch eq-u2"},
                  Case{1, 1, 2, 4, 2, 3, "tail branch eq-v2u3"},
                  Case{1, 1, 2, 3, 2, 3, "tail branch plain"}}) {
    Graph g;
    build(g);
    auto L = uniform_lists(19);
    Coloring f(19);
    f.set(4, cs.u1);
    f.set(5, cs.w);
    f.set(6, cs.u2);
    f.set(7, cs.u3);
    f.set(8, 1);
    f.set(11, cs.wpad1);
    f.set(12, cs.wpad2);
    f.set(9, 2);
    f.set(10, 3);
    auto pads = [&](Vertex parent, Vertex l1, Vertex l2) {
      Color c = f.at(parent);
      Color a = c == 1 ? 2 : 1;
      Color b = (c == 3 || a == 3) ? 4 : 3;
      f.set(l1, a);
      f.set(l2, b);
    };
    pads(6, 13, 14);
    pads(7, 15, 16);
    pads(8, 17, 18);
    CubicTailStep st;
    st.path = {0, 1, 2, 3};
    st.us = {4, 6, 7, 8};
    st.w = 5;
    extend_cubic_tail(g, L, st, f, cov);
    verify(g, L, f, cs.name);
  }
}

void k23_fixtures(BranchCoverage* cov) {
  {  // case (a): u1, u2 share the extra neighbor v3
    Edges e{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
            {5, 2}, {5, 3}, {5, 7}, {4, 6}, {6, 8}, {6, 9},
            {7, 10}, {7, 11}};
    Graph g(12, e);
    for (int joint = 0; joint < 2; ++joint) {
      auto L = uniform_lists(12);
      Coloring f(12);
      if (joint) {
        L.set(5, {2, 4, 5, 6});
        L.set(1, {2, 3, 4, 5});
        L.set(8, {2, 3, 5, 6});
        L.set(9, {2, 3, 5, 6});
        L.set(10, {2, 3, 5, 6});
        L.set(11, {2, 3, 5, 6});
        f.set(6, 3);
        f.set(7, 4);
        f.set(8, 5);
        f.set(9, 6);
        f.set(10, 5);
        f.set(11, 6);
      } else {
        f.set(6, 1);
        f.set(7, 1);
        f.set(8, 2);
        f.set(9, 3);
        f.set(10, 2);
        f.set(11, 3);
      }
      K23Step st;
      st.v1 = 0;
      st.v2 = 1;
      st.us = {2, 3, 4};
      st.v3 = 5;
      st.x = 6;
      st.y = 7;
      extend_k23(g, L, st, f, cov);
      verify(g, L, f, joint ? "k23 case a joint" : "k23 case a distinct");
    }
  }
  {  // case (b)
    Edges e{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
            {2, 5}, {3, 6}, {4, 7}, {5, 8}, {5, 9}, {6, 10},
            {6, 11}, {7, 12}, {7, 13}};
    Graph g(14, e);
    for (int nopref = 0; nopref < 2; ++nopref) {
      auto L = uniform_lists(14);
      Coloring f(14);
      f.set(5, 1);
      f.set(6, 1);
      f.set(7, nopref ? 5 : 1);
      if (nopref) {
        L.set(4, {1, 2, 3, 5});
        L.set(7, {2, 3, 4, 5});
      }
      f.set(8, 2);
      f.set(9, 3);
      f.set(10, 2);
      f.set(11, 3);
      f.set(12, 2);
      f.set(13, 3);
      K23Step st;
      st.v1 = 0;
      st.v2 = 1;
      st.us = {2, 3, 4};
      st.abc = {5, 6, 7};
      extend_k23(g, L, st, f, cov);
      verify(g, L, f, nopref ? "k23 case b forced" : "k23 case b preferred");
    }
  }
}

// Good-cycle fixtures: C6 with spokes whose colors make every derived list
// equal to {1,2}.
void good_cycle_fixtures(BranchCoverage* cov) {
  {  // non-degenerate: the L+ route (one spoke color breaks the pattern)
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
            {0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11},
            {6, 12}, {6, 13}, {7, 14}, {7, 15}, {8, 16}, {8, 17},
            {9, 18}, {9, 19}, {10, 20}, {10, 21}, {11, 22}, {11, 23}};
    Graph g(24, e);
    auto L = uniform_lists(24);
    Coloring f(24);
    for (int i = 0; i < 6; ++i) {
      f.set(6 + i, (Color)(1 + (i % 2)));
      f.set(12 + 2 * i, 3);
      f.set(13 + 2 * i, 4);
    }
    f.set(11, 3);  // u5
    f.set(22, 1);
    f.set(23, 4);
    GoodCycleStep st;
    st.cycle = {0, 1, 2, 3, 4, 5};
    st.us = {6, 7, 8, 9, 10, 11};
    extend_good_cycle(g, L, st, f, cov);
    verify(g, L, f, "good cycle derived-list route");
  }
  {  // degenerate, single recolored vertex suffices
    Edges e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
            {0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11},
            {6, 12}, {6, 13}, {7, 14}, {7, 15}, {8, 16}, {8, 17},
            {9, 18}, {9, 19}, {10, 20}, {10, 21}, {11, 22}, {11, 23}};
    Graph g(24, e);
    auto L = uniform_lists(24);
    Coloring f(24);
    for (int i = 0; i < 6; ++i) {
      f.set(6 + i, (Color)(3 + (i % 2)));  // alternating 3,4
      f.set(12 + 2 * i, 1);
      f.set(13 + 2 * i, 2);
    }
    GoodCycleStep st;
    st.cycle = {0, 1, 2, 3, 4, 5};
    st.us = {6, 7, 8, 9, 10, 11};
    extend_good_cycle(g, L, st, f, cov);
    verify(g, L, f, "good cycle degenerate recolor");
  }
  {
    // Degenerate with both i=0 recolorings trapped in a two-colored cycle
    // through rails behind u1 and u5, so the explicit pattern fires.
    // C6: 0..5; spokes u_i = 6+i; rails x1=12 x5=13 (color 2),
    // y1=14 y5=15 (color 1), mids m=16 m'=17 (color 4), leaves 18..23,
    // plain leaf pairs for u0,u2,u3,u4: 24..31.
    Edges e{{0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 0},
            {0, 6},   {1, 7},   {2, 8},   {3, 9},   {4, 10},  {5, 11},
            {7, 12},  {7, 14},  {11, 13}, {11, 15}, {16, 12}, {16, 13},
            {16, 22}, {17, 14}, {17, 15}, {17, 23}, {12, 18}, {13, 19},
            {14, 20}, {15, 21}, {6, 24},  {6, 25},  {8, 26},  {8, 27},
            {9, 28},  {9, 29},  {10, 30}, {10, 31}};
    Graph g(32, e);
    auto L = uniform_lists(32);
    Coloring f(32);
    Color ucol[6] = {3, 4, 3, 4, 3, 4};
    for (int i = 0; i < 6; ++i) f.set(6 + i, ucol[i]);
    f.set(12, 2);
    f.set(13, 2);
    f.set(14, 1);
    f.set(15, 1);
    f.set(16, 4);
    f.set(17, 4);
    f.set(18, 1);
    f.set(19, 1);
    f.set(20, 2);
    f.set(21, 2);
    f.set(22, 1);
    f.set(23, 2);
    Color leafpair[2] = {1, 2};
    for (int b = 24; b < 32; b += 2) {
      f.set(b, leafpair[0]);
      f.set(b + 1, leafpair[1]);
    }
    GoodCycleStep st;
    st.cycle = {0, 1, 2, 3, 4, 5};
    st.us = {6, 7, 8, 9, 10, 11};
    extend_good_cycle(g, L, st, f, cov);
    verify(g, L, f, "good cycle degenerate explicit");
  }
}

}  // namespace

void run_planted_battery(BranchCoverage* cov) {
  BranchCoverage local;
  BranchCoverage* use = cov ? cov : &local;
  pendant_fixtures(use);
  deg2_path_fixtures(use);
  special_path_fixtures(use);
  eyeglass_fixture(use);
  c4_bridge_fixtures(use);
  triangle_fixtures(use);
  c4_fixtures(use);
  c5_with_deg2_fixture(use);
  cubic_tail_fixtures(use);
  k23_fixtures(use);
  good_cycle_fixtures(use);
}

}  // namespace slc
