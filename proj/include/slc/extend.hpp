#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "slc/coloring.hpp"
#include "slc/graph.hpp"

namespace slc {

// Observer for extension recipes: per-choice trace and per-branch counters.
struct ExtendObserver {
  virtual ~ExtendObserver() = default;
  virtual void on_choice(std::string_view /*step*/, Vertex /*v*/,
                         const ForbiddenSet& /*forbidden*/,
                         Color /*chosen*/) {}
  virtual void on_branch(std::string_view /*step*/,
                         std::string_view /*branch*/) {}
};

// Serializes choices as `step=<variant> vertex=<id> forbidden={...}
// chose=<color>` lines.
struct TraceWriter : ExtendObserver {
  std::ostream* out;
  explicit TraceWriter(std::ostream* o) : out(o) {}
  void on_choice(std::string_view step, Vertex v, const ForbiddenSet& forbid,
                 Color chosen) override;
};

struct BranchCoverage : ExtendObserver {
  std::map<std::string, uint64_t, std::less<>> hits;
  void on_branch(std::string_view step, std::string_view branch) override {
    ++hits[std::string(step) + ":" + std::string(branch)];
  }
  void merge(const BranchCoverage& o) {
    for (const auto& [k, n] : o.hits) hits[k] += n;
  }
};

// A 5-cycle component removed together with a step's deleted set. Colored at
// unwind time: plainly when the lists allow it, otherwise relaxed at
// `anchor` (anchor < 0 demands a plain coloring).
struct RemovedC5 {
  std::array<Vertex, 5> cycle;
  Vertex anchor = -1;
};

// --- Reduction step variants. Each stores the named vertices its recipe
// reads; -1 marks an undefined name, whose color reads as kNoColor.

struct PendantStep {
  Vertex v = -1;
  Vertex u = -1;  // -1 when v was isolated
  std::vector<RemovedC5> c5s;
};

// Maximal induced path of degree-2 vertices; u1/uk are the outside
// attachments of the endpoints (possibly equal, possibly -1 for a path
// component).
struct Deg2PathStep {
  std::vector<Vertex> path;
  Vertex u1 = -1, uk = -1;
  std::vector<RemovedC5> c5s;
};

// Special path v1..vk: endpoints degree 2, interior degree 3; xs[i] is the
// degree-2 pendant between v_i and u_i when present.
struct SpecialPathStep {
  std::vector<Vertex> path;
  std::vector<Vertex> us;
  std::vector<Vertex> xs;
  std::vector<RemovedC5> c5s;
};

// Induced P4 with degree-2 endpoints whose outside attachments cross back:
// u1 adjacent to v3 and u4 adjacent to v2.
struct EyeglassStep {
  std::array<Vertex, 4> path{};
  Vertex u1 = -1, u4 = -1;
};

// Induced P5 with degree-2 endpoints where v2 and v4 share the second
// common neighbor w3 (so v2-v3-v4-w3 is a 4-cycle); x is w3's third
// neighbor.
struct C4BridgeStep {
  std::array<Vertex, 5> path{};
  Vertex w3 = -1, x = -1;
  Vertex u1 = -1, u3 = -1, u5 = -1;
  std::vector<RemovedC5> c5s;
};

// Triangle v1v2v3 plus its degree-2 pendants xs. A pendant shared by two
// triangle vertices appears at both positions (merged); its u entries are
// then -1.
struct TriangleStep {
  std::array<Vertex, 3> tri{};
  std::array<Vertex, 3> xs{-1, -1, -1};
  std::array<Vertex, 3> us{-1, -1, -1};
};

// Induced 4-cycle v1..v4 with deg(v1) == 2; us[i] is v_{i+1}'s outside
// neighbor for i >= 1.
struct C4WithDeg2Step {
  std::array<Vertex, 4> cyc{};
  std::array<Vertex, 4> us{-1, -1, -1, -1};
};

// Induced 4-cycle (all degree 3) plus an adjacent degree-2 vertex v; u1 is
// v's other neighbor.
struct C4NearDeg2Step {
  Vertex v = -1;
  std::array<Vertex, 4> cyc{};
  std::array<Vertex, 4> us{-1, -1, -1, -1};
};

// Induced 5-cycle v1..v5 with deg(v1) == 2.
struct C5WithDeg2Step {
  std::array<Vertex, 5> cyc{};
  std::array<Vertex, 5> us{-1, -1, -1, -1, -1};
};

// Induced path v1v2v3v4 ending at a degree-2 vertex v4 in an otherwise
// cubic neighborhood; u1/w are v1's two outside neighbors.
struct CubicTailStep {
  std::array<Vertex, 4> path{};
  std::array<Vertex, 4> us{-1, -1, -1, -1};
  Vertex w = -1;
};

// Induced K2,3 with centers v1,v2 and sides u1,u2,u3. Case (a): u1 and u2
// share the extra neighbor v3 (x = u3's outside neighbor, y = v3's).
// Case (b): v3 < 0 and a,b,c are the outside neighbors of u1,u2,u3.
struct K23Step {
  Vertex v1 = -1, v2 = -1;
  std::array<Vertex, 3> us{-1, -1, -1};
  Vertex v3 = -1, x = -1, y = -1;
  std::array<Vertex, 3> abc{-1, -1, -1};
};

// Induced good cycle: no outside vertex has two or more neighbors on it;
// us[i] is the unique outside neighbor of cycle[i]. `comp` is the whole
// component, used to verify each candidate of the extension ladder.
struct GoodCycleStep {
  std::vector<Vertex> cycle;
  std::vector<Vertex> us;
  VertexSet comp;
};

using ReductionStep =
    std::variant<PendantStep, Deg2PathStep, SpecialPathStep, EyeglassStep,
                 C4BridgeStep, TriangleStep, C4WithDeg2Step, C4NearDeg2Step,
                 C5WithDeg2Step, CubicTailStep, K23Step, GoodCycleStep>;

const char* step_name(const ReductionStep& s);

// --- Structural validators. Precondition: the step's vertices (and removed
// 5-cycles) are alive. Return false when the configuration does not match
// the recipe's requirements; the driver then tries another candidate.

bool validate_step(const Graph& g, const PendantStep& s);
bool validate_step(const Graph& g, const Deg2PathStep& s);
bool validate_step(const Graph& g, const SpecialPathStep& s);
bool validate_step(const Graph& g, const EyeglassStep& s);
bool validate_step(const Graph& g, const C4BridgeStep& s);
bool validate_step(const Graph& g, const TriangleStep& s);
bool validate_step(const Graph& g, const C4WithDeg2Step& s);
bool validate_step(const Graph& g, const C4NearDeg2Step& s);
bool validate_step(const Graph& g, const C5WithDeg2Step& s);
bool validate_step(const Graph& g, const CubicTailStep& s);
bool validate_step(const Graph& g, const K23Step& s);
bool validate_step(const Graph& g, const GoodCycleStep& s);
bool validate_any(const Graph& g, const ReductionStep& s);

// --- Extension recipes. Precondition: the step's deleted set and removed
// 5-cycles are alive again, f is a superlinear coloring of everything else
// in their component(s) (relaxed colorings of the removed 5-cycles are
// produced here). Each extends f over the deleted vertices; a forbidden set
// exhausting a list throws ContractError with a diagnostic trace.

void extend_pendant(const Graph& g, const ListAssignment& L,
                    const PendantStep& s, Coloring& f,
                    ExtendObserver* obs = nullptr);
void extend_deg2_path(const Graph& g, const ListAssignment& L,
                      const Deg2PathStep& s, Coloring& f,
                      ExtendObserver* obs = nullptr);
void extend_special_path(const Graph& g, const ListAssignment& L,
                         const SpecialPathStep& s, Coloring& f,
                         ExtendObserver* obs = nullptr);
void extend_eyeglass(const Graph& g, const ListAssignment& L,
                     const EyeglassStep& s, Coloring& f,
                     ExtendObserver* obs = nullptr);
void extend_c4_bridge(const Graph& g, const ListAssignment& L,
                      const C4BridgeStep& s, Coloring& f,
                      ExtendObserver* obs = nullptr);
void extend_triangle(const Graph& g, const ListAssignment& L,
                     const TriangleStep& s, Coloring& f,
                     ExtendObserver* obs = nullptr);
void extend_c4_with_deg2(const Graph& g, const ListAssignment& L,
                         const C4WithDeg2Step& s, Coloring& f,
                         ExtendObserver* obs = nullptr);
void extend_c4_near_deg2(const Graph& g, const ListAssignment& L,
                         const C4NearDeg2Step& s, Coloring& f,
                         ExtendObserver* obs = nullptr);
void extend_c5_with_deg2(const Graph& g, const ListAssignment& L,
                         const C5WithDeg2Step& s, Coloring& f,
                         ExtendObserver* obs = nullptr);
void extend_cubic_tail(const Graph& g, const ListAssignment& L,
                       const CubicTailStep& s, Coloring& f,
                       ExtendObserver* obs = nullptr);
void extend_k23(const Graph& g, const ListAssignment& L, const K23Step& s,
                Coloring& f, ExtendObserver* obs = nullptr);
// Candidate ladder; every candidate is checked with the full verifier on the
// component before acceptance.
void extend_good_cycle(const Graph& g, const ListAssignment& L,
                       const GoodCycleStep& s, Coloring& f,
                       ExtendObserver* obs = nullptr);

// Dispatch on the variant.
void extend_any(const Graph& g, const ListAssignment& L,
                const ReductionStep& s, Coloring& f,
                ExtendObserver* obs = nullptr);

// Colors a batch of removed 5-cycles: plain when feasible, otherwise
// relaxed at the recorded anchor.
void color_removed_c5s(const Graph& g, const ListAssignment& L,
                       const std::vector<RemovedC5>& c5s, Coloring& f,
                       std::string_view step, ExtendObserver* obs);

}  // namespace slc
