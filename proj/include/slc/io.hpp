#pragma once

#include <iosfwd>
#include <string>

#include "slc/coloring.hpp"
#include "slc/graph.hpp"

namespace slc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instance {
  Graph graph;
  ListAssignment lists;
};

// Text format:
//   p subcubic <n> <m> <universe>
//   l <v> <c1> <c2> <c3> <c4>      (one per vertex)
//   e <u> <v>                      (one per edge)
// '#' starts a comment; 0-based vertex ids. Duplicate edges, self-loops,
// degrees above three, malformed lists and counts that disagree with the
// header are all ParseErrors.
Instance parse_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Graph& g,
                    const ListAssignment& L);

// Lines `c <v> <color>`, one per vertex.
Coloring parse_coloring(std::istream& in, int n, int universe);
Coloring read_coloring_file(const std::string& path, int n, int universe);
void write_coloring(std::ostream& out, const Coloring& f);

}  // namespace slc
