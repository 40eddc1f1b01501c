#include "slc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace slc {

namespace {

// Strips comments and splits into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long to_long(const std::string& s) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("not a number: " + s);
  }
  if (pos != s.size()) throw ParseError("not a number: " + s);
  return v;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  long n = -1, m = -1, universe = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::array<Color, kListSize>> lists;
  std::vector<uint8_t> have_list;
  while (std::getline(in, line)) {
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError("duplicate header");
      if (tok.size() != 5 || tok[1] != "subcubic")
        throw ParseError("malformed header");
      n = to_long(tok[2]);
      m = to_long(tok[3]);
      universe = to_long(tok[4]);
      if (n < 0 || m < 0 || universe < 1 || universe > 255)
        throw ParseError("bad header values");
      lists.resize(n);
      have_list.assign(n, 0);
      continue;
    }
    if (n < 0) throw ParseError("line before header");
    if (tok[0] == "l") {
      if (tok.size() != 2 + kListSize) throw ParseError("malformed list line");
      long v = to_long(tok[1]);
      if (v < 0 || v >= n) throw ParseError("list vertex out of range");
      if (have_list[v]) throw ParseError("duplicate list line");
      have_list[v] = 1;
      std::array<Color, kListSize> l{};
      for (int i = 0; i < kListSize; ++i) {
        long c = to_long(tok[2 + i]);
        if (c < 0 || c >= universe)
          throw ParseError("list color outside universe");
        l[i] = (Color)c;
      }
      std::sort(l.begin(), l.end());
      for (int i = 1; i < kListSize; ++i)
        if (l[i] == l[i - 1]) throw ParseError("duplicate color in list");
      lists[v] = l;
      continue;
    }
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError("malformed edge line");
      long u = to_long(tok[1]), v = to_long(tok[2]);
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("edge endpoint out of range");
      edges.push_back({(Vertex)u, (Vertex)v});
      continue;
    }
    throw ParseError("unknown line kind: " + tok[0]);
  }
  if (n < 0) throw ParseError("missing header");
  if ((long)edges.size() != m) throw ParseError("edge count mismatch");
  for (int v = 0; v < n; ++v)
    if (!have_list[v]) throw ParseError("missing list line");
  Instance out;
  try {
    out.graph = Graph((int)n, edges);
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
  out.lists.universe = (int)universe;
  out.lists.lists = std::move(lists);
  return out;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Graph& g,
                    const ListAssignment& L) {
  out << "p subcubic " << g.n() << " " << g.m() << " " << L.universe << "\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    out << "l " << v;
    for (Color c : L.list(v)) out << " " << c;
    out << "\n";
  }
  for (Vertex v = 0; v < g.n(); ++v)
    for (int i = 0; i < g.full_degree(v); ++i)
      if (g.nbr(v)[i] > v) out << "e " << v << " " << g.nbr(v)[i] << "\n";
}

Coloring parse_coloring(std::istream& in, int n, int universe) {
  Coloring f(n);
  std::string line;
  while (std::getline(in, line)) {
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] != "c" || tok.size() != 3)
      throw ParseError("malformed coloring line");
    long v = to_long(tok[1]), c = to_long(tok[2]);
    if (v < 0 || v >= n) throw ParseError("coloring vertex out of range");
    if (c < 0 || c >= universe) throw ParseError("color outside universe");
    if (f.at((Vertex)v) != kNoColor)
      throw ParseError("duplicate coloring line");
    f.set((Vertex)v, (Color)c);
  }
  for (Vertex v = 0; v < n; ++v)
    if (f.at(v) == kNoColor) throw ParseError("missing vertex color");
  return f;
}

Coloring read_coloring_file(const std::string& path, int n, int universe) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_coloring(in, n, universe);
}

void write_coloring(std::ostream& out, const Coloring& f) {
  for (Vertex v = 0; v < (Vertex)f.color.size(); ++v)
    out << "c " << v << " " << f.color[v] << "\n";
}

}  // namespace slc
