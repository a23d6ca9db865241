#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "trifree/graph.hpp"

namespace trifree {

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  g.for_each_edge([&](Vertex u, Vertex v) { out << u << ' ' << v << '\n'; });
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t n = 0, m = 0;
  if (!std::getline(in, line)) throw ArgumentError("edge list: missing header");
  {
    std::istringstream header(line);
    if (!(header >> n >> m)) throw ArgumentError("edge list: header must be \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0)
      throw ArgumentError("edge list: malformed line " + std::to_string(line_no));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m)
    throw ArgumentError("edge list: header announces " + std::to_string(m) + " edges, found " +
                        std::to_string(edges.size()));
  return Graph(n, edges);
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open " + path + " for writing");
  write_edge_list(out, g);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  return read_edge_list(in);
}

}  // namespace trifree
