#include "ncg/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ncg/errors.hpp"

namespace ncg {

namespace {

Vertex parse_vertex(const std::string& token, std::size_t line_no) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != token.size() || token[0] == '-') {
    throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + token + "'");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

void write_graph(std::ostream& out, const OwnedGraph& g) {
  out << "ncg n=" << g.order() << '\n';
  for (const OwnedEdge& e : g.edges()) {
    out << e.a << ' ' << e.b << ' ' << e.owner << '\n';
  }
}

std::string to_edge_list(const OwnedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

OwnedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty graph file");
  ++line_no;
  const std::string prefix = "ncg n=";
  if (line.rfind(prefix, 0) != 0) {
    throw ParseError("missing header 'ncg n=<n>'");
  }
  const Vertex n = parse_vertex(line.substr(prefix.size()), line_no);
  OwnedGraph g(n);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string a, b, owner, extra;
    if (!(fields >> a >> b >> owner) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v owner'");
    }
    const Vertex u = parse_vertex(a, line_no);
    const Vertex v = parse_vertex(b, line_no);
    const Vertex o = parse_vertex(owner, line_no);
    if (o != u && o != v) {
      throw ParseError("line " + std::to_string(line_no) + ": owner is not an endpoint");
    }
    if (u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    }
    g.add_edge(o, o == u ? v : u);
  }
  return g;
}

OwnedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_graph(in);
}

void write_graph_file(const std::filesystem::path& path, const OwnedGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace ncg
