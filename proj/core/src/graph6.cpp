#include "imw/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace imw {

std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view line) {
  if (line.empty()) throw Graph6ParseError("graph6: empty line", 0);
  unsigned char h = static_cast<unsigned char>(line[0]);
  if (h < 63 || h > 126) throw Graph6ParseError("graph6: header character out of range", 0);
  if (h == 126)
    throw Graph6ParseError("graph6: long form (n > 62) not supported", 0);
  int n = h - 63;
  int bits_needed = n * (n - 1) / 2;
  size_t body_len = static_cast<size_t>((bits_needed + 5) / 6);
  if (line.size() < 1 + body_len)
    throw Graph6ParseError("graph6: body truncated", line.size());
  if (line.size() > 1 + body_len)
    throw Graph6ParseError("graph6: trailing characters after body", 1 + body_len);

  Graph g(n);
  int bit = 0, i = 0, j = 1;  // column-order walk over the upper triangle
  for (size_t k = 0; k < body_len; ++k) {
    unsigned char c = static_cast<unsigned char>(line[1 + k]);
    if (c < 63 || c > 126)
      throw Graph6ParseError("graph6: body character out of range", 1 + k);
    int v = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      int on = v >> b & 1;
      if (bit >= bits_needed) {
        if (on) throw Graph6ParseError("graph6: padding bit set", 1 + k);
        continue;
      }
      if (on) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  return read_graph6(in);
}

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace imw
