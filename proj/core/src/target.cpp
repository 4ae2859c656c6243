#include "imw/target.hpp"

#include <charconv>

#include "imw/graph6.hpp"

namespace imw {

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("target: bad integer '" + std::string(s) + "'");
  return value;
}

std::pair<int, int> parse_int_pair(std::string_view s) {
  size_t comma = s.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("target: expected S,T in '" + std::string(s) + "'");
  return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

}  // namespace

TargetSpec TargetSpec::parse(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("target: expected kind:args, got '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, colon);
  std::string_view args = text.substr(colon + 1);
  if (kind == "clique") return clique(parse_int(args));
  if (kind == "kst") {
    auto [s, t] = parse_int_pair(args);
    return complete_bipartite(s, t);
  }
  if (kind == "kll") {
    auto [l, t] = parse_int_pair(args);
    return clique_topped(l, t);
  }
  if (kind == "g6") return explicit_graph_of(graph6_decode(args));
  throw std::invalid_argument("target: unknown kind '" + std::string(kind) + "'");
}

std::string TargetSpec::describe() const {
  switch (kind) {
    case Kind::Clique: return "clique:" + std::to_string(a);
    case Kind::CompleteBipartite: return "kst:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::CliqueToppedBipartite: return "kll:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Explicit: return "g6:" + graph6_encode(*explicit_graph);
  }
  return "?";
}

Graph make_target(const TargetSpec& spec) {
  auto positive = [](int x, const char* what) {
    if (x <= 0) throw std::invalid_argument(std::string("make_target: ") + what + " must be positive");
  };
  switch (spec.kind) {
    case TargetSpec::Kind::Clique: {
      positive(spec.a, "clique size");
      Graph g(spec.a);
      for (int u = 0; u < spec.a; ++u)
        for (int v = u + 1; v < spec.a; ++v) g.add_edge(u, v);
      return g;
    }
    case TargetSpec::Kind::CompleteBipartite: {
      positive(spec.a, "part size");
      positive(spec.b, "part size");
      Graph g(spec.a + spec.b);
      for (int u = 0; u < spec.a; ++u)
        for (int v = 0; v < spec.b; ++v) g.add_edge(u, spec.a + v);
      return g;
    }
    case TargetSpec::Kind::CliqueToppedBipartite: {
      positive(spec.a, "clique side size");
      positive(spec.b, "independent side size");
      Graph g(spec.a + spec.b);
      for (int u = 0; u < spec.a; ++u) {
        for (int v = u + 1; v < spec.a; ++v) g.add_edge(u, v);
        for (int v = 0; v < spec.b; ++v) g.add_edge(u, spec.a + v);
      }
      return g;
    }
    case TargetSpec::Kind::Explicit:
      if (!spec.explicit_graph) throw std::invalid_argument("make_target: missing explicit graph");
      return *spec.explicit_graph;
  }
  throw std::invalid_argument("make_target: bad kind");
}

}  // namespace imw
