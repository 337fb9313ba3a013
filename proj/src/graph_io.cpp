#include "indcyc/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace indcyc {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char ch) {
  const int v = static_cast<unsigned char>(ch) - kBias;
  if (v < 0 || v > 63) throw ParseError(std::string("graph6: invalid byte '") + ch + "'");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    throw std::invalid_argument("graph6 writer supports n <= 258047");
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
      throw ParseError("graph6: 8-byte order prefix not supported");
    }
    if (text.size() < 4) throw ParseError("graph6: truncated order prefix");
    n = (static_cast<std::size_t>(sextet(text[1])) << 12) |
        (static_cast<std::size_t>(sextet(text[2])) << 6) | static_cast<std::size_t>(sextet(text[3]));
    pos = 4;
  } else {
    n = static_cast<std::size_t>(sextet(text[0]));
    pos = 1;
  }
  if (n > kMaxVertices) throw ParseError("graph6: order exceeds 2^16");
  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(text[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text.back());
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
  }
  return b.build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, w] : g.edges()) os << u << ' ' << w << '\n';
  return os.str();
}

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header, expected 'n m'");
  if (static_cast<std::size_t>(n) > kMaxVertices) throw ParseError("edge list: order exceeds 2^16");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    long long u = -1;
    long long w = -1;
    if (!(in >> u >> w)) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                       std::to_string(e));
    }
    if (u < 0 || w < 0 || u >= n || w >= n) {
      throw ParseError("edge list: endpoint out of range on edge " + std::to_string(e));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing data '" + rest + "'");
  try {
    return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

GraphFormat detect_format(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) return GraphFormat::graph6;
  const auto eol = text.find('\n');
  const auto first = trim(text.substr(0, eol));
  // An edge-list header is two integers; a graph6 line never contains spaces.
  bool has_space = false;
  for (char ch : first) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      has_space = true;
    } else if (!std::isdigit(static_cast<unsigned char>(ch))) {
      return GraphFormat::graph6;
    }
  }
  return has_space ? GraphFormat::edge_list : GraphFormat::graph6;
}

Graph parse_graph(std::string_view text) {
  if (detect_format(text) == GraphFormat::graph6) {
    auto body = trim(text);
    if (body.find('\n') != std::string_view::npos) {
      throw ParseError("graph6: expected a single graph per input");
    }
    return from_graph6(body);
  }
  std::istringstream is{std::string(text)};
  return read_edge_list(is);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

}  // namespace indcyc
