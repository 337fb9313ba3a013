#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "indcyc/graph.hpp"

namespace indcyc {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6: N(n) followed by the upper triangle, column by column, packed six
/// bits per printable byte. An optional ">>graph6<<" header is accepted.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Edge list: "n m" on the first line, then m lines "u w" (0-based).
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

enum class GraphFormat { graph6, edge_list };

GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);

}  // namespace indcyc
