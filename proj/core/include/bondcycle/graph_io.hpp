#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "bondcycle/bonds.hpp"
#include "bondcycle/cycles.hpp"
#include "bondcycle/graph.hpp"

namespace bondcycle {

/// Malformed input. `position` is the byte offset for graph6 input and
/// the 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the short graph6 form (n <= 62): size byte n+63, then the
/// upper-triangle adjacency bits column-major, 6 bits per printable byte.
/// Extended multi-byte sizes, out-of-range bytes, bad lengths, trailing
/// bytes and nonzero padding are all rejected with a byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, inverse of parse_graph6.
std::string write_graph6(const Graph& g);

/// Whitespace edge list: a header line "n <count>", then one "u v" line
/// per edge. "#" starts a comment; blank lines are skipped. Errors carry
/// 1-based line numbers.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

/// Optional emphasis for DOT output: the cycle's edges are drawn bold,
/// the bond's cut edges dashed and its sides colored.
struct DotHighlights {
  const Cycle* cycle = nullptr;
  const Bond* bond = nullptr;
};

/// Deterministic DOT rendering; highlights referencing vertices or edges
/// absent from the graph are rejected.
std::string write_dot(const Graph& g, const DotHighlights& highlights = {});

}  // namespace bondcycle
