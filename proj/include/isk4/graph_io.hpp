#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "isk4/graph.hpp"

namespace isk4 {

/// Malformed input. `line` is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// Decodes one graph6 record (no trailing newline). An optional
/// ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view record);

/// Encodes a graph in graph6; the short header is used whenever n <= 62.
std::string write_graph6(const Graph& g);

/// Reads "n m" followed by m lines "u v" with 0-based endpoints.
Graph read_edge_list(std::istream& in);

/// Reads a DIMACS .col file ("p edge n m", "e u v" with 1-based endpoints).
Graph read_dimacs(std::istream& in);

enum class InputFormat { graph6, edgelist, dimacs };

std::optional<InputFormat> parse_input_format(std::string_view name);

/// Sequential reader of one-graph-per-line graph6 streams. Blank lines are
/// skipped; errors carry the line number.
class Graph6Reader {
public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  std::optional<Graph> next();
  int line() const { return line_; }

private:
  std::istream& in_;
  int line_ = 0;
};

}  // namespace isk4
