#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "traag/mixed_graph.hpp"

namespace traag {

// Parse failure with a 1-based source position.
class ParseError : public GraphError {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
      : GraphError(code, "line " + std::to_string(line) + ", col " + std::to_string(column) +
                             ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Line-oriented graph text:
//   # comment
//   vertex NAME
//   edge A B          (undirected)
//   arrow A B         (directed, terminus B)
// Names use [A-Za-z0-9_']+. Edges declare unknown endpoints implicitly;
// re-declaring a known vertex or re-using a vertex pair is an error.
MixedGraph parse_graph(const std::string& text);
MixedGraph parse_graph_file(const std::string& path);

// vertex lines (sorted), then edge lines, then arrow lines.
std::string serialize_graph(const MixedGraph& g);

// Whitespace-separated letters, each NAME or NAME^k with k a nonzero integer;
// the empty string is the identity.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// Semicolon-separated assignments 'v=word'; an empty right side maps the
// generator to the identity.
std::map<VertexId, Word> parse_generator_map(const std::string& text);

}  // namespace traag
