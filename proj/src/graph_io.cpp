#include "traag/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace traag {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

VertexId expect_name(const Token& token, std::size_t line_no) {
  if (!valid_vertex_name(token.text))
    throw ParseError(ErrorCode::SyntaxError, line_no, token.column,
                     "'" + token.text + "' is not a valid vertex name");
  return token.text;
}

}  // namespace

MixedGraph parse_graph(const std::string& text) {
  std::set<VertexId> known;
  std::set<VertexPair> used_pairs;
  std::vector<VertexPair> und;
  std::vector<VertexPair> dir;

  auto claim_pair = [&](const VertexId& a, const VertexId& b, std::size_t line_no,
                        std::size_t column) {
    if (a == b)
      throw ParseError(ErrorCode::SelfLoop, line_no, column, "self-loop at '" + a + "'");
    VertexPair pair = a < b ? VertexPair{a, b} : VertexPair{b, a};
    if (!used_pairs.insert(pair).second)
      throw ParseError(ErrorCode::ConflictingEdge, line_no, column,
                       "pair {" + a + ", " + b + "} declared more than once");
    known.insert(a);
    known.insert(b);
  };

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    const Token& head = tokens.front();
    auto expect_arity = [&](std::size_t want) {
      if (tokens.size() != want + 1)
        throw ParseError(ErrorCode::SyntaxError, line_no, head.column,
                         "'" + head.text + "' takes " + std::to_string(want) + " name(s)");
    };
    if (head.text == "vertex") {
      expect_arity(1);
      VertexId v = expect_name(tokens[1], line_no);
      if (!known.insert(v).second)
        throw ParseError(ErrorCode::DuplicateVertex, line_no, tokens[1].column,
                         "vertex '" + v + "' already declared");
    } else if (head.text == "edge" || head.text == "arrow") {
      expect_arity(2);
      VertexId a = expect_name(tokens[1], line_no);
      VertexId b = expect_name(tokens[2], line_no);
      claim_pair(a, b, line_no, tokens[1].column);
      (head.text == "edge" ? und : dir).push_back({a, b});
    } else {
      throw ParseError(ErrorCode::SyntaxError, line_no, head.column,
                       "expected 'vertex', 'edge', 'arrow', or a comment");
    }
  }
  return MixedGraph({known.begin(), known.end()}, und, dir);
}

MixedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const MixedGraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << "\n";
  for (const auto& [a, b] : g.undirected_edges()) out << "edge " << a << " " << b << "\n";
  for (const auto& [o, t] : g.directed_edges()) out << "arrow " << o << " " << t << "\n";
  return out.str();
}

Word parse_word(const std::string& text) {
  Word word;
  for (const auto& token : tokenize(text)) {
    const std::string& t = token.text;
    const std::size_t caret = t.find('^');
    const std::string name = t.substr(0, caret);
    if (!valid_vertex_name(name))
      throw GraphError(ErrorCode::SyntaxError, "'" + name + "' is not a valid letter");
    long long exp = 1;
    if (caret != std::string::npos) {
      const std::string digits = t.substr(caret + 1);
      try {
        std::size_t consumed = 0;
        exp = std::stoll(digits, &consumed);
        if (consumed != digits.size()) throw std::invalid_argument(digits);
      } catch (const std::exception&) {
        throw GraphError(ErrorCode::SyntaxError, "bad exponent '" + digits + "' on '" + name + "'");
      }
      if (exp == 0)
        throw GraphError(ErrorCode::SyntaxError, "zero exponent on '" + name + "'");
    }
    word.push_back({name, exp});
  }
  return word;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, exp] : w) {
    if (exp == 0) continue;
    if (!first) out << " ";
    first = false;
    out << v;
    if (exp != 1) out << "^" << exp;
  }
  return out.str();
}

std::map<VertexId, Word> parse_generator_map(const std::string& text) {
  std::map<VertexId, Word> images;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string part = text.substr(start, end - start);
    start = end + 1;
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      throw GraphError(ErrorCode::SyntaxError, "expected 'name=word' in '" + part + "'");
    std::string name = part.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (!valid_vertex_name(name))
      throw GraphError(ErrorCode::SyntaxError, "'" + name + "' is not a valid vertex name");
    if (!images.emplace(name, parse_word(part.substr(eq + 1))).second)
      throw GraphError(ErrorCode::SyntaxError, "duplicate image for '" + name + "'");
  }
  return images;
}

}  // namespace traag
