#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace traag {

// Vertex names are nonempty tokens over [A-Za-z0-9_'] so fixtures like a1'
// keep their usual spelling. Lexicographic order makes iteration deterministic.
using VertexId = std::string;

bool valid_vertex_name(const VertexId& name);

enum class ErrorCode {
  DuplicateVertex,
  UnknownEndpoint,
  SelfLoop,
  ConflictingEdge,
  InvalidName,
  UnknownVertex,
  NameClash,
  InvalidSignature,
  Disconnected,
  NotConnected,
  TooSmall,
  IneligibleTip,
  NotSpecial,
  NotDroms,
  NotASatellite,
  NoCentralVertex,
  TooLarge,
  BoundExceeded,
  LetterOutsideTree,
  SyntaxError,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Undirected pairs are stored normalized (first < second); directed pairs are
// (origin, terminus). A vertex pair carries at most one edge of either kind.
using VertexPair = std::pair<VertexId, VertexId>;

class MixedGraph {
 public:
  MixedGraph() = default;
  // Validates the raw lists: names well-formed and unique, endpoints declared,
  // no self-loops, no pair declared twice in any combination.
  MixedGraph(std::vector<VertexId> vertices,
             const std::vector<VertexPair>& undirected,
             const std::vector<VertexPair>& directed);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::set<VertexPair>& undirected_edges() const { return undirected_; }
  const std::set<VertexPair>& directed_edges() const { return directed_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return undirected_.size() + directed_.size(); }

  bool has_vertex(const VertexId& v) const;
  bool has_undirected(const VertexId& a, const VertexId& b) const;
  bool has_directed(const VertexId& origin, const VertexId& terminus) const;
  bool adjacent(const VertexId& a, const VertexId& b) const;

  // Neighborhood in the underlying simplicial graph.
  std::set<VertexId> neighbors(const VertexId& v) const;
  std::size_t degree(const VertexId& v) const;
  bool is_isolated(const VertexId& v) const;

  // A vertex is negative when it is the terminus of some directed edge; a
  // sinkhole additionally has every incident edge directed at it (so isolated
  // vertices never qualify).
  bool is_negative(const VertexId& v) const;
  bool is_sinkhole(const VertexId& v) const;
  std::set<VertexId> negative_vertices() const;
  std::set<VertexId> sinkholes() const;
  // Distinct origins of directed edges.
  std::set<VertexId> origins() const;

  bool is_connected() const;
  // Connected components, each sorted, listed by least vertex.
  std::vector<std::vector<VertexId>> components() const;
  bool is_complete() const;

  MixedGraph induced_subgraph(const std::set<VertexId>& keep) const;
  MixedGraph underlying_graph() const;

  bool operator==(const MixedGraph&) const = default;

 private:
  void require_vertex(const VertexId& v) const;

  std::vector<VertexId> vertices_;  // sorted, unique
  std::set<VertexPair> undirected_;
  std::set<VertexPair> directed_;
};

// ---- signatures ----------------------------------------------------------

// theta(v) = -1 is forced on negative vertices, +1 on non-isolated vertices
// that are not termini; isolated vertices are free.
using Signature = std::map<VertexId, int>;

bool is_valid_signature(const MixedGraph& g, const Signature& theta);
Signature canonical_signature(const MixedGraph& g);  // +1 on isolated vertices
// All 2^k valid signatures (k = #isolated vertices), canonical one first.
std::vector<Signature> signatures(const MixedGraph& g);

// ---- words over the generators -------------------------------------------

struct Letter {
  VertexId vertex;
  long long exp = 1;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
// The multiplicative extension of theta to the group: the product of
// theta(v)^(exp mod 2) over the letters.
int signature_of_word(const Signature& theta, const Word& w);

// ---- constructions --------------------------------------------------------

struct ConeResult {
  MixedGraph graph;
  Signature signature;  // extends theta; the tip is positive
};

// Joins a fresh tip to every vertex of the base; the edge to v is directed
// [tip, v> exactly when theta(v) = -1, undirected otherwise.
ConeResult cone(const MixedGraph& base, const Signature& theta, const VertexId& tip);
ConeResult iterated_cone(const MixedGraph& base, const Signature& theta,
                         const std::vector<VertexId>& tips);

struct UnionResult {
  MixedGraph graph;
  // Every right-operand vertex and the name it ended up with (renamed with
  // apostrophe suffixes when it clashed with the left operand).
  std::map<VertexId, VertexId> renamed;
};
UnionResult disjoint_union(const MixedGraph& g1, const MixedGraph& g2);

// Appends apostrophes to `base` until the name is unused in g.
VertexId fresh_vertex_name(const MixedGraph& g, VertexId base);

// ---- isomorphism ----------------------------------------------------------

using GraphIso = std::map<VertexId, VertexId>;

// Backtracking over degree/orientation-compatible bijections; returns the
// lexicographically least witness (by images of g1's sorted vertices).
std::optional<GraphIso> find_isomorphism(const MixedGraph& g1, const MixedGraph& g2);
MixedGraph relabel(const MixedGraph& g, const GraphIso& mapping);

// Minimum over all vertex orderings of a fixed serialization; equal strings
// iff isomorphic. Throws TooLarge above the bound.
std::string canonical_form(const MixedGraph& g, std::size_t max_n = 8);

namespace detail {
// Pair-code buffer layout shared with the atlas enumerator: codes are listed
// for index pairs (i,j), i<j, in lexicographic order; 0 none, 1 undirected,
// 2 arrow i->j, 3 arrow j->i.
std::string canonical_key(std::size_t n, const std::vector<std::uint8_t>& codes);
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);
}  // namespace detail

}  // namespace traag
