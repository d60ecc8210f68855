#pragma once

#include <memory>
#include <variant>

#include "traag/classify.hpp"
#include "traag/mixed_graph.hpp"

namespace traag {

// ---- decomposition trees ---------------------------------------------------

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

struct LeafNode {
  VertexId vertex;
  int sign = 1;  // the signature value carried by the leaf
};

struct FreeNode {
  std::vector<Tree> factors;  // at least two, ordered by least vertex
};

struct ConeNode {
  VertexId tip;
  Tree base;
};

struct TreeNode {
  std::variant<LeafNode, FreeNode, ConeNode> node;
};

Tree make_leaf(const VertexId& vertex, int sign);
Tree make_free(std::vector<Tree> factors);
Tree make_cone(const VertexId& tip, Tree base);

bool tree_equal(const Tree& a, const Tree& b);
std::string tree_to_string(const Tree& t);
std::set<VertexId> tree_support(const Tree& t);

// ---- peeling ----------------------------------------------------------------

// Vertices that can serve as the tip of a cone over the rest of the graph:
// adjacent to every other vertex, never a terminus, and inducing a valid
// signature on the base (-1 exactly where the candidate's arrows point).
// Requires a connected graph with at least two vertices.
std::vector<VertexId> eligible_tips(const MixedGraph& g);

struct PeelResult {
  MixedGraph base;
  Signature signature;  // the signature the tip induces on the base
};
PeelResult peel_cone(const MixedGraph& g, const VertexId& tip);

// ---- recursive decomposition -------------------------------------------------

// Either a tree whose reassembly gives back the graph, or a certificate for an
// induced obstruction found in a stuck subgraph. The signature assigns leaf
// signs; the overload without one uses the canonical signature.
using DecomposeResult = std::variant<Tree, Certificate>;
DecomposeResult decompose(const MixedGraph& g);
DecomposeResult decompose(const MixedGraph& g, const Signature& theta);

struct Reassembled {
  MixedGraph graph;
  Signature signature;
};
// Inverse of decomposition: leaves become singletons, free nodes disjoint
// unions, cone nodes cones. Throws NameClash if leaf names collide.
Reassembled reassemble(const Tree& t);

// ---- quotients and normal subgroups -----------------------------------------

struct QuotientResult {
  MixedGraph quotient;
  // Image of each generator of the source group as a word over the quotient's
  // generators.
  std::map<VertexId, Word> images;
};
// The complete special graph obtained by merging the negative vertices of a
// connected special graph through the least one; the map realizes the
// projection. Requires a special, connected graph.
QuotientResult complete_special_quotient(const MixedGraph& g);

enum class AbelianCase {
  CompleteWithSinkhole,  // generated by the sinkhole's square and the positives
  PositiveTips,          // generated by the vertices that can be peeled first
};
std::string to_string(AbelianCase c);

struct AbelianNormal {
  AbelianCase kind;
  std::vector<Word> generators;
  std::size_t rank = 0;  // free-abelian rank of the subgroup
};
// A maximal abelian normal subgroup of the group of a connected graph with at
// least two vertices that passes the full obstruction check.
AbelianNormal maximal_abelian_normal(const MixedGraph& g);

}  // namespace traag
