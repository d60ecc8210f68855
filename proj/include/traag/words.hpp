#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "traag/decompose.hpp"
#include "traag/mixed_graph.hpp"

namespace traag {

// ---- presentations ---------------------------------------------------------

struct Presentation {
  std::vector<VertexId> generators;
  // One relator per edge, undirected edges first, each kind in sorted order:
  // {a,b} gives the commutator a·b·a⁻¹·b⁻¹ and [a,b⟩ gives a·b·a·b⁻¹.
  std::vector<Word> relators;
};
Presentation presentation(const MixedGraph& g);

struct Abelianization {
  std::size_t free_rank = 0;     // vertex count minus the torsion rank
  std::size_t torsion_rank = 0;  // distinct origins of directed edges
  bool operator==(const Abelianization&) const = default;
};
Abelianization abelianization(const MixedGraph& g);

// ---- normal forms ----------------------------------------------------------

// Mirrors the shape of a decomposition tree: a leaf holds a plain exponent, a
// cone holds the tip exponent together with the base element (element =
// tip^exp · base), and a free node holds an alternating syllable list with the
// factor index of each syllable recorded in `factors`. The identity has a
// unique representation (exponents zero, no syllables), so structural equality
// decides the word problem.
struct NormalForm {
  enum class Kind { Leaf, Free, Cone };
  Kind kind = Kind::Leaf;
  long long exp = 0;                 // leaf exponent or cone tip exponent
  std::vector<NormalForm> children;  // cone: exactly the base; free: syllables
  std::vector<std::size_t> factors;  // free: factor index per syllable
  bool operator==(const NormalForm&) const = default;
  bool is_identity() const;
};

// Reduction engine for the group of a decomposition tree. Letters are pushed
// one at a time: leaf letters add exponents, a tip letter crosses the base by
// twisting with the base element's character value, and free-product pushes
// merge with the final syllable when the factors match.
class WordEngine {
 public:
  explicit WordEngine(Tree tree);

  const Tree& tree() const { return tree_; }
  const std::set<VertexId>& support() const { return nodes_[root_].support; }

  NormalForm identity() const;
  NormalForm reduce(const Word& w) const;
  bool equal(const Word& a, const Word& b) const;
  // Linearizes a normal form, tip exponents first; the result is freely
  // reduced and reduces back to the same normal form.
  Word to_word(const NormalForm& nf) const;
  // The character value of the element: the product of leaf signs at odd
  // exponents (cone tips count as positive).
  int sign_of(const NormalForm& nf) const;

 private:
  struct Node {
    enum class Kind { Leaf, Free, Cone };
    Kind kind = Kind::Leaf;
    VertexId vertex;  // leaf vertex or cone tip
    int sign = 1;     // leaf sign
    std::vector<std::size_t> children;
    std::map<VertexId, std::size_t> route;  // free only: letter -> factor slot
    std::set<VertexId> support;
  };

  std::size_t build(const Tree& t);
  NormalForm identity_at(std::size_t id) const;
  void push(std::size_t id, NormalForm& nf, const VertexId& v, long long k) const;
  void emit(std::size_t id, const NormalForm& nf, Word& out) const;
  int sign_at(std::size_t id, const NormalForm& nf) const;

  Tree tree_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

// ---- homomorphism checks ---------------------------------------------------

struct HomCheck {
  bool ok = true;
  std::optional<Word> failing_relator;  // first relator with nontrivial image
};

// Replaces every letter v^k by images(v)^k; throws UnknownVertex on a letter
// without an image.
Word substitute(const std::map<VertexId, Word>& images, const Word& w);

// Substitutes the images into every relator of presentation(src) and reduces
// in the target group; every source vertex needs an image.
HomCheck check_hom(const MixedGraph& src, const WordEngine& dst,
                   const std::map<VertexId, Word>& images);
// Convenience overload that decomposes dst first; throws NotDroms when the
// target has no decomposition (its word problem is out of reach here).
HomCheck check_hom(const MixedGraph& src, const MixedGraph& dst,
                   const std::map<VertexId, Word>& images);

struct DoublingMap {
  MixedGraph source;
  std::map<VertexId, Word> images;
};
// With a vertex u: the source graph undirects the edges pointing at u and the
// map doubles u only. Without: the source is the underlying simplicial graph
// and every generator doubles.
DoublingMap doubling_maps(const MixedGraph& g,
                          const std::optional<VertexId>& u = std::nullopt);

}  // namespace traag
