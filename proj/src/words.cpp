#include "traag/words.hpp"

#include <algorithm>

namespace traag {

Presentation presentation(const MixedGraph& g) {
  Presentation pres;
  pres.generators = g.vertices();
  for (const auto& [a, b] : g.undirected_edges())
    pres.relators.push_back(Word{{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  for (const auto& [o, t] : g.directed_edges())
    pres.relators.push_back(Word{{o, 1}, {t, 1}, {o, 1}, {t, -1}});
  return pres;
}

Abelianization abelianization(const MixedGraph& g) {
  const std::size_t s = g.origins().size();
  return {g.vertex_count() - s, s};
}

// ---- normal forms ----------------------------------------------------------

bool NormalForm::is_identity() const {
  switch (kind) {
    case Kind::Leaf: return exp == 0;
    case Kind::Free: return children.empty();
    case Kind::Cone: return exp == 0 && children.front().is_identity();
  }
  return true;
}

WordEngine::WordEngine(Tree tree) : tree_(std::move(tree)) {
  if (!tree_) throw std::invalid_argument("null decomposition tree");
  root_ = build(tree_);
}

std::size_t WordEngine::build(const Tree& t) {
  Node node;
  if (const auto* leaf = std::get_if<LeafNode>(&t->node)) {
    node.kind = Node::Kind::Leaf;
    node.vertex = leaf->vertex;
    node.sign = leaf->sign;
    node.support = {leaf->vertex};
  } else if (const auto* free = std::get_if<FreeNode>(&t->node)) {
    node.kind = Node::Kind::Free;
    for (std::size_t slot = 0; slot < free->factors.size(); ++slot) {
      std::size_t child = build(free->factors[slot]);
      node.children.push_back(child);
      for (const auto& v : nodes_[child].support) {
        if (!node.support.insert(v).second)
          throw GraphError(ErrorCode::NameClash, "vertex " + v + " appears in two factors");
        node.route[v] = slot;
      }
    }
  } else {
    const auto& cn = std::get<ConeNode>(t->node);
    node.kind = Node::Kind::Cone;
    node.vertex = cn.tip;
    std::size_t base = build(cn.base);
    node.children.push_back(base);
    node.support = nodes_[base].support;
    if (!node.support.insert(cn.tip).second)
      throw GraphError(ErrorCode::NameClash, "tip " + cn.tip + " appears in its own base");
  }
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

NormalForm WordEngine::identity_at(std::size_t id) const {
  const Node& node = nodes_[id];
  NormalForm nf;
  switch (node.kind) {
    case Node::Kind::Leaf:
      nf.kind = NormalForm::Kind::Leaf;
      break;
    case Node::Kind::Free:
      nf.kind = NormalForm::Kind::Free;
      break;
    case Node::Kind::Cone:
      nf.kind = NormalForm::Kind::Cone;
      nf.children.push_back(identity_at(node.children.front()));
      break;
  }
  return nf;
}

NormalForm WordEngine::identity() const { return identity_at(root_); }

int WordEngine::sign_at(std::size_t id, const NormalForm& nf) const {
  const Node& node = nodes_[id];
  switch (node.kind) {
    case Node::Kind::Leaf:
      return nf.exp % 2 != 0 ? node.sign : 1;
    case Node::Kind::Cone:
      // The tip of a cone is positive, so only the base contributes.
      return sign_at(node.children.front(), nf.children.front());
    case Node::Kind::Free: {
      int sign = 1;
      for (std::size_t i = 0; i < nf.children.size(); ++i)
        sign *= sign_at(node.children[nf.factors[i]], nf.children[i]);
      return sign;
    }
  }
  return 1;
}

int WordEngine::sign_of(const NormalForm& nf) const { return sign_at(root_, nf); }

void WordEngine::push(std::size_t id, NormalForm& nf, const VertexId& v, long long k) const {
  const Node& node = nodes_[id];
  switch (node.kind) {
    case Node::Kind::Leaf:
      nf.exp += k;
      return;
    case Node::Kind::Cone:
      if (v == node.vertex) {
        // tip^n · g · tip^k = tip^(n + k·sign(g)) · g
        nf.exp += k * sign_at(node.children.front(), nf.children.front());
      } else {
        push(node.children.front(), nf.children.front(), v, k);
      }
      return;
    case Node::Kind::Free: {
      const std::size_t slot = node.route.at(v);
      if (!nf.factors.empty() && nf.factors.back() == slot) {
        push(node.children[slot], nf.children.back(), v, k);
        if (nf.children.back().is_identity()) {
          nf.children.pop_back();
          nf.factors.pop_back();
        }
      } else {
        NormalForm syllable = identity_at(node.children[slot]);
        push(node.children[slot], syllable, v, k);
        if (!syllable.is_identity()) {
          nf.children.push_back(std::move(syllable));
          nf.factors.push_back(slot);
        }
      }
      return;
    }
  }
}

NormalForm WordEngine::reduce(const Word& w) const {
  NormalForm nf = identity();
  const auto& known = support();
  for (const auto& [v, k] : w) {
    if (!known.count(v))
      throw GraphError(ErrorCode::LetterOutsideTree,
                       "letter '" + v + "' is not a vertex of the tree");
    if (k == 0) continue;
    push(root_, nf, v, k);
  }
  return nf;
}

bool WordEngine::equal(const Word& a, const Word& b) const { return reduce(a) == reduce(b); }

void WordEngine::emit(std::size_t id, const NormalForm& nf, Word& out) const {
  const Node& node = nodes_[id];
  switch (node.kind) {
    case Node::Kind::Leaf:
      if (nf.exp != 0) out.push_back({node.vertex, nf.exp});
      return;
    case Node::Kind::Cone:
      if (nf.exp != 0) out.push_back({node.vertex, nf.exp});
      emit(node.children.front(), nf.children.front(), out);
      return;
    case Node::Kind::Free:
      for (std::size_t i = 0; i < nf.children.size(); ++i)
        emit(node.children[nf.factors[i]], nf.children[i], out);
      return;
  }
}

Word WordEngine::to_word(const NormalForm& nf) const {
  Word out;
  emit(root_, nf, out);
  return out;
}

// ---- homomorphism checks ---------------------------------------------------

Word substitute(const std::map<VertexId, Word>& images, const Word& w) {
  Word out;
  for (const auto& [v, k] : w) {
    auto it = images.find(v);
    if (it == images.end())
      throw GraphError(ErrorCode::UnknownVertex, "no image for generator '" + v + "'");
    if (k >= 0) {
      for (long long rep = 0; rep < k; ++rep)
        out.insert(out.end(), it->second.begin(), it->second.end());
    } else {
      const Word inv = inverse_word(it->second);
      for (long long rep = 0; rep < -k; ++rep) out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return out;
}

HomCheck check_hom(const MixedGraph& src, const WordEngine& dst,
                   const std::map<VertexId, Word>& images) {
  for (const auto& v : src.vertices())
    if (!images.count(v))
      throw GraphError(ErrorCode::UnknownVertex, "no image for generator '" + v + "'");
  for (const auto& relator : presentation(src).relators)
    if (!dst.reduce(substitute(images, relator)).is_identity())
      return {false, relator};
  return {true, std::nullopt};
}

HomCheck check_hom(const MixedGraph& src, const MixedGraph& dst,
                   const std::map<VertexId, Word>& images) {
  auto decomposed = decompose(dst);
  if (std::holds_alternative<Certificate>(decomposed))
    throw GraphError(ErrorCode::NotDroms, "target group has no decomposition");
  return check_hom(src, WordEngine(std::get<Tree>(std::move(decomposed))), images);
}

DoublingMap doubling_maps(const MixedGraph& g, const std::optional<VertexId>& u) {
  DoublingMap out;
  if (u) {
    if (!g.has_vertex(*u))
      throw GraphError(ErrorCode::UnknownVertex, "unknown vertex '" + *u + "'");
    std::vector<VertexPair> und(g.undirected_edges().begin(), g.undirected_edges().end());
    std::vector<VertexPair> dir;
    for (const auto& [o, t] : g.directed_edges())
      (t == *u ? und : dir).push_back({o, t});
    out.source = MixedGraph(g.vertices(), und, dir);
    for (const auto& v : g.vertices()) out.images[v] = Word{{v, v == *u ? 2 : 1}};
  } else {
    out.source = g.underlying_graph();
    for (const auto& v : g.vertices()) out.images[v] = Word{{v, 2}};
  }
  return out;
}

}  // namespace traag
