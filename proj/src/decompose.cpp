#include "traag/decompose.hpp"

#include <algorithm>
#include <sstream>

namespace traag {

Tree make_leaf(const VertexId& vertex, int sign) {
  if (sign != 1 && sign != -1)
    throw GraphError(ErrorCode::InvalidSignature, "leaf sign must be +1 or -1");
  return std::make_shared<const TreeNode>(TreeNode{LeafNode{vertex, sign}});
}

Tree make_free(std::vector<Tree> factors) {
  for (const auto& f : factors)
    if (!f) throw std::invalid_argument("null factor in free node");
  return std::make_shared<const TreeNode>(TreeNode{FreeNode{std::move(factors)}});
}

Tree make_cone(const VertexId& tip, Tree base) {
  if (!base) throw std::invalid_argument("null base in cone node");
  return std::make_shared<const TreeNode>(TreeNode{ConeNode{tip, std::move(base)}});
}

bool tree_equal(const Tree& a, const Tree& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  if (const auto* la = std::get_if<LeafNode>(&a->node)) {
    const auto& lb = std::get<LeafNode>(b->node);
    return la->vertex == lb.vertex && la->sign == lb.sign;
  }
  if (const auto* fa = std::get_if<FreeNode>(&a->node)) {
    const auto& fb = std::get<FreeNode>(b->node);
    if (fa->factors.size() != fb.factors.size()) return false;
    for (std::size_t i = 0; i < fa->factors.size(); ++i)
      if (!tree_equal(fa->factors[i], fb.factors[i])) return false;
    return true;
  }
  const auto& ca = std::get<ConeNode>(a->node);
  const auto& cb = std::get<ConeNode>(b->node);
  return ca.tip == cb.tip && tree_equal(ca.base, cb.base);
}

namespace {

void render(const Tree& t, std::ostream& out) {
  if (const auto* leaf = std::get_if<LeafNode>(&t->node)) {
    out << "leaf(" << leaf->vertex << (leaf->sign < 0 ? ",-1)" : ",+1)");
  } else if (const auto* free = std::get_if<FreeNode>(&t->node)) {
    out << "free(";
    for (std::size_t i = 0; i < free->factors.size(); ++i) {
      if (i) out << ", ";
      render(free->factors[i], out);
    }
    out << ")";
  } else {
    const auto& cone = std::get<ConeNode>(t->node);
    out << "cone(" << cone.tip << ", ";
    render(cone.base, out);
    out << ")";
  }
}

void collect_support(const Tree& t, std::set<VertexId>& out) {
  if (const auto* leaf = std::get_if<LeafNode>(&t->node)) {
    out.insert(leaf->vertex);
  } else if (const auto* free = std::get_if<FreeNode>(&t->node)) {
    for (const auto& f : free->factors) collect_support(f, out);
  } else {
    const auto& cone = std::get<ConeNode>(t->node);
    out.insert(cone.tip);
    collect_support(cone.base, out);
  }
}

}  // namespace

std::string tree_to_string(const Tree& t) {
  if (!t) return "<null>";
  std::ostringstream out;
  render(t, out);
  return out.str();
}

std::set<VertexId> tree_support(const Tree& t) {
  std::set<VertexId> out;
  if (t) collect_support(t, out);
  return out;
}

namespace {

void require_peelable(const MixedGraph& g) {
  if (g.vertex_count() < 2)
    throw GraphError(ErrorCode::TooSmall, "peeling needs at least two vertices");
  if (!g.is_connected())
    throw GraphError(ErrorCode::Disconnected, "peeling needs a connected graph");
}

std::optional<PeelResult> try_peel(const MixedGraph& g, const VertexId& tip) {
  if (g.degree(tip) != g.vertex_count() - 1) return std::nullopt;
  if (g.is_negative(tip)) return std::nullopt;
  std::set<VertexId> keep(g.vertices().begin(), g.vertices().end());
  keep.erase(tip);
  MixedGraph base = g.induced_subgraph(keep);
  Signature theta0;
  for (const auto& v : base.vertices()) theta0[v] = g.has_directed(tip, v) ? -1 : 1;
  if (!is_valid_signature(base, theta0)) return std::nullopt;
  return PeelResult{std::move(base), std::move(theta0)};
}

}  // namespace

std::vector<VertexId> eligible_tips(const MixedGraph& g) {
  require_peelable(g);
  std::vector<VertexId> tips;
  for (const auto& c : g.vertices())
    if (try_peel(g, c)) tips.push_back(c);
  return tips;
}

PeelResult peel_cone(const MixedGraph& g, const VertexId& tip) {
  require_peelable(g);
  if (!g.has_vertex(tip))
    throw GraphError(ErrorCode::UnknownVertex, "no vertex named " + tip);
  auto peeled = try_peel(g, tip);
  if (!peeled)
    throw GraphError(ErrorCode::IneligibleTip, tip + " cannot be peeled as a cone tip");
  return std::move(*peeled);
}

namespace {

DecomposeResult decompose_impl(const MixedGraph& g, const Signature& theta) {
  if (g.vertex_count() == 1) {
    const VertexId& v = g.vertices().front();
    return make_leaf(v, theta.at(v));
  }
  if (!g.is_connected()) {
    std::vector<Tree> factors;
    for (const auto& comp : g.components()) {
      std::set<VertexId> keep(comp.begin(), comp.end());
      Signature restricted;
      for (const auto& v : comp) restricted[v] = theta.at(v);
      auto sub = decompose_impl(g.induced_subgraph(keep), restricted);
      if (std::holds_alternative<Certificate>(sub)) return sub;
      factors.push_back(std::get<Tree>(std::move(sub)));
    }
    return make_free(std::move(factors));
  }
  const auto tips = eligible_tips(g);
  if (tips.empty()) {
    auto cert = is_droms(g);
    if (!cert)
      throw std::logic_error("connected graph passes the obstruction check yet has no peelable tip");
    return *cert;
  }
  PeelResult peeled = peel_cone(g, tips.front());
  auto sub = decompose_impl(peeled.base, peeled.signature);
  if (std::holds_alternative<Certificate>(sub)) return sub;
  return make_cone(tips.front(), std::get<Tree>(std::move(sub)));
}

}  // namespace

DecomposeResult decompose(const MixedGraph& g) { return decompose(g, canonical_signature(g)); }

DecomposeResult decompose(const MixedGraph& g, const Signature& theta) {
  if (g.vertex_count() == 0)
    throw GraphError(ErrorCode::TooSmall, "cannot decompose the empty graph");
  if (!is_valid_signature(g, theta))
    throw GraphError(ErrorCode::InvalidSignature, "signature does not fit the graph");
  return decompose_impl(g, theta);
}

Reassembled reassemble(const Tree& t) {
  if (!t) throw std::invalid_argument("null tree");
  if (const auto* leaf = std::get_if<LeafNode>(&t->node)) {
    MixedGraph g({leaf->vertex}, {}, {});
    return {std::move(g), Signature{{leaf->vertex, leaf->sign}}};
  }
  if (const auto* free = std::get_if<FreeNode>(&t->node)) {
    if (free->factors.empty()) throw std::invalid_argument("empty free node");
    Reassembled acc = reassemble(free->factors.front());
    for (std::size_t i = 1; i < free->factors.size(); ++i) {
      Reassembled next = reassemble(free->factors[i]);
      UnionResult joined = disjoint_union(acc.graph, next.graph);
      for (const auto& [was, now] : joined.renamed)
        if (was != now)
          throw GraphError(ErrorCode::NameClash, "vertex " + was + " appears in two factors");
      acc.graph = std::move(joined.graph);
      acc.signature.insert(next.signature.begin(), next.signature.end());
    }
    return acc;
  }
  const auto& cn = std::get<ConeNode>(t->node);
  Reassembled base = reassemble(cn.base);
  ConeResult coned = cone(base.graph, base.signature, cn.tip);
  return {std::move(coned.graph), std::move(coned.signature)};
}

QuotientResult complete_special_quotient(const MixedGraph& g) {
  if (auto cert = is_special(g))
    throw GraphError(ErrorCode::NotSpecial, "quotient requires a special graph");
  if (!g.is_connected())
    throw GraphError(ErrorCode::NotConnected, "quotient requires a connected graph");

  std::vector<VertexId> negatives;
  std::vector<VertexId> positives;
  for (const auto& v : g.vertices())
    (g.is_negative(v) ? negatives : positives).push_back(v);

  std::vector<VertexId> verts;
  std::map<VertexId, Word> images;
  if (negatives.empty()) {
    verts = positives;
  } else {
    const VertexId& x1 = negatives.front();
    std::set<VertexId> used(g.vertices().begin(), g.vertices().end());
    verts.push_back(x1);
    images[x1] = Word{{x1, 1}};
    for (std::size_t j = 1; j < negatives.size(); ++j) {
      VertexId z = x1 + negatives[j];
      while (used.count(z)) z += "'";
      used.insert(z);
      verts.push_back(z);
      images[negatives[j]] = Word{{x1, -1}, {z, 1}};
    }
    verts.insert(verts.end(), positives.begin(), positives.end());
  }
  for (const auto& y : positives) images[y] = Word{{y, 1}};

  // Complete graph on `verts`; when a sinkhole is present it is verts[0] and
  // every incident edge points at it.
  std::vector<VertexPair> und;
  std::vector<VertexPair> dir;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!negatives.empty() && i == 0)
        dir.push_back({verts[j], verts[0]});
      else
        und.push_back({verts[i], verts[j]});
    }
  return {MixedGraph(verts, und, dir), std::move(images)};
}

std::string to_string(AbelianCase c) {
  switch (c) {
    case AbelianCase::CompleteWithSinkhole: return "CompleteWithSinkhole";
    case AbelianCase::PositiveTips: return "PositiveTips";
  }
  return "?";
}

AbelianNormal maximal_abelian_normal(const MixedGraph& g) {
  if (g.vertex_count() < 2)
    throw GraphError(ErrorCode::TooSmall, "need at least two vertices");
  if (!g.is_connected())
    throw GraphError(ErrorCode::Disconnected, "need a connected graph");
  if (auto cert = is_droms(g))
    throw GraphError(ErrorCode::NotDroms, "graph has an induced obstruction");

  const auto negatives = g.negative_vertices();
  if (is_complete_special(g) && !negatives.empty()) {
    const VertexId& u = *negatives.begin();
    AbelianNormal out{AbelianCase::CompleteWithSinkhole, {}, 0};
    out.generators.push_back(Word{{u, 2}});
    for (const auto& v : g.vertices())
      if (v != u) out.generators.push_back(Word{{v, 1}});
    out.rank = out.generators.size();
    return out;
  }

  const auto tips = eligible_tips(g);
  if (tips.empty())
    throw GraphError(ErrorCode::NoCentralVertex, "no vertex generates a central direction");
  AbelianNormal out{AbelianCase::PositiveTips, {}, tips.size()};
  for (const auto& t : tips) out.generators.push_back(Word{{t, 1}});
  return out;
}

}  // namespace traag
