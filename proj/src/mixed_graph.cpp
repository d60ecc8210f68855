#include "traag/mixed_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

namespace traag {

bool valid_vertex_name(const VertexId& name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '\'';
    if (!ok) return false;
  }
  return true;
}

namespace {

VertexPair norm(const VertexId& a, const VertexId& b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

}  // namespace

MixedGraph::MixedGraph(std::vector<VertexId> vertices,
                       const std::vector<VertexPair>& undirected,
                       const std::vector<VertexPair>& directed)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!valid_vertex_name(vertices_[i]))
      throw GraphError(ErrorCode::InvalidName, "invalid vertex name '" + vertices_[i] + "'");
    if (i > 0 && vertices_[i] == vertices_[i - 1])
      throw GraphError(ErrorCode::DuplicateVertex, "duplicate vertex '" + vertices_[i] + "'");
  }

  std::set<VertexPair> used;
  auto claim = [&](const VertexId& a, const VertexId& b) {
    if (a == b) throw GraphError(ErrorCode::SelfLoop, "self-loop at '" + a + "'");
    for (const VertexId* v : {&a, &b})
      if (!std::binary_search(vertices_.begin(), vertices_.end(), *v))
        throw GraphError(ErrorCode::UnknownEndpoint, "unknown endpoint '" + *v + "'");
    if (!used.insert(norm(a, b)).second)
      throw GraphError(ErrorCode::ConflictingEdge,
                       "pair {" + a + ", " + b + "} declared more than once");
  };
  for (const auto& [a, b] : undirected) {
    claim(a, b);
    undirected_.insert(norm(a, b));
  }
  for (const auto& [o, t] : directed) {
    claim(o, t);
    directed_.insert({o, t});
  }
}

void MixedGraph::require_vertex(const VertexId& v) const {
  if (!has_vertex(v)) throw GraphError(ErrorCode::UnknownVertex, "unknown vertex '" + v + "'");
}

bool MixedGraph::has_vertex(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool MixedGraph::has_undirected(const VertexId& a, const VertexId& b) const {
  return undirected_.count(norm(a, b)) > 0;
}

bool MixedGraph::has_directed(const VertexId& origin, const VertexId& terminus) const {
  return directed_.count({origin, terminus}) > 0;
}

bool MixedGraph::adjacent(const VertexId& a, const VertexId& b) const {
  return has_undirected(a, b) || has_directed(a, b) || has_directed(b, a);
}

std::set<VertexId> MixedGraph::neighbors(const VertexId& v) const {
  require_vertex(v);
  std::set<VertexId> out;
  for (const auto& [a, b] : undirected_) {
    if (a == v) out.insert(b);
    if (b == v) out.insert(a);
  }
  for (const auto& [o, t] : directed_) {
    if (o == v) out.insert(t);
    if (t == v) out.insert(o);
  }
  return out;
}

std::size_t MixedGraph::degree(const VertexId& v) const { return neighbors(v).size(); }

bool MixedGraph::is_isolated(const VertexId& v) const { return degree(v) == 0; }

bool MixedGraph::is_negative(const VertexId& v) const {
  require_vertex(v);
  for (const auto& [o, t] : directed_)
    if (t == v) return true;
  return false;
}

bool MixedGraph::is_sinkhole(const VertexId& v) const {
  require_vertex(v);
  bool touched = false;
  for (const auto& [a, b] : undirected_)
    if (a == v || b == v) return false;
  for (const auto& [o, t] : directed_) {
    if (o == v) return false;
    if (t == v) touched = true;
  }
  return touched;
}

std::set<VertexId> MixedGraph::negative_vertices() const {
  std::set<VertexId> out;
  for (const auto& [o, t] : directed_) out.insert(t);
  return out;
}

std::set<VertexId> MixedGraph::sinkholes() const {
  std::set<VertexId> out;
  for (const auto& v : vertices_)
    if (is_sinkhole(v)) out.insert(v);
  return out;
}

std::set<VertexId> MixedGraph::origins() const {
  std::set<VertexId> out;
  for (const auto& [o, t] : directed_) out.insert(o);
  return out;
}

std::vector<std::vector<VertexId>> MixedGraph::components() const {
  std::vector<std::vector<VertexId>> comps;
  std::set<VertexId> seen;
  for (const auto& start : vertices_) {
    if (seen.count(start)) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      comp.push_back(v);
      for (const auto& u : neighbors(v))
        if (seen.insert(u).second) q.push(u);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // starts iterate in sorted order, so components sort by least vertex
}

bool MixedGraph::is_connected() const { return components().size() <= 1; }

bool MixedGraph::is_complete() const {
  const std::size_t n = vertices_.size();
  return undirected_.size() + directed_.size() == n * (n - 1) / 2;
}

MixedGraph MixedGraph::induced_subgraph(const std::set<VertexId>& keep) const {
  for (const auto& v : keep) require_vertex(v);
  std::vector<VertexPair> und, dir;
  for (const auto& [a, b] : undirected_)
    if (keep.count(a) && keep.count(b)) und.push_back({a, b});
  for (const auto& [o, t] : directed_)
    if (keep.count(o) && keep.count(t)) dir.push_back({o, t});
  return MixedGraph({keep.begin(), keep.end()}, und, dir);
}

MixedGraph MixedGraph::underlying_graph() const {
  std::vector<VertexPair> und(undirected_.begin(), undirected_.end());
  for (const auto& [o, t] : directed_) und.push_back(norm(o, t));
  return MixedGraph(vertices_, und, {});
}

// ---- signatures ----------------------------------------------------------

bool is_valid_signature(const MixedGraph& g, const Signature& theta) {
  for (const auto& v : g.vertices()) {
    auto it = theta.find(v);
    if (it == theta.end()) return false;
    if (it->second != 1 && it->second != -1) return false;
    if (g.is_negative(v) && it->second != -1) return false;
    if (!g.is_isolated(v) && !g.is_negative(v) && it->second != 1) return false;
  }
  return theta.size() == g.vertex_count();
}

Signature canonical_signature(const MixedGraph& g) {
  Signature theta;
  for (const auto& v : g.vertices()) theta[v] = g.is_negative(v) ? -1 : 1;
  return theta;
}

std::vector<Signature> signatures(const MixedGraph& g) {
  std::vector<VertexId> isolated;
  for (const auto& v : g.vertices())
    if (g.is_isolated(v)) isolated.push_back(v);
  if (isolated.size() > 20)
    throw GraphError(ErrorCode::TooLarge, "too many isolated vertices to enumerate signatures");
  const Signature base = canonical_signature(g);
  std::vector<Signature> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << isolated.size()); ++mask) {
    Signature theta = base;
    for (std::size_t i = 0; i < isolated.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) theta[isolated[i]] = -1;
    out.push_back(std::move(theta));
  }
  return out;
}

// ---- words ----------------------------------------------------------------

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->vertex, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

int signature_of_word(const Signature& theta, const Word& w) {
  int sign = 1;
  for (const auto& [v, e] : w) {
    auto it = theta.find(v);
    if (it == theta.end())
      throw GraphError(ErrorCode::UnknownVertex, "letter '" + v + "' outside the signature domain");
    if (e % 2 != 0) sign *= it->second;
  }
  return sign;
}

// ---- constructions --------------------------------------------------------

ConeResult cone(const MixedGraph& base, const Signature& theta, const VertexId& tip) {
  if (base.has_vertex(tip))
    throw GraphError(ErrorCode::NameClash, "tip '" + tip + "' already a vertex");
  if (!is_valid_signature(base, theta))
    throw GraphError(ErrorCode::InvalidSignature, "not a valid signature of the base graph");
  std::vector<VertexId> verts = base.vertices();
  verts.push_back(tip);
  std::vector<VertexPair> und(base.undirected_edges().begin(), base.undirected_edges().end());
  std::vector<VertexPair> dir(base.directed_edges().begin(), base.directed_edges().end());
  for (const auto& v : base.vertices()) {
    if (theta.at(v) == -1)
      dir.push_back({tip, v});
    else
      und.push_back({tip, v});
  }
  Signature extended = theta;
  extended[tip] = 1;
  return {MixedGraph(std::move(verts), und, dir), std::move(extended)};
}

ConeResult iterated_cone(const MixedGraph& base, const Signature& theta,
                         const std::vector<VertexId>& tips) {
  ConeResult acc{base, theta};
  for (const auto& tip : tips) acc = cone(acc.graph, acc.signature, tip);
  return acc;
}

VertexId fresh_vertex_name(const MixedGraph& g, VertexId base) {
  while (g.has_vertex(base)) base += '\'';
  return base;
}

UnionResult disjoint_union(const MixedGraph& g1, const MixedGraph& g2) {
  std::map<VertexId, VertexId> renamed;
  std::set<VertexId> taken(g1.vertices().begin(), g1.vertices().end());
  for (const auto& v : g2.vertices()) {
    VertexId name = v;
    while (taken.count(name)) name += '\'';
    taken.insert(name);
    renamed[v] = name;
  }
  std::vector<VertexId> verts = g1.vertices();
  for (const auto& v : g2.vertices()) verts.push_back(renamed.at(v));
  std::vector<VertexPair> und(g1.undirected_edges().begin(), g1.undirected_edges().end());
  std::vector<VertexPair> dir(g1.directed_edges().begin(), g1.directed_edges().end());
  for (const auto& [a, b] : g2.undirected_edges()) und.push_back({renamed.at(a), renamed.at(b)});
  for (const auto& [o, t] : g2.directed_edges()) dir.push_back({renamed.at(o), renamed.at(t)});
  return {MixedGraph(std::move(verts), und, dir), std::move(renamed)};
}

// ---- isomorphism ----------------------------------------------------------

namespace {

struct DegreeProfile {
  std::size_t undirected = 0, in = 0, out = 0;
  auto operator<=>(const DegreeProfile&) const = default;
};

DegreeProfile profile(const MixedGraph& g, const VertexId& v) {
  DegreeProfile p;
  for (const auto& [a, b] : g.undirected_edges())
    if (a == v || b == v) ++p.undirected;
  for (const auto& [o, t] : g.directed_edges()) {
    if (o == v) ++p.out;
    if (t == v) ++p.in;
  }
  return p;
}

// 0 none, 1 undirected, 2 arrow a->b, 3 arrow b->a
int edge_code(const MixedGraph& g, const VertexId& a, const VertexId& b) {
  if (g.has_undirected(a, b)) return 1;
  if (g.has_directed(a, b)) return 2;
  if (g.has_directed(b, a)) return 3;
  return 0;
}

bool extend(const MixedGraph& g1, const MixedGraph& g2, const std::vector<VertexId>& order,
            std::size_t pos, GraphIso& iso, std::set<VertexId>& used,
            const std::map<VertexId, DegreeProfile>& prof2) {
  if (pos == order.size()) return true;
  const VertexId& v = order[pos];
  const DegreeProfile pv = profile(g1, v);
  for (const auto& w : g2.vertices()) {
    if (used.count(w)) continue;
    if (prof2.at(w) != pv) continue;
    bool ok = true;
    for (std::size_t k = 0; k < pos && ok; ++k)
      ok = edge_code(g1, order[k], v) == edge_code(g2, iso.at(order[k]), w);
    if (!ok) continue;
    iso[v] = w;
    used.insert(w);
    if (extend(g1, g2, order, pos + 1, iso, used, prof2)) return true;
    iso.erase(v);
    used.erase(w);
  }
  return false;
}

}  // namespace

std::optional<GraphIso> find_isomorphism(const MixedGraph& g1, const MixedGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) return std::nullopt;
  if (g1.undirected_edges().size() != g2.undirected_edges().size()) return std::nullopt;
  if (g1.directed_edges().size() != g2.directed_edges().size()) return std::nullopt;
  std::map<VertexId, DegreeProfile> prof2;
  for (const auto& w : g2.vertices()) prof2[w] = profile(g2, w);
  GraphIso iso;
  std::set<VertexId> used;
  if (extend(g1, g2, g1.vertices(), 0, iso, used, prof2)) return iso;
  return std::nullopt;
}

MixedGraph relabel(const MixedGraph& g, const GraphIso& mapping) {
  auto image = [&](const VertexId& v) {
    auto it = mapping.find(v);
    if (it == mapping.end())
      throw GraphError(ErrorCode::UnknownVertex, "relabel map misses vertex '" + v + "'");
    return it->second;
  };
  std::vector<VertexId> verts;
  for (const auto& v : g.vertices()) verts.push_back(image(v));
  std::vector<VertexPair> und, dir;
  for (const auto& [a, b] : g.undirected_edges()) und.push_back({image(a), image(b)});
  for (const auto& [o, t] : g.directed_edges()) dir.push_back({image(o), image(t)});
  return MixedGraph(std::move(verts), und, dir);
}

namespace detail {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // (i,j), i<j, in lexicographic order: (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::string canonical_key(std::size_t n, const std::vector<std::uint8_t>& codes) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur(codes.size(), '0');
  do {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = k + 1; l < n; ++l) {
        std::size_t a = perm[k], b = perm[l];
        std::uint8_t c;
        if (a < b) {
          c = codes[pair_index(n, a, b)];
        } else {
          c = codes[pair_index(n, b, a)];
          if (c == 2)
            c = 3;
          else if (c == 3)
            c = 2;
        }
        cur[pair_index(n, k, l)] = static_cast<char>('0' + c);
      }
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

}  // namespace detail

std::string canonical_form(const MixedGraph& g, std::size_t max_n) {
  const std::size_t n = g.vertex_count();
  if (n > max_n)
    throw GraphError(ErrorCode::TooLarge, "canonical_form bound exceeded (" +
                                              std::to_string(n) + " > " + std::to_string(max_n) + ")");
  const auto& verts = g.vertices();
  std::vector<std::uint8_t> codes(n * (n - 1) / 2, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      codes[detail::pair_index(n, i, j)] =
          static_cast<std::uint8_t>(edge_code(g, verts[i], verts[j]));
  return detail::canonical_key(n, codes);
}

}  // namespace traag
