#include "traag/classify.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace traag {

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::NonSpecialVertex: return "NonSpecialVertex";
    case CertificateKind::ForbiddenP4: return "ForbiddenP4";
    case CertificateKind::ForbiddenC4: return "ForbiddenC4";
    case CertificateKind::ForbiddenLambdaS: return "ForbiddenLambdaS";
    case CertificateKind::InducedCycle: return "InducedCycle";
  }
  return "?";
}

const Pattern& pattern_p4() {
  static const Pattern p{"p4",
                         MixedGraph({"p1", "p2", "p3", "p4"},
                                    {{"p1", "p2"}, {"p2", "p3"}, {"p3", "p4"}}, {}),
                         {"p1", "p2", "p3", "p4"},
                         true};
  return p;
}

const Pattern& pattern_c4() {
  static const Pattern p{"c4",
                         MixedGraph({"p1", "p2", "p3", "p4"},
                                    {{"p1", "p2"}, {"p2", "p3"}, {"p3", "p4"}, {"p1", "p4"}}, {}),
                         {"p1", "p2", "p3", "p4"},
                         true};
  return p;
}

const Pattern& pattern_lambda_s() {
  static const Pattern p{"lambda_s",
                         MixedGraph({"x1", "y", "x2"}, {}, {{"x1", "y"}, {"x2", "y"}}),
                         {"x1", "y", "x2"},
                         false};
  return p;
}

const std::vector<Pattern>& forbidden_triples() {
  static const std::vector<Pattern> ps = [] {
    std::vector<Pattern> v;
    auto add = [&](const char* name, std::vector<VertexPair> und, std::vector<VertexPair> dir) {
      v.push_back({name, MixedGraph({"x", "y", "z"}, und, dir), {"x", "y", "z"}, false});
    };
    add("triangle_cyclic", {}, {{"x", "z"}, {"z", "y"}, {"y", "x"}});
    add("triangle_transitive", {}, {{"y", "x"}, {"z", "y"}, {"z", "x"}});
    add("triangle_chord", {{"z", "x"}}, {{"y", "x"}, {"z", "y"}});
    add("triangle_single_arrow", {{"x", "y"}, {"z", "y"}}, {{"z", "x"}});
    add("triangle_common_source", {{"x", "y"}}, {{"z", "x"}, {"z", "y"}});
    add("path_mixed", {{"x", "y"}}, {{"z", "x"}});
    add("path_directed", {}, {{"z", "x"}, {"x", "y"}});
    return v;
  }();
  return ps;
}

namespace {

// Enumerate k-subsets of the sorted vertex list in lexicographic order.
template <typename Fn>
bool for_each_subset(const std::vector<VertexId>& verts, std::size_t k, Fn fn) {
  const std::size_t n = verts.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::set<VertexId> subset;
    for (std::size_t i : idx) subset.insert(verts[i]);
    if (fn(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<std::vector<VertexId>> contains_induced(const MixedGraph& g, const Pattern& p) {
  const std::size_t k = p.graph.vertex_count();
  const MixedGraph pat = p.underlying_only ? p.graph.underlying_graph() : p.graph;
  std::optional<std::vector<VertexId>> found;
  for_each_subset(g.vertices(), k, [&](const std::set<VertexId>& subset) {
    MixedGraph ind = g.induced_subgraph(subset);
    if (p.underlying_only) ind = ind.underlying_graph();
    if (auto iso = find_isomorphism(pat, ind)) {
      std::vector<VertexId> embedding;
      for (const auto& v : p.order) embedding.push_back(iso->at(v));
      found = std::move(embedding);
      return true;
    }
    return false;
  });
  return found;
}

std::optional<Certificate> is_special(const MixedGraph& g) {
  for (const auto& v : g.vertices()) {
    if (!g.is_negative(v)) continue;
    for (const auto& u : g.neighbors(v)) {
      if (!g.has_directed(u, v))
        return Certificate{CertificateKind::NonSpecialVertex, {v, u}};
    }
  }
  return std::nullopt;
}

std::optional<Certificate> is_droms(const MixedGraph& g) {
  if (auto cert = is_special(g)) return cert;
  if (auto hit = contains_induced(g, pattern_p4()))
    return Certificate{CertificateKind::ForbiddenP4, *hit};
  if (auto hit = contains_induced(g, pattern_c4()))
    return Certificate{CertificateKind::ForbiddenC4, *hit};
  if (auto hit = contains_induced(g, pattern_lambda_s()))
    return Certificate{CertificateKind::ForbiddenLambdaS, *hit};
  return std::nullopt;
}

namespace {

// Lexicographic BFS on the underlying graph; ties broken by vertex name.
std::vector<VertexId> lex_bfs(const MixedGraph& g) {
  std::map<VertexId, std::vector<int>> label;
  for (const auto& v : g.vertices()) label[v];
  std::vector<VertexId> order;
  std::set<VertexId> visited;
  const int n = static_cast<int>(g.vertex_count());
  for (int step = 0; step < n; ++step) {
    const VertexId* best = nullptr;
    for (const auto& v : g.vertices()) {
      if (visited.count(v)) continue;
      if (!best || label[v] > label[*best]) best = &v;
    }
    visited.insert(*best);
    order.push_back(*best);
    for (const auto& u : g.neighbors(*best))
      if (!visited.count(u)) label[u].push_back(n - step);
  }
  return order;
}

// Shortest path from `from` to `to` avoiding `banned`; empty if none.
std::vector<VertexId> shortest_path_avoiding(const MixedGraph& g, const VertexId& from,
                                             const VertexId& to,
                                             const std::set<VertexId>& banned) {
  std::map<VertexId, VertexId> parent;
  std::set<VertexId> seen{from};
  std::queue<VertexId> q;
  q.push(from);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    if (v == to) {
      std::vector<VertexId> path{to};
      while (path.back() != from) path.push_back(parent.at(path.back()));
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& u : g.neighbors(v)) {
      if (banned.count(u) || seen.count(u)) continue;
      seen.insert(u);
      parent[u] = v;
      q.push(u);
    }
  }
  return {};
}

bool is_cycle_shape(const MixedGraph& und, const std::set<VertexId>& subset) {
  if (subset.size() < 4) return false;
  const MixedGraph sub = und.induced_subgraph(subset);
  for (const auto& v : sub.vertices())
    if (sub.degree(v) != 2) return false;
  return sub.is_connected();
}

// Fallback: smallest induced cycle by subset enumeration.
std::optional<Certificate> brute_force_cycle(const MixedGraph& und) {
  for (std::size_t k = 4; k <= und.vertex_count(); ++k) {
    std::optional<Certificate> found;
    for_each_subset(und.vertices(), k, [&](const std::set<VertexId>& subset) {
      if (!is_cycle_shape(und, subset)) return false;
      std::vector<VertexId> cyc{*subset.begin()};
      std::set<VertexId> left(subset);
      left.erase(cyc[0]);
      while (!left.empty()) {
        for (const auto& u : und.neighbors(cyc.back()))
          if (left.count(u)) {
            cyc.push_back(u);
            left.erase(u);
            break;
          }
      }
      found = Certificate{CertificateKind::InducedCycle, cyc};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Certificate> is_chordal(const MixedGraph& g) {
  const MixedGraph und = g.underlying_graph();
  const auto order = lex_bfs(und);
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId& v = order[i];
    std::vector<VertexId> earlier;
    for (const auto& u : und.neighbors(v))
      if (pos.at(u) < i) earlier.push_back(u);
    if (earlier.size() < 2) continue;
    const VertexId* anchor = &earlier[0];
    for (const auto& u : earlier)
      if (pos.at(u) > pos.at(*anchor)) anchor = &u;
    for (const auto& x : earlier) {
      if (x == *anchor || und.adjacent(x, *anchor)) continue;
      // x and anchor are non-adjacent earlier neighbors of v: recover an
      // induced cycle through v by a shortest x-anchor path avoiding N[v].
      std::set<VertexId> banned = und.neighbors(v);
      banned.insert(v);
      banned.erase(x);
      banned.erase(*anchor);
      auto path = shortest_path_avoiding(und, x, *anchor, banned);
      if (!path.empty()) {
        std::vector<VertexId> cyc{v};
        cyc.insert(cyc.end(), path.begin(), path.end());
        return Certificate{CertificateKind::InducedCycle, cyc};
      }
      auto fallback = brute_force_cycle(und);
      if (fallback) return fallback;
      throw std::logic_error("perfect-elimination check failed but no induced cycle found");
    }
  }
  return std::nullopt;
}

bool is_complete_special(const MixedGraph& g) {
  if (!g.is_complete()) return false;
  const auto negatives = g.negative_vertices();
  if (negatives.size() > 1) return false;
  return negatives.empty() || g.is_sinkhole(*negatives.begin());
}

bool verify_certificate(const MixedGraph& g, const Certificate& cert) {
  const auto& w = cert.witness;
  for (const auto& v : w)
    if (!g.has_vertex(v)) return false;
  if (std::set<VertexId>(w.begin(), w.end()).size() != w.size()) return false;

  switch (cert.kind) {
    case CertificateKind::NonSpecialVertex: {
      if (w.size() != 2) return false;
      return g.is_negative(w[0]) && g.adjacent(w[0], w[1]) && !g.has_directed(w[1], w[0]);
    }
    case CertificateKind::ForbiddenP4: {
      if (w.size() != 4) return false;
      return g.adjacent(w[0], w[1]) && g.adjacent(w[1], w[2]) && g.adjacent(w[2], w[3]) &&
             !g.adjacent(w[0], w[2]) && !g.adjacent(w[0], w[3]) && !g.adjacent(w[1], w[3]);
    }
    case CertificateKind::ForbiddenC4: {
      if (w.size() != 4) return false;
      return g.adjacent(w[0], w[1]) && g.adjacent(w[1], w[2]) && g.adjacent(w[2], w[3]) &&
             g.adjacent(w[3], w[0]) && !g.adjacent(w[0], w[2]) && !g.adjacent(w[1], w[3]);
    }
    case CertificateKind::ForbiddenLambdaS: {
      if (w.size() != 3) return false;
      return g.has_directed(w[0], w[1]) && g.has_directed(w[2], w[1]) && !g.adjacent(w[0], w[2]);
    }
    case CertificateKind::InducedCycle: {
      if (w.size() < 4) return false;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          const bool consecutive = (j == i + 1) || (i == 0 && j == w.size() - 1);
          if (g.adjacent(w[i], w[j]) != consecutive) return false;
        }
      return true;
    }
  }
  return false;
}

}  // namespace traag
