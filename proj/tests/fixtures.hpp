#pragma once

#include "traag/mixed_graph.hpp"

// The running examples used across the test suite. Arrows are written
// (origin, terminus): arrow (a, b) imposes the Klein relation aba = b.
namespace fixtures {

using traag::MixedGraph;

// Single undirected edge; T(P2) = Z^2.
inline MixedGraph p2() { return MixedGraph({"a", "b"}, {{"a", "b"}}, {}); }

// Single directed edge; T(Xi2) is the Klein bottle group.
inline MixedGraph xi2() { return MixedGraph({"a", "b"}, {}, {{"a", "b"}}); }

inline MixedGraph p4() {
  return MixedGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}, {});
}

inline MixedGraph c4() {
  return MixedGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}, {});
}

// Not special: b is negative yet meets the undirected edge d-b, and a is
// negative yet originates a->b.
inline MixedGraph gamma1() {
  return MixedGraph({"a", "b", "c", "d"}, {{"d", "b"}}, {{"a", "b"}, {"c", "b"}, {"d", "a"}});
}

// Special; b' is the unique sinkhole and is joined to every other vertex.
inline MixedGraph gamma2() {
  return MixedGraph({"a'", "b'", "c'", "d'"}, {{"d'", "a'"}},
                    {{"a'", "b'"}, {"c'", "b'"}, {"d'", "b'"}});
}

// Droms; the double cone over {a1} u {a2} with both leaves negative.
inline MixedGraph gamma3() {
  return MixedGraph({"a1", "b1", "a2", "b2"}, {{"b1", "b2"}},
                    {{"b1", "a1"}, {"b1", "a2"}, {"b2", "a1"}, {"b2", "a2"}});
}

// The satellite move applied to a2 in gamma3 (arrows into a2 undirected).
inline MixedGraph gamma3_twisted() {
  return MixedGraph({"a1", "b1", "a2'", "b2"}, {{"b1", "a2'"}, {"b1", "b2"}, {"b2", "a2'"}},
                    {{"b1", "a1"}, {"b2", "a1"}});
}

// Special but not Droms: {a1', b', a2'} induces two arrows with a common
// terminus and no third edge.
inline MixedGraph gamma4() {
  return MixedGraph({"a1'", "b'", "a2'", "a3'"}, {{"a3'", "a1'"}, {"a3'", "a2'"}},
                    {{"a1'", "b'"}, {"a2'", "b'"}, {"a3'", "b'"}});
}

// Two arrows sharing the terminus b; special, connected, yet not a cone.
inline MixedGraph lambda_s() {
  return MixedGraph({"a1", "b", "a2"}, {}, {{"a1", "b"}, {"a2", "b"}});
}

// Two sinkholes a1, a2 that are satellites of each other.
inline MixedGraph lambda1() {
  return MixedGraph({"a1", "a2", "b"}, {}, {{"b", "a1"}, {"b", "a2"}});
}

// One sinkhole a1' with satellite a2'.
inline MixedGraph lambda2() {
  return MixedGraph({"a1'", "a2'", "b'"}, {{"b'", "a2'"}}, {{"b'", "a1'"}});
}

// Droms and rigid: the only sinkhole is a1 and the two vertices at distance
// two from it (a2, b2) are joined, so there is no satellite.
inline MixedGraph upsilon() {
  return MixedGraph({"a1", "a2", "b1", "b2", "c1", "c2"},
                    {{"b2", "a2"},
                     {"c1", "a2"},
                     {"c1", "b1"},
                     {"c1", "b2"},
                     {"c2", "a2"},
                     {"c2", "b2"},
                     {"c2", "b1"},
                     {"c2", "c1"}},
                    {{"b1", "a1"}, {"c1", "a1"}, {"c2", "a1"}});
}

inline MixedGraph edgeless(std::initializer_list<const char*> names) {
  std::vector<traag::VertexId> v;
  for (const char* n : names) v.emplace_back(n);
  return MixedGraph(std::move(v), {}, {});
}

inline MixedGraph complete_simplicial(std::initializer_list<const char*> names) {
  std::vector<traag::VertexId> v;
  for (const char* n : names) v.emplace_back(n);
  std::vector<traag::VertexPair> und;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) und.push_back({v[i], v[j]});
  return MixedGraph(std::move(v), und, {});
}

}  // namespace fixtures
