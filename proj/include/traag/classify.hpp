#pragma once

#include <optional>
#include <string>
#include <vector>

#include "traag/mixed_graph.hpp"

namespace traag {

enum class CertificateKind {
  NonSpecialVertex,
  ForbiddenP4,
  ForbiddenC4,
  ForbiddenLambdaS,
  InducedCycle,
};

std::string to_string(CertificateKind kind);

// A re-checkable refutation: the witness lists vertices of the tested graph
// in the pattern's vertex order (for NonSpecialVertex: the negative vertex
// followed by the endpoint of an incident edge not pointing at it; for
// InducedCycle: the cycle in cyclic order).
struct Certificate {
  CertificateKind kind;
  std::vector<VertexId> witness;
  bool operator==(const Certificate&) const = default;
};

bool verify_certificate(const MixedGraph& g, const Certificate& cert);

// A fixed small graph to search for as an induced subgraph. When
// underlying_only is set, matching ignores edge directions.
struct Pattern {
  std::string name;
  MixedGraph graph;
  std::vector<VertexId> order;
  bool underlying_only = false;
};

const Pattern& pattern_p4();
const Pattern& pattern_c4();
// Two arrows sharing a terminus, third pair non-adjacent.
const Pattern& pattern_lambda_s();
// The seven 3-vertex obstructions to speciality.
const std::vector<Pattern>& forbidden_triples();

// First induced embedding of the pattern (images listed in pattern order),
// searching vertex subsets in lexicographic order.
std::optional<std::vector<VertexId>> contains_induced(const MixedGraph& g, const Pattern& p);

// nullopt means the predicate holds; otherwise the certificate refutes it.
std::optional<Certificate> is_special(const MixedGraph& g);
std::optional<Certificate> is_droms(const MixedGraph& g);
std::optional<Certificate> is_chordal(const MixedGraph& g);

// T(g) is elementary exactly when g is Droms.
inline std::optional<Certificate> is_elementary(const MixedGraph& g) { return is_droms(g); }
// T(g) is coherent exactly when the underlying graph is chordal.
inline std::optional<Certificate> is_coherent(const MixedGraph& g) { return is_chordal(g); }

// Underlying graph complete, at most one negative vertex, and that vertex (if
// present) a sinkhole.
bool is_complete_special(const MixedGraph& g);

}  // namespace traag
