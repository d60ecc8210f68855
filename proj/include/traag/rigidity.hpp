#pragma once

#include <optional>

#include "traag/mixed_graph.hpp"
#include "traag/words.hpp"

namespace traag {

// ---- satellites ------------------------------------------------------------

struct SatellitePair {
  VertexId sinkhole;
  VertexId satellite;
  auto operator<=>(const SatellitePair&) const = default;
};

// All pairs (sinkhole w, vertex v) with v not adjacent to w, sharing at least
// one neighbor with w, and with every neighbor of v also a neighbor of w.
// Requires a special graph; sorted by (sinkhole, satellite).
std::vector<SatellitePair> satellites(const MixedGraph& g);

// ---- non-rigidity witnesses --------------------------------------------------

// A second graph with the same group: the satellite v is replaced by a fresh
// vertex v' whose star flips between undirected and directed, and the two
// generator maps realize mutually inverse isomorphisms of the groups.
struct Witness {
  MixedGraph g_prime;
  VertexId sinkhole;
  VertexId satellite;
  VertexId replacement;               // the fresh vertex standing in for the satellite
  std::map<VertexId, Word> forward;   // generators of the input group into g_prime's
  std::map<VertexId, Word> backward;  // generators of g_prime's group into the input's
  // True when both graphs decompose, both maps pass the relator check, and
  // both composites are the identity on generators.
  bool verified = false;
  // Exponents of the sinkhole letter in the forward/backward images of the
  // satellite; (-1, +1) unless verification forced another variant.
  std::pair<int, int> signs{-1, 1};
};

Witness non_rigid_witness(const MixedGraph& g, const SatellitePair& pair);

// ---- verdicts ---------------------------------------------------------------

enum class RigidityStatus { Rigid, NotRigid, Unknown };
enum class RigidReason { SimplicialDroms, UniversalSinkhole, DromsNoSatellite };

std::string to_string(RigidityStatus s);
std::string to_string(RigidReason r);

struct RigidityVerdict {
  RigidityStatus status = RigidityStatus::Unknown;
  std::optional<RigidReason> reason;  // present exactly when status == Rigid
  std::optional<Witness> witness;     // present exactly when status == NotRigid
  std::string note;                   // present exactly when status == Unknown
};

// Decision ladder: simplicial graphs are rigid; a special graph whose sinkhole
// is joined to every other vertex is rigid; a special graph with a satellite
// is not rigid (with verified witness); a Droms graph without satellites is
// rigid; anything else is undecided here.
RigidityVerdict rigidity_verdict(const MixedGraph& g);

}  // namespace traag
