#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "traag/mixed_graph.hpp"
#include "traag/rigidity.hpp"

namespace traag {

// ---- corpus entries ---------------------------------------------------------

struct PredicateRecord {
  bool special = false;
  bool droms = false;
  bool chordal = false;
  bool complete_special = false;
  bool decomposes = false;
  long long satellite_count = -1;  // -1 when the graph is not special
  RigidityStatus verdict = RigidityStatus::Unknown;
  std::optional<RigidReason> verdict_reason;
  bool filled = false;
};

struct OracleRecord {
  bool special = false;
  bool chordal = false;
  bool droms = false;
  bool filled = false;
};

struct CorpusEntry {
  MixedGraph graph;            // representative: the least labeled index
  std::string key;             // canonical form, equal iff isomorphic
  std::uint64_t labeled_index = 0;
  PredicateRecord predicates;  // main implementations
  OracleRecord oracle;         // independent brute-force answers
};

// ---- enumeration ------------------------------------------------------------

// Number of labeled mixed graphs on n vertices: each of the C(n,2) pairs is
// none / undirected / one of two arrows.
std::uint64_t labeled_count(std::size_t n);

// The labeled graph for an index: vertices v0..v{n-1}; two bits per pair in
// the pair order of detail::pair_index (0 none, 1 undirected, 2 arrow i->j,
// 3 arrow j->i).
MixedGraph decode(std::size_t n, std::uint64_t index);

// Canonical key -> least labeled index over the half-open index range.
std::map<std::string, std::uint64_t> scan_range(std::size_t n, std::uint64_t lo,
                                                std::uint64_t hi);

// One entry per isomorphism class, sorted by labeled index. The serial walk is
// the reference; the parallel version splits the index range into chunks and
// merges, which must give identical output for any chunking.
std::vector<CorpusEntry> enumerate_serial(std::size_t n);
std::vector<CorpusEntry> enumerate_parallel(std::size_t n, int jobs = 0);
// Dispatch: jobs <= 1 runs serial. Throws BoundExceeded unless 1 <= n <= 5.
std::vector<CorpusEntry> enumerate_atlas(std::size_t n, int jobs = 0);

// ---- classifier fills and independent oracles --------------------------------

void fill_predicates(CorpusEntry& entry);
void fill_oracles(CorpusEntry& entry);

// Brute force by isomorphism-testing small induced subgraphs against fixed
// pattern lists (canonical-form equality), bypassing the main classifiers.
bool oracle_special(const MixedGraph& g);
bool oracle_chordal(const MixedGraph& g);
bool oracle_droms(const MixedGraph& g);

struct OracleReport {
  std::size_t entries_checked = 0;
  std::size_t iso_spot_checks = 0;
  // One line per disagreement between a classifier and its oracle; empty means
  // the corpus passes.
  std::vector<std::string> discrepancies;
};

// Fills predicates and oracles for every entry, records any disagreement
// (including decompose-succeeds vs droms), and spot-checks non-isomorphism of
// random entry pairs with matching edge-count fingerprints.
OracleReport oracle_check(std::vector<CorpusEntry>& entries, int jobs = 0,
                          std::uint64_t seed = 12345);

}  // namespace traag
