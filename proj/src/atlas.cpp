#include "traag/atlas.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "traag/classify.hpp"
#include "traag/decompose.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace traag {

std::uint64_t labeled_count(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (pairs > 31)
    throw GraphError(ErrorCode::BoundExceeded, "too many vertex pairs to index");
  return std::uint64_t{1} << (2 * pairs);
}

namespace {

std::vector<std::uint8_t> codes_of(std::size_t n, std::uint64_t index) {
  std::vector<std::uint8_t> codes(n * (n - 1) / 2);
  for (std::size_t p = 0; p < codes.size(); ++p)
    codes[p] = static_cast<std::uint8_t>((index >> (2 * p)) & 3);
  return codes;
}

}  // namespace

MixedGraph decode(std::size_t n, std::uint64_t index) {
  std::vector<VertexId> verts;
  for (std::size_t i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i));
  std::vector<VertexPair> und;
  std::vector<VertexPair> dir;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      switch ((index >> (2 * detail::pair_index(n, i, j))) & 3) {
        case 1: und.push_back({verts[i], verts[j]}); break;
        case 2: dir.push_back({verts[i], verts[j]}); break;
        case 3: dir.push_back({verts[j], verts[i]}); break;
        default: break;
      }
    }
  return MixedGraph(std::move(verts), und, dir);
}

std::map<std::string, std::uint64_t> scan_range(std::size_t n, std::uint64_t lo,
                                                std::uint64_t hi) {
  std::map<std::string, std::uint64_t> least;
  for (std::uint64_t index = lo; index < hi; ++index) {
    std::string key = detail::canonical_key(n, codes_of(n, index));
    auto [it, inserted] = least.try_emplace(std::move(key), index);
    if (!inserted && index < it->second) it->second = index;
  }
  return least;
}

namespace {

std::vector<CorpusEntry> entries_from(std::size_t n,
                                      const std::map<std::string, std::uint64_t>& least) {
  std::vector<CorpusEntry> entries;
  entries.reserve(least.size());
  for (const auto& [key, index] : least) {
    CorpusEntry entry;
    entry.graph = decode(n, index);
    entry.key = key;
    entry.labeled_index = index;
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              return a.labeled_index < b.labeled_index;
            });
  return entries;
}

}  // namespace

std::vector<CorpusEntry> enumerate_serial(std::size_t n) {
  return entries_from(n, scan_range(n, 0, labeled_count(n)));
}

std::vector<CorpusEntry> enumerate_parallel(std::size_t n, int jobs) {
  const std::uint64_t total = labeled_count(n);
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  const int threads = jobs > 0 ? jobs : 1;
#endif
  const std::uint64_t chunks =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, std::uint64_t(threads) * 8));
  std::vector<std::map<std::string, std::uint64_t>> parts(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
    const std::uint64_t lo = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
    const std::uint64_t len = total / chunks + (static_cast<std::uint64_t>(c) < total % chunks);
    parts[c] = scan_range(n, lo, lo + len);
  }
  std::map<std::string, std::uint64_t> merged;
  for (const auto& part : parts)
    for (const auto& [key, index] : part) {
      auto [it, inserted] = merged.try_emplace(key, index);
      if (!inserted && index < it->second) it->second = index;
    }
  return entries_from(n, merged);
}

std::vector<CorpusEntry> enumerate_atlas(std::size_t n, int jobs) {
  if (n < 1 || n > 5)
    throw GraphError(ErrorCode::BoundExceeded,
                     "enumeration supports 1 to 5 vertices, got " + std::to_string(n));
  return jobs <= 1 ? enumerate_serial(n) : enumerate_parallel(n, jobs);
}

// ---- classifier fills and oracles --------------------------------------------

void fill_predicates(CorpusEntry& entry) {
  PredicateRecord rec;
  rec.special = !is_special(entry.graph).has_value();
  rec.droms = !is_droms(entry.graph).has_value();
  rec.chordal = !is_chordal(entry.graph).has_value();
  rec.complete_special = is_complete_special(entry.graph);
  rec.decomposes = std::holds_alternative<Tree>(decompose(entry.graph));
  rec.satellite_count =
      rec.special ? static_cast<long long>(satellites(entry.graph).size()) : -1;
  RigidityVerdict verdict = rigidity_verdict(entry.graph);
  rec.verdict = verdict.status;
  rec.verdict_reason = verdict.reason;
  rec.filled = true;
  entry.predicates = rec;
}

namespace {

std::vector<std::size_t> subset_indices_next(std::vector<std::size_t>& idx, std::size_t n) {
  // Advances a sorted index combination; returns empty when exhausted.
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return {};
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return idx;
}

template <typename Fn>
bool any_subset(const std::vector<VertexId>& verts, std::size_t k, Fn matches) {
  if (k > verts.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::set<VertexId> subset;
    for (std::size_t i : idx) subset.insert(verts[i]);
    if (matches(subset)) return true;
    if (subset_indices_next(idx, verts.size()).empty()) return false;
  }
}

const std::vector<std::string>& forbidden_triple_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& pattern : forbidden_triples())
      out.push_back(canonical_form(pattern.graph));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return keys;
}

const std::string& p4_key() {
  static const std::string key = canonical_form(pattern_p4().graph);
  return key;
}

const std::string& c4_key() {
  static const std::string key = canonical_form(pattern_c4().graph);
  return key;
}

const std::string& lambda_s_key() {
  static const std::string key = canonical_form(pattern_lambda_s().graph);
  return key;
}

}  // namespace

bool oracle_special(const MixedGraph& g) {
  const auto& banned = forbidden_triple_keys();
  return !any_subset(g.vertices(), 3, [&](const std::set<VertexId>& subset) {
    return std::binary_search(banned.begin(), banned.end(),
                              canonical_form(g.induced_subgraph(subset)));
  });
}

bool oracle_chordal(const MixedGraph& g) {
  const MixedGraph und = g.underlying_graph();
  for (std::size_t k = 4; k <= und.vertex_count(); ++k) {
    const bool has_hole = any_subset(und.vertices(), k, [&](const std::set<VertexId>& subset) {
      const MixedGraph sub = und.induced_subgraph(subset);
      for (const auto& v : sub.vertices())
        if (sub.degree(v) != 2) return false;
      return sub.is_connected();
    });
    if (has_hole) return false;
  }
  return true;
}

bool oracle_droms(const MixedGraph& g) {
  if (!oracle_special(g)) return false;
  const MixedGraph und = g.underlying_graph();
  const bool bad_four = any_subset(und.vertices(), 4, [&](const std::set<VertexId>& subset) {
    const std::string key = canonical_form(und.induced_subgraph(subset));
    return key == p4_key() || key == c4_key();
  });
  if (bad_four) return false;
  return !any_subset(g.vertices(), 3, [&](const std::set<VertexId>& subset) {
    return canonical_form(g.induced_subgraph(subset)) == lambda_s_key();
  });
}

void fill_oracles(CorpusEntry& entry) {
  entry.oracle.special = oracle_special(entry.graph);
  entry.oracle.chordal = oracle_chordal(entry.graph);
  entry.oracle.droms = oracle_droms(entry.graph);
  entry.oracle.filled = true;
}

OracleReport oracle_check(std::vector<CorpusEntry>& entries, int jobs, std::uint64_t seed) {
  OracleReport report;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
  for (long long i = 0; i < static_cast<long long>(entries.size()); ++i) {
    if (!entries[i].predicates.filled) fill_predicates(entries[i]);
    if (!entries[i].oracle.filled) fill_oracles(entries[i]);
  }

  for (const auto& entry : entries) {
    ++report.entries_checked;
    const auto& p = entry.predicates;
    const auto& o = entry.oracle;
    if (p.special != o.special)
      report.discrepancies.push_back(entry.key + ": special classifier vs oracle");
    if (p.chordal != o.chordal)
      report.discrepancies.push_back(entry.key + ": chordal classifier vs oracle");
    if (p.droms != o.droms)
      report.discrepancies.push_back(entry.key + ": droms classifier vs oracle");
    if (p.decomposes != p.droms)
      report.discrepancies.push_back(entry.key + ": decompose success vs droms");
    if ((p.verdict == RigidityStatus::Rigid) && p.special && p.satellite_count > 0)
      report.discrepancies.push_back(entry.key + ": rigid verdict despite satellites");
  }

  // Spot-check that entries sharing an edge-count fingerprint are genuinely
  // non-isomorphic; canonical keys already claim they are.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i)
    groups[{entries[i].graph.vertex_count(), entries[i].graph.undirected_edges().size(),
            entries[i].graph.directed_edges().size()}]
        .push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (const auto& [fingerprint, members] : groups)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        candidates.push_back({members[a], members[b]});
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  if (candidates.size() > 200) candidates.resize(200);
  for (const auto& [a, b] : candidates) {
    ++report.iso_spot_checks;
    if (find_isomorphism(entries[a].graph, entries[b].graph))
      report.discrepancies.push_back(entries[a].key + " / " + entries[b].key +
                                     ": duplicate isomorphism class");
  }
  return report;
}

}  // namespace traag
