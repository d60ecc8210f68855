#include "traag/rigidity.hpp"

#include <algorithm>

#include "traag/classify.hpp"
#include "traag/decompose.hpp"

namespace traag {

std::vector<SatellitePair> satellites(const MixedGraph& g) {
  if (is_special(g))
    throw GraphError(ErrorCode::NotSpecial, "satellites are defined on special graphs");
  std::vector<SatellitePair> out;
  for (const auto& w : g.sinkholes()) {
    const auto hood = g.neighbors(w);
    for (const auto& v : g.vertices()) {
      if (v == w || g.adjacent(v, w)) continue;
      const auto around = g.neighbors(v);
      const bool shares = std::any_of(around.begin(), around.end(),
                                      [&](const VertexId& u) { return hood.count(u) > 0; });
      const bool contained = std::all_of(around.begin(), around.end(),
                                         [&](const VertexId& u) { return hood.count(u) > 0; });
      if (shares && contained) out.push_back({w, v});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

MixedGraph flip_satellite_star(const MixedGraph& g, const VertexId& v, const VertexId& vp) {
  std::vector<VertexId> verts;
  for (const auto& x : g.vertices()) verts.push_back(x == v ? vp : x);
  std::vector<VertexPair> und;
  std::vector<VertexPair> dir;
  if (g.is_negative(v)) {
    // v is a sinkhole: its incoming arrows become undirected edges at v'.
    for (const auto& [a, b] : g.undirected_edges()) {
      if (a == v || b == v)
        throw std::logic_error("sinkhole satellite with an undirected edge");
      und.push_back({a, b});
    }
    for (const auto& [o, t] : g.directed_edges()) {
      if (o == v) throw std::logic_error("sinkhole satellite with an outgoing edge");
      if (t == v)
        und.push_back({o, vp});
      else
        dir.push_back({o, t});
    }
  } else {
    // v is positive: its undirected edges become arrows at v'.
    for (const auto& [a, b] : g.undirected_edges()) {
      if (a == v)
        dir.push_back({b, vp});
      else if (b == v)
        dir.push_back({a, vp});
      else
        und.push_back({a, b});
    }
    for (const auto& [o, t] : g.directed_edges()) {
      if (o == v || t == v)
        throw std::logic_error("positive satellite with a directed edge");
      dir.push_back({o, t});
    }
  }
  return MixedGraph(std::move(verts), und, dir);
}

bool maps_verify(const MixedGraph& g, const MixedGraph& gp, const WordEngine& engine_g,
                 const WordEngine& engine_gp, const std::map<VertexId, Word>& fwd,
                 const std::map<VertexId, Word>& bwd) {
  if (!check_hom(g, engine_gp, fwd).ok) return false;
  if (!check_hom(gp, engine_g, bwd).ok) return false;
  for (const auto& x : g.vertices())
    if (!engine_g.equal(substitute(bwd, fwd.at(x)), Word{{x, 1}})) return false;
  for (const auto& y : gp.vertices())
    if (!engine_gp.equal(substitute(fwd, bwd.at(y)), Word{{y, 1}})) return false;
  return true;
}

}  // namespace

Witness non_rigid_witness(const MixedGraph& g, const SatellitePair& pair) {
  const auto sats = satellites(g);  // also enforces speciality
  if (std::find(sats.begin(), sats.end(), pair) == sats.end())
    throw GraphError(ErrorCode::NotASatellite,
                     pair.satellite + " is not a satellite of " + pair.sinkhole);

  const VertexId& w = pair.sinkhole;
  const VertexId& v = pair.satellite;
  const VertexId vp = fresh_vertex_name(g, v + "'");

  Witness out;
  out.g_prime = flip_satellite_star(g, v, vp);
  out.sinkhole = w;
  out.satellite = v;
  out.replacement = vp;

  auto make_maps = [&](int e_fwd, int e_bwd) {
    std::pair<std::map<VertexId, Word>, std::map<VertexId, Word>> maps;
    for (const auto& x : g.vertices())
      if (x != v) {
        maps.first[x] = Word{{x, 1}};
        maps.second[x] = Word{{x, 1}};
      }
    maps.first[v] = Word{{vp, 1}, {w, e_fwd}};
    maps.second[vp] = Word{{v, 1}, {w, e_bwd}};
    return maps;
  };

  std::tie(out.forward, out.backward) = make_maps(-1, 1);

  auto own = decompose(g);
  auto other = decompose(out.g_prime);
  if (std::holds_alternative<Tree>(own) && std::holds_alternative<Tree>(other)) {
    const WordEngine engine_g(std::get<Tree>(own));
    const WordEngine engine_gp(std::get<Tree>(other));
    for (auto [e_fwd, e_bwd] :
         {std::pair{-1, 1}, std::pair{1, -1}, std::pair{1, 1}, std::pair{-1, -1}}) {
      auto [fwd, bwd] = make_maps(e_fwd, e_bwd);
      if (maps_verify(g, out.g_prime, engine_g, engine_gp, fwd, bwd)) {
        out.forward = std::move(fwd);
        out.backward = std::move(bwd);
        out.verified = true;
        out.signs = {e_fwd, e_bwd};
        break;
      }
    }
  }
  return out;
}

std::string to_string(RigidityStatus s) {
  switch (s) {
    case RigidityStatus::Rigid: return "Rigid";
    case RigidityStatus::NotRigid: return "NotRigid";
    case RigidityStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(RigidReason r) {
  switch (r) {
    case RigidReason::SimplicialDroms: return "SimplicialDroms";
    case RigidReason::UniversalSinkhole: return "UniversalSinkhole";
    case RigidReason::DromsNoSatellite: return "DromsNoSatellite";
  }
  return "?";
}

RigidityVerdict rigidity_verdict(const MixedGraph& g) {
  RigidityVerdict verdict;
  if (g.directed_edges().empty()) {
    verdict.status = RigidityStatus::Rigid;
    verdict.reason = RigidReason::SimplicialDroms;
    return verdict;
  }
  if (is_special(g)) {
    verdict.status = RigidityStatus::Unknown;
    verdict.note = "no applicable criterion for non-special graphs";
    return verdict;
  }
  for (const auto& u : g.sinkholes())
    if (g.degree(u) == g.vertex_count() - 1) {
      verdict.status = RigidityStatus::Rigid;
      verdict.reason = RigidReason::UniversalSinkhole;
      return verdict;
    }
  const auto sats = satellites(g);
  if (!sats.empty()) {
    verdict.status = RigidityStatus::NotRigid;
    verdict.witness = non_rigid_witness(g, sats.front());
    return verdict;
  }
  if (!is_droms(g)) {
    verdict.status = RigidityStatus::Rigid;
    verdict.reason = RigidReason::DromsNoSatellite;
    return verdict;
  }
  verdict.status = RigidityStatus::Unknown;
  verdict.note = "open conjecture: a special mixed graph without satellites is rigid";
  return verdict;
}

}  // namespace traag
