#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "traag/atlas.hpp"
#include "traag/classify.hpp"
#include "traag/decompose.hpp"
#include "traag/graph_io.hpp"
#include "traag/mixed_graph.hpp"
#include "traag/rigidity.hpp"
#include "traag/words.hpp"

namespace {

using nlohmann::json;
using namespace traag;

constexpr int kExitOk = 0;
constexpr int kExitPredicateFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

int exit_code_for(const GraphError& e) {
  switch (e.code()) {
    case ErrorCode::NotSpecial:
    case ErrorCode::NotConnected:
    case ErrorCode::NotDroms:
    case ErrorCode::TooSmall:
    case ErrorCode::Disconnected:
    case ErrorCode::NotASatellite:
    case ErrorCode::NoCentralVertex:
    case ErrorCode::IneligibleTip:
      return kExitPredicateFalse;  // well-formed input, negative answer
    default:
      return kExitInputError;
  }
}

// One report per invocation: stable JSON shape, or the same facts as text.
struct Reporter {
  bool as_json = false;
  json report;
  std::vector<std::string> lines;

  Reporter(bool as_json, const std::string& input, const std::string& command)
      : as_json(as_json) {
    report["input"] = input;
    report["command"] = command;
    report["result"] = json::object();
    report["certificates"] = json::array();
  }

  void human(const std::string& line) { lines.push_back(line); }

  void flush(double timing_ms) {
    report["timing_ms"] = timing_ms;
    if (as_json) {
      std::cout << report.dump(2) << "\n";
    } else {
      for (const auto& line : lines) std::cout << line << "\n";
    }
  }
};

json graph_json(const MixedGraph& g) {
  json j;
  j["vertices"] = g.vertices();
  j["edges"] = json::array();
  for (const auto& [a, b] : g.undirected_edges()) j["edges"].push_back({a, b});
  j["arrows"] = json::array();
  for (const auto& [o, t] : g.directed_edges()) j["arrows"].push_back({o, t});
  return j;
}

json certificate_json(const std::string& predicate, const Certificate& cert) {
  json j;
  j["predicate"] = predicate;
  j["kind"] = to_string(cert.kind);
  j["witness"] = cert.witness;
  return j;
}

std::string join(const std::vector<VertexId>& names) {
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) out += " ";
    out += name;
  }
  return out;
}

json tree_json(const Tree& t) {
  if (const auto* leaf = std::get_if<LeafNode>(&t->node))
    return json{{"leaf", {{"vertex", leaf->vertex}, {"sign", leaf->sign}}}};
  if (const auto* free = std::get_if<FreeNode>(&t->node)) {
    json parts = json::array();
    for (const auto& factor : free->factors) parts.push_back(tree_json(factor));
    return json{{"free", parts}};
  }
  const auto& cone = std::get<ConeNode>(t->node);
  return json{{"cone", {{"tip", cone.tip}, {"base", tree_json(cone.base)}}}};
}

json images_json(const std::map<VertexId, Word>& images) {
  json j = json::object();
  for (const auto& [v, w] : images) j[v] = format_word(w);
  return j;
}

Tree decompose_or_throw(const MixedGraph& g) {
  auto result = decompose(g);
  if (std::holds_alternative<Certificate>(result))
    throw GraphError(ErrorCode::NotDroms,
                     "graph has an induced obstruction; its word problem is not supported");
  return std::get<Tree>(std::move(result));
}

int run_classify(Reporter& rep, const MixedGraph& g) {
  const auto special = is_special(g);
  const auto droms = is_droms(g);
  const auto chordal = is_chordal(g);
  rep.report["result"] = {{"special", !special},
                          {"droms", !droms},
                          {"chordal", !chordal},
                          {"complete_special", is_complete_special(g)}};
  auto describe = [&](const char* name, const std::optional<Certificate>& cert) {
    if (cert) {
      rep.report["certificates"].push_back(certificate_json(name, *cert));
      rep.human(std::string(name) + ": no (" + to_string(cert->kind) + ": " +
                join(cert->witness) + ")");
    } else {
      rep.human(std::string(name) + ": yes");
    }
  };
  describe("special", special);
  describe("droms", droms);
  describe("chordal", chordal);
  rep.human(std::string("complete_special: ") + (is_complete_special(g) ? "yes" : "no"));
  return droms ? kExitPredicateFalse : kExitOk;
}

int run_decompose(Reporter& rep, const MixedGraph& g) {
  auto result = decompose(g);
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    rep.report["result"] = {{"decomposes", false}};
    rep.report["certificates"].push_back(certificate_json("droms", *cert));
    rep.human("no decomposition (" + to_string(cert->kind) + ": " + join(cert->witness) + ")");
    return kExitPredicateFalse;
  }
  const Tree& tree = std::get<Tree>(result);
  rep.report["result"] = {{"decomposes", true}, {"tree", tree_json(tree)}};
  rep.human(tree_to_string(tree));
  return kExitOk;
}

int run_presentation(Reporter& rep, const MixedGraph& g) {
  const Presentation pres = presentation(g);
  json relators = json::array();
  for (const auto& rel : pres.relators) relators.push_back(format_word(rel));
  rep.report["result"] = {{"generators", pres.generators}, {"relators", relators}};
  rep.human("generators: " + join(pres.generators));
  for (const auto& rel : pres.relators) rep.human("relator: " + format_word(rel));
  return kExitOk;
}

int run_abelianize(Reporter& rep, const MixedGraph& g) {
  const Abelianization ab = abelianization(g);
  rep.report["result"] = {{"free_rank", ab.free_rank}, {"torsion_rank", ab.torsion_rank}};
  rep.human("Z^" + std::to_string(ab.free_rank) + " x (Z/2)^" +
            std::to_string(ab.torsion_rank));
  return kExitOk;
}

int run_quotient(Reporter& rep, const MixedGraph& g) {
  const QuotientResult q = complete_special_quotient(g);
  rep.report["result"] = {{"quotient", graph_json(q.quotient)}, {"images", images_json(q.images)}};
  for (const auto& line : {serialize_graph(q.quotient)}) rep.human(line);
  for (const auto& [v, w] : q.images) rep.human("image " + v + " -> " + format_word(w));
  return kExitOk;
}

int run_normal_subgroup(Reporter& rep, const MixedGraph& g) {
  const AbelianNormal data = maximal_abelian_normal(g);
  json generators = json::array();
  for (const auto& w : data.generators) generators.push_back(format_word(w));
  rep.report["result"] = {
      {"case", to_string(data.kind)}, {"generators", generators}, {"rank", data.rank}};
  rep.human("case: " + to_string(data.kind));
  rep.human("rank: " + std::to_string(data.rank));
  for (const auto& w : data.generators) rep.human("generator: " + format_word(w));
  return kExitOk;
}

int run_satellites(Reporter& rep, const MixedGraph& g) {
  const auto pairs = satellites(g);
  json list = json::array();
  for (const auto& [w, v] : pairs) {
    list.push_back({{"sinkhole", w}, {"satellite", v}});
    rep.human("satellite " + v + " of sinkhole " + w);
  }
  rep.report["result"] = {{"satellites", list}};
  if (pairs.empty()) rep.human("no satellites");
  return kExitOk;
}

json witness_json(const Witness& witness) {
  json j;
  j["g_prime"] = graph_json(witness.g_prime);
  j["sinkhole"] = witness.sinkhole;
  j["satellite"] = witness.satellite;
  j["replacement"] = witness.replacement;
  j["forward"] = images_json(witness.forward);
  j["backward"] = images_json(witness.backward);
  j["verified"] = witness.verified;
  j["signs"] = {witness.signs.first, witness.signs.second};
  return j;
}

int run_rigidity(Reporter& rep, const MixedGraph& g, const std::string& input_path) {
  const RigidityVerdict verdict = rigidity_verdict(g);
  json result;
  result["status"] = to_string(verdict.status);
  if (verdict.reason) result["reason"] = to_string(*verdict.reason);
  if (!verdict.note.empty()) result["note"] = verdict.note;
  rep.human("verdict: " + to_string(verdict.status) +
            (verdict.reason ? " (" + to_string(*verdict.reason) + ")" : "") +
            (!verdict.note.empty() ? " — " + verdict.note : ""));
  if (verdict.witness) {
    const std::filesystem::path in(input_path);
    const std::filesystem::path out =
        in.parent_path() / (in.stem().string() + ".witness.graph");
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot write '" + out.string() + "'");
    file << serialize_graph(verdict.witness->g_prime);
    result["witness_file"] = out.string();
    rep.report["witness"] = witness_json(*verdict.witness);
    rep.human("witness graph written to " + out.string());
    rep.human(std::string("witness verified: ") + (verdict.witness->verified ? "yes" : "no"));
  }
  rep.report["result"] = result;
  return kExitOk;
}

int run_reduce(Reporter& rep, const MixedGraph& g, const std::string& word_text) {
  const WordEngine engine(decompose_or_throw(g));
  const Word reduced = engine.to_word(engine.reduce(parse_word(word_text)));
  rep.report["result"] = {{"word", format_word(reduced)}};
  rep.human(format_word(reduced));
  return kExitOk;
}

int run_equal(Reporter& rep, const MixedGraph& g, const std::string& w1, const std::string& w2) {
  const WordEngine engine(decompose_or_throw(g));
  const bool same = engine.equal(parse_word(w1), parse_word(w2));
  rep.report["result"] = {{"equal", same}};
  rep.human(same ? "equal" : "not equal");
  return same ? kExitOk : kExitPredicateFalse;
}

int run_hom(Reporter& rep, const MixedGraph& src, const MixedGraph& dst,
            const std::string& map_text) {
  const HomCheck check = check_hom(src, dst, parse_generator_map(map_text));
  json result;
  result["ok"] = check.ok;
  if (check.failing_relator) result["failing_relator"] = format_word(*check.failing_relator);
  rep.report["result"] = result;
  rep.human(check.ok ? "homomorphism"
                     : "not a homomorphism (fails " + format_word(*check.failing_relator) + ")");
  return check.ok ? kExitOk : kExitPredicateFalse;
}

int run_enumerate(Reporter& rep, std::size_t n, std::size_t max_n, bool oracle, int jobs,
                  std::uint64_t seed) {
  if (n > max_n)
    throw GraphError(ErrorCode::BoundExceeded,
                     "n exceeds --max-n (" + std::to_string(max_n) + ")");
  auto entries = enumerate_atlas(n, jobs);
  rep.human(std::to_string(entries.size()));
  json list = json::array();
  int code = kExitOk;
  std::optional<OracleReport> checked;
  if (oracle) {
    checked = oracle_check(entries, jobs, seed);
    for (const auto& line : checked->discrepancies) std::cerr << "discrepancy: " << line << "\n";
    if (!checked->discrepancies.empty()) code = kExitInternalError;
  }
  for (const auto& entry : entries) {
    json record;
    record["key"] = entry.key;
    record["labeled_index"] = entry.labeled_index;
    record["graph"] = graph_json(entry.graph);
    if (entry.predicates.filled) {
      record["predicates"] = {
          {"special", entry.predicates.special},
          {"droms", entry.predicates.droms},
          {"chordal", entry.predicates.chordal},
          {"complete_special", entry.predicates.complete_special},
          {"decomposes", entry.predicates.decomposes},
          {"satellite_count", entry.predicates.satellite_count},
          {"verdict", to_string(entry.predicates.verdict)}};
      if (entry.predicates.verdict_reason)
        record["predicates"]["verdict_reason"] = to_string(*entry.predicates.verdict_reason);
    }
    if (entry.oracle.filled)
      record["oracle"] = {{"special", entry.oracle.special},
                          {"chordal", entry.oracle.chordal},
                          {"droms", entry.oracle.droms}};
    list.push_back(std::move(record));
    rep.human(std::to_string(entry.labeled_index) + " " + entry.key);
  }
  rep.report["result"] = {{"count", entries.size()}, {"entries", list}};
  if (checked) {
    rep.report["result"]["oracle_check"] = {
        {"entries_checked", checked->entries_checked},
        {"iso_spot_checks", checked->iso_spot_checks},
        {"discrepancies", checked->discrepancies}};
    rep.human("oracle check: " + std::to_string(checked->entries_checked) + " entries, " +
              std::to_string(checked->iso_spot_checks) + " spot checks, " +
              std::to_string(checked->discrepancies.size()) + " discrepancies");
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide structural properties of twisted right-angled Artin groups"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 12345;
  std::size_t max_n = 5;
  app.add_flag("--json", as_json, "emit a JSON report instead of text");
  app.add_option("--seed", seed, "seed for randomized spot checks");
  app.add_option("--max-n", max_n, "largest vertex count enumerate accepts");

  std::string file;
  std::string dst_file;
  std::string word_text;
  std::string w1_text;
  std::string w2_text;
  std::string map_text;
  std::size_t enum_n = 0;
  bool oracle = false;
  int jobs = 0;

  // Global flags may appear after the subcommand, so let unmatched options
  // climb back up to the main app.
  auto add_cmd = [&](const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->fallthrough();
    return cmd;
  };
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "graph file")->required();
  };
  auto* classify_cmd = add_cmd("classify", "predicates with certificates");
  add_file(classify_cmd);
  auto* decompose_cmd = add_cmd("decompose", "decomposition tree or obstruction");
  add_file(decompose_cmd);
  auto* presentation_cmd = add_cmd("presentation", "generators and relators");
  add_file(presentation_cmd);
  auto* abelianize_cmd = add_cmd("abelianize", "abelianization ranks");
  add_file(abelianize_cmd);
  auto* quotient_cmd = add_cmd("quotient", "complete special quotient");
  add_file(quotient_cmd);
  auto* normal_cmd = add_cmd("normal-subgroup", "maximal abelian normal subgroup");
  add_file(normal_cmd);
  auto* satellites_cmd = add_cmd("satellites", "satellite pairs");
  add_file(satellites_cmd);
  auto* rigidity_cmd = add_cmd("rigidity", "three-valued rigidity verdict");
  add_file(rigidity_cmd);
  auto* reduce_cmd = add_cmd("reduce", "normal form of a word");
  add_file(reduce_cmd);
  reduce_cmd->add_option("--word", word_text, "word to reduce")->required();
  auto* equal_cmd = add_cmd("equal", "decide equality of two words");
  add_file(equal_cmd);
  equal_cmd->add_option("--w1", w1_text, "first word")->required();
  equal_cmd->add_option("--w2", w2_text, "second word")->required();
  auto* hom_cmd = add_cmd("hom", "verify a generator map is a homomorphism");
  hom_cmd->add_option("src", file, "source graph file")->required();
  hom_cmd->add_option("dst", dst_file, "target graph file")->required();
  hom_cmd->add_option("--map", map_text, "images, e.g. 'a=b^2;b=a'")->required();
  auto* enumerate_cmd = add_cmd("enumerate", "all isomorphism classes on n vertices");
  enumerate_cmd->add_option("n", enum_n, "vertex count")->required();
  enumerate_cmd->add_flag("--oracle-check", oracle, "compare classifiers against brute force");
  enumerate_cmd->add_option("--jobs", jobs, "parallel chunks (0 = hardware default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    std::unique_ptr<Reporter> rep;
    int code = kExitOk;
    if (*enumerate_cmd) {
      rep = std::make_unique<Reporter>(as_json, "n=" + std::to_string(enum_n), "enumerate");
      code = run_enumerate(*rep, enum_n, max_n, oracle, jobs, seed);
    } else if (*hom_cmd) {
      rep = std::make_unique<Reporter>(as_json, file + " -> " + dst_file, "hom");
      code = run_hom(*rep, parse_graph_file(file), parse_graph_file(dst_file), map_text);
    } else {
      const MixedGraph g = parse_graph_file(file);
      if (*classify_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "classify");
        code = run_classify(*rep, g);
      } else if (*decompose_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "decompose");
        code = run_decompose(*rep, g);
      } else if (*presentation_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "presentation");
        code = run_presentation(*rep, g);
      } else if (*abelianize_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "abelianize");
        code = run_abelianize(*rep, g);
      } else if (*quotient_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "quotient");
        code = run_quotient(*rep, g);
      } else if (*normal_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "normal-subgroup");
        code = run_normal_subgroup(*rep, g);
      } else if (*satellites_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "satellites");
        code = run_satellites(*rep, g);
      } else if (*rigidity_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "rigidity");
        code = run_rigidity(*rep, g, file);
      } else if (*reduce_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "reduce");
        code = run_reduce(*rep, g, word_text);
      } else if (*equal_cmd) {
        rep = std::make_unique<Reporter>(as_json, file, "equal");
        code = run_equal(*rep, g, w1_text, w2_text);
      }
    }
    if (rep) rep->flush(elapsed_ms());
    return code;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
