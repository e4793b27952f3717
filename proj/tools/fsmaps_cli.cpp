#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "fsmaps/bijection.hpp"
#include "fsmaps/dessin.hpp"
#include "fsmaps/error.hpp"
#include "fsmaps/hurwitz.hpp"
#include "fsmaps/hypermap.hpp"
#include "fsmaps/json_io.hpp"
#include "fsmaps/parallel.hpp"
#include "fsmaps/simplifier.hpp"
#include "fsmaps/verify.hpp"

using namespace fsmaps;

namespace {

constexpr int kUsageError = 2;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

bool is_hypermap_json(const Json& j) { return j.is_object() && j.value("kind", "") == "hypermap"; }

void check_map_input(const MapData& map, bool hypermap) {
  if (hypermap)
    validate_hypermap(map);
  else
    validate(map);
}

struct HurwitzArgs {
  std::string kind = "strict";
  std::string lambda, mu;
  int order = -1;
  bool brute = false;
  bool json = false;
};

int cmd_hurwitz(const HurwitzArgs& a) {
  const Partition lambda = Partition::parse(a.lambda), mu = Partition::parse(a.mu);
  if (lambda.size() != mu.size()) throw InvalidInput("size mismatch: |lambda| != |mu|");
  HurwitzKind kind;
  if (a.kind == "strict")
    kind = HurwitzKind::strict;
  else if (a.kind == "weak")
    kind = HurwitzKind::weak;
  else
    throw InvalidInput("unknown kind: " + a.kind);
  const int d = lambda.size();
  const int order = a.order >= 0 ? a.order : (kind == HurwitzKind::strict ? d - 1 : 6);
  LaurentSeries series = kind == HurwitzKind::strict ? strict_character(lambda, mu).series
                                                     : weak_character(lambda, mu, order).series;
  if (kind == HurwitzKind::strict && order < d - 1) series = series.truncated(order);

  Json rows = Json::array();
  bool all_match = true;
  if (a.brute) {
    for (int k = 0; k <= order; ++k) {
      const Rational brute = kind == HurwitzKind::strict ? strict_brute(lambda, mu, k) : weak_brute(lambda, mu, k);
      const Rational formula = series.coefficient(k);
      const bool match = brute == formula;
      all_match = all_match && match;
      rows.push_back(Json{{"k", k}, {"brute", to_string(brute)}, {"character", to_string(formula)}, {"match", match}});
    }
  }
  if (a.json) {
    Json out{{"kind", a.kind}, {"lambda", lambda.to_csv()}, {"mu", mu.to_csv()}, {"order", order},
             {"series", to_json(series)}};
    if (a.brute) {
      out["brute"] = rows;
      out["match"] = all_match;
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << series.to_string() << '\n';
    for (const auto& r : rows)
      std::cout << "k=" << r["k"].get<int>() << " brute=" << r["brute"].get<std::string>()
                << " character=" << r["character"].get<std::string>() << " match=" << (r["match"].get<bool>() ? "yes" : "no")
                << '\n';
  }
  return all_match ? 0 : 1;
}

struct EnumerateArgs {
  std::string kind;
  std::string lambda, mu;
  int edges = 0;
  int k = -1;
  bool json = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  const Partition lambda = Partition::parse(a.lambda);
  if (a.kind == "dessin") {
    if (!a.mu.empty() && a.k >= 0) {
      const Partition mu = Partition::parse(a.mu);
      if (mu.size() != lambda.size()) throw InvalidInput("size mismatch: |lambda| != |mu|");
      const Rational value = enumerate_dessins(lambda, mu, a.k);
      if (a.json)
        std::cout << Json{{"lambda", lambda.to_csv()}, {"mu", mu.to_csv()}, {"k", a.k}, {"count", to_string(value)}}.dump()
                  << '\n';
      else
        std::cout << to_string(value) << '\n';
      return 0;
    }
    if (!a.mu.empty() || a.k >= 0) throw InvalidInput("dessin needs both --mu and --k, or neither");
    for (const auto& [key, value] : dessin_table(lambda)) {
      if (a.json)
        std::cout << Json{{"lambda", lambda.to_csv()}, {"mu", key.first.to_csv()}, {"k", key.second},
                          {"count", to_string(value)}}
                         .dump()
                  << '\n';
      else
        std::cout << key.first.to_csv() << ' ' << key.second << ' ' << to_string(value) << '\n';
    }
    return 0;
  }
  if (a.edges < 1) throw InvalidInput("--edges is required");
  LaurentSeries series;
  if (a.kind == "map")
    series = enumerate_weighted(lambda, a.edges, false);
  else if (a.kind == "fsmap")
    series = enumerate_weighted(lambda, a.edges, true);
  else if (a.kind == "hypermap")
    series = enumerate_hypermaps(lambda, a.edges, false);
  else if (a.kind == "fshypermap")
    series = enumerate_hypermaps(lambda, a.edges, true);
  else
    throw InvalidInput("unknown kind: " + a.kind);
  if (a.json) {
    Json out{{"kind", a.kind}, {"lambda", lambda.to_csv()}, {"edges", a.edges}, {"series", to_json(series)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << series.to_string() << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string identity;
  VerifyParams params;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<Identity> ids;
  if (a.identity == "all")
    ids = all_identities();
  else
    ids.push_back(parse_identity(a.identity));
  bool ok = true;
  for (Identity id : ids) {
    for (const auto& report : run_suite(id, a.params)) {
      ok = ok && report.pass;
      std::cout << report.to_json().dump() << '\n' << std::flush;
    }
  }
  return ok ? 0 : 1;
}

struct CensusArgs {
  std::string kind;
  int size = 0;
  bool count_only = false;
};

int cmd_census(const CensusArgs& a) {
  std::size_t count = 0;
  auto emit = [&](const Json& j) {
    ++count;
    if (!a.count_only) std::cout << j.dump() << '\n';
  };
  if (a.kind == "map") {
    if (a.size < 1 || a.size > 4) throw InvalidInput("map census needs 1 <= edges <= 4");
    for (const auto& m : map_census(a.size)) {
      Json j = to_json(m);
      j["aut"] = automorphism_count(m);
      emit(j);
    }
  } else if (a.kind == "hypermap") {
    if (a.size < 1 || a.size > 4) throw InvalidInput("hypermap census needs 1 <= edges <= 4");
    for (const auto& m : hypermap_census(a.size)) emit(to_json(m, true));
  } else if (a.kind == "dessin") {
    if (a.size < 1 || a.size > 6) throw InvalidInput("dessin census needs 1 <= edges <= 6");
    for (const auto& c : dessin_census(a.size)) {
      Json j = to_json(c.dessin);
      j["labellings"] = c.labellings;
      emit(j);
    }
  } else {
    throw InvalidInput("unknown census kind: " + a.kind);
  }
  if (a.count_only) std::cout << count << '\n';
  return 0;
}

int cmd_simplify(const std::string& input, bool audit) {
  const Json j = read_json(input);
  const bool hyper = is_hypermap_json(j);
  const MapData map = map_from_json(j);
  check_map_input(map, hyper);
  const SimplificationResult result = simplify(map);
  if (audit)
    std::cout << audit_trail_jsonl(result);
  else
    std::cout << to_json(result, hyper).dump() << '\n';
  return 0;
}

int cmd_split(const std::string& input) {
  const Json j = read_json(input);
  const bool hyper = is_hypermap_json(j);
  const MapData map = map_from_json(j);
  check_map_input(map, hyper);
  std::cout << to_json(forward(map), hyper).dump() << '\n';
  return 0;
}

int cmd_join(const std::string& input) {
  const Json j = read_json(input);
  if (!j.is_object() || !j.contains("fully_simple") || !j.contains("dessin"))
    throw InvalidInput("expected {\"fully_simple\": ..., \"dessin\": ...}");
  const bool hyper = is_hypermap_json(j["fully_simple"]);
  const MapData f = map_from_json(j["fully_simple"]);
  check_map_input(f, hyper);
  const DessinData d = dessin_from_json(j["dessin"]);
  validate_dessin(d);
  std::cout << to_json(reverse(f, d), hyper).dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinary and fully simple maps, dessins, hypermaps and monotone Hurwitz numbers"};
  app.require_subcommand(1);

  int threads = -1;
  app.add_option("--threads", threads, "worker threads (default: FSMAPS_THREADS, then hardware concurrency)")
      ->check(CLI::NonNegativeNumber);

  HurwitzArgs ha;
  auto* hurwitz = app.add_subcommand("hurwitz", "monotone Hurwitz series from characters");
  hurwitz->add_option("--kind", ha.kind, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));
  hurwitz->add_option("--lambda", ha.lambda, "partition, e.g. 2,1")->required();
  hurwitz->add_option("--mu", ha.mu, "partition of the same size")->required();
  hurwitz->add_option("--order", ha.order, "h-order (default d-1 strict, 6 weak)")->check(CLI::NonNegativeNumber);
  hurwitz->add_flag("--brute", ha.brute, "also count factorizations directly");
  hurwitz->add_flag("--json", ha.json, "JSON output");

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "weighted generating series");
  enumerate->add_option("kind", ea.kind, "map, fsmap, hypermap, fshypermap or dessin")
      ->required()
      ->check(CLI::IsMember({"map", "fsmap", "hypermap", "fshypermap", "dessin"}));
  enumerate->add_option("--lambda", ea.lambda, "boundary degrees")->required();
  enumerate->add_option("--edges,--bound", ea.edges, "edge bound (hyperedge bound for hypermaps)");
  enumerate->add_option("--mu", ea.mu, "red degrees (dessin)");
  enumerate->add_option("--k", ea.k, "edges minus vertices (dessin)")->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--json", ea.json, "JSON output");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite, one JSON report per line");
  std::vector<std::string> names{"all"};
  for (Identity id : all_identities()) names.emplace_back(identity_name(id));
  verify->add_option("identity", va.identity, "suite name or all")->required()->check(CLI::IsMember(names));
  verify->add_option("--d-max", va.params.d_max, "largest partition size");
  verify->add_option("--edges,--bound", va.params.bound, "edge bound");
  verify->add_option("--order", va.params.order, "h-order for weak series");
  verify->add_option("--trials", va.params.trials, "random trials for the restriction lemmas");
  verify->add_option("--seed", va.params.seed, "random seed");

  CensusArgs ca;
  auto* census = app.add_subcommand("census", "canonical representatives, one JSON object per line");
  census->add_option("kind", ca.kind, "map, hypermap or dessin")->required()->check(CLI::IsMember({"map", "hypermap", "dessin"}));
  census->add_option("--edges", ca.size, "number of edges")->required();
  census->add_flag("--count", ca.count_only, "print only the number of classes");

  std::string simplify_input = "-";
  bool audit = false;
  auto* simplify_cmd = app.add_subcommand("simplify", "simplify a rooted map given as JSON");
  simplify_cmd->add_option("input", simplify_input, "JSON file, - for stdin");
  simplify_cmd->add_flag("--audit", audit, "JSON-lines audit trail instead of the result");

  std::string split_input = "-";
  auto* split = app.add_subcommand("split", "map -> (fully simple map, dessin)");
  split->add_option("input", split_input, "JSON file, - for stdin");

  std::string join_input = "-";
  auto* join = app.add_subcommand("join", "(fully simple map, dessin) -> map");
  join->add_option("input", join_input, "JSON file, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (threads < 0) {
    if (const char* env = std::getenv("FSMAPS_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 0) threads = static_cast<int>(v);
    }
  }
  if (threads >= 0) set_thread_count(static_cast<unsigned>(threads));

  try {
    if (*hurwitz) return cmd_hurwitz(ha);
    if (*enumerate) return cmd_enumerate(ea);
    if (*verify) return cmd_verify(va);
    if (*census) return cmd_census(ca);
    if (*simplify_cmd) return cmd_simplify(simplify_input, audit);
    if (*split) return cmd_split(split_input);
    if (*join) return cmd_join(join_input);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
