#include "fsmaps/json_io.hpp"

#include <sstream>

#include "fsmaps/error.hpp"

namespace fsmaps {

namespace {

Json one_based(const Permutation& p) { return p.one_based(); }

Json one_based(const std::vector<int>& points) {
  Json out = Json::array();
  for (int x : points) out.push_back(x + 1);
  return out;
}

Permutation permutation_field(const Json& j, const char* name, std::size_t n) {
  if (!j.contains(name) || !j[name].is_array()) throw InvalidInput(std::string("missing array field \"") + name + "\"");
  std::vector<int> images;
  for (const auto& v : j[name]) {
    if (!v.is_number_integer()) throw InvalidInput(std::string("non-integer entry in \"") + name + "\"");
    images.push_back(v.get<int>());
  }
  if (images.size() != n) throw InvalidInput(std::string("\"") + name + "\" has the wrong length");
  return Permutation::from_one_based(images);
}

std::vector<int> roots_field(const Json& j, std::size_t n) {
  if (!j.contains("roots") || !j["roots"].is_array()) throw InvalidInput("missing array field \"roots\"");
  std::vector<int> roots;
  for (const auto& v : j["roots"]) {
    if (!v.is_number_integer()) throw InvalidInput("non-integer root");
    int r = v.get<int>();
    if (r < 1 || static_cast<std::size_t>(r) > n) throw InvalidInput("root outside 1..n");
    roots.push_back(r - 1);
  }
  return roots;
}

std::size_t size_field(const Json& j) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw InvalidInput("missing or invalid \"n\"");
  return j["n"].get<std::size_t>();
}

Json label_json(const Label& l) { return Json::array({l.face, l.position}); }

}  // namespace

Json to_json(const MapData& map, bool hypermap) {
  Json j;
  if (hypermap) j["kind"] = "hypermap";
  j["n"] = map.size();
  j["sigma0"] = one_based(map.sigma0);
  j["sigma1"] = one_based(map.sigma1);
  j["sigma2"] = one_based(map.sigma2);
  j["roots"] = one_based(map.roots);
  return j;
}

MapData map_from_json(const Json& j) {
  const std::size_t n = size_field(j);
  Permutation s0 = permutation_field(j, "sigma0", n);
  Permutation s1 = permutation_field(j, "sigma1", n);
  std::vector<int> roots = roots_field(j, n);
  if (j.contains("sigma2")) return MapData{s0, s1, permutation_field(j, "sigma2", n), roots};
  return MapData::from_vertex_edge(s0, s1, roots);
}

Json to_json(const DessinData& dessin) {
  Json j;
  j["n"] = dessin.size();
  j["tau_r"] = one_based(dessin.tau_r);
  j["tau_b"] = one_based(dessin.tau_b);
  j["tau_v"] = one_based(dessin.tau_v);
  j["roots"] = one_based(dessin.roots);
  return j;
}

DessinData dessin_from_json(const Json& j) {
  const std::size_t n = size_field(j);
  Permutation tb = permutation_field(j, "tau_b", n);
  Permutation tv = permutation_field(j, "tau_v", n);
  std::vector<int> roots = roots_field(j, n);
  if (j.contains("tau_r")) return DessinData{permutation_field(j, "tau_r", n), tb, tv, roots};
  return DessinData::from_blue_vertex(tb, tv, roots);
}

Json to_json(const SplitResult& split, bool hypermap) {
  return Json{{"fully_simple", to_json(split.fully_simple, hypermap)}, {"dessin", to_json(split.dessin)}};
}

Json to_json(const LaurentSeries& series) {
  Json j;
  j["text"] = series.to_string();
  j["lo"] = series.lo();
  j["hi"] = series.is_exact() ? Json(nullptr) : Json(series.hi());
  Json terms = Json::array();
  for (const auto& [e, poly] : series.coefficients())
    for (const auto& [m, c] : poly)
      terms.push_back(Json{{"h", e}, {"monomial", m.to_string()}, {"coefficient", to_string(c)}});
  j["terms"] = terms;
  return j;
}

std::string audit_trail_jsonl(const SimplificationResult& result) {
  std::ostringstream os;
  for (const auto& step : result.steps) {
    Json j{{"visited", label_json(step.visited)}, {"applied", step.applied}, {"partner", label_json(step.partner)}};
    os << j.dump() << '\n';
  }
  return os.str();
}

Json to_json(const SimplificationResult& result, bool hypermap) {
  Json ts = Json::array();
  for (const auto& t : result.transpositions) ts.push_back(Json::array({label_json(t.smaller), label_json(t.larger)}));
  return Json{{"simple_map", to_json(result.simple_map, hypermap)}, {"transpositions", ts}, {"k", result.k()}};
}

}  // namespace fsmaps
