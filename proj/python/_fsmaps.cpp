#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsmaps/error.hpp"
#include "fsmaps/hurwitz.hpp"
#include "fsmaps/hypermap.hpp"
#include "fsmaps/json_io.hpp"
#include "fsmaps/parallel.hpp"
#include "fsmaps/verify.hpp"

namespace py = pybind11;
using namespace fsmaps;

// JSON crosses the boundary as text; the Python side calls json.loads.
namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string series_json(const LaurentSeries& s) { return to_json(s).dump(); }

}  // namespace

PYBIND11_MODULE(_fsmaps, m) {
  m.doc() = "Maps, fully simple maps, dessins and monotone Hurwitz numbers";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("set_threads", &set_thread_count, py::arg("threads"));

  m.def(
      "strict_hurwitz",
      [](const std::string& lambda, const std::string& mu) {
        return series_json(strict_character(Partition::parse(lambda), Partition::parse(mu)).series);
      },
      py::arg("lambda_"), py::arg("mu"));
  m.def(
      "weak_hurwitz",
      [](const std::string& lambda, const std::string& mu, int order) {
        return series_json(weak_character(Partition::parse(lambda), Partition::parse(mu), order).series);
      },
      py::arg("lambda_"), py::arg("mu"), py::arg("order"));
  m.def(
      "hurwitz_brute",
      [](const std::string& kind, const std::string& lambda, const std::string& mu, int k) {
        const Partition l = Partition::parse(lambda), u = Partition::parse(mu);
        if (kind == "strict") return to_string(strict_brute(l, u, k));
        if (kind == "weak") return to_string(weak_brute(l, u, k));
        throw InvalidInput("kind must be strict or weak");
      },
      py::arg("kind"), py::arg("lambda_"), py::arg("mu"), py::arg("k"));

  m.def(
      "enumerate_maps",
      [](const std::string& lambda, int edges, bool fully_simple) {
        py::gil_scoped_release release;
        return series_json(enumerate_weighted(Partition::parse(lambda), edges, fully_simple));
      },
      py::arg("lambda_"), py::arg("edges"), py::arg("fully_simple") = false);
  m.def(
      "enumerate_hypermaps",
      [](const std::string& lambda, int bound, bool fully_simple) {
        py::gil_scoped_release release;
        return series_json(enumerate_hypermaps(Partition::parse(lambda), bound, fully_simple));
      },
      py::arg("lambda_"), py::arg("bound"), py::arg("fully_simple") = false);
  m.def(
      "count_dessins",
      [](const std::string& lambda, const std::string& mu, int k) {
        return to_string(enumerate_dessins(Partition::parse(lambda), Partition::parse(mu), k));
      },
      py::arg("lambda_"), py::arg("mu"), py::arg("k"));

  m.def(
      "map_census",
      [](int edges) {
        std::vector<std::string> out;
        for (const auto& map : map_census(edges)) out.push_back(to_json(map).dump());
        return out;
      },
      py::arg("edges"));

  m.def(
      "simplify",
      [](const std::string& map_json) { return to_json(simplify(map_from_json(parse_json(map_json)))).dump(); },
      py::arg("map_json"));
  m.def(
      "split",
      [](const std::string& map_json) { return to_json(forward(map_from_json(parse_json(map_json)))).dump(); },
      py::arg("map_json"));
  m.def(
      "join",
      [](const std::string& fully_simple_json, const std::string& dessin_json) {
        return to_json(reverse(map_from_json(parse_json(fully_simple_json)),
                               dessin_from_json(parse_json(dessin_json))))
            .dump();
      },
      py::arg("fully_simple_json"), py::arg("dessin_json"));

  m.def("identities", [] {
    std::vector<std::string> out;
    for (Identity id : all_identities()) out.emplace_back(identity_name(id));
    return out;
  });
  m.def(
      "verify",
      [](const std::string& identity, int d_max, int bound, int order, int trials, std::uint64_t seed) {
        VerifyParams p;
        p.d_max = d_max;
        p.bound = bound;
        p.order = order;
        p.trials = trials;
        p.seed = seed;
        const Identity id = parse_identity(identity);
        std::vector<std::string> out;
        {
          py::gil_scoped_release release;
          for (const auto& r : run_suite(id, p)) out.push_back(r.to_json().dump());
        }
        return out;
      },
      py::arg("identity"), py::arg("d_max") = 4, py::arg("bound") = 3, py::arg("order") = 6,
      py::arg("trials") = 10000, py::arg("seed") = 20240601);
}
