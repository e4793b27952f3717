// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>

#include "fsmaps/verify.hpp"

using namespace fsmaps;

namespace {

struct Criterion {
  const char* title;
  Identity identity;
  VerifyParams params;
};

VerifyParams params(int d_max, int bound, int order) {
  VerifyParams p;
  p.d_max = d_max;
  p.bound = bound;
  p.order = order;
  p.trials = 10000;
  return p;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"strict Hurwitz numbers: brute force = characters, d <= 5, k <= d-1", Identity::hurwitz_strict, params(5, 1, 0)},
      {"weak Hurwitz numbers: brute force = characters, d <= 4, k <= 4", Identity::hurwitz_weak, params(4, 1, 4)},
      {"transition matrices are inverse through h^10, d <= 5", Identity::corollary_1_5, params(5, 3, 10)},
      {"monotone factorizations: d! sequences, unique, d <= 6", Identity::lemma_2_5, params(6, 1, 0)},
      {"dessin counts = z(lambda) strict Hurwitz numbers, d <= 4", Identity::prop_2_7, params(4, 1, 0)},
      {"Map = z Sum H< FSMap for |lambda| <= 4 through 4 edges", Identity::theorem_1_1, params(4, 4, 0)},
      {"simplifier on the m <= 4 census", Identity::simplifier_suite, params(4, 4, 0)},
      {"bijection round trip on the m <= 4 census, 10^4 lemma trials", Identity::bijection_roundtrip, params(4, 4, 0)},
      {"hypermap identity for |lambda| <= 3, e_max = 3, map specialization", Identity::theorem_5_6, params(3, 3, 0)},
  };

  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::size_t reports = 0;
    std::string first_failure;
    try {
      for (const auto& r : run_suite(c.identity, c.params)) {
        ++reports;
        if (!r.pass && pass) {
          pass = false;
          first_failure = r.instance + " " + r.counterexample.value_or(Json(nullptr)).dump();
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << " [" << index << "] " << identity_name(c.identity) << ": " << c.title
              << " (" << reports << " reports, " << timing << ")";
    if (!pass) std::cout << " first failure: " << first_failure;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
