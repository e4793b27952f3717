#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsmaps/json_io.hpp"

namespace fsmaps {

enum class Identity {
  theorem_1_1,
  corollary_1_5,
  prop_2_7,
  lemma_2_5,
  theorem_5_6,
  bijection_roundtrip,
  simplifier_suite,
  hurwitz_strict,
  hurwitz_weak,
};

std::string_view identity_name(Identity identity);
/// Throws InvalidInput for an unknown name.
Identity parse_identity(std::string_view name);
std::vector<Identity> all_identities();

struct VerifyParams {
  int d_max = 4;
  int bound = 3;  ///< edge bound: m_max for maps, e_max for hypermaps, census size
  int order = 6;  ///< h-order for weak series
  int trials = 10000;
  std::uint64_t seed = 20240601;
};

struct VerificationReport {
  Identity identity = Identity::theorem_1_1;
  std::string instance;  ///< e.g. "lambda=(2,1)"
  Json parameters;
  bool pass = false;
  std::optional<Json> counterexample;  ///< present whenever pass is false
  Json details;                        ///< counts and other facts about the run
  double elapsed_seconds = 0;

  Json to_json() const;
};

/// Runs one suite. Reports come in a fixed order determined by the parameters.
std::vector<VerificationReport> run_suite(Identity identity, const VerifyParams& params);

}  // namespace fsmaps
