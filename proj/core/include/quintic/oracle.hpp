#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quintic/strata.hpp"

namespace quintic {

struct OracleRequest {
  ModuliSpaceId space{5, 3};
  Label label = Label::X0;
  std::size_t trials = 100;
  std::uint32_t prime = 5;
  std::uint64_t seed = 1;
  /// Fraction of trials given a planted forbidden pattern before random recombination.
  double planted_fraction = 0.5;
};

struct OracleDisagreement {
  std::size_t trial = 0;
  std::string matrix;
  bool closed_form = false;
  bool enumeration = false;
};

struct OracleReport {
  std::size_t trials = 0;
  std::size_t agreements = 0;
  /// Trials the enumeration judged (semi)stable.
  std::size_t positives = 0;
  std::vector<OracleDisagreement> disagreements;
  /// Battery over Q on the integral sample against the enumeration on its reduction.
  /// A mismatch here means reduction mod p changed the verdict; listed, not required.
  std::size_t lift_agreements = 0;
  std::vector<std::size_t> lift_changes;
  bool ok() const { return disagreements.empty() && agreements == trials; }
};

/// Closed-form condition battery against brute-force enumeration over F_p, both run on the
/// reduction of random integral blocks of the X0 shape of M(5,3), M(5,1) or M(5,0).
/// Trials run in parallel and are deterministic in the seed.
OracleReport oracle_compare(const OracleRequest& req);

}  // namespace quintic
