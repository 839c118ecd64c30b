#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bridgearc/model.hpp"
#include "bridgearc/moves.hpp"

namespace bridgearc {

struct HarnessParameters {
  int rewires = 0;
  int maxCrossings = 0;
  int jobs = 1;
  EnumerationLimits limits;
};

// Aggregated result of the bounded no-rectangle verification for the 8_5
// companion system: every enumerated partner system must fail the rectangle
// condition against it, and the supporting property suites must hold.
struct HarnessReport {
  HarnessParameters parameters;
  std::size_t classesEnumerated = 0;
  std::size_t rcFailures = 0;         // partners failing the rectangle condition
  std::size_t certificates = 0;       // partners with a no-partner certificate
  std::size_t waveLemmaViolations = 0;    // expected 0
  std::size_t normalFormExceptions = 0;   // expected 0
  std::size_t unclassifiedPairs = 0;      // expected 0
  std::size_t oracleDisagreements = 0;    // census vs scan, expected 0
  bool truncated = false;
  double wallTimeSeconds = 0.0;
  // First offending system (serialized) with a tag, if any check failed.
  std::optional<std::string> counterexample;

  bool contradictionFound() const;
  // 0 = all verdicts as expected; 1 = contradiction (counterexample
  // serialized); distinct from CLI usage errors (2).
  int exitCode() const;
  // Multi-line human/machine-readable report; wallTime on its own line so
  // byte comparison can drop it.
  std::string to_text() const;
};

HarnessReport verify_85(int rewires, int maxCrossings, int jobs = 1,
                        const EnumerationLimits& limits = {});

}  // namespace bridgearc
