#include <chrono>
#include <sstream>

#include "bridgearc/arrangement.hpp"
#include "bridgearc/catalog.hpp"
#include "bridgearc/check.hpp"
#include "bridgearc/criteria.hpp"
#include "bridgearc/harness.hpp"
#include "bridgearc/io.hpp"
#include "bridgearc/isotopy.hpp"
#include "bridgearc/parallel.hpp"

namespace bridgearc {

namespace {

struct ClassResult {
  bool rcFailed = false;
  bool hasCertificate = false;
  bool waveViolation = false;
  bool normalFormException = false;
  bool unclassified = false;
  bool oracleDisagree = false;
  std::string failureTag;  // first failed expectation, empty when clean
};

void noteFailure(ClassResult& r, const char* tag) {
  if (r.failureTag.empty()) r.failureTag = tag;
}

// All per-partner checks: everything the verification asserts about one
// enumerated partner system beta.
ClassResult check_partner(const ArcSystem& beta, const ArcSystem& delta,
                          const ArcSystem& eps) {
  ClassResult r;

  // The rectangle condition must fail between the 8_5 system and beta.
  RectangleReport rep = rectangle_report(delta, beta);
  r.rcFailed = !rep.holds;
  if (rep.holds) noteFailure(r, "rectangle condition unexpectedly holds");

  // The census-based and scan-based rectangle algorithms must agree.
  if (rectangle_tuples_by_scan(delta, beta) != rep.realized) {
    r.oracleDisagree = true;
    noteFailure(r, "rectangle census and scan disagree");
  }

  // No-partner certificate coverage (not required to exist for every beta;
  // counted for the report).
  CertifyResult cert = certify_no_rc_partner(delta, beta);
  r.hasCertificate = cert.certificate.has_value();

  // A partner not isotopic to the reference system must carry a
  // wave with respect to it (a bridge arc disjoint from the reference in its
  // interior counts as its own wave when essential).
  const bool iso = are_isotopic(beta, eps);
  if (!iso && find_waves(eps, beta).empty()) {
    r.waveViolation = true;
    noteFailure(r, "not isotopic to the reference but no wave");
  }

  // Unique normal form: a partner is in normal form with respect to the
  // reference system exactly when it is isotopic to it.
  if (normal_form_report(beta, eps).holds != iso) {
    r.normalFormException = true;
    noteFailure(r, iso ? "isotopic to the reference yet not in normal form"
                       : "in normal form yet not isotopic to the reference");
  }

  // Adjacent-pair classification: every adjacent pair along the reference
  // system must be a wave pair, a parallel connecting pair, or mixed.
  for (const AdjacentPairClass& c : classify_adjacent_pairs(eps, beta)) {
    if (c.kind == AdjacentPairKind::Unclassified) {
      r.unclassified = true;
      noteFailure(r, "unclassified adjacent pair");
      break;
    }
  }

  return r;
}

}  // namespace

bool HarnessReport::contradictionFound() const {
  return rcFailures != classesEnumerated || waveLemmaViolations > 0 ||
         normalFormExceptions > 0 || unclassifiedPairs > 0 ||
         oracleDisagreements > 0;
}

int HarnessReport::exitCode() const { return contradictionFound() ? 1 : 0; }

std::string HarnessReport::to_text() const {
  std::ostringstream os;
  os << "verify-85 report\n";
  os << "parameters: rewires=" << parameters.rewires
     << " max-crossings=" << parameters.maxCrossings
     << " jobs=" << parameters.jobs
     << " candidate-budget=" << parameters.limits.candidateBudget
     << " max-classes=" << parameters.limits.maxClasses << "\n";
  os << "classes-enumerated: " << classesEnumerated << "\n";
  os << "rc-failures: " << rcFailures << "\n";
  os << "certificates: " << certificates << "\n";
  os << "wave-lemma-violations: " << waveLemmaViolations << "\n";
  os << "normal-form-exceptions: " << normalFormExceptions << "\n";
  os << "unclassified-pairs: " << unclassifiedPairs << "\n";
  os << "oracle-disagreements: " << oracleDisagreements << "\n";
  os << "truncated: " << (truncated ? "yes" : "no") << "\n";
  os << "wall-time-seconds: " << wallTimeSeconds << "\n";
  if (counterexample) os << "counterexample:\n" << *counterexample;
  os << "verdict=" << (contradictionFound() ? "contradiction" : "verified")
     << "\n";
  return os.str();
}

HarnessReport verify_85(int rewires, int maxCrossings, int jobs,
                        const EnumerationLimits& limits) {
  auto t0 = std::chrono::steady_clock::now();
  HarnessReport report;
  report.parameters = {rewires, maxCrossings, jobs, limits};

  const ArcSystem& eps = epsilon();
  const ArcSystem& delta = delta85();

  EnumerationResult enumerated =
      enumerate_systems(eps, rewires, maxCrossings, limits, jobs);
  report.truncated = enumerated.truncated;
  report.classesEnumerated = enumerated.systems.size();

  std::vector<ClassResult> results(enumerated.systems.size());
  parallel_for_index(enumerated.systems.size(), jobs, [&](std::size_t i) {
    results[i] = check_partner(enumerated.systems[i], delta, eps);
  });

  for (std::size_t i = 0; i < results.size(); ++i) {
    const ClassResult& r = results[i];
    if (r.rcFailed) ++report.rcFailures;
    if (r.hasCertificate) ++report.certificates;
    if (r.waveViolation) ++report.waveLemmaViolations;
    if (r.normalFormException) ++report.normalFormExceptions;
    if (r.unclassified) ++report.unclassifiedPairs;
    if (r.oracleDisagree) ++report.oracleDisagreements;
    if (!r.failureTag.empty() && !report.counterexample) {
      std::ostringstream os;
      os << "# " << r.failureTag << "\n"
         << serialize_system(enumerated.systems[i]);
      report.counterexample = os.str();
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  report.wallTimeSeconds = std::chrono::duration<double>(t1 - t0).count();
  return report;
}

}  // namespace bridgearc
