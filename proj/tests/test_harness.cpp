#include <string>

#include "bridgearc/harness.hpp"
#include "doctest.h"

using namespace bridgearc;

TEST_CASE("depth zero verifies the base class alone") {
  HarnessReport r = verify_85(0, 0);
  CHECK(r.classesEnumerated == 1);
  CHECK(r.rcFailures == 1);
  CHECK(r.waveLemmaViolations == 0);
  CHECK(r.normalFormExceptions == 0);
  CHECK(r.unclassifiedPairs == 0);
  CHECK(r.oracleDisagreements == 0);
  CHECK_FALSE(r.truncated);
  CHECK_FALSE(r.contradictionFound());
  CHECK(r.exitCode() == 0);
}

TEST_CASE("depth one at four crossings verifies every class") {
  HarnessReport r = verify_85(1, 4);
  CHECK(r.classesEnumerated == 19);  // frozen at first verified run
  CHECK(r.rcFailures == r.classesEnumerated);
  CHECK(r.certificates == r.classesEnumerated);
  CHECK(r.waveLemmaViolations == 0);
  CHECK(r.normalFormExceptions == 0);
  CHECK(r.unclassifiedPairs == 0);
  CHECK(r.oracleDisagreements == 0);
  CHECK_FALSE(r.contradictionFound());
  CHECK_FALSE(r.counterexample.has_value());
}

TEST_CASE("parallel jobs do not change the verdict or the counts") {
  HarnessReport seq = verify_85(1, 4, 1);
  HarnessReport par = verify_85(1, 4, 4);
  CHECK(seq.classesEnumerated == par.classesEnumerated);
  CHECK(seq.rcFailures == par.rcFailures);
  CHECK(seq.certificates == par.certificates);
  CHECK(seq.contradictionFound() == par.contradictionFound());
}

TEST_CASE("the report text carries every counter and the verdict") {
  HarnessReport r = verify_85(1, 4);
  std::string text = r.to_text();
  CHECK(text.find("classes-enumerated: 19") != std::string::npos);
  CHECK(text.find("rc-failures: 19") != std::string::npos);
  CHECK(text.find("wave-lemma-violations: 0") != std::string::npos);
  CHECK(text.find("normal-form-exceptions: 0") != std::string::npos);
  CHECK(text.find("unclassified-pairs: 0") != std::string::npos);
  CHECK(text.find("oracle-disagreements: 0") != std::string::npos);
  CHECK(text.find("verdict=verified") != std::string::npos);
  CHECK(text.find("wall-time-seconds:") != std::string::npos);
}

TEST_CASE("truncation is reported and never miscounted as contradiction") {
  EnumerationLimits lim;
  lim.maxClasses = 2;
  HarnessReport r = verify_85(1, 4, 1, lim);
  CHECK(r.truncated);
  CHECK(r.classesEnumerated <= 2);
  CHECK(r.rcFailures == r.classesEnumerated);
  CHECK_FALSE(r.contradictionFound());
  CHECK(r.to_text().find("truncated: yes") != std::string::npos);
}
