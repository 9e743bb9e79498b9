// The acceptance gate: desk-scale end-to-end reproductions of the artifact's
// headline numbers, one result per criterion. Used by the standalone
// `acceptance` binary and by `qcorr demo suite`.
#pragma once

#include <string>
#include <vector>

namespace qcorr {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

// Runs all criteria in order (1..11); never throws — a criterion that
// throws internally is reported as failed with the exception text.
std::vector<CriterionResult> run_acceptance();

}  // namespace qcorr
