#ifndef UHITLAB_VERIFY_HPP
#define UHITLAB_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace uhitlab {

enum class VerifySuite { PaperCore, PaperExtended };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the verification suite; paper-core covers the exact example-level
// checks (criteria 1-3), paper-extended the full list. One result per
// criterion, in order. Progress lines go to the stream when given.
std::vector<CriterionResult> run_verification(VerifySuite suite,
                                              std::ostream* progress);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace uhitlab

#endif
