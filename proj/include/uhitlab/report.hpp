#ifndef UHITLAB_REPORT_HPP
#define UHITLAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "uhitlab/clause_set.hpp"
#include "uhitlab/factor.hpp"
#include "uhitlab/search.hpp"
#include "uhitlab/singular.hpp"

namespace uhitlab {

struct AnalysisOptions {
  bool run_flip_search = false;
  SearchBounds bounds;
  int factor_witness_cap = 8;
};

// Full diagnostic of one clause-set; every field is reproducible by
// re-running the referenced operations on the input.
struct AnalysisReport {
  std::string input_id;
  int n = 0;
  int c = 0;
  int delta = 0;
  bool hitting = false;
  bool uhit = false;
  std::string dyadic;
  SingularityProfile profile;
  std::string snf_canonical;  // canonical form of the normal form, encoded
  int singularity_index = 0;
  bool factors_computed = false;  // false when past the enumeration bound
  int nontrivial_factor_count = 0;
  std::vector<std::string> factor_witnesses;  // capped
  bool irreducible = false;
  int fs_pair_count = 0;
  int nfs_pair_count = 0;
  std::optional<std::string> flip_outcome;
  int flip_depth = 0;
};

AnalysisReport analyze(const ClauseSet& f, const std::string& input_id,
                       const AnalysisOptions& options = {});

std::string report_text(const AnalysisReport& report);
std::string report_json(const AnalysisReport& report);

}  // namespace uhitlab

#endif
