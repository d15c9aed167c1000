#ifndef UHITLAB_SEARCH_HPP
#define UHITLAB_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "uhitlab/clause_set.hpp"
#include "uhitlab/transforms.hpp"

namespace uhitlab {

// The named instances.
ClauseSet dt2();
ClauseSet dt3();

// Selector-chained family: K_1 is dt3, each step disjoins a fresh dt3 copy
// behind a fresh selector variable. K_m is nonsingular UHIT with
// deficiency m+1 and 4m-1 variables.
ClauseSet construct_km(int m);

// Weights for the random UHIT-preserving construction walk.
struct RandomMix {
  int nonstrict_fs_extension = 4;
  int strict_fs_extension = 2;
  int full_unit_extension = 2;
  int mid_singular_extension = 1;
  int block_disjunction = 1;
  int nfs_flip = 2;
};

// Seeded random walk over UHIT-preserving constructions starting from the
// empty-clause set; stops once target_n variables are reached. Every result
// is UHIT by construction and verified.
ClauseSet random_uhit(std::uint64_t seed, int target_n,
                      const RandomMix& mix = {});

enum class FlipOutcome { FoundReducible, Exhausted, FoundFsPair };

struct FlipStep {
  NfsPair pair;
  ClauseSet result;
};

struct FlipPath {
  ClauseSet start;
  std::vector<FlipStep> steps;
  ClauseSet terminal;
  FlipOutcome outcome = FlipOutcome::Exhausted;
  int depth_explored = 0;
};

struct SearchBounds {
  int depth = 8;
  long breadth = 1'000'000;  // max canonical states
};

// Breadth-first search over the flip graph for a clause-reducible state,
// deduplicating states by canonical form. Exhausted outcomes are
// inconclusive, never a claim of nfs-irreducibility.
FlipPath nfs_search(const ClauseSet& f, const SearchBounds& bounds = {},
                    const std::function<void(const ClauseSet&)>& observer = {});

// Like nfs_search, but when the bounds interrupt the search with frontier
// states left, the full BFS state goes to checkpoint_path (versioned text
// format) and a later nfs_resume with fresh bounds picks it up.
FlipPath nfs_search_with_checkpoint(
    const ClauseSet& f, const SearchBounds& bounds,
    const std::string& checkpoint_path,
    const std::function<void(const ClauseSet&)>& observer = {});

FlipPath nfs_resume(const std::string& checkpoint_path,
                    const SearchBounds& bounds,
                    const std::function<void(const ClauseSet&)>& observer = {});

// For a variable with both literal degrees 2: an existing fs-pair, or the
// nfs-pair whose flip provably creates one.
std::variant<FsPair, NfsPair> flip_for_double_two(const ClauseSet& f, Var v);

// When assigning x true drops the deficiency to 1, a short series of flips
// reaches a clause-set with an fs-pair.
FlipPath flips_toward_fs(const ClauseSet& f, Lit x);

struct EnumerationTask {
  int n_max = 0;
  int delta = 1;
  bool nonsingular_only = false;
  bool up_to_iso = true;
};

// Complete list of (canonical representatives of) UHIT clause-sets with
// n <= n_max and the requested deficiency. Backtracking over canonically
// ordered clause choices with hitting, exact dyadic-budget and
// canonical-minimality pruning.
std::vector<ClauseSet> enumerate_uhit(
    const EnumerationTask& task,
    const std::function<void(const ClauseSet&)>& sink = {});

// Work limit (DFS node budget) for the enumerator; overridable with the
// UHITLAB_WORK_LIMIT environment variable.
long enumeration_work_limit();

// Falsification monitor for the deficiency-3 variable bound: nonsingular
// UHIT with delta = 3 must have n <= 7.
bool delta3_bound_ok(const ClauseSet& f);

}  // namespace uhitlab

#endif
