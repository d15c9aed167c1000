#ifndef UHITLAB_SINGULAR_HPP
#define UHITLAB_SINGULAR_HPP

#include <cstdint>
#include <vector>

#include "uhitlab/clause_set.hpp"
#include "uhitlab/transforms.hpp"

namespace uhitlab {

// Classification of the variables of a clause-set: singular variables have
// one polarity of degree exactly 1; 1-singular ones have total degree 2.
struct SingularityProfile {
  std::vector<Var> singular;
  std::vector<Var> one_singular;
  std::vector<Var> non_one_singular;
  int nsv = 0;
  int nosv = 0;
  int nnosv = 0;

  bool nonsingular() const { return singular.empty(); }
};

SingularityProfile singularity_profile(const ClauseSet& f);

// DP-reduction restricted to a singular variable.
ClauseSet sdp_reduce(const ClauseSet& f, Var v);

struct NormalFormResult {
  ClauseSet normal_form;
  std::vector<Var> reduction_order;
  int singularity_index = 0;
};

// Iterated singular DP-reduction to the nonsingular normal form. Reduction
// is confluent on unsatisfiable hitting clause-sets, so the elimination
// order (smallest singular variable first by default, seeded random
// otherwise) only shows up in reduction_order.
NormalFormResult snf(const ClauseSet& f);
NormalFormResult snf_seeded(const ClauseSet& f, std::uint64_t seed);

struct SingularExtension {
  ClauseSet extended;
  ClauseSet witness;  // the subset G' the extension was built from
};

// All m-singular hitting extensions of f, one per subset G' of size m whose
// intersection clashes with every clause outside G'. The extension variable
// is max(var(f)) + 1.
std::vector<SingularExtension> singular_hitting_extensions(const ClauseSet& f,
                                                           int m);

// A singular tuple (one or two variables) whose elimination removes its
// variables from the singular set of the result.
std::vector<Var> choose_singular_tuple(const ClauseSet& f);

// The fs-pair {∩F_v, ∩F_-v} attached to a singular variable.
FsPair fs_pair_of_singular(const ClauseSet& f, Var v);

}  // namespace uhitlab

#endif
