#ifndef UHITLAB_ISO_HPP
#define UHITLAB_ISO_HPP

#include <utility>
#include <vector>

#include "uhitlab/clause_set.hpp"

namespace uhitlab {

// Canonical representative of an isomorphism class under variable
// bijections composed with per-variable sign flips, together with the
// literal map carrying the representative onto it.
struct IsoClass {
  ClauseSet canonical;
  // image of +v for every source variable v, ascending by v; the image of
  // -v is the complement.
  std::vector<std::pair<Var, Lit>> mapping;
};

// The lexicographically least image of f over variables 1..n(f); idempotent.
IsoClass canonical_form(const ClauseSet& f);

// f equals its own canonical form. Early-exits on the first smaller image,
// so cheaper than canonical_form for rejection-heavy callers.
bool is_canonical(const ClauseSet& f);

bool is_isomorphic(const ClauseSet& f, const ClauseSet& g);

// Apply a literal map (as in IsoClass::mapping) to a clause-set.
ClauseSet apply_literal_map(const ClauseSet& f,
                            const std::vector<std::pair<Var, Lit>>& mapping);

}  // namespace uhitlab

#endif
