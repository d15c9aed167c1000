#ifndef UHITLAB_FACTOR_HPP
#define UHITLAB_FACTOR_HPP

#include <optional>
#include <vector>

#include "uhitlab/clause_set.hpp"

namespace uhitlab {

// A sub-clause-set logically equivalent to a single clause (its
// intersection): the residue left after stripping the intersection is
// unsatisfiable.
struct ClauseFactor {
  ClauseSet subset;
  Clause intersection;
  ClauseSet residue;
  bool trivial = false;
};

// (f \ {pivot}) ∪ ({pivot} ∨ g).
ClauseSet pointed_or(const ClauseSet& f, const Clause& pivot,
                     const ClauseSet& g);

// Decide whether the subset is a clause-factor of f. On unsatisfiable
// hitting f the clash criterion decides without any oracle; otherwise the
// residue goes to the brute-force satisfiability oracle.
std::optional<ClauseFactor> is_clause_factor(const ClauseSet& f,
                                             const ClauseSet& subset);

// All (nontrivial) clause-factors of f, ordered by size then subset. Uses
// the structural shortcuts: size-2 factors are the fs-pairs, size-(c-1)
// factors come from unit clauses, no fs-pair rules out sizes up to 4, no
// full variable rules out sizes down to c-3.
std::vector<ClauseFactor> enumerate_factors(const ClauseSet& f,
                                            bool nontrivial_only,
                                            int clause_bound = 25);

// Early-exit variant of the nontrivial-factor search.
bool has_nontrivial_factor(const ClauseSet& f, int clause_bound = 25);

bool is_clause_irreducible(const ClauseSet& f, int clause_bound = 25);

// f written as (cofactor, pivot) ∨ residual with disjoint variables between
// pivot and residual.
struct Factorisation {
  ClauseSet cofactor;
  Clause pivot;
  ClauseSet residual;
  std::vector<Var> shared_variables;  // var(cofactor) ∩ var(residual)
};

Factorisation factorise(const ClauseSet& f, const ClauseFactor& factor);

// The single clause f is logically equivalent to, if there is one.
std::optional<Clause> clause_equivalent(const ClauseSet& f, int bound = 0);

// Best-effort recursive split into clause-irreducible parts via repeated
// factorisation. No canonicality or uniqueness is promised.
std::vector<ClauseSet> irreducible_decomposition(const ClauseSet& f,
                                                 int clause_bound = 25);

}  // namespace uhitlab

#endif
