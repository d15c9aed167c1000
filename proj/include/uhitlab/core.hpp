#ifndef UHITLAB_CORE_HPP
#define UHITLAB_CORE_HPP

#include "uhitlab/clause_set.hpp"
#include "uhitlab/dyadic.hpp"

namespace uhitlab {

struct Measures {
  int n = 0;
  int c = 0;
  int delta = 0;
};

Measures measures(const ClauseSet& f);

// Every two distinct clauses share a clashing literal.
bool is_hitting(const ClauseSet& f);

// Sum over all clauses of 2^-|C|, exactly.
DyadicSum dyadic_sum(const ClauseSet& f);

// Unsatisfiable hitting clause-set: hitting and dyadic sum exactly 1.
bool is_uhit(const ClauseSet& f);

// Default variable bound for the brute-force oracles; overridable with the
// UHITLAB_ORACLE_BOUND environment variable.
int oracle_bound();

// Exhaustive-assignment satisfiability test, independent of the hitting and
// dyadic machinery. Throws BoundExceeded for n(f) above the bound; a bound
// of 0 means oracle_bound().
bool sat_oracle(const ClauseSet& f, int bound = 0);

// Same satisfying total assignments over var(f) ∪ var(g).
bool logically_equivalent(const ClauseSet& f, const ClauseSet& g,
                          int bound = 0);

// No clause can be dropped without changing the models.
bool is_irredundant(const ClauseSet& f, int bound = 0);

// All clash-free unions C ∪ D for C in f, D in g.
ClauseSet combinatorial_or(const ClauseSet& f, const ClauseSet& g);

// The set of all 2^nvars full clauses over variables 1..nvars.
ClauseSet full_clause_set(int nvars);

// Assign the literal x true: drop clauses containing x, delete -x elsewhere.
ClauseSet apply_literal(const ClauseSet& f, Lit x);

}  // namespace uhitlab

#endif
