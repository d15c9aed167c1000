#ifndef UHITLAB_TEST_UTIL_HPP
#define UHITLAB_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "uhitlab/clause_set.hpp"
#include "uhitlab/iso.hpp"

namespace uhitlab::testing {

// Arbitrary (not necessarily hitting) clause-set over variables 1..n.
inline ClauseSet random_clause_set(std::mt19937_64& rng, int n,
                                   int max_clauses) {
  std::uniform_int_distribution<int> count(0, max_clauses);
  std::uniform_int_distribution<int> polarity(0, 2);
  std::vector<Clause> clauses;
  int c = count(rng);
  for (int i = 0; i < c; ++i) {
    std::vector<Lit> lits;
    for (Var v = 1; v <= n; ++v) {
      switch (polarity(rng)) {
        case 0: lits.push_back(v); break;
        case 1: lits.push_back(-v); break;
        default: break;
      }
    }
    clauses.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(clauses));
}

// A uniformly random mixed symmetry over the variables of f.
inline ClauseSet random_isomorphic_copy(std::mt19937_64& rng,
                                        const ClauseSet& f,
                                        Var relabel_base = 0) {
  std::vector<Var> targets = f.variables();
  if (relabel_base > 0) {
    targets.clear();
    for (std::size_t i = 0; i < f.variables().size(); ++i)
      targets.push_back(relabel_base + static_cast<Var>(i) * 2);
  }
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<std::pair<Var, Lit>> mapping;
  for (std::size_t i = 0; i < f.variables().size(); ++i) {
    Lit image = targets[i];
    if (rng() & 1) image = -image;
    mapping.emplace_back(f.variables()[i], image);
  }
  return apply_literal_map(f, mapping);
}

// Reference minimum-image computation: every variable bijection combined
// with every sign flip, feasible up to n = 5. Independent of the
// production search.
inline ClauseSet brute_force_canonical(const ClauseSet& f) {
  const std::vector<Var>& vars = f.variables();
  int n = static_cast<int>(vars.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  bool first = true;
  ClauseSet best;
  do {
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
      std::vector<std::pair<Var, Lit>> mapping;
      for (int i = 0; i < n; ++i) {
        Lit image = perm[static_cast<std::size_t>(i)];
        if ((signs >> i) & 1) image = -image;
        mapping.emplace_back(vars[static_cast<std::size_t>(i)], image);
      }
      ClauseSet candidate = apply_literal_map(f, mapping);
      if (first || clause_set_less(candidate, best)) {
        best = candidate;
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace uhitlab::testing

#endif
