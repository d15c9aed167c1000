#include "uhitlab/singular.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "uhitlab/core.hpp"

namespace uhitlab {

SingularityProfile singularity_profile(const ClauseSet& f) {
  SingularityProfile profile;
  for (Var v : f.variables()) {
    int pos = f.literal_degree(v);
    int neg = f.literal_degree(-v);
    if (std::min(pos, neg) != 1) continue;
    profile.singular.push_back(v);
    if (pos + neg == 2)
      profile.one_singular.push_back(v);
    else
      profile.non_one_singular.push_back(v);
  }
  profile.nsv = static_cast<int>(profile.singular.size());
  profile.nosv = static_cast<int>(profile.one_singular.size());
  profile.nnosv = static_cast<int>(profile.non_one_singular.size());
  return profile;
}

ClauseSet sdp_reduce(const ClauseSet& f, Var v) {
  if (!f.has_variable(v))
    fail(ErrorCode::UnknownVariable,
         "variable " + std::to_string(v) + " does not occur");
  if (std::min(f.literal_degree(v), f.literal_degree(-v)) != 1)
    fail(ErrorCode::NotSingular,
         "variable " + std::to_string(v) + " is not singular");
  return dp_reduce(f, v);
}

namespace {

NormalFormResult snf_impl(const ClauseSet& f, std::mt19937_64* rng) {
  if (!is_uhit(f))
    fail(ErrorCode::NotUhit, "normal form is defined on UHIT inputs");
  NormalFormResult result;
  ClauseSet current = f;
  for (;;) {
    SingularityProfile profile = singularity_profile(current);
    if (profile.nonsingular()) break;
    Var v = profile.singular.front();
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(
          0, profile.singular.size() - 1);
      v = profile.singular[pick(*rng)];
    }
    current = sdp_reduce(current, v);
    assert(is_uhit(current));
    result.reduction_order.push_back(v);
  }
  result.normal_form = std::move(current);
  result.singularity_index = f.c() - result.normal_form.c();
  return result;
}

}  // namespace

NormalFormResult snf(const ClauseSet& f) { return snf_impl(f, nullptr); }

NormalFormResult snf_seeded(const ClauseSet& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return snf_impl(f, &rng);
}

namespace {

// Enumerate subsets of size m whose running intersection stays nonempty
// (an empty intersection clashes with nothing, so only the full set can
// carry it), then test the clash condition against the complement.
void extension_subsets(const ClauseSet& f, int m,
                       std::vector<int>& chosen, int next,
                       const Clause& intersection,
                       std::vector<std::vector<int>>& out) {
  int c = f.c();
  if (static_cast<int>(chosen.size()) == m) {
    const Clause& inter = intersection;
    if (inter.empty() && m < c) return;
    for (int i = 0; i < c; ++i) {
      if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
      if (!inter.clashes(f[static_cast<std::size_t>(i)])) return;
    }
    out.push_back(chosen);
    return;
  }
  int needed = m - static_cast<int>(chosen.size());
  for (int i = next; c - i >= needed; ++i) {
    Clause next_inter =
        chosen.empty() ? f[static_cast<std::size_t>(i)]
                       : intersection.set_intersection(
                             f[static_cast<std::size_t>(i)]);
    if (next_inter.empty() && m < c) continue;
    chosen.push_back(i);
    extension_subsets(f, m, chosen, i + 1, next_inter, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<SingularExtension> singular_hitting_extensions(const ClauseSet& f,
                                                           int m) {
  if (!is_uhit(f))
    fail(ErrorCode::NotUhit, "hitting extensions are defined on UHIT inputs");
  if (m < 1 || m > f.c())
    fail(ErrorCode::BadArity,
         "extension arity " + std::to_string(m) + " outside 1.." +
             std::to_string(f.c()));
  std::vector<std::vector<int>> subsets;
  std::vector<int> chosen;
  extension_subsets(f, m, chosen, 0, Clause(), subsets);

  Var x = f.max_variable() + 1;
  std::vector<SingularExtension> out;
  for (const auto& indices : subsets) {
    std::vector<Clause> witness_clauses;
    for (int i : indices) witness_clauses.push_back(f[static_cast<std::size_t>(i)]);
    ClauseSet witness(witness_clauses);
    ClauseSet extended = f.set_difference(witness)
                             .with_clause(witness.intersection_of_clauses().with(x));
    for (const Clause& c : witness)
      extended = extended.with_clause(c.with(-x));
    out.push_back({std::move(extended), std::move(witness)});
  }
  return out;
}

std::vector<Var> choose_singular_tuple(const ClauseSet& f) {
  if (!is_uhit(f))
    fail(ErrorCode::NotUhit, "singular tuples are defined on UHIT inputs");
  SingularityProfile profile = singularity_profile(f);
  if (profile.nonsingular())
    fail(ErrorCode::Nonsingular, "the clause-set has no singular variable");
  if (!profile.non_one_singular.empty())
    return {profile.non_one_singular.front()};

  Var v = profile.one_singular.front();
  // Both occurrences of a 1-singular variable form an fs-pair C∪{v}, C∪{-v}.
  Clause with_pos = f.clauses_with(v).intersection_of_clauses();
  Clause companion = with_pos.without(v);
  bool all_heavy = true;
  for (Lit x : companion)
    if (f.literal_degree(x) < 3) all_heavy = false;
  if (all_heavy) return {v};
  for (Lit x : companion)
    if (f.literal_degree(x) == 2 && f.literal_degree(-x) >= 2)
      return {v, var_of(x)};
  fail(ErrorCode::NoEligibleCompanion,
       "no companion literal of degree 2 with complement degree >= 2");
}

FsPair fs_pair_of_singular(const ClauseSet& f, Var v) {
  if (!is_uhit(f))
    fail(ErrorCode::NotUhit, "defined on UHIT inputs");
  if (!f.has_variable(v))
    fail(ErrorCode::UnknownVariable,
         "variable " + std::to_string(v) + " does not occur");
  if (std::min(f.literal_degree(v), f.literal_degree(-v)) != 1)
    fail(ErrorCode::NotSingular,
         "variable " + std::to_string(v) + " is not singular");
  Clause a = f.clauses_with(v).intersection_of_clauses();
  Clause b = f.clauses_with(-v).intersection_of_clauses();
  if (a.clash_count(b) != 1 || a.symmetric_difference_size(b) != 2)
    fail(ErrorCode::PreconditionViolation,
         "intersections of the two literal sides do not form an fs-pair");
  if (clause_less(b, a)) std::swap(a, b);
  return {a, b, resolve(a, b), v};
}

}  // namespace uhitlab
