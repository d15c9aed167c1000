#include "uhitlab/factor.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <iterator>

#include "uhitlab/core.hpp"
#include "uhitlab/transforms.hpp"

namespace uhitlab {

ClauseSet pointed_or(const ClauseSet& f, const Clause& pivot,
                     const ClauseSet& g) {
  if (!f.contains(pivot))
    fail(ErrorCode::PivotNotInSet, "pivot clause not in the clause-set");
  return f.without_clause(pivot).set_union(
      combinatorial_or(ClauseSet{pivot}, g));
}

namespace {

ClauseSet residue_of(const ClauseSet& subset, const Clause& intersection) {
  std::vector<Clause> out;
  for (const Clause& c : subset) out.push_back(c.without_all(intersection));
  return ClauseSet(std::move(out));
}

ClauseFactor make_factor_record(const ClauseSet& f, const ClauseSet& subset) {
  ClauseFactor record;
  record.subset = subset;
  record.intersection = subset.intersection_of_clauses();
  record.residue = residue_of(subset, record.intersection);
  record.trivial = subset.c() == 1 ||
                   (subset == f && record.intersection.empty());
  return record;
}

bool clash_criterion_holds(const ClauseSet& f, const ClauseSet& subset,
                           const Clause& intersection) {
  for (const Clause& c : f) {
    if (subset.contains(c)) continue;
    if (!intersection.clashes(c)) return false;
  }
  return true;
}

}  // namespace

std::optional<ClauseFactor> is_clause_factor(const ClauseSet& f,
                                             const ClauseSet& subset) {
  if (subset.empty()) fail(ErrorCode::EmptySubset, "the empty subset");
  if (!subset.subset_of(f))
    fail(ErrorCode::NotSubset, "not a subset of the clause-set");
  ClauseFactor record = make_factor_record(f, subset);
  bool ok;
  if (is_uhit(f))
    ok = clash_criterion_holds(f, subset, record.intersection);
  else
    ok = !sat_oracle(record.residue);
  if (!ok) return std::nullopt;
  return record;
}

namespace {

// DFS over clause indices maintaining the running intersection of the
// chosen clauses and the invariant that every excluded clause clashes with
// it. The intersection only shrinks, so a non-clashing excluded clause
// kills the whole branch. emit returns false to abort the search.
class FactorSubsetSearch {
 public:
  FactorSubsetSearch(const ClauseSet& f, int lo, int hi,
                     const std::function<bool(const std::vector<int>&)>& emit)
      : f_(f), lo_(lo), hi_(hi), emit_(emit) {}

  void run() {
    if (lo_ > hi_) return;
    walk(0, Clause());
  }

  bool aborted() const { return aborted_; }

 private:
  void walk(int idx, const Clause& intersection) {
    if (aborted_) return;
    int c = f_.c();
    int size = static_cast<int>(chosen_.size());
    if (size > hi_) return;
    if (size + (c - idx) < lo_) return;
    if (idx == c) {
      if (size >= lo_ && !aborted_ && !emit_(chosen_)) aborted_ = true;
      return;
    }
    const Clause& clause = f_[static_cast<std::size_t>(idx)];

    // Include idx.
    Clause next = chosen_.empty() ? clause
                                  : intersection.set_intersection(clause);
    bool viable = true;
    if (next.empty() && size + 1 < c && hi_ < c) viable = false;
    if (viable) {
      for (int e : excluded_) {
        if (!next.clashes(f_[static_cast<std::size_t>(e)])) {
          viable = false;
          break;
        }
      }
    }
    if (viable) {
      chosen_.push_back(idx);
      walk(idx + 1, next);
      chosen_.pop_back();
    }

    // Exclude idx: it has to clash with the final intersection, and the
    // current one is already an upper bound for that.
    if (!chosen_.empty() && !intersection.clashes(clause)) return;
    excluded_.push_back(idx);
    walk(idx + 1, intersection);
    excluded_.pop_back();
  }

  const ClauseSet& f_;
  int lo_, hi_;
  const std::function<bool(const std::vector<int>&)>& emit_;
  std::vector<int> chosen_;
  std::vector<int> excluded_;
  bool aborted_ = false;
};

// Clauses are clash-free, so the variable degree counts clauses and
// equality with c means the variable is full.
std::vector<Var> full_variables(const ClauseSet& f) {
  std::vector<Var> out;
  for (Var v : f.variables())
    if (f.variable_degree(v) == f.c()) out.push_back(v);
  return out;
}

bool has_singular_variable(const ClauseSet& f) {
  for (Var v : f.variables())
    if (std::min(f.literal_degree(v), f.literal_degree(-v)) == 1) return true;
  return false;
}

ClauseSet subset_from_indices(const ClauseSet& f,
                              const std::vector<int>& indices) {
  std::vector<Clause> clauses;
  for (int i : indices) clauses.push_back(f[static_cast<std::size_t>(i)]);
  return ClauseSet(std::move(clauses));
}

void check_factor_preconditions(const ClauseSet& f, int clause_bound) {
  if (!is_uhit(f))
    fail(ErrorCode::NotUhit, "factor enumeration is defined on UHIT inputs");
  if (f.c() > clause_bound)
    fail(ErrorCode::BoundExceeded,
         std::to_string(f.c()) + " clauses exceed the enumeration bound " +
             std::to_string(clause_bound));
}

// Size windows for the middle DFS after the structural shortcuts: size 2 is
// handled by fs-pairs, size c-1 by unit clauses; without an fs-pair there
// is no nontrivial factor of size <= 4, without a full variable none of
// size >= c-3.
std::pair<int, int> middle_window(const ClauseSet& f, bool has_fs,
                                  bool has_full) {
  int c = f.c();
  int lo = has_fs ? 3 : 5;
  int hi = has_full ? c - 2 : c - 4;
  return {lo, hi};
}

}  // namespace

std::vector<ClauseFactor> enumerate_factors(const ClauseSet& f,
                                            bool nontrivial_only,
                                            int clause_bound) {
  check_factor_preconditions(f, clause_bound);
  int c = f.c();
  std::vector<ClauseFactor> out;

  if (!nontrivial_only) {
    for (const Clause& clause : f)
      out.push_back(make_factor_record(f, ClauseSet{clause}));
    if (c > 1) out.push_back(make_factor_record(f, f));
  }
  if (c < 3) {
    std::sort(out.begin(), out.end(),
              [](const ClauseFactor& a, const ClauseFactor& b) {
                return clause_set_less(a.subset, b.subset);
              });
    return out;
  }

  std::vector<FsPair> fs_pairs = find_fs_pairs(f);
  for (const FsPair& p : fs_pairs)
    out.push_back(make_factor_record(f, ClauseSet{p.left, p.right}));

  for (const Clause& clause : f)
    if (clause.size() == 1)
      out.push_back(make_factor_record(f, f.without_clause(clause)));

  auto [lo, hi] = middle_window(f, !fs_pairs.empty(),
                                !full_variables(f).empty());
  if (lo <= hi) {
    std::function<bool(const std::vector<int>&)> emit =
        [&](const std::vector<int>& indices) {
          out.push_back(make_factor_record(f, subset_from_indices(f, indices)));
          return true;
        };
    FactorSubsetSearch search(f, lo, hi, emit);
    search.run();
  }

  std::sort(out.begin(), out.end(),
            [](const ClauseFactor& a, const ClauseFactor& b) {
              return clause_set_less(a.subset, b.subset);
            });
  return out;
}

bool has_nontrivial_factor(const ClauseSet& f, int clause_bound) {
  check_factor_preconditions(f, clause_bound);
  int c = f.c();
  if (c < 3) return false;
  if (!find_fs_pairs(f).empty()) return true;
  if (has_singular_variable(f)) return true;
  if (!full_variables(f).empty()) return true;
  for (const Clause& clause : f)
    if (clause.size() == 1) return true;
  auto [lo, hi] = middle_window(f, false, false);
  if (lo > hi) return false;
  bool found = false;
  std::function<bool(const std::vector<int>&)> emit =
      [&](const std::vector<int>&) {
        found = true;
        return false;
      };
  FactorSubsetSearch search(f, lo, hi, emit);
  search.run();
  return found;
}

bool is_clause_irreducible(const ClauseSet& f, int clause_bound) {
  return !has_nontrivial_factor(f, clause_bound);
}

Factorisation factorise(const ClauseSet& f, const ClauseFactor& factor) {
  std::optional<ClauseFactor> checked = is_clause_factor(f, factor.subset);
  if (!checked || !(checked->intersection == factor.intersection))
    fail(ErrorCode::NotAFactor, "the record is not a clause-factor of f");
  Factorisation result;
  result.pivot = factor.intersection;
  result.cofactor =
      f.set_difference(factor.subset).with_clause(factor.intersection);
  result.residual = factor.residue;
  const auto& av = result.cofactor.variables();
  const auto& bv = result.residual.variables();
  std::set_intersection(av.begin(), av.end(), bv.begin(), bv.end(),
                        std::back_inserter(result.shared_variables));
  assert(pointed_or(result.cofactor, result.pivot, result.residual) == f);
  return result;
}

std::optional<Clause> clause_equivalent(const ClauseSet& f, int bound) {
  if (f.empty()) return std::nullopt;
  Clause intersection = f.intersection_of_clauses();
  ClauseSet residue = residue_of(f, intersection);
  if (sat_oracle(residue, bound)) return std::nullopt;
  return intersection;
}

std::vector<ClauseSet> irreducible_decomposition(const ClauseSet& f,
                                                 int clause_bound) {
  std::vector<ClauseFactor> factors = enumerate_factors(f, true, clause_bound);
  if (factors.empty()) return {f};
  Factorisation split = factorise(f, factors.front());
  std::vector<ClauseSet> out =
      irreducible_decomposition(split.cofactor, clause_bound);
  std::vector<ClauseSet> rest =
      irreducible_decomposition(split.residual, clause_bound);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace uhitlab
