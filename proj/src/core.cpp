#include "uhitlab/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace uhitlab {

Measures measures(const ClauseSet& f) { return {f.n(), f.c(), f.delta()}; }

bool is_hitting(const ClauseSet& f) {
  const auto& cls = f.clauses();
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j)
      if (!cls[i].clashes(cls[j])) return false;
  return true;
}

DyadicSum dyadic_sum(const ClauseSet& f) {
  DyadicSum sum;
  for (const Clause& c : f)
    sum += DyadicSum::power_of_two_inverse(static_cast<unsigned>(c.size()));
  return sum;
}

bool is_uhit(const ClauseSet& f) {
  return is_hitting(f) && dyadic_sum(f).is_one();
}

int oracle_bound() {
  static const int bound = [] {
    if (const char* env = std::getenv("UHITLAB_ORACLE_BOUND")) {
      int v = std::atoi(env);
      if (v > 0) return std::min(v, 62);
    }
    return 24;
  }();
  return bound;
}

namespace {

// Backtracking assignment search shared by the oracles: variables assigned
// in order, a branch is abandoned as soon as some clause has all literals
// false. Plain search, no learning.
class AssignmentSearch {
 public:
  explicit AssignmentSearch(const ClauseSet& f) : vars_(f.variables()) {
    for (const Clause& c : f) {
      clauses_.push_back(&c);
      unassigned_.push_back(static_cast<int>(c.size()));
      sat_count_.push_back(0);
    }
  }

  bool satisfiable() { return search(0); }

 private:
  bool search(std::size_t depth) {
    if (depth == vars_.size()) {
      for (int count : sat_count_)
        if (count == 0) return false;
      return true;
    }
    Var v = vars_[depth];
    for (Lit x : {v, -v}) {
      if (assign(x) && search(depth + 1)) return true;
      undo(x);
    }
    return false;
  }

  // Returns false if some clause became fully falsified.
  bool assign(Lit x) {
    bool ok = true;
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      const Clause& c = *clauses_[i];
      if (c.contains(x)) {
        --unassigned_[i];
        ++sat_count_[i];
      } else if (c.contains(-x)) {
        --unassigned_[i];
        if (sat_count_[i] == 0 && unassigned_[i] == 0) ok = false;
      }
    }
    return ok;
  }

  void undo(Lit x) {
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      const Clause& c = *clauses_[i];
      if (c.contains(x)) {
        ++unassigned_[i];
        --sat_count_[i];
      } else if (c.contains(-x)) {
        ++unassigned_[i];
      }
    }
  }

  std::vector<Var> vars_;
  std::vector<const Clause*> clauses_;
  std::vector<int> unassigned_;
  std::vector<int> sat_count_;
};

void check_bound(int n, int bound, const char* who) {
  int limit = bound > 0 ? bound : oracle_bound();
  if (n > limit)
    fail(ErrorCode::BoundExceeded,
         std::string(who) + " over " + std::to_string(n) +
             " variables exceeds the oracle bound " + std::to_string(limit));
}

}  // namespace

bool sat_oracle(const ClauseSet& f, int bound) {
  check_bound(f.n(), bound, "sat oracle");
  if (f.empty()) return true;
  for (const Clause& c : f)
    if (c.empty()) return false;
  AssignmentSearch search(f);
  return search.satisfiable();
}

namespace {

bool evaluates_true(const ClauseSet& f, const std::vector<Var>& vars,
                    std::uint64_t assignment) {
  for (const Clause& c : f) {
    bool sat = false;
    for (Lit x : c) {
      auto it = std::lower_bound(vars.begin(), vars.end(), var_of(x));
      std::size_t idx = static_cast<std::size_t>(it - vars.begin());
      bool value = (assignment >> idx) & 1;
      if ((x > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace

bool logically_equivalent(const ClauseSet& f, const ClauseSet& g, int bound) {
  std::vector<Var> vars = f.variables();
  vars.insert(vars.end(), g.variables().begin(), g.variables().end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  check_bound(static_cast<int>(vars.size()), bound, "equivalence check");
  std::uint64_t count = std::uint64_t{1} << vars.size();
  for (std::uint64_t a = 0; a < count; ++a)
    if (evaluates_true(f, vars, a) != evaluates_true(g, vars, a)) return false;
  return true;
}

bool is_irredundant(const ClauseSet& f, int bound) {
  check_bound(f.n(), bound, "irredundancy check");
  const std::vector<Var>& vars = f.variables();
  std::uint64_t count = std::uint64_t{1} << vars.size();
  for (const Clause& c : f) {
    ClauseSet rest = f.without_clause(c);
    // f entails rest; redundancy of c means rest also entails c.
    bool witness = false;
    for (std::uint64_t a = 0; a < count && !witness; ++a)
      witness = evaluates_true(rest, vars, a) &&
                !evaluates_true(ClauseSet{c}, vars, a);
    if (!witness) return false;
  }
  return true;
}

ClauseSet combinatorial_or(const ClauseSet& f, const ClauseSet& g) {
  std::vector<Clause> out;
  for (const Clause& c : f)
    for (const Clause& d : g)
      if (!c.clashes(d)) out.push_back(c.set_union(d));
  return ClauseSet(std::move(out));
}

ClauseSet full_clause_set(int nvars) {
  std::vector<Clause> out;
  std::uint64_t count = std::uint64_t{1} << nvars;
  for (std::uint64_t signs = 0; signs < count; ++signs) {
    std::vector<Lit> lits;
    lits.reserve(static_cast<std::size_t>(nvars));
    for (int v = 1; v <= nvars; ++v)
      lits.push_back((signs >> (v - 1)) & 1 ? -v : v);
    out.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(out));
}

ClauseSet apply_literal(const ClauseSet& f, Lit x) {
  if (!f.has_variable(var_of(x)))
    fail(ErrorCode::UnknownVariable,
         "variable " + std::to_string(var_of(x)) + " does not occur");
  std::vector<Clause> out;
  for (const Clause& c : f) {
    if (c.contains(x)) continue;
    out.push_back(c.contains(-x) ? c.without(-x) : c);
  }
  return ClauseSet(std::move(out));
}

}  // namespace uhitlab
