#ifndef UHITLAB_CLAUSE_SET_HPP
#define UHITLAB_CLAUSE_SET_HPP

#include <array>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "uhitlab/clause.hpp"

namespace uhitlab {

// A finite set of clauses, stored in canonical order (clause_less) without
// duplicates. Measures and literal degrees are cached at construction; the
// value is immutable afterwards.
class ClauseSet {
 public:
  ClauseSet() = default;  // the empty clause-set (a tautology)
  ClauseSet(std::initializer_list<Clause> clauses);
  explicit ClauseSet(std::vector<Clause> clauses);

  int c() const { return static_cast<int>(clauses_.size()); }
  int n() const { return static_cast<int>(vars_.size()); }
  int delta() const { return c() - n(); }

  bool empty() const { return clauses_.empty(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }

  const std::vector<Var>& variables() const { return vars_; }
  bool has_variable(Var v) const;
  Var max_variable() const { return vars_.empty() ? 0 : vars_.back(); }

  int literal_degree(Lit x) const;
  int variable_degree(Var v) const {
    return literal_degree(v) + literal_degree(-v);
  }

  bool contains(const Clause& c) const;

  // The sub-clause-set of clauses containing the literal x.
  ClauseSet clauses_with(Lit x) const;

  ClauseSet with_clause(const Clause& c) const;
  ClauseSet without_clause(const Clause& c) const;
  ClauseSet set_union(const ClauseSet& other) const;
  ClauseSet set_difference(const ClauseSet& other) const;
  bool subset_of(const ClauseSet& other) const;

  // Intersection of all clauses; the empty clause when the set is empty.
  Clause intersection_of_clauses() const;

  bool operator==(const ClauseSet& other) const {
    return clauses_ == other.clauses_;
  }

  std::string to_string() const;

 private:
  void init(std::vector<Clause> clauses);

  std::vector<Clause> clauses_;
  std::vector<Var> vars_;
  // Degree cache, aligned with vars_: [positive degree, negative degree].
  std::vector<std::array<int, 2>> degrees_;
};

// Total order on clause-sets: fewer clauses first, then element-wise
// clause_less. Gives canonical-form selection and output a fixed order.
bool clause_set_less(const ClauseSet& a, const ClauseSet& b);

std::ostream& operator<<(std::ostream& os, const ClauseSet& f);

}  // namespace uhitlab

#endif
