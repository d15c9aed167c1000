#ifndef UHITLAB_CLAUSE_HPP
#define UHITLAB_CLAUSE_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "uhitlab/errors.hpp"

namespace uhitlab {

// Literals are non-zero integers; the variable is the absolute value and
// complementation is arithmetic negation.
using Lit = int;
using Var = int;

inline Var var_of(Lit x) { return x < 0 ? -x : x; }
inline Lit complement(Lit x) { return -x; }

// Total order on literals: by variable, positive sign first.
inline bool lit_less(Lit a, Lit b) {
  Var va = var_of(a), vb = var_of(b);
  if (va != vb) return va < vb;
  return a > b;
}

// A clause is a clash-free finite set of literals, stored sorted by
// lit_less. Clauses over variables <= 64 carry occurrence bitmaps so the
// clash test is a couple of word operations; larger clauses fall back to a
// sorted merge.
class Clause {
 public:
  Clause() = default;  // the empty clause
  Clause(std::initializer_list<Lit> lits);
  explicit Clause(std::vector<Lit> lits);

  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  const std::vector<Lit>& literals() const { return lits_; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool contains(Lit x) const;
  bool has_variable(Var v) const { return contains(v) || contains(-v); }
  Var max_variable() const;

  bool subset_of(const Clause& other) const;

  // True iff some literal of this clause occurs complemented in other.
  bool clashes(const Clause& other) const;
  // Number of variables occurring with opposite signs in the two clauses.
  int clash_count(const Clause& other) const;
  // |this △ other|
  int symmetric_difference_size(const Clause& other) const;

  Clause set_union(const Clause& other) const;       // must stay clash-free
  Clause set_intersection(const Clause& other) const;
  Clause without(Lit x) const;
  Clause without_all(const Clause& other) const;  // set difference
  Clause with(Lit x) const;

  bool operator==(const Clause& other) const { return lits_ == other.lits_; }

  std::string to_string() const;

 private:
  void init(std::vector<Lit> lits);
  void rebuild_masks();

  std::vector<Lit> lits_;
  std::uint64_t pos_mask_ = 0;
  std::uint64_t neg_mask_ = 0;
  bool masks_valid_ = true;
};

// Canonical clause order: shorter first, ties broken lexicographically by
// lit_less. Used everywhere a clause sequence is sorted.
bool clause_less(const Clause& a, const Clause& b);

std::ostream& operator<<(std::ostream& os, const Clause& c);

}  // namespace uhitlab

#endif
