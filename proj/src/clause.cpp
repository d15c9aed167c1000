#include "uhitlab/clause.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>

namespace uhitlab {

Clause::Clause(std::initializer_list<Lit> lits) { init(std::vector<Lit>(lits)); }

Clause::Clause(std::vector<Lit> lits) { init(std::move(lits)); }

void Clause::init(std::vector<Lit> lits) {
  for (Lit x : lits) {
    if (x == 0) fail(ErrorCode::PreconditionViolation, "literal 0 is not allowed");
  }
  std::sort(lits.begin(), lits.end(), lit_less);
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
    if (var_of(lits[i]) == var_of(lits[i + 1]))
      fail(ErrorCode::TautologicalClause,
           "clause contains variable " + std::to_string(var_of(lits[i])) +
               " with both signs");
  }
  lits_ = std::move(lits);
  rebuild_masks();
}

void Clause::rebuild_masks() {
  pos_mask_ = neg_mask_ = 0;
  masks_valid_ = true;
  for (Lit x : lits_) {
    Var v = var_of(x);
    if (v > 64) {
      masks_valid_ = false;
      pos_mask_ = neg_mask_ = 0;
      return;
    }
    std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (x > 0)
      pos_mask_ |= bit;
    else
      neg_mask_ |= bit;
  }
}

bool Clause::contains(Lit x) const {
  if (masks_valid_) {
    Var v = var_of(x);
    if (v > 64) return false;
    std::uint64_t bit = std::uint64_t{1} << (v - 1);
    return x > 0 ? (pos_mask_ & bit) != 0 : (neg_mask_ & bit) != 0;
  }
  return std::binary_search(lits_.begin(), lits_.end(), x, lit_less);
}

Var Clause::max_variable() const {
  return lits_.empty() ? 0 : var_of(lits_.back());
}

bool Clause::subset_of(const Clause& other) const {
  if (masks_valid_ && other.masks_valid_)
    return (pos_mask_ & ~other.pos_mask_) == 0 &&
           (neg_mask_ & ~other.neg_mask_) == 0;
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(),
                       lits_.end(), lit_less);
}

bool Clause::clashes(const Clause& other) const {
  if (masks_valid_ && other.masks_valid_)
    return ((pos_mask_ & other.neg_mask_) | (neg_mask_ & other.pos_mask_)) != 0;
  return clash_count(other) > 0;
}

int Clause::clash_count(const Clause& other) const {
  if (masks_valid_ && other.masks_valid_)
    return std::popcount((pos_mask_ & other.neg_mask_) |
                         (neg_mask_ & other.pos_mask_));
  int count = 0;
  auto i = lits_.begin();
  auto j = other.lits_.begin();
  while (i != lits_.end() && j != other.lits_.end()) {
    Var vi = var_of(*i), vj = var_of(*j);
    if (vi < vj) {
      ++i;
    } else if (vj < vi) {
      ++j;
    } else {
      if (*i == -*j) ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

int Clause::symmetric_difference_size(const Clause& other) const {
  int common = 0;
  auto i = lits_.begin();
  auto j = other.lits_.begin();
  while (i != lits_.end() && j != other.lits_.end()) {
    if (lit_less(*i, *j)) {
      ++i;
    } else if (lit_less(*j, *i)) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<int>(size() + other.size()) - 2 * common;
}

Clause Clause::set_union(const Clause& other) const {
  std::vector<Lit> out;
  out.reserve(size() + other.size());
  std::merge(lits_.begin(), lits_.end(), other.lits_.begin(), other.lits_.end(),
             std::back_inserter(out), lit_less);
  return Clause(std::move(out));
}

Clause Clause::set_intersection(const Clause& other) const {
  std::vector<Lit> out;
  std::set_intersection(lits_.begin(), lits_.end(), other.lits_.begin(),
                        other.lits_.end(), std::back_inserter(out), lit_less);
  return Clause(std::move(out));
}

Clause Clause::without(Lit x) const {
  std::vector<Lit> out;
  out.reserve(size());
  for (Lit y : lits_)
    if (y != x) out.push_back(y);
  return Clause(std::move(out));
}

Clause Clause::without_all(const Clause& other) const {
  std::vector<Lit> out;
  std::set_difference(lits_.begin(), lits_.end(), other.lits_.begin(),
                      other.lits_.end(), std::back_inserter(out), lit_less);
  return Clause(std::move(out));
}

Clause Clause::with(Lit x) const {
  std::vector<Lit> out = lits_;
  out.push_back(x);
  return Clause(std::move(out));
}

std::string Clause::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool clause_less(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      lit_less);
}

std::ostream& operator<<(std::ostream& os, const Clause& c) {
  os << '{';
  bool first = true;
  for (Lit x : c) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  return os << '}';
}

}  // namespace uhitlab
