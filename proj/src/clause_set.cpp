#include "uhitlab/clause_set.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>

namespace uhitlab {

ClauseSet::ClauseSet(std::initializer_list<Clause> clauses) {
  init(std::vector<Clause>(clauses));
}

ClauseSet::ClauseSet(std::vector<Clause> clauses) { init(std::move(clauses)); }

void ClauseSet::init(std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end(), clause_less);
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  clauses_ = std::move(clauses);

  for (const Clause& c : clauses_)
    for (Lit x : c) vars_.push_back(var_of(x));
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());

  degrees_.assign(vars_.size(), {0, 0});
  for (const Clause& c : clauses_) {
    for (Lit x : c) {
      auto it = std::lower_bound(vars_.begin(), vars_.end(), var_of(x));
      auto& d = degrees_[static_cast<std::size_t>(it - vars_.begin())];
      ++d[x > 0 ? 0 : 1];
    }
  }
}

bool ClauseSet::has_variable(Var v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

int ClauseSet::literal_degree(Lit x) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var_of(x));
  if (it == vars_.end() || *it != var_of(x)) return 0;
  const auto& d = degrees_[static_cast<std::size_t>(it - vars_.begin())];
  return x > 0 ? d[0] : d[1];
}

bool ClauseSet::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c,
                            clause_less);
}

ClauseSet ClauseSet::clauses_with(Lit x) const {
  std::vector<Clause> out;
  for (const Clause& c : clauses_)
    if (c.contains(x)) out.push_back(c);
  return ClauseSet(std::move(out));
}

ClauseSet ClauseSet::with_clause(const Clause& c) const {
  std::vector<Clause> out = clauses_;
  out.push_back(c);
  return ClauseSet(std::move(out));
}

ClauseSet ClauseSet::without_clause(const Clause& c) const {
  std::vector<Clause> out;
  out.reserve(clauses_.size());
  for (const Clause& d : clauses_)
    if (!(d == c)) out.push_back(d);
  return ClauseSet(std::move(out));
}

ClauseSet ClauseSet::set_union(const ClauseSet& other) const {
  std::vector<Clause> out = clauses_;
  out.insert(out.end(), other.clauses_.begin(), other.clauses_.end());
  return ClauseSet(std::move(out));
}

ClauseSet ClauseSet::set_difference(const ClauseSet& other) const {
  std::vector<Clause> out;
  for (const Clause& c : clauses_)
    if (!other.contains(c)) out.push_back(c);
  return ClauseSet(std::move(out));
}

bool ClauseSet::subset_of(const ClauseSet& other) const {
  for (const Clause& c : clauses_)
    if (!other.contains(c)) return false;
  return true;
}

Clause ClauseSet::intersection_of_clauses() const {
  if (clauses_.empty()) return Clause();
  Clause acc = clauses_.front();
  for (std::size_t i = 1; i < clauses_.size() && !acc.empty(); ++i)
    acc = acc.set_intersection(clauses_[i]);
  return acc;
}

std::string ClauseSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool clause_set_less(const ClauseSet& a, const ClauseSet& b) {
  if (a.c() != b.c()) return a.c() < b.c();
  for (int i = 0; i < a.c(); ++i) {
    if (clause_less(a[static_cast<std::size_t>(i)],
                    b[static_cast<std::size_t>(i)]))
      return true;
    if (clause_less(b[static_cast<std::size_t>(i)],
                    a[static_cast<std::size_t>(i)]))
      return false;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const ClauseSet& f) {
  os << '{';
  bool first = true;
  for (const Clause& c : f) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  return os << '}';
}

}  // namespace uhitlab
