#include "uhitlab/transforms.hpp"

#include <algorithm>

#include "uhitlab/core.hpp"

namespace uhitlab {

namespace {

// The clashing literal of a one-clash pair, as it occurs in c.
Lit clash_literal(const Clause& c, const Clause& d) {
  for (Lit x : c)
    if (d.contains(-x)) return x;
  fail(ErrorCode::NotResolvable, "clauses do not clash");
}

}  // namespace

Clause resolve(const Clause& c, const Clause& d) {
  if (c.clash_count(d) != 1)
    fail(ErrorCode::NotResolvable,
         "resolution needs exactly one clash, got " +
             std::to_string(c.clash_count(d)));
  Lit x = clash_literal(c, d);
  return c.without(x).set_union(d.without(-x));
}

ClauseSet dp_reduce(const ClauseSet& f, Var v) {
  if (!f.has_variable(v))
    fail(ErrorCode::UnknownVariable,
         "variable " + std::to_string(v) + " does not occur");
  std::vector<Clause> out;
  std::vector<const Clause*> pos, neg;
  for (const Clause& c : f) {
    if (c.contains(v))
      pos.push_back(&c);
    else if (c.contains(-v))
      neg.push_back(&c);
    else
      out.push_back(c);
  }
  for (const Clause* c : pos)
    for (const Clause* d : neg)
      if (c->clash_count(*d) == 1) out.push_back(resolve(*c, *d));
  return ClauseSet(std::move(out));
}

std::vector<FsPair> find_fs_pairs(const ClauseSet& f) {
  std::vector<FsPair> out;
  const auto& cls = f.clauses();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      if (cls[i].clash_count(cls[j]) != 1) continue;
      if (cls[i].symmetric_difference_size(cls[j]) != 2) continue;
      Lit x = clash_literal(cls[i], cls[j]);
      out.push_back(
          {cls[i], cls[j], resolve(cls[i], cls[j]), var_of(x)});
    }
  }
  return out;
}

bool fs_resolvable(const ClauseSet& f) {
  for (const FsPair& p : find_fs_pairs(f))
    if (!f.contains(p.resolvent)) return true;
  return false;
}

FsResolveResult fs_resolve(const ClauseSet& f, const FsPair& p) {
  if (!f.contains(p.left) || !f.contains(p.right))
    fail(ErrorCode::PairNotInSet, "fs-pair clauses not in the clause-set");
  if (f.contains(p.resolvent))
    fail(ErrorCode::ResolventPresent,
         "resolvent already present, not fs-resolvable here");
  ClauseSet result =
      f.without_clause(p.left).without_clause(p.right).with_clause(
          p.resolvent);
  return {result, result.n() == f.n()};
}

FsExtendResult fs_extend(const ClauseSet& f, const Clause& c, Var v) {
  if (!f.contains(c))
    fail(ErrorCode::ClauseNotInSet, "extension clause not in the clause-set");
  if (c.has_variable(v))
    fail(ErrorCode::VariableInClause,
         "variable " + std::to_string(v) + " occurs in the clause");
  Clause with_pos = c.with(v);
  Clause with_neg = c.with(-v);
  if (f.contains(with_pos) || f.contains(with_neg))
    fail(ErrorCode::ResultClausePresent,
         "an extension clause is already present");
  bool strict = f.has_variable(v);
  return {f.without_clause(c).with_clause(with_pos).with_clause(with_neg),
          strict};
}

std::optional<NfsPair> decompose_nfs_pair(const Clause& a, const Clause& b) {
  if (a.clash_count(b) != 1) return std::nullopt;
  if (a.symmetric_difference_size(b) != 3) return std::nullopt;
  // Sizes differ by one; the resolution literal is the clash literal,
  // which always sits in the shorter clause.
  const Clause& shorter = a.size() < b.size() ? a : b;
  const Clause& longer = a.size() < b.size() ? b : a;
  Clause common = shorter.set_intersection(longer);
  Clause rest_short = shorter.without_all(common);
  Clause rest_long = longer.without_all(common);
  if (rest_short.size() != 1 || rest_long.size() != 2) return std::nullopt;
  Lit x = rest_short.literals()[0];
  if (!rest_long.contains(-x)) return std::nullopt;
  Lit y = rest_long.without(-x).literals()[0];
  return NfsPair{shorter, longer, x, y, common};
}

std::vector<NfsPair> find_nfs_pairs(const ClauseSet& f) {
  std::vector<NfsPair> out;
  const auto& cls = f.clauses();
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j)
      if (std::optional<NfsPair> p = decompose_nfs_pair(cls[i], cls[j]))
        out.push_back(std::move(*p));
  return out;
}

ClauseSet nfs_flip(const ClauseSet& f, const NfsPair& p) {
  if (!f.contains(p.with_resolution_literal) ||
      !f.contains(p.with_side_literal))
    fail(ErrorCode::PairNotInSet, "nfs-pair clauses not in the clause-set");
  Clause flipped_long =
      p.common_part.with(p.resolution_literal).with(-p.side_literal);
  Clause flipped_short = p.common_part.with(p.side_literal);
  if (f.contains(flipped_long) || f.contains(flipped_short))
    fail(ErrorCode::FlipClausePresent,
         "a flip clause is already present, not nfs-resolvable here");
  return f.without_clause(p.with_resolution_literal)
      .without_clause(p.with_side_literal)
      .with_clause(flipped_long)
      .with_clause(flipped_short);
}

ClauseSet unit_propagate(const ClauseSet& f) {
  ClauseSet current = f;
  for (;;) {
    const Clause* unit = nullptr;
    for (const Clause& c : current) {
      if (c.empty()) return current;
      if (c.size() == 1) {
        unit = &c;
        break;
      }
    }
    if (!unit) return current;
    current = apply_literal(current, unit->literals()[0]);
  }
}

}  // namespace uhitlab
