#ifndef UHITLAB_TRANSFORMS_HPP
#define UHITLAB_TRANSFORMS_HPP

#include <optional>
#include <vector>

#include "uhitlab/clause_set.hpp"

namespace uhitlab {

// Two clauses identical up to one complemented variable: exactly one clash
// and symmetric difference of size 2.
struct FsPair {
  Clause left;   // clause_less-smaller parent
  Clause right;  // the other parent
  Clause resolvent;
  Var variable = 0;
};

// Two resolvable clauses with symmetric difference of size 3, decomposed as
// {E ∪ {x}, E ∪ {-x, y}}. The resolution literal x sits in the shorter
// clause; y is the side literal.
struct NfsPair {
  Clause with_resolution_literal;  // E ∪ {x}
  Clause with_side_literal;        // E ∪ {-x, y}
  Lit resolution_literal = 0;      // x
  Lit side_literal = 0;            // y
  Clause common_part;              // E
};

// C ◇ D for exactly one clash; throws NotResolvable otherwise.
Clause resolve(const Clause& c, const Clause& d);

// Variable elimination: keep clauses without v, add all one-clash
// resolvents on v, deduplicate.
ClauseSet dp_reduce(const ClauseSet& f, Var v);

// All fs-pairs contained in f, in canonical order.
std::vector<FsPair> find_fs_pairs(const ClauseSet& f);

// Some fs-pair of f has its resolvent not yet in f.
bool fs_resolvable(const ClauseSet& f);

struct FsResolveResult {
  ClauseSet result;
  bool strict = false;  // no variable lost
};

// Replace the pair by its resolvent. The resolvent must be absent from f.
FsResolveResult fs_resolve(const ClauseSet& f, const FsPair& p);

struct FsExtendResult {
  ClauseSet result;
  bool strict = false;  // v already occurred in f
};

// Replace c by c ∪ {v}, c ∪ {-v}; the inverse of fs_resolve.
FsExtendResult fs_extend(const ClauseSet& f, const Clause& c, Var v);

// The nfs-pair decomposition of two clauses, when they form one.
std::optional<NfsPair> decompose_nfs_pair(const Clause& a, const Clause& b);

// All nfs-pairs contained in f, in canonical order.
std::vector<NfsPair> find_nfs_pairs(const ClauseSet& f);

// Replace {E ∪ {x}, E ∪ {-x,y}} by {E ∪ {x,-y}, E ∪ {y}}. Refuses when a
// flip clause is already present (the set would lose a clause otherwise).
ClauseSet nfs_flip(const ClauseSet& f, const NfsPair& p);

// Iterated unit-clause propagation, stopping when no unit clause is left or
// the empty clause appears.
ClauseSet unit_propagate(const ClauseSet& f);

}  // namespace uhitlab

#endif
