#ifndef UHITLAB_DIMACS_HPP
#define UHITLAB_DIMACS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "uhitlab/clause_set.hpp"

namespace uhitlab {

struct DimacsOptions {
  // In strict mode a repeated clause is a parse error; otherwise it is
  // dropped with a warning.
  bool strict = true;
};

struct DimacsResult {
  ClauseSet clause_set;
  std::vector<std::string> warnings;
};

// Reads "p cnf <maxvar> <c>" followed by zero-terminated clauses. Duplicate
// literals inside a clause are merged; a clause containing a variable with
// both signs is a parse error. Throws ParseError with line/column.
DimacsResult read_dimacs(std::istream& in, const DimacsOptions& options = {});
DimacsResult read_dimacs_file(const std::string& path,
                              const DimacsOptions& options = {});

void write_dimacs(std::ostream& out, const ClauseSet& f);
void write_dimacs_file(const std::string& path, const ClauseSet& f);

}  // namespace uhitlab

#endif
