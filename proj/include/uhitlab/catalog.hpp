#ifndef UHITLAB_CATALOG_HPP
#define UHITLAB_CATALOG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uhitlab/clause_set.hpp"

namespace uhitlab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCatalogSchemaVersion = 1;

// One line-delimited record of the flat-file catalogue. The canonical
// clause-set is the primary key.
struct CatalogEntry {
  ClauseSet canonical;
  int n = 0;
  int c = 0;
  int delta = 0;
  bool nonsingular = false;
  bool irreducible = false;
  std::string nfs_outcome = "unknown";  // reducible | exhausted | unknown
  std::string provenance;
  std::string version = kToolVersion;
};

// Builds an entry by running the analyses on the canonical form of f.
CatalogEntry make_catalog_entry(const ClauseSet& f, const std::string& provenance,
                                bool run_flip_search = false);

std::string encode_clause_set(const ClauseSet& f);
ClauseSet decode_clause_set(const std::string& text);

void write_catalog_header(std::ostream& out);
void write_catalog_entry(std::ostream& out, const CatalogEntry& entry);
std::vector<CatalogEntry> read_catalog(std::istream& in);

}  // namespace uhitlab

#endif
