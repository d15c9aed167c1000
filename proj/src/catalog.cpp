#include "uhitlab/catalog.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "uhitlab/factor.hpp"
#include "uhitlab/iso.hpp"
#include "uhitlab/search.hpp"
#include "uhitlab/singular.hpp"

namespace uhitlab {

// Clauses joined by ';', literals by ','; '0' stands for the empty clause
// and '-' for the empty clause-set (0 is never a literal).
std::string encode_clause_set(const ClauseSet& f) {
  if (f.empty()) return "-";
  std::ostringstream os;
  bool first_clause = true;
  for (const Clause& c : f) {
    if (!first_clause) os << ';';
    first_clause = false;
    if (c.empty()) {
      os << '0';
      continue;
    }
    bool first_lit = true;
    for (Lit x : c) {
      if (!first_lit) os << ',';
      first_lit = false;
      os << x;
    }
  }
  return os.str();
}

ClauseSet decode_clause_set(const std::string& text) {
  if (text == "-") return ClauseSet();
  std::vector<Clause> clauses;
  std::stringstream splitter(text);
  std::string chunk;
  while (std::getline(splitter, chunk, ';')) {
    std::vector<Lit> lits;
    if (chunk != "0") {
      std::stringstream lit_splitter(chunk);
      std::string lit_text;
      while (std::getline(lit_splitter, lit_text, ',')) {
        try {
          lits.push_back(std::stoi(lit_text));
        } catch (const std::exception&) {
          fail(ErrorCode::ParseError, "bad literal '" + lit_text + "'");
        }
      }
    }
    clauses.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(clauses));
}

CatalogEntry make_catalog_entry(const ClauseSet& f,
                                const std::string& provenance,
                                bool run_flip_search) {
  CatalogEntry entry;
  entry.canonical = canonical_form(f).canonical;
  entry.n = entry.canonical.n();
  entry.c = entry.canonical.c();
  entry.delta = entry.canonical.delta();
  entry.nonsingular = singularity_profile(entry.canonical).nonsingular();
  entry.irreducible = is_clause_irreducible(entry.canonical);
  entry.provenance = provenance;
  if (run_flip_search) {
    FlipPath path = nfs_search(entry.canonical);
    entry.nfs_outcome = path.outcome == FlipOutcome::FoundReducible
                            ? "reducible"
                            : "exhausted";
  }
  return entry;
}

void write_catalog_header(std::ostream& out) {
  out << "uhitcat " << kCatalogSchemaVersion << '\n';
}

void write_catalog_entry(std::ostream& out, const CatalogEntry& entry) {
  out << "entry n=" << entry.n << " c=" << entry.c << " delta=" << entry.delta
      << " nonsingular=" << (entry.nonsingular ? 1 : 0)
      << " irreducible=" << (entry.irreducible ? 1 : 0)
      << " nfs=" << entry.nfs_outcome << " provenance=" << entry.provenance
      << " version=" << entry.version
      << " clauses=" << encode_clause_set(entry.canonical) << '\n';
}

namespace {

std::optional<std::string> field_value(const std::string& line,
                                       const std::string& key) {
  std::string needle = " " + key + "=";
  std::size_t at = line.find(needle);
  if (at == std::string::npos) return std::nullopt;
  std::size_t start = at + needle.size();
  std::size_t end = line.find(' ', start);
  if (end == std::string::npos) end = line.size();
  return line.substr(start, end - start);
}

}  // namespace

std::vector<CatalogEntry> read_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    fail(ErrorCode::ParseError, "empty catalogue");
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  header >> magic >> version;
  if (magic != "uhitcat" || version != kCatalogSchemaVersion)
    fail(ErrorCode::ParseError, "unsupported catalogue header '" + line + "'");

  std::vector<CatalogEntry> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("entry ", 0) != 0)
      fail(ErrorCode::ParseError, "unexpected catalogue line '" + line + "'");
    CatalogEntry entry;
    auto need = [&](const char* key) {
      auto value = field_value(line, key);
      if (!value)
        fail(ErrorCode::ParseError,
             std::string("catalogue entry misses ") + key);
      return *value;
    };
    entry.n = std::stoi(need("n"));
    entry.c = std::stoi(need("c"));
    entry.delta = std::stoi(need("delta"));
    entry.nonsingular = need("nonsingular") == "1";
    entry.irreducible = need("irreducible") == "1";
    entry.nfs_outcome = need("nfs");
    entry.provenance = need("provenance");
    entry.version = need("version");
    entry.canonical = decode_clause_set(need("clauses"));
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace uhitlab
