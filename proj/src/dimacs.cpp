#include "uhitlab/dimacs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace uhitlab {

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  // Next whitespace-separated token, skipping comment lines. Returns false
  // on end of input.
  bool next(std::string& token) {
    token.clear();
    int ch;
    for (;;) {
      bool was_line_start = at_line_start_;
      ch = get();
      if (ch == EOF) break;
      if (ch == 'c' && was_line_start) {
        skip_line();
        continue;
      }
      if (std::isspace(ch)) continue;
      break;
    }
    if (ch == EOF) return false;
    token_line_ = line_;
    token_column_ = column_;
    token.push_back(static_cast<char>(ch));
    while ((ch = get()) != EOF && !std::isspace(ch))
      token.push_back(static_cast<char>(ch));
    return true;
  }

  long line() const { return token_line_; }
  long column() const { return token_column_; }

 private:
  int get() {
    int ch = in_.get();
    if (ch == '\n') {
      ++line_;
      column_ = 0;
      at_line_start_ = true;
    } else if (ch != EOF) {
      ++column_;
      if (!std::isspace(ch)) at_line_start_ = false;
    }
    return ch;
  }

  void skip_line() {
    int ch;
    while ((ch = in_.get()) != EOF && ch != '\n') {
    }
    ++line_;
    column_ = 0;
    at_line_start_ = true;
  }

  std::istream& in_;
  long line_ = 1;
  long column_ = 0;
  bool at_line_start_ = true;
  long token_line_ = 1;
  long token_column_ = 0;
};

long parse_long(const std::string& token, const Tokenizer& tokens,
                const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size())
    throw ParseError(std::string("expected ") + what + ", got '" + token + "'",
                     tokens.line(), tokens.column());
  return value;
}

}  // namespace

DimacsResult read_dimacs(std::istream& in, const DimacsOptions& options) {
  Tokenizer tokens(in);
  std::string token;

  if (!tokens.next(token) || token != "p")
    throw ParseError("missing 'p cnf' header", tokens.line(), tokens.column());
  if (!tokens.next(token) || token != "cnf")
    throw ParseError("expected 'cnf' after 'p'", tokens.line(),
                     tokens.column());
  if (!tokens.next(token))
    throw ParseError("missing variable count", tokens.line(), tokens.column());
  long max_var = parse_long(token, tokens, "a variable count");
  if (!tokens.next(token))
    throw ParseError("missing clause count", tokens.line(), tokens.column());
  long clause_count = parse_long(token, tokens, "a clause count");
  if (max_var < 0 || clause_count < 0)
    throw ParseError("negative header counts", tokens.line(), tokens.column());

  DimacsResult result;
  std::vector<Clause> clauses;
  std::vector<Lit> current;
  long clauses_read = 0;
  while (tokens.next(token)) {
    long value = parse_long(token, tokens, "a literal or 0");
    if (value == 0) {
      ++clauses_read;
      // The Clause constructor merges duplicates and rejects clashes.
      Clause clause;
      try {
        clause = Clause(std::vector<Lit>(current.begin(), current.end()));
      } catch (const Error& e) {
        throw ParseError(e.what(), tokens.line(), tokens.column());
      }
      current.clear();
      bool duplicate = false;
      for (const Clause& seen : clauses)
        if (seen == clause) duplicate = true;
      if (duplicate) {
        if (options.strict)
          throw ParseError("duplicate clause " + clause.to_string(),
                           tokens.line(), tokens.column());
        result.warnings.push_back("dropped duplicate clause " +
                                  clause.to_string());
      } else {
        clauses.push_back(std::move(clause));
      }
      continue;
    }
    if (value < -max_var || value > max_var)
      throw ParseError("literal " + token + " outside declared range",
                       tokens.line(), tokens.column());
    current.push_back(static_cast<Lit>(value));
  }
  if (!current.empty())
    throw ParseError("unterminated clause at end of input", tokens.line(),
                     tokens.column());
  if (clauses_read != clause_count)
    throw ParseError("header announced " + std::to_string(clause_count) +
                         " clauses, found " + std::to_string(clauses_read),
                     tokens.line(), tokens.column());
  result.clause_set = ClauseSet(std::move(clauses));
  return result;
}

DimacsResult read_dimacs_file(const std::string& path,
                              const DimacsOptions& options) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_dimacs(in, options);
}

void write_dimacs(std::ostream& out, const ClauseSet& f) {
  out << "p cnf " << f.max_variable() << ' ' << f.c() << '\n';
  for (const Clause& c : f) {
    for (Lit x : c) out << x << ' ';
    out << "0\n";
  }
}

void write_dimacs_file(const std::string& path, const ClauseSet& f) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path);
  write_dimacs(out, f);
}

}  // namespace uhitlab
