#ifndef UHITLAB_ERRORS_HPP
#define UHITLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uhitlab {

enum class ErrorCode {
  BoundExceeded,
  UnknownVariable,
  NotResolvable,
  PairNotInSet,
  ResolventPresent,
  ClauseNotInSet,
  VariableInClause,
  ResultClausePresent,
  FlipClausePresent,
  NotSingular,
  Nonsingular,
  NotUhit,
  BadArity,
  NoEligibleCompanion,
  EmptySubset,
  NotSubset,
  NotAFactor,
  PivotNotInSet,
  PreconditionViolation,
  TautologicalClause,
  ParseError,
  WorkLimitExceeded,
  IoError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotResolvable: return "NotResolvable";
    case ErrorCode::PairNotInSet: return "PairNotInSet";
    case ErrorCode::ResolventPresent: return "ResolventPresent";
    case ErrorCode::ClauseNotInSet: return "ClauseNotInSet";
    case ErrorCode::VariableInClause: return "VariableInClause";
    case ErrorCode::ResultClausePresent: return "ResultClausePresent";
    case ErrorCode::FlipClausePresent: return "FlipClausePresent";
    case ErrorCode::NotSingular: return "NotSingular";
    case ErrorCode::Nonsingular: return "Nonsingular";
    case ErrorCode::NotUhit: return "NotUhit";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::NoEligibleCompanion: return "NoEligibleCompanion";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotSubset: return "NotSubset";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::PivotNotInSet: return "PivotNotInSet";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::TautologicalClause: return "TautologicalClause";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WorkLimitExceeded: return "WorkLimitExceeded";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry a source position (1-based line/column).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line, long column)
      : Error(ErrorCode::ParseError,
              what + " at line " + std::to_string(line) + ", column " +
                  std::to_string(column)),
        line_(line),
        column_(column) {}

  long line() const { return line_; }
  long column() const { return column_; }

 private:
  long line_;
  long column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace uhitlab

#endif
