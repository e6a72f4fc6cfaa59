#pragma once

#include <stdexcept>
#include <string>

namespace fishbij {

// Every recoverable failure in the library throws Error with one of these kinds.
// Kinds map onto CLI exit codes: ParseError/IoError are input-level, the rest
// are domain precondition violations or internal invariant breaks.
enum class ErrorKind {
  EdgeOccupied,        // gluing onto a non-free edge
  BadCell,             // cell id out of range or of the wrong kind for the op
  NotDoubleSite,       // glue_double precondition violated
  EmptyTree,           // operation requires a nonempty tree
  InconsistentLabels,  // stem-tree labels violate the child-direction rules
  ParseError,          // malformed tree code or fish JSON (position in message)
  NotLeftTree,         // tree has a node with negative abscissa
  NotATail,            // cell is not a tail
  NotSymmetric,        // fish is not equal to its conjugate
  BadPairTotal,        // tree pair has the wrong total node count
  UnknownStatistic,    // census statistic name not in the registry
  InexactDivision,     // exact integer/polynomial division left a remainder
  BadStripIndex,       // strip index out of range
  InvalidFish,         // complex fails fighting-fish validation
  Range,               // numeric argument outside the supported range
  IoError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

const char* error_kind_name(ErrorKind kind);

}  // namespace fishbij
