#ifndef MG_ERRORS_HPP
#define MG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mg {

enum class ErrorKind {
  Name,         // unknown type / edge / trace name
  Range,        // slot or index out of range
  Type,         // type-compatibility failure
  Partition,    // input/output/lateral lists do not partition the externals
  Size,         // crf size mismatch
  Route,        // ConDTMG routing failure
  State,        // forget/reinsert ordering, trace sequencing
  Membership,   // virtual-TMG membership rejection
  Weight,       // missing or malformed probability weights
  Host,         // open sets from different hosts
  Mapping,      // homomorphism mapping violates a condition
  Smoothness,   // preimage of an open set is not open
  Capacity,     // combinatorial bound exceeded
  Parse,        // MGF lexical/grammar/semantic error
  Divergence,   // unfold measure failed to decrease
  Applicability,// continuity check on a non-M2M morphism
  Arity,        // history connect on an empty forest
  Decompose,    // DTMG not expressible in the constructor algebra
};

const char* error_kind_name(ErrorKind k);

class MgError : public std::runtime_error {
 public:
  MgError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse errors carry the 1-based source line.
class ParseError : public MgError {
 public:
  ParseError(int line, const std::string& message)
      : MgError(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw MgError(kind, message);
}

}  // namespace mg

#endif
