#pragma once

#include <stdexcept>
#include <string>

namespace linkage {

enum class ErrorKind {
  Input,              // malformed lengths, labels, flags
  EmptySpace,
  RigidPoint,
  Infeasible,
  DegenerateCell,
  DegenerateLinkage,
  Aligned,
  DimensionTooHigh,
  ActionMismatch,
  NotAnAutomorphism,
  NotASubgroup,
  NoAllowablePair,
  InvalidL,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Exit status used by the command line front end.
int exit_code(ErrorKind k);

}  // namespace linkage
