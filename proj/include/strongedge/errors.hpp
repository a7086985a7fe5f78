#pragma once

#include <stdexcept>
#include <string>

namespace strongedge {

// Bad input or a violated precondition. The CLI maps these to exit code 1.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public PreconditionError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : PreconditionError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Internal inconsistencies. The CLI maps these to exit code 2; on valid
// inputs they indicate a bug (or a hole in the underlying proof).
class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No reducible configuration on a graph where one must exist.
class TheoremViolation : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

// An extension step found no free colour.
class ExtensionInfeasible : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

}  // namespace strongedge
