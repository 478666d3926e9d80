#ifndef GRPD_ERROR_HPP_
#define GRPD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace grpd {

// A single broken axiom or malformed input entry, with enough context to
// point at the offending morphisms/indices.
struct Violation {
  std::string code;    // e.g. "NonAssociative", "P3", "MissingInverse"
  std::string detail;  // human-readable witness
};

std::string join_violations(const std::vector<Violation>& vs);

// Thrown when an operation's stated precondition does not hold.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// A proved theorem failed on concrete data. Always a bug in this artifact,
// never a mathematical discovery; the payload carries the witness.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& what)
      : std::runtime_error("TheoremViolation: " + what) {}
};

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what)
      : std::runtime_error("CapExceeded: " + what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what)
      : std::runtime_error("ParseError: " + what) {}
};

}  // namespace grpd

#endif  // GRPD_ERROR_HPP_
