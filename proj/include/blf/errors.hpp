#ifndef BLF_ERRORS_HPP
#define BLF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace blf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad scalar arguments: zero cycles, non-primitive twists, violated
// preconditions on chart forms.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A diagram failed its structural invariants. Carries the violation list.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> violations)
      : Error(what), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// A corner / Lefschetz / circle reference did not resolve.
class RefError : public Error {
 public:
  using Error::Error;
};

// Dual-pair evidence for a singularity trade is missing or fails the check.
class EvidenceError : public Error {
 public:
  using Error::Error;
};

// Requested family member has negative Euler characteristic and therefore
// admits no boundary Lefschetz fibration.
class InadmissibleError : public Error {
 public:
  InadmissibleError(const std::string& what, long long chi)
      : Error(what), chi_(chi) {}
  long long chi() const { return chi_; }

 private:
  long long chi_;
};

// A catalog entry's diagram disagrees with its closed-form invariants.
class DiscrepancyError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized documents.
class ParseError : public Error {
 public:
  using Error::Error;
};

class VersionError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace blf

#endif
