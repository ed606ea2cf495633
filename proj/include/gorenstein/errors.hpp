#pragma once

#include <stdexcept>
#include <string>

namespace gorenstein {

/// Input that does not describe a well-formed object (bad JSON, wrong
/// dimensions, unparsable scalars). CLI exit code 2.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold for an otherwise well-formed
/// input, e.g. the algebra is not Gorenstein. CLI exit code 1.
class PropertyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A user-supplied certificate (map, tensors) failed exact verification.
/// CLI exit code 3.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact check that is guaranteed by theory failed. This is always an
/// internal bug; the message carries the witness. CLI exit code 4.
class TheoremContradiction : public std::logic_error {
 public:
  TheoremContradiction(const std::string& what, std::string witness)
      : std::logic_error(what), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace gorenstein
