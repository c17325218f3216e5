#pragma once

#include <stdexcept>
#include <string>

namespace bu {

/// Parameters that violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when m_k = 0: the caller has to restrict to the smaller subgroup
/// (effective_reduction) before asking level-dependent questions.
class ReductionRequired : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The construction planner found no levels to build from (n_0 = 0).
class NoConstruction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact divisibility that the algebra guarantees did not hold.
class IdentityFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Certificate rejected by the validator or the JSON reader.
class CertificateError : public std::runtime_error {
 public:
  CertificateError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message),
        path_(std::move(path)),
        message_(message) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string path_;
  std::string message_;
};

}  // namespace bu
