#pragma once

#include <stdexcept>
#include <string>

namespace supertopo {

/// Malformed input: unparsable JSON, wrong schema, invalid literal.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed input that violates an operation's precondition or a
/// checked invariant. `object` holds the violating object as JSON text
/// when one can be named.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what, std::string object = {})
      : std::runtime_error(what), object_(std::move(object)) {}

  const std::string& object() const noexcept { return object_; }

 private:
  std::string object_;
};

}  // namespace supertopo
