#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ccspace {

/// An operation would have to materialize more subsets than its cap allows.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A precondition failed and a concrete offending set is available.
class WitnessedError : public std::invalid_argument {
 public:
  WitnessedError(const std::string& what, std::vector<std::string> witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}

  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::string> witness_;
};

}  // namespace ccspace
