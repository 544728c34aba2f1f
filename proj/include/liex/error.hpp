#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liex {

/// Domain failure with a stable machine-readable code.
///
/// `witness` holds 1-based indices that pin down the failure (a violating
/// triple, an offending bracket pair, ...). `detail` carries any
/// non-index payload already rendered as text, e.g. a residual vector.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::vector<long> witness = {}, std::string detail = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        witness_(std::move(witness)),
        detail_(std::move(detail)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<long>& witness() const noexcept { return witness_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::vector<long> witness_;
  std::string detail_;
};

/// Malformed input (bad JSON, out-of-range indices, unparsable numbers).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace liex
