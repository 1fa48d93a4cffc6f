#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpsq {

/// Raised when a request would need more memory than the process may use.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& what, std::uint64_t requested_bytes)
      : std::runtime_error(what), requested_bytes_(requested_bytes) {}

  std::uint64_t requested_bytes() const noexcept { return requested_bytes_; }

 private:
  std::uint64_t requested_bytes_;
};

/// The prime table handed to an enumeration does not reach far enough.
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(const std::string& what, std::uint64_t required_limit)
      : std::invalid_argument(what), required_limit_(required_limit) {}

  std::uint64_t required_limit() const noexcept { return required_limit_; }

 private:
  std::uint64_t required_limit_;
};

/// An inequality was requested outside the range where it is claimed.
class applicability_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cpsq
