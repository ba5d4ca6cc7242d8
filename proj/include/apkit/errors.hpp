#pragma once

#include <stdexcept>
#include <string>

namespace apkit {

// Error kinds mirror the CLI's structured error output; every throw site
// picks the kind that the subcommand JSON reports.
enum class ErrorKind {
  invalid_argument,
  empty_set,
  parse_error,
  order_error,
  domain_error,
  overflow_error,
  resource_error,
  oracle_too_large,
  io_error,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace apkit
