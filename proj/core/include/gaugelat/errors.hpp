#pragma once

#include <stdexcept>
#include <string>

namespace gaugelat {

enum class ErrorKind {
  invalid_parameter,
  invalid_chain,
  unsupported_geometry,
  basis_mismatch,
  contract_violation,
  decomposition_failure,
  fit_failure,
  extraction_error,
  invalid_filter,
  invalid_transform,
  lookup_error,
  io_error,
  validation_error,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gaugelat
