#include "gaugelat/errors.hpp"

namespace gaugelat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_chain: return "invalid-chain";
    case ErrorKind::unsupported_geometry: return "unsupported-geometry";
    case ErrorKind::basis_mismatch: return "basis-mismatch";
    case ErrorKind::contract_violation: return "contract-violation";
    case ErrorKind::decomposition_failure: return "decomposition-failure";
    case ErrorKind::fit_failure: return "fit-failure";
    case ErrorKind::extraction_error: return "extraction-error";
    case ErrorKind::invalid_filter: return "invalid-filter";
    case ErrorKind::invalid_transform: return "invalid-transform";
    case ErrorKind::lookup_error: return "lookup-error";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::validation_error: return "validation-error";
  }
  return "unknown";
}

}  // namespace gaugelat
