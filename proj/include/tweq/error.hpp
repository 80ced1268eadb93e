#ifndef TWEQ_ERROR_HPP_
#define TWEQ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tweq {

enum class ErrorKind {
  kInvalidParameter,
  kCapacity,
  kUnsupportedMode,
  kLookup,
  kValidation,
  kIo,
};

// All library failures are reported through this exception; `kind` decides
// the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error invalid_parameter(const std::string& what) {
  return Error(ErrorKind::kInvalidParameter, "invalid parameter: " + what);
}

inline Error capacity_error(const std::string& what) {
  return Error(ErrorKind::kCapacity, "capacity exceeded: " + what);
}

inline Error unsupported_mode(const std::string& what) {
  return Error(ErrorKind::kUnsupportedMode, "unsupported mode: " + what);
}

inline Error lookup_error(const std::string& what) {
  return Error(ErrorKind::kLookup, "lookup failed: " + what);
}

inline Error validation_error(const std::string& what) {
  return Error(ErrorKind::kValidation, "validation failed: " + what);
}

inline Error io_error(const std::string& what) {
  return Error(ErrorKind::kIo, "i/o error: " + what);
}

}  // namespace tweq

#endif  // TWEQ_ERROR_HPP_
