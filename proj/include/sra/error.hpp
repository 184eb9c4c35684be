#pragma once

#include <stdexcept>
#include <string>

namespace sra {

// Failure modes of the public operations.
enum class errc {
  invalid_parameter,
  invalid_eta,
  invalid_root,
  field_mismatch,
  instance_mismatch,
  division_by_zero,
  unsupported_operation,
  degree_exceeded,
  non_stabilized,
  inconclusive,
  parse_error,
  internal_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace sra
