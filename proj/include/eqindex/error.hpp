#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqindex {

enum class errc {
  non_polynomial,
  non_integral,
  already_spinc,
  unsupported_dimension,
  conditions_violated,
  parity_violation,
  irregular_level,
  not_splitting,
  invalid_spec,
  parse_error,
  io_error,
  unknown_fixture,
};

inline std::string_view to_string(errc c) {
  switch (c) {
    case errc::non_polynomial: return "NonPolynomial";
    case errc::non_integral: return "NonIntegral";
    case errc::already_spinc: return "AlreadySpinC";
    case errc::unsupported_dimension: return "UnsupportedDimension";
    case errc::conditions_violated: return "ConditionsViolated";
    case errc::parity_violation: return "ParityViolation";
    case errc::irregular_level: return "IrregularLevel";
    case errc::not_splitting: return "NotSplitting";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IOError";
    case errc::unknown_fixture: return "UnknownFixture";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace eqindex
