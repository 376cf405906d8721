#pragma once

#include <stdexcept>
#include <string>

namespace compnet {

/// Exception carrying a stable machine-readable code alongside the message.
/// The CLI maps codes onto exit statuses, so codes must not change.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw Error(code, message);
}

namespace errc {
inline constexpr const char* codomain_mismatch = "codomain_mismatch";
inline constexpr const char* domain_mismatch = "domain_mismatch";
inline constexpr const char* not_a_cocone = "not_a_cocone";
inline constexpr const char* not_bijective = "not_bijective";
inline constexpr const char* foot_mismatch = "foot_mismatch";
inline constexpr const char* boundary_mismatch = "boundary_mismatch";
inline constexpr const char* decoration_mismatch = "decoration_mismatch";
inline constexpr const char* index_mismatch = "index_mismatch";
inline constexpr const char* dimension_mismatch = "dimension_mismatch";
inline constexpr const char* invalid_function = "invalid_function";
inline constexpr const char* certification_failed = "certification_failed";
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* type_error = "type_error";
inline constexpr const char* io_error = "io_error";
}  // namespace errc

}  // namespace compnet
