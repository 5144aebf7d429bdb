#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ym2d {

enum class ErrorKind {
  InvalidArgument,
  AmbientTooSmall,
  CutoffTooSmall,
  UnsupportedRegime,
  NonPositiveArea,
  InvalidQ,
  DegenerateAngles,
  QuadratureUnstable,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorKind::NonPositiveArea: return "NonPositiveArea";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::DegenerateAngles: return "DegenerateAngles";
    case ErrorKind::QuadratureUnstable: return "QuadratureUnstable";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags so
/// front ends can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace ym2d
