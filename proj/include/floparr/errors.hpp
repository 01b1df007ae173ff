#ifndef FLOPARR_ERRORS_HPP
#define FLOPARR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floparr {

enum class ErrorCode {
  IllegalDiagram,
  NotWhite,
  NoSuchWall,
  NonIntegralRay,
  NotSimplicial,
  UnwalkablePath,
  WindowTooSmall,
  VerificationFailed,
  OnComplexifiedWall,
  StepLimitExceeded,
  NotOnBoundary,
  SearchFailed,
  PreconditionUnmet,
  Unsupported,
  UnsupportedLength,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::IllegalDiagram: return "IllegalDiagram";
    case ErrorCode::NotWhite: return "NotWhite";
    case ErrorCode::NoSuchWall: return "NoSuchWall";
    case ErrorCode::NonIntegralRay: return "NonIntegralRay";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::UnwalkablePath: return "UnwalkablePath";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::OnComplexifiedWall: return "OnComplexifiedWall";
    case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::SearchFailed: return "SearchFailed";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnsupportedLength: return "UnsupportedLength";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace floparr

#endif
