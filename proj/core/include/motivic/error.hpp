#ifndef MOTIVIC_ERROR_HPP
#define MOTIVIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace motivic {

enum class Errc {
  MissingQuotient,
  MissingAssignment,
  PoleAtZero,
  NotReducible,
  InvalidStratum,
  CenterTooSmall,
  EmptyCenter,
  IncompleteData,
  NoLimit,
  TooLarge,
  InvalidField,
  NotSmooth,
  ParseError,
  InvalidArgument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingQuotient: return "MissingQuotient";
    case Errc::MissingAssignment: return "MissingAssignment";
    case Errc::PoleAtZero: return "PoleAtZero";
    case Errc::NotReducible: return "NotReducible";
    case Errc::InvalidStratum: return "InvalidStratum";
    case Errc::CenterTooSmall: return "CenterTooSmall";
    case Errc::EmptyCenter: return "EmptyCenter";
    case Errc::IncompleteData: return "IncompleteData";
    case Errc::NoLimit: return "NoLimit";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidField: return "InvalidField";
    case Errc::NotSmooth: return "NotSmooth";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace motivic

#endif
