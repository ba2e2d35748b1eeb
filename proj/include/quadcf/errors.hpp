#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadcf {

enum class Errc {
  NonUnimodular,
  NegativeRadicand,
  DivisionByZero,
  Parse,
  PerfectSquare,
  UnsupportedRadicand,
  NoPeriodWithinBound,
  MismatchedIndices,
  InvalidDecomposition,
  MTooSmall,
  NotGaloisForm,
  PellViolation,
  DerivativeZero,
  EvenOrderUnsupported,
  UnknownIdentity,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::NonUnimodular: return "NonUnimodular";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Parse: return "ParseError";
    case Errc::PerfectSquare: return "PerfectSquare";
    case Errc::UnsupportedRadicand: return "UnsupportedRadicand";
    case Errc::NoPeriodWithinBound: return "NoPeriodWithinBound";
    case Errc::MismatchedIndices: return "MismatchedIndices";
    case Errc::InvalidDecomposition: return "InvalidDecomposition";
    case Errc::MTooSmall: return "MTooSmall";
    case Errc::NotGaloisForm: return "NotGaloisForm";
    case Errc::PellViolation: return "PellViolation";
    case Errc::DerivativeZero: return "DerivativeZero";
    case Errc::EvenOrderUnsupported: return "EvenOrderUnsupported";
    case Errc::UnknownIdentity: return "UnknownIdentity";
  }
  return "Unknown";
}

/// Every library failure is reported as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quadcf
