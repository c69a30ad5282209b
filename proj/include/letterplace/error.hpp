#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace letterplace {

enum class Errc {
  CycleDetected,
  IdentifierOutOfRange,
  ExplosionGuard,
  MixedPosets,
  NotIsotone,
  NotSquarefree,
  NotArtinian,
  NotAChain,
  NotStronglyStable,
  NotTerrace,
  InfiniteIdeal,
  BudgetExceeded,
  VariableOutsideSource,
  InvalidInput,
};

inline std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::IdentifierOutOfRange: return "IdentifierOutOfRange";
    case Errc::ExplosionGuard: return "ExplosionGuard";
    case Errc::MixedPosets: return "MixedPosets";
    case Errc::NotIsotone: return "NotIsotone";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NotArtinian: return "NotArtinian";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NotStronglyStable: return "NotStronglyStable";
    case Errc::NotTerrace: return "NotTerrace";
    case Errc::InfiniteIdeal: return "InfiniteIdeal";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::VariableOutsideSource: return "VariableOutsideSource";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` is stable and machine readable;
/// the CLI reports it verbatim in the `reason` field.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view reason() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace letterplace
