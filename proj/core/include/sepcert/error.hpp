#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepcert {

/// Failure modes surfaced by the library. The CLI maps these onto its exit
/// code taxonomy (see ErrorClass).
enum class ErrorCode {
  NotPrime,
  NotCommuting,
  NeedsFieldExtension,
  Reducible,
  UnsupportedTower,
  ResidueUndefined,
  CapExceeded,
  NotInvertible,
  MixedFields,
  BoundExceeded,
  AllTorsion,
  NotInProduct,
  ModulusNotFound,
  NotInLattice,
  FallbackExhausted,
  NotApplicable,
  CosetMembership,
  InSubgroup,
  NotUnipotentFree,
  InvalidArgument,
  Parse,
};

enum class ErrorClass { Mathematical, Resource, Parse };

std::string_view to_string(ErrorCode code) noexcept;
ErrorClass classify(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NeedsFieldExtension: return "NeedsFieldExtension";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::UnsupportedTower: return "UnsupportedTower";
    case ErrorCode::ResidueUndefined: return "ResidueUndefined";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::AllTorsion: return "AllTorsion";
    case ErrorCode::NotInProduct: return "NotInProduct";
    case ErrorCode::ModulusNotFound: return "ModulusNotFound";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::FallbackExhausted: return "FallbackExhausted";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::CosetMembership: return "CosetMembership";
    case ErrorCode::InSubgroup: return "InSubgroup";
    case ErrorCode::NotUnipotentFree: return "NotUnipotentFree";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

inline ErrorClass classify(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::BoundExceeded:
    case ErrorCode::ModulusNotFound:
    case ErrorCode::FallbackExhausted:
      return ErrorClass::Resource;
    case ErrorCode::Parse:
      return ErrorClass::Parse;
    default:
      return ErrorClass::Mathematical;
  }
}

}  // namespace sepcert
