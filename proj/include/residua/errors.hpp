#pragma once

#include <stdexcept>
#include <string>

namespace residua {

enum class ErrorKind {
  ParseError,
  DuplicateElement,
  UnknownElementReference,
  CycleDetected,
  OpNotTotal,
  CarrierTooLarge,
  UnboundedPoset,
  NotALattice,
  SizeCapExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  static const char* name(ErrorKind k) {
    switch (k) {
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::DuplicateElement: return "DuplicateElement";
      case ErrorKind::UnknownElementReference: return "UnknownElementReference";
      case ErrorKind::CycleDetected: return "CycleDetected";
      case ErrorKind::OpNotTotal: return "OpNotTotal";
      case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
      case ErrorKind::UnboundedPoset: return "UnboundedPoset";
      case ErrorKind::NotALattice: return "NotALattice";
      case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    }
    return "Error";
  }

 private:
  ErrorKind kind_;
};

}  // namespace residua
