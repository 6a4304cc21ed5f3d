#include "sts/error.hpp"

namespace sts {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::WrongStratum: return "WrongStratum";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::InvalidCoords: return "InvalidCoords";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NoInvolution: return "NoInvolution";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotClosed: return "NotClosed";
  }
  return "Unknown";
}

}  // namespace sts
