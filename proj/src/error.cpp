#include "mecforge/error.hpp"

namespace mecforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NonResidue: return "NonResidue";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DuplicateResidue: return "DuplicateResidue";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::WrongSize: return "WrongSize";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::BadShift: return "BadShift";
    case ErrorKind::NotRepresentative: return "NotRepresentative";
    case ErrorKind::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace mecforge
