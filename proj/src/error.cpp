#include "strata/error.hpp"

namespace strata {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfCanonicalRange: return "OutOfCanonicalRange";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::EmptyProduct: return "EmptyProduct";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::InvalidTuple: return "InvalidTuple";
    case ErrorCode::PosetMismatch: return "PosetMismatch";
    case ErrorCode::NotCoordinateInduced: return "NotCoordinateInduced";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::InvalidInvariant: return "InvalidInvariant";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace strata
