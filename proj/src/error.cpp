#include "scg/error.hpp"

namespace scg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::EmptyCarrierNotAllowed: return "EmptyCarrierNotAllowed";
    case ErrorCode::EmptyFaceValue: return "EmptyFaceValue";
    case ErrorCode::VertexNotInComplex: return "VertexNotInComplex";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::PermutationNotSymmetry: return "PermutationNotSymmetry";
    case ErrorCode::ComplexMismatch: return "ComplexMismatch";
    case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::NotPureLinks: return "NotPureLinks";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::NotShapleyComplex: return "NotShapleyComplex";
    case ErrorCode::PlayerMismatch: return "PlayerMismatch";
    case ErrorCode::KeyOutsideLink: return "KeyOutsideLink";
    case ErrorCode::MissingPlayerTable: return "MissingPlayerTable";
    case ErrorCode::TooManyPlayers: return "TooManyPlayers";
    case ErrorCode::PlayerNotInFace: return "PlayerNotInFace";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GameFaceNotInComplex: return "GameFaceNotInComplex";
  }
  return "Unknown";
}

}  // namespace scg
