#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scg {

enum class ErrorCode {
  // exactnum
  DivisionByZero,
  DimensionMismatch,
  // complex
  VertexOutOfRange,
  TooManyVertices,
  FaceNotInComplex,
  EmptyComplex,
  NotDownwardClosed,
  // games
  EmptyCarrierNotAllowed,
  EmptyFaceValue,
  VertexNotInComplex,
  InvalidPermutation,
  PermutationNotSymmetry,
  ComplexMismatch,
  // symmetry
  GroundSetTooLarge,
  NotPureLinks,
  HypothesisNotMet,
  NotShapleyComplex,
  // values
  PlayerMismatch,
  KeyOutsideLink,
  MissingPlayerTable,
  TooManyPlayers,
  PlayerNotInFace,
  // io
  ParseError,
  GameFaceNotInComplex,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scg
