#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blowup {

enum class Errc {
  MalformedPD,
  InvalidLetter,
  EmptySelection,
  NonSquare,
  ZeroEvaluationPoint,
  NotWirtinger,
  LabelLengthMismatch,
  SizeMismatch,
  NonIntegerWeights,
  InvalidFlow,
  ResidualTooLarge,
  RoundingAmbiguous,
  GenusZero,
  UnassignedGenerator,
  NotCoprime,
  InvalidMatrix,
  InvalidPresentation,
  InputError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can report it as a structured object.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace blowup
