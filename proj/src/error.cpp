#include "blowup/error.hpp"

namespace blowup {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedPD: return "MalformedPD";
    case Errc::InvalidLetter: return "InvalidLetter";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::NonSquare: return "NonSquare";
    case Errc::ZeroEvaluationPoint: return "ZeroEvaluationPoint";
    case Errc::NotWirtinger: return "NotWirtinger";
    case Errc::LabelLengthMismatch: return "LabelLengthMismatch";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NonIntegerWeights: return "NonIntegerWeights";
    case Errc::InvalidFlow: return "InvalidFlow";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::RoundingAmbiguous: return "RoundingAmbiguous";
    case Errc::GenusZero: return "GenusZero";
    case Errc::UnassignedGenerator: return "UnassignedGenerator";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::InvalidMatrix: return "InvalidMatrix";
    case Errc::InvalidPresentation: return "InvalidPresentation";
    case Errc::InputError: return "InputError";
  }
  return "Unknown";
}

}  // namespace blowup
