#ifndef VCMETA_ERRORS_HPP
#define VCMETA_ERRORS_HPP

#include <stdexcept>

namespace vcmeta {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File / format ingestion.
struct ParseError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct BadSegmentError : Error { using Error::Error; };

// Event processing.
struct MissingConfidenceError : Error { using Error::Error; };
struct EmptyInputError : Error { using Error::Error; };

// Lexicon.
struct InvariantError : Error { using Error::Error; };

// Pipeline cross-checks.
struct SentenceCountMismatchError : Error { using Error::Error; };

// Evaluation.
struct EmptyGoldError : Error { using Error::Error; };
struct LevelMismatchError : Error { using Error::Error; };

struct ArgumentError : Error { using Error::Error; };

}  // namespace vcmeta

#endif  // VCMETA_ERRORS_HPP
