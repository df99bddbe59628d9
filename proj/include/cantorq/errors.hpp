#pragma once

#include <stdexcept>
#include <string>

namespace cantorq {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidRatio : Error { using Error::Error; };
struct InvalidN : Error { using Error::Error; };
struct CountOutOfRange : Error { using Error::Error; };
struct IndexSetMismatch : Error { using Error::Error; };
struct NTooLarge : Error { using Error::Error; };
struct OverlappingWords : Error { using Error::Error; };
struct EmptyQuantizer : Error { using Error::Error; };
struct InvalidQuantizer : Error { using Error::Error; };
struct DepthOutOfRange : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };
struct BracketNotFound : Error { using Error::Error; };
struct MultipleRoots : Error { using Error::Error; };
struct EmptyCellEncountered : Error { using Error::Error; };

}  // namespace cantorq
