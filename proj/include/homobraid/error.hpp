#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homobraid {

// Stable codes; the C API maps these one-to-one onto hb_status values.
enum class ErrorCode {
  kParse = 1,
  kInvalidArgument,
  kNotHomogeneous,
  kSplit,
  kDestabilizable,
  kNonEssentialEdge,
  kUnknownVeering,
  kInvalidGrowing,
  kAlphabetMismatch,
  kRegionOverlap,
  kNonEssentialRegion,
  kNonOrientable,
  kEdgeOveruse,
  kMalformedTree,
  kChordConfig,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  // Token index for parse errors, edge index for nonEssentialEdge.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace homobraid
