#include "homobraid/error.hpp"

namespace homobraid {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInvalidArgument: return "invalidArgument";
    case ErrorCode::kNotHomogeneous: return "notHomogeneous";
    case ErrorCode::kSplit: return "split";
    case ErrorCode::kDestabilizable: return "destabilizable";
    case ErrorCode::kNonEssentialEdge: return "nonEssentialEdge";
    case ErrorCode::kUnknownVeering: return "unknownVeering";
    case ErrorCode::kInvalidGrowing: return "invalidGrowing";
    case ErrorCode::kAlphabetMismatch: return "alphabetMismatch";
    case ErrorCode::kRegionOverlap: return "regionOverlap";
    case ErrorCode::kNonEssentialRegion: return "nonEssentialRegion";
    case ErrorCode::kNonOrientable: return "nonOrientable";
    case ErrorCode::kEdgeOveruse: return "edgeOveruse";
    case ErrorCode::kMalformedTree: return "malformedTree";
    case ErrorCode::kChordConfig: return "chordConfig";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace homobraid
