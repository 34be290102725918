#include "arbor/error.hpp"

namespace arbor {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kInvalidVertexCount: return "InvalidVertexCount";
    case ErrorCode::kTooManyEdges: return "TooManyEdges";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNotAChord: return "NotAChord";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kBadChar: return "BadChar";
    case ErrorCode::kLongFormUnsupported: return "LongFormUnsupported";
    case ErrorCode::kTrailingGarbage: return "TrailingGarbage";
    case ErrorCode::kTruncated: return "Truncated";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kRaggedRows: return "RaggedRows";
    case ErrorCode::kBadToken: return "BadToken";
    case ErrorCode::kBadColumn: return "BadColumn";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kGuardTripped: return "GuardTripped";
    case ErrorCode::kProcessorFailed: return "ProcessorFailed";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace arbor
