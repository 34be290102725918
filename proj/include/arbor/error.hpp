#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arbor {

/// Every failure the library reports carries one of these codes.
enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kInvalidVertexCount,
  kTooManyEdges,
  kNotATree,
  kNotAChord,
  kUnknownEdge,
  kBadChar,
  kLongFormUnsupported,
  kTrailingGarbage,
  kTruncated,
  kTooLarge,
  kRaggedRows,
  kBadToken,
  kBadColumn,
  kCountMismatch,
  kDisconnected,
  kGuardTripped,
  kProcessorFailed,
  kIo,
  kInternal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::int64_t index = -1)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }

  /// Offending position (edge index, column, line, tree index), -1 if none.
  std::int64_t index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::int64_t index_;
};

}  // namespace arbor
