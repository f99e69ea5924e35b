#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ekr {

enum class ErrorKind {
  // graph6 decoding
  Graph6MalformedHeader,
  Graph6MalformedByte,
  Graph6Truncated,
  Graph6TrailingGarbage,
  TooManyVertices,
  // generators and input files
  UnknownGenerator,
  BadGeneratorArgument,
  BadEdgeList,
  // domain preconditions
  VertexOutOfRange,
  InvalidSetSize,
  NotAForest,
  NotATree,
  PreconditionViolated,
  MissingField,
  // exact search refused to run past its limit
  SearchLimitExceeded,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace ekr
