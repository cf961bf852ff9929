#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cis {

enum class ErrorKind {
  OrderOutOfRange,
  BadEdge,
  ParseError,
  NotConnected,
  TrivialGraph,
  SameVertex,
  BadOrder,
  BadClass,
  TooFewParts,
  BadInstance,
  Unsatisfiable,
  EmptyClass,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cis
