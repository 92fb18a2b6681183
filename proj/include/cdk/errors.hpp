#pragma once

#include <stdexcept>
#include <string>

namespace cdk {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorKind {
  Parse,        // malformed formula / action text
  Semantic,     // unknown agent, state, group, event model; schema violations
  Fragment,     // formula outside the reducible fragment
  Resource,     // configured size caps exceeded
  Internal,     // invariant breach (e.g. witness verification failure)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ParseError : Error {
  explicit ParseError(std::string msg, std::size_t pos = 0)
      : Error(ErrorKind::Parse, std::move(msg)), position(pos) {}
  std::size_t position;
};

struct SemanticError : Error {
  explicit SemanticError(std::string msg) : Error(ErrorKind::Semantic, std::move(msg)) {}
};

struct FragmentError : Error {
  explicit FragmentError(std::string msg) : Error(ErrorKind::Fragment, std::move(msg)) {}
};

struct ResourceError : Error {
  explicit ResourceError(std::string msg) : Error(ErrorKind::Resource, std::move(msg)) {}
};

struct InternalError : Error {
  explicit InternalError(std::string msg) : Error(ErrorKind::Internal, std::move(msg)) {}
};

}  // namespace cdk
