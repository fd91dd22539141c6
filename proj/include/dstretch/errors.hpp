#pragma once

#include <stdexcept>
#include <string>

namespace dstretch {

/// Input outside an operation's domain (collinear triples, identical
/// circles, malformed files, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A segment query passed exactly through a third vertex.
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(const std::string& what, int vertex)
      : std::runtime_error(what), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// Something that valid inputs can never produce; treat as a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dstretch
