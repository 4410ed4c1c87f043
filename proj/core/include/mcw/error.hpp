#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace mcw {

/// Base class of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression, graph or decomposition text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid expression: label outside 1..k, eta(i, i), empty atom.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An eta(i, j) was applied while some vertex carries both i and j.
class EtaPreconditionViolation : public Error {
 public:
  EtaPreconditionViolation(const std::string& what, std::uint32_t node, std::string path,
                           std::optional<std::uint32_t> witness_vertex)
      : Error(what), node_(node), path_(std::move(path)), witness_(witness_vertex) {}

  std::uint32_t node() const { return node_; }
  const std::string& path() const { return path_; }
  std::optional<std::uint32_t> witness_vertex() const { return witness_; }

 private:
  std::uint32_t node_;
  std::string path_;
  std::optional<std::uint32_t> witness_;
};

/// Tree decomposition that violates one of the decomposition properties.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap or oracle guard would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Operands of a binary table operation have different shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcw
