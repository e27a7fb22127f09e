#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace factolab {

/// Base of every error raised by the library. `kind()` is a stable
/// identifier used in machine-readable error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("DomainError", message) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::optional<std::size_t> position = std::nullopt)
      : Error("ParseError", message), position_(position) {}
  /// Byte offset into the input, when known.
  const std::optional<std::size_t>& position() const noexcept { return position_; }

 private:
  std::optional<std::size_t> position_;
};

class InvalidGenerator : public Error {
 public:
  InvalidGenerator(std::size_t index, const std::string& message)
      : Error("InvalidGenerator", message), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The generators admit a nonzero nonnegative relation; `witness` is that
/// relation as a multiplicity vector.
class NotPointed : public Error {
 public:
  NotPointed(std::vector<std::int64_t> witness, const std::string& message)
      : Error("NotPointed", message), witness_(std::move(witness)) {}
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::int64_t> witness_;
};

/// Generator `index` factors as `witness` (length >= 2) over the generators.
class NotAnAtom : public Error {
 public:
  NotAnAtom(std::size_t index, std::vector<std::int64_t> witness, const std::string& message)
      : Error("NotAnAtom", message), index_(index), witness_(std::move(witness)) {}
  std::size_t index() const noexcept { return index_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  std::size_t index_;
  std::vector<std::int64_t> witness_;
};

class DuplicateGenerator : public Error {
 public:
  DuplicateGenerator(std::size_t index, std::size_t first, const std::string& message)
      : Error("DuplicateGenerator", message), index_(index), first_(first) {}
  std::size_t index() const noexcept { return index_; }
  std::size_t first() const noexcept { return first_; }

 private:
  std::size_t index_;
  std::size_t first_;
};

class NotNormalized : public Error {
 public:
  explicit NotNormalized(const std::string& message) : Error("NotNormalized", message) {}
};

class InvalidMasterSpec : public Error {
 public:
  explicit InvalidMasterSpec(const std::string& clause)
      : Error("InvalidMasterSpec", "invalid master spec: " + clause) {}
};

class InvalidPair : public Error {
 public:
  explicit InvalidPair(const std::string& message) : Error("InvalidPair", message) {}
};

// Raised when a check that a theorem guarantees comes out false.
class InternalContradiction : public Error {
 public:
  explicit InternalContradiction(const std::string& message)
      : Error("InternalContradiction", message) {}
};

}  // namespace factolab
