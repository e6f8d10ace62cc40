#pragma once

#include <stdexcept>
#include <string>

namespace polyfaces {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text; carries the byte offset of the first offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A structurally well-formed value that violates a named invariant.
class InvariantError : public Error {
public:
  InvariantError(const std::string& invariant, const std::string& detail)
      : Error("invariant violated: " + invariant +
              (detail.empty() ? "" : " — " + detail)),
        invariant_(invariant) {}
  const std::string& invariant() const { return invariant_; }

private:
  std::string invariant_;
};

// An operation called outside its contract.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Resource guard tripped (combinatorial size cap).
class CapError : public Error {
public:
  explicit CapError(const std::string& what) : Error(what) {}
};

}  // namespace polyfaces
