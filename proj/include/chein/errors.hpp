#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "chein/cayley_table.hpp"

namespace chein {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A standing hypothesis of the construction is violated (abelian input where a
// nonabelian group is required, elementary abelian 2-group, non-loop input to
// the isomorphism search, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Malformed Cayley-table text.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  // 0-based offset into the source text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class GroupValidationError : public Error {
 public:
  enum class Reason { NotAssociative, NoIdentity, MissingInverse };

  GroupValidationError(Reason reason, std::vector<Element> witness,
                       const std::string& what)
      : Error(what), reason_(reason), witness_(std::move(witness)) {}

  Reason reason() const noexcept { return reason_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  Reason reason_;
  std::vector<Element> witness_;
};

}  // namespace chein
