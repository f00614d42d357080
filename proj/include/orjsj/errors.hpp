#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orjsj {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyWord : public Error {
 public:
  EmptyWord() : Error("operation requires a non-empty word") {}
};

class NotInSubgroup : public Error {
 public:
  explicit NotInSubgroup(const std::string& w)
      : Error("word " + w + " is not in <a, b^-1 a b>") {}
};

class NotInDerivedSubgroup : public Error {
 public:
  explicit NotInDerivedSubgroup(const std::string& w)
      : Error("word " + w + " has non-zero exponent sums") {}
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("convex hull of an empty point set") {}
};

class NotASummand : public Error {
 public:
  explicit NotASummand(const std::string& detail)
      : Error("polytope is not a Minkowski multiple of the unit square: " + detail) {}
};

class CardinalityBlown : public Error {
 public:
  CardinalityBlown(std::size_t members, std::size_t bound)
      : Error("shortest orbit set exceeded " + std::to_string(bound) +
              " members (reached " + std::to_string(members) + ")") {}
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::size_t nodes)
      : Error("orbit search budget of " + std::to_string(nodes) + " nodes exhausted") {}
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

class JsjUndefined : public Error {
 public:
  using Error::Error;
};

class OutUndefined : public Error {
 public:
  using Error::Error;
};

// Syntax error in a word or presentation; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

}  // namespace orjsj
