#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpgb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class EmptyPattern : public Error {
 public:
  EmptyPattern() : Error("configuration pattern must have at least one occupied site") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyIdeal : public Error {
 public:
  EmptyIdeal() : Error("all generators are zero") {}
};

class BasisTooLarge : public Error {
 public:
  using Error::Error;
};

/// Only the trivial solution x = 1 survives elimination.
class Degenerate : public Error {
 public:
  using Error::Error;
};

class NoEliminationElement : public Error {
 public:
  using Error::Error;
};

class MultipleEliminationElements : public Error {
 public:
  using Error::Error;
};

class NoPhysicalRoot : public Error {
 public:
  using Error::Error;
};

class AmbiguousRoot : public Error {
 public:
  AmbiguousRoot(const std::string& what, std::vector<double> roots)
      : Error(what), roots_(std::move(roots)) {}
  const std::vector<double>& roots() const { return roots_; }

 private:
  std::vector<double> roots_;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace cpgb
