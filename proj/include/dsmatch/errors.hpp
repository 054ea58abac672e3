#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "dsmatch/core.hpp"

namespace dsmatch {

// Base class for every error the library raises. The CLI maps any Error to
// exit code 2 (input or usage error).
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An order id repeated within one side of a book.
class DuplicateIdError : public Error {
  public:
    DuplicateIdError(Side side, OrderId id);
    Side side() const { return side_; }
    OrderId id() const { return id_; }

  private:
    Side side_;
    OrderId id_;
};

// A trade row references an id absent from the book side.
class UnknownIdError : public Error {
  public:
    UnknownIdError(Side side, OrderId id);
    Side side() const { return side_; }
    OrderId id() const { return id_; }

  private:
    Side side_;
    OrderId id_;
};

// Malformed CSV input; line numbers are 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// A price field parsed as a negative integer.
class NegativePriceError : public Error {
  public:
    explicit NegativePriceError(std::size_t line);
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// A file could not be opened.
class IoError : public Error {
  public:
    using Error::Error;
};

// A documented operation precondition (sortedness, subsequence) failed.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// fairify was handed a sequence of fills that is not a matching on the book.
class NotAMatchingError : public Error {
  public:
    using Error::Error;
};

// make_individual_rational was handed a fill with bid price < ask price, for
// which no valid trade price exists.
class NotMatchableError : public Error {
  public:
    using Error::Error;
};

// enumerate_matchings was asked to enumerate past its size bound.
class TooLargeError : public Error {
  public:
    using Error::Error;
};

}  // namespace dsmatch
