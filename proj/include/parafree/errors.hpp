#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parafree {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown generator name, or an operation mixing words over different alphabets.
struct AlphabetError : Error {
  using Error::Error;
};

// Malformed word/presentation text. `position` is a 0-based byte offset.
struct ParseError : Error {
  std::size_t position;
  ParseError(std::string msg, std::size_t pos)
      : Error(std::move(msg)), position(pos) {}
};

// A configured limit (coset table rows, search-space size) was exceeded.
// This is always "inconclusive", never a mathematical answer.
struct ResourceLimitError : Error {
  using Error::Error;
};

// A machine check that certifies a published statement failed. Carries the
// offending data so the counterexample is reproducible.
struct ClaimViolationError : Error {
  using Error::Error;
};

}  // namespace parafree
