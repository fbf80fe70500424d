#pragma once

#include <stdexcept>
#include <string>

namespace baxterlab {

/// Malformed permutation or pattern text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition (e.g. a non-Baxter
/// permutation handed to an insertion rule).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A size guard refused the request. The message names the limit.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace baxterlab
