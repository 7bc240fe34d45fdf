#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cireduce {

/// Lexical failure: unterminated string/char literal or an illegal character.
class LexError : public std::runtime_error {
 public:
  LexError(std::string msg, std::size_t byte_offset)
      : std::runtime_error(std::move(msg)), offset(byte_offset) {}
  std::size_t offset;
};

/// Syntactic failure; token_index points at the first offending token
/// (== token count for unexpected end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, std::size_t index)
      : std::runtime_error(std::move(msg)), token_index(index) {}
  std::size_t token_index;
};

/// The full input does not satisfy the preservation predicate; the job is
/// misconfigured (wrong oracle, wrong target label, or a broken input).
class PredicateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reduction exceeded its candidate budget.
class StalledError : public std::runtime_error {
 public:
  StalledError(std::string msg, std::size_t evals)
      : std::runtime_error(std::move(msg)), evaluations(evals) {}
  std::size_t evaluations;
};

}  // namespace cireduce
