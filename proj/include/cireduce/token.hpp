#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cireduce {

enum class TokenKind {
  Identifier,
  Keyword,
  Literal,
  Operator,
  Punctuation,
  AnnotationMarker,
};

std::string_view to_string(TokenKind kind);

/// Byte range of a lexeme in the original source.
struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct Token {
  TokenKind kind = TokenKind::Identifier;
  std::string text;
  Span span;
};

/// Lexes a Java-method-subset source. Whitespace and comments are dropped;
/// every other character belongs to exactly one token. Throws LexError.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

/// Token texts in stream order.
std::vector<std::string> token_texts(const std::vector<Token>& tokens);

}  // namespace cireduce
