#include "cireduce/token.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

#include "cireduce/diag.hpp"

namespace cireduce {

namespace {

const std::unordered_set<std::string_view> kKeywords = {
    // types and modifiers
    "void", "int", "boolean", "char", "byte", "short", "long", "float",
    "double", "public", "private", "protected", "static", "final", "abstract",
    "synchronized", "native", "transient", "volatile", "strictfp",
    // statements and operators
    "if", "else", "for", "while", "try", "catch", "finally", "return",
    "throw", "throws", "instanceof", "super", "this", "new"};

// Lexed as Literal, not Keyword.
const std::unordered_set<std::string_view> kWordLiterals = {"true", "false",
                                                            "null"};

// Longest match first.
constexpr std::array<std::string_view, 17> kTwoCharOps = {
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=", "*=", "/=", "%=", "<<", ">>", "->", "::"};

constexpr std::string_view kOneCharOps = "=<>+-*/%!&|^~?:";
constexpr std::string_view kPunctuation = "(){}[];,.";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Literal: return "literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::AnnotationMarker: return "annotation-marker";
  }
  return "unknown";
}

bool is_keyword(std::string_view word) { return kKeywords.count(word) > 0; }

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    out.push_back(Token{kind, std::string(src.substr(begin, end - begin)),
                        Span{begin, end - begin}});
  };

  while (i < n) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
      ++i;
      continue;
    }
    // comments
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      std::size_t start = i;
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
      if (i + 1 >= n) throw LexError("unterminated block comment", start);
      i += 2;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < n && is_ident_part(src[i])) ++i;
      std::string_view word = src.substr(start, i - start);
      TokenKind kind = kWordLiterals.count(word)
                           ? TokenKind::Literal
                           : (is_keyword(word) ? TokenKind::Keyword
                                               : TokenKind::Identifier);
      push(kind, start, i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      if (c == '0' && i + 1 < n && (src[i + 1] == 'x' || src[i + 1] == 'X')) {
        i += 2;
        while (i < n && std::isxdigit(static_cast<unsigned char>(src[i]))) ++i;
      } else {
        while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        if (i + 1 < n && src[i] == '.' &&
            std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
          ++i;
          while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        }
      }
      if (i < n && (src[i] == 'l' || src[i] == 'L' || src[i] == 'f' ||
                    src[i] == 'F' || src[i] == 'd' || src[i] == 'D')) {
        ++i;
      }
      push(TokenKind::Literal, start, i);
      continue;
    }
    if (c == '"') {
      std::size_t start = i;
      ++i;
      while (i < n && src[i] != '"' && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      if (i >= n || src[i] != '"')
        throw LexError("unterminated string literal", start);
      ++i;
      push(TokenKind::Literal, start, i);
      continue;
    }
    if (c == '\'') {
      std::size_t start = i;
      ++i;
      while (i < n && src[i] != '\'' && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      if (i >= n || src[i] != '\'')
        throw LexError("unterminated char literal", start);
      ++i;
      push(TokenKind::Literal, start, i);
      continue;
    }
    if (c == '@') {
      push(TokenKind::AnnotationMarker, i, i + 1);
      ++i;
      continue;
    }
    if (i + 1 < n) {
      std::string_view two = src.substr(i, 2);
      bool matched = false;
      for (std::string_view op : kTwoCharOps) {
        if (two == op) {
          push(TokenKind::Operator, i, i + 2);
          i += 2;
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    if (kOneCharOps.find(c) != std::string_view::npos) {
      push(TokenKind::Operator, i, i + 1);
      ++i;
      continue;
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      push(TokenKind::Punctuation, i, i + 1);
      ++i;
      continue;
    }
    throw LexError(std::string("illegal character '") + c + "'", i);
  }
  return out;
}

std::vector<std::string> token_texts(const std::vector<Token>& tokens) {
  std::vector<std::string> texts;
  texts.reserve(tokens.size());
  for (const Token& t : tokens) texts.push_back(t.text);
  return texts;
}

}  // namespace cireduce
