#pragma once

#include <memory>
#include <vector>

#include "cireduce/parse_tree.hpp"
#include "cireduce/token.hpp"

namespace cireduce {

/// Parses one method declaration of the Java subset. The whole token
/// sequence must be consumed. Throws ParseError with the index of the first
/// offending token.
std::unique_ptr<ParseNode> parse(const std::vector<Token>& tokens);

}  // namespace cireduce
