#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include "cireduce/token.hpp"

namespace cireduce {

/// Whether a node may be removed from the tree while keeping the rendered
/// text inside the grammar.
enum class Deletability {
  Required,     // removal could break the syntax
  Optional,     // grammar-optional construct, always safe to drop
  ListElement,  // element of a star-quantified list, always safe to drop
};

std::string_view to_string(Deletability d);

enum class Rule {
  TokenLeaf,
  MethodDecl,
  ModifierList,
  Annotation,
  Modifier,
  TypeRef,
  ArrayBrackets,
  ParamList,
  Param,
  ThrowsClause,
  ThrowsName,
  Block,
  LocalDecl,
  Initializer,
  ExprStmt,
  IfStmt,
  ElseClause,
  WhileStmt,
  ForStmt,
  TryStmt,
  CatchClause,
  FinallyClause,
  ReturnStmt,
  ThrowStmt,
  AssignExpr,
  BinaryExpr,
  UnaryExpr,
  PostfixExpr,
  InstanceofExpr,
  MethodCall,
  FieldAccess,
  ArgList,
  Arg,
  NameRef,
  LiteralExpr,
  ThisRef,
  SuperRef,
  NewExpr,
  ParenExpr,
};

std::string_view rule_name(Rule rule);

struct ParseNode {
  Rule rule = Rule::TokenLeaf;
  Deletability deletability = Deletability::Required;
  std::vector<std::unique_ptr<ParseNode>> children;
  // Covered token range, inclusive on both ends. A leaf covers exactly one
  // token; an inner node covers the contiguous union of its children.
  std::size_t first_token = 0;
  std::size_t last_token = 0;

  bool is_leaf() const { return rule == Rule::TokenLeaf; }
  std::size_t token_count() const { return last_token - first_token + 1; }
};

/// In-order leaf token indices (the frontier).
void collect_frontier(const ParseNode& node, std::vector<std::size_t>& out);

/// Preorder walk over every node.
template <typename Fn>
void visit(const ParseNode& node, Fn&& fn) {
  fn(node);
  for (const auto& child : node.children) visit(*child, fn);
}

/// Structural equality: same rules, deletability and leaf token texts.
bool structurally_equal(const ParseNode& a, const ParseNode& b,
                        const std::vector<Token>& tokens_a,
                        const std::vector<Token>& tokens_b);

}  // namespace cireduce
