#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asym
{

enum class Kind
{
  constant,
  variable,
  negation,
  conjunction, // n-ary AND
  disjunction, // n-ary OR
  iand_chain,  // ((x1 @ x2) @ x3) ...   pairs left to right
  imply_chain  // x1 -> (x2 -> (... -> xk)) pairs right to left
};

/*! \brief Immutable expression tree over IAND / IMPLY / AND / OR / NOT.

  Expressions are cheap to copy (shared, immutable nodes) and compare
  structurally with `==`. Build them through the factory functions below;
  they enforce arities and the chain flattening rules.

  An IAND chain over operands x1..xk denotes ((x1 & !x2) & !x3) ... and an
  IMPLY chain denotes x1 -> (x2 -> (... -> xk)). Only the associative side
  of a chain is ever flattened: the head of an IAND chain and the tail of an
  IMPLY chain.
*/
class Expression
{
public:
  Kind kind() const noexcept;

  /// Value of a constant node.
  bool value() const;
  /// Name of a variable node.
  const std::string& name() const;
  /// Children of negation (one) and n-ary nodes (two or more).
  std::span<const Expression> operands() const noexcept;
  const Expression& operand( std::size_t i ) const;
  std::size_t arity() const noexcept { return operands().size(); }

  bool is_constant() const noexcept { return kind() == Kind::constant; }
  bool is_variable() const noexcept { return kind() == Kind::variable; }
  bool is_negation() const noexcept { return kind() == Kind::negation; }
  bool is_chain() const noexcept { return kind() == Kind::iand_chain || kind() == Kind::imply_chain; }

  friend bool operator==( const Expression& a, const Expression& b );

private:
  struct node;
  explicit Expression( std::shared_ptr<const node> n ) : node_( std::move( n ) ) {}
  std::shared_ptr<const node> node_;

  friend Expression make_node( Kind, bool, std::string, std::vector<Expression> );
};

Expression constant( bool value );
/// Throws identifier_error unless `name` is [A-Za-z_][A-Za-z0-9_]*.
Expression variable( std::string name );
Expression negation( Expression child );
Expression conjunction( std::vector<Expression> children );
Expression disjunction( std::vector<Expression> children );
/// A nested IAND chain in the first position is flattened; other positions are kept.
Expression iand_chain( std::vector<Expression> operands );
/// A nested IMPLY chain in the last position is flattened; other positions are kept.
Expression imply_chain( std::vector<Expression> operands );

/// Chain node over exactly `operands`, without flattening. Semantically
/// identical to iand_chain/imply_chain; only the tree shape differs.
Expression unflattened_chain( Kind kind, std::vector<Expression> operands );

/// Rebuilds a node of the same kind as `e` with new children (through the
/// factories, so flattening applies). Leaves are returned unchanged.
Expression with_operands( const Expression& e, std::vector<Expression> children );

bool is_valid_identifier( std::string_view name ) noexcept;

/// Variable or negated variable.
bool is_literal( const Expression& e ) noexcept;

/// Removes double negations and folds negated constants. Nothing else changes.
Expression normalize_not( const Expression& e );

/// Distinct variable names in first-appearance (pre-order, left to right) order.
std::vector<std::string> variables( const Expression& e );

/// Number of variable occurrences.
std::size_t literal_count( const Expression& e );
/// Number of binary operators plus negations (an n-ary node counts n-1).
std::size_t operator_count( const Expression& e );
std::size_t node_count( const Expression& e );
std::size_t depth( const Expression& e );

/// Concrete syntax accepted by `parse`; see parse.hpp for the grammar.
std::string format( const Expression& e );

using Path = std::vector<std::size_t>;

/// Subtree reached by following child indices from the root.
/// Throws range_error for an invalid path.
const Expression& subterm( const Expression& e, std::span<const std::size_t> path );
/// Copy of `e` with the subtree at `path` replaced.
Expression replace_at( const Expression& e, std::span<const std::size_t> path, Expression replacement );

/// Every valid path of `e` in pre-order (root first, then children left to right).
std::vector<Path> positions( const Expression& e );

std::string to_string( const Path& p );

} // namespace asym
