#pragma once

#include <asym/expr.hpp>
#include <asym/semantics.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace asym
{

/*! \brief Equation schema side.

  The tree is an ordinary Expression whose variable leaves are read as
  metavariables: each one matches an arbitrary subexpression, and repeated
  occurrences must match structurally equal subexpressions.
*/
struct Pattern
{
  Expression tree;

  /// Metavariables in first-appearance order.
  std::vector<std::string> metavariables() const { return variables( tree ); }
};

/// Parses a pattern using the expression grammar.
Pattern pattern( std::string_view text );

struct RewriteRule
{
  std::string name;
  Pattern lhs;
  Pattern rhs;
  std::string citation;
};

enum class RuleStatus
{
  proven,
  refuted
};

struct RuleReport
{
  std::string name;
  std::string citation;
  RuleStatus status = RuleStatus::proven;
  std::uint64_t rows = 0;
  std::optional<Assignment> counterexample;
};

/// Every directed rule of the asymmetric algebra (both directions of each
/// bidirectional law, IAND and IMPLY forms separately). Every entry has
/// been checked by verify_rule.
const std::vector<RewriteRule>& catalog();

/// Classical AND/OR/constant identities that the simplifier uses next to
/// the catalog.
const std::vector<RewriteRule>& support_rules();

/// An equation that must NOT hold (or a recorded discrepancy); verified
/// like a rule, but the expected outcome is stored alongside.
struct LawFixture
{
  std::string name;
  Expression lhs;
  Expression rhs;
  std::string citation;
  RuleStatus expected = RuleStatus::refuted;
};

const std::vector<LawFixture>& fixtures();

/// Instantiates every metavariable as a fresh variable and compares both
/// sides over all 2^k assignments. Throws capacity_error for more than 10
/// metavariables.
RuleReport verify_rule( const RewriteRule& r );
RuleReport verify_fixture( const LawFixture& f );

/// One JSON object per line: {"name","citation","status","rows"} plus
/// "counterexample" when refuted.
std::string to_json_line( const RuleReport& report );
std::string to_string( RuleStatus s );

/// Matches `r.lhs` at `position` and replaces that subtree by the
/// instantiated right-hand side; the result is normalized with
/// normalize_not. Chains also match on their associative side (a prefix of
/// an IAND chain, a suffix of an IMPLY chain) and AND/OR on any contiguous
/// run of children. Throws match_error when nothing matches.
Expression rewrite_once( const Expression& e, const RewriteRule& r, const Path& position );

struct AppliedRule
{
  std::string rule;
  Path position;
  Expression result;
};

struct SimplifyResult
{
  Expression result;
  std::vector<AppliedRule> trace;
};

/// Cost ordering used by simplify: literal count, then operator count,
/// then node count (so constants are cheaper gone than kept).
struct Cost
{
  std::size_t literals;
  std::size_t operators;
  std::size_t nodes;
  friend auto operator<=>( const Cost&, const Cost& ) = default;
};

Cost cost( const Expression& e );

/*! \brief Greedy cost-guided rewriting with the catalog and support rules.

  Each step applies the single rule application with the lowest resulting
  cost; ties go to the lexicographically smaller rule name, then the
  leftmost (pre-order) position, then the leftmost match window. Stops when
  no application strictly lowers the cost or after `budget` steps.
*/
SimplifyResult simplify( const Expression& e, std::size_t budget = 256u );

/// Classical dual extended to IAND/IMPLY: AND<->OR, 0<->1,
/// IAND(x1..xk) -> x1 | !x2 | ... | !xk, IMPLY(x1..xk) -> !x1 & ... & !x(k-1) & xk,
/// applied recursively. Its table is classical_dual_tt of the input's.
Expression dual( const Expression& e );

/// Swaps an IAND chain for an IMPLY chain over the same operands (and back).
/// Throws domain_error for any other root.
Expression demorgan_dual_expr( const Expression& e );

} // namespace asym
