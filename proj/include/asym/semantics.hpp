#pragma once

#include <asym/expr.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace asym
{

/// Largest variable count accepted by truth-table construction.
inline constexpr std::size_t max_table_vars = 24u;

/// Variable-to-bit mapping that remembers insertion order (for printing).
class Assignment
{
public:
  Assignment() = default;
  Assignment( std::initializer_list<std::pair<std::string, bool>> entries );

  /// Inserts or overwrites.
  void set( const std::string& name, bool bit );
  std::optional<bool> get( const std::string& name ) const;
  /// Throws eval_error naming the variable when unbound.
  bool at( const std::string& name ) const;

  const std::vector<std::pair<std::string, bool>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// "{A=1,B=0}"
  std::string to_string() const;

  friend bool operator==( const Assignment&, const Assignment& ) = default;

private:
  std::vector<std::pair<std::string, bool>> entries_;
};

/*! \brief Complete truth table over an ordered variable list.

  Row r assigns to variable i the bit (n-1-i) of r, i.e. the first variable
  is the most significant bit. Equality requires identical variable lists
  and identical bits.
*/
class TruthTable
{
public:
  TruthTable() = default;
  /// Throws capacity_error for more than max_table_vars variables and
  /// range_error when bits.size() != 2^vars.size().
  TruthTable( std::vector<std::string> vars, std::vector<bool> bits );
  /// Parses a string of '0'/'1' characters in row order.
  TruthTable( std::vector<std::string> vars, std::string_view bits );

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  std::uint64_t num_rows() const noexcept { return std::uint64_t{ 1 } << vars_.size(); }
  bool operator[]( std::uint64_t row ) const { return bits_[row]; }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  Assignment assignment( std::uint64_t row ) const;
  std::vector<std::uint32_t> onset() const;
  std::vector<std::uint32_t> offset() const;
  /// Bits as a '0'/'1' string in row order.
  std::string to_string() const;

  friend bool operator==( const TruthTable&, const TruthTable& ) = default;

private:
  std::vector<std::string> vars_;
  std::vector<bool> bits_;
};

/// Throws eval_error when a variable of `e` is unbound in `a`.
bool eval( const Expression& e, const Assignment& a );

/// Truth table over `vars` (default: first-appearance order of `e`).
/// Throws domain_error if `vars` misses a variable of `e`, capacity_error
/// past max_table_vars.
TruthTable truth_table( const Expression& e, std::optional<std::vector<std::string>> vars = std::nullopt );

struct Verdict
{
  bool equal = false;
  /// Lowest-index differing row, present iff !equal.
  std::optional<Assignment> counterexample;
};

/// Compares over the union of both variable sets (first-appearance order,
/// e1 before e2).
Verdict equivalent( const Expression& e1, const Expression& e2 );
/// Compares over an explicit variable order.
Verdict equivalent( const Expression& e1, const Expression& e2, const std::vector<std::string>& vars );

/// Union of variable lists, keeping first-appearance order.
std::vector<std::string> merge_variables( const std::vector<std::string>& a, const std::vector<std::string>& b );

/// Classical dual: f_d(a1..an) = !f(!a1..!an).
TruthTable classical_dual_tt( const TruthTable& t );

/// Asymmetric De Morgan dual: f_d(a1..an) = !f(!an..!a1), i.e. inputs are
/// complemented and their order reversed.
TruthTable demorgan_dual_tt( const TruthTable& t );

/// Index of the row whose bits are reversed (first variable <-> last).
std::uint64_t reverse_row( std::uint64_t row, std::size_t num_vars ) noexcept;

} // namespace asym
