#pragma once

#include <asym/expr.hpp>
#include <asym/semantics.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace asym
{

enum class Trit : std::uint8_t
{
  zero = 0,
  one = 1,
  dash = 2
};

/*! \brief Product term over a fixed variable order (at most 24 variables).

  Position i corresponds to the i-th variable, which is bit (n-1-i) of a row
  index. Cubes order lexicographically by position with 0 < 1 < dash.
*/
class Cube
{
public:
  Cube() = default;
  Cube( std::uint32_t value, std::uint32_t care, unsigned width );

  static Cube minterm( std::uint32_t row, unsigned width );
  /// Parses "1-0"; throws format_error on other characters.
  static Cube from_string( std::string_view s );

  unsigned width() const noexcept { return width_; }
  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t care() const noexcept { return care_; }

  Trit at( unsigned position ) const noexcept;
  unsigned literal_count() const noexcept;
  bool covers( std::uint32_t row ) const noexcept { return ( row & care_ ) == value_; }
  bool contains( const Cube& other ) const noexcept;

  std::string to_string() const;

  friend bool operator==( const Cube&, const Cube& ) = default;
  friend std::strong_ordering operator<=>( const Cube& a, const Cube& b ) noexcept;

private:
  std::uint32_t value_ = 0; // bits where care_ is set
  std::uint32_t care_ = 0;
  unsigned width_ = 0;
};

/// Ordered variable list plus pairwise distinct cubes kept in ascending order.
struct Cover
{
  std::vector<std::string> vars;
  std::vector<Cube> cubes;

  /// Sorts and removes duplicates.
  void canonicalize();

  /// First line: variable names separated by spaces. Then one cube per line.
  std::string to_text() const;
  static Cover from_text( std::string_view text );

  friend bool operator==( const Cover&, const Cover& ) = default;
};

Cover minterm_cover( const TruthTable& t );

/// Cube literal in variable order: `x` for 1, `!x` for 0.
std::vector<Expression> cube_literals( const Cube& c, const std::vector<std::string>& vars );

/// Product l1 & l2 & ... & lk as the IAND chain (l1, !l2, ..., !lk); a
/// single literal stays bare, the empty cube is 1.
Expression soi_term( const Cube& c, const std::vector<std::string>& vars );
/// T with !T = l1 & ... & lk: the IMPLY chain (l1, ..., l(k-1), !lk); a
/// single literal gives !l1, the empty cube gives 0.
Expression noi_term( const Cube& c, const std::vector<std::string>& vars );

/// OR of soi_term over the cover; 0 for an empty cover, bare term for one cube.
Expression soi_from_cover( const Cover& cover );
/// NAND of noi_term over the cover; 0 for an empty cover, 1 when a cube is
/// the tautology, !T for a single cube.
Expression noi_from_cover( const Cover& cover );

struct CanonicalForm
{
  Expression expr;
  /// The form collapsed to a constant instead of the usual shape.
  bool degenerate = false;
};

/// Sum of IANDs over the ON-set minterms (ascending). Requires >= 1 variable.
CanonicalForm soi_from_tt( const TruthTable& t );
/// NAND of IMPLY chains over the ON-set minterms (ascending). f == 1
/// returns the constant 1 flagged degenerate.
CanonicalForm noi_from_tt( const TruthTable& t );

bool is_soi( const Expression& e ) noexcept;
bool is_noi( const Expression& e ) noexcept;

/// Terms of an SOI expression (the OR's children, or the expression itself).
/// Throws shape_error.
std::vector<Expression> soi_terms( const Expression& e );
/// Terms T_i of an NOI expression !(T1 & ... & Tm) or !T. Throws shape_error.
std::vector<Expression> noi_terms( const Expression& e );

/// Term-wise !(x1 @ .. @ xk) = !xk -> .. -> !x1.
Expression soi_to_noi( const Expression& e );
/// Term-wise !(y1 -> .. -> yk) = !yk @ .. @ !y1.
Expression noi_to_soi( const Expression& e );

struct Unsupported
{
  std::string reason;
};

using FormResult = std::variant<Expression, Unsupported>;

/// IAND of two full-support sums S1 @ S2; only functions with exactly one
/// ON row are representable this way.
FormResult ios_from_tt( const TruthTable& t );
/// IMPLY of two full-support NANDs N1 -> N2; only functions with exactly one
/// OFF row (or the constant 1) are representable this way.
FormResult ion_from_tt( const TruthTable& t );

/// Sum that is 0 exactly at `row` (all variables present).
Expression maxterm_sum( std::uint32_t row, const std::vector<std::string>& vars );
/// NAND that is 0 exactly at `row` (all variables present).
Expression minterm_nand( std::uint32_t row, const std::vector<std::string>& vars );

/// IAND chain over sums of literals; throws shape_error otherwise.
Expression make_ios( std::vector<Expression> sums );
/// IMPLY chain over NANDs of literals; throws shape_error otherwise.
Expression make_ion( std::vector<Expression> nands );

} // namespace asym
