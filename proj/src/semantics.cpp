#include <asym/semantics.hpp>

#include <asym/error.hpp>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace asym
{

Assignment::Assignment( std::initializer_list<std::pair<std::string, bool>> entries )
{
  for ( auto const& [name, bit] : entries )
  {
    set( name, bit );
  }
}

void Assignment::set( const std::string& name, bool bit )
{
  for ( auto& [n, b] : entries_ )
  {
    if ( n == name )
    {
      b = bit;
      return;
    }
  }
  entries_.emplace_back( name, bit );
}

std::optional<bool> Assignment::get( const std::string& name ) const
{
  for ( auto const& [n, b] : entries_ )
  {
    if ( n == name )
    {
      return b;
    }
  }
  return std::nullopt;
}

bool Assignment::at( const std::string& name ) const
{
  if ( auto b = get( name ) )
  {
    return *b;
  }
  throw eval_error( "semantics", "unbound variable '" + name + "'" );
}

std::string Assignment::to_string() const
{
  std::string s = "{";
  for ( std::size_t i = 0; i < entries_.size(); ++i )
  {
    if ( i )
    {
      s += ",";
    }
    s += entries_[i].first + "=" + ( entries_[i].second ? "1" : "0" );
  }
  return s + "}";
}

TruthTable::TruthTable( std::vector<std::string> vars, std::vector<bool> bits )
    : vars_( std::move( vars ) ), bits_( std::move( bits ) )
{
  if ( vars_.size() > max_table_vars )
  {
    throw capacity_error( "semantics", std::to_string( vars_.size() ) + " variables exceed the limit of " +
                                           std::to_string( max_table_vars ) );
  }
  if ( bits_.size() != num_rows() )
  {
    throw range_error( "semantics", "table over " + std::to_string( vars_.size() ) + " variables needs " +
                                        std::to_string( num_rows() ) + " bits, got " + std::to_string( bits_.size() ) );
  }
}

namespace
{

std::vector<bool> bits_from_string( std::string_view s )
{
  std::vector<bool> bits;
  bits.reserve( s.size() );
  for ( auto c : s )
  {
    if ( c != '0' && c != '1' )
    {
      throw format_error( "semantics", std::string( "truth table bits must be 0 or 1, got '" ) + c + "'" );
    }
    bits.push_back( c == '1' );
  }
  return bits;
}

} // namespace

TruthTable::TruthTable( std::vector<std::string> vars, std::string_view bits )
    : TruthTable( std::move( vars ), bits_from_string( bits ) )
{
}

Assignment TruthTable::assignment( std::uint64_t row ) const
{
  Assignment a;
  auto const n = vars_.size();
  for ( std::size_t i = 0; i < n; ++i )
  {
    a.set( vars_[i], ( row >> ( n - 1 - i ) ) & 1u );
  }
  return a;
}

std::vector<std::uint32_t> TruthTable::onset() const
{
  std::vector<std::uint32_t> rows;
  for ( std::uint64_t r = 0; r < num_rows(); ++r )
  {
    if ( bits_[r] )
    {
      rows.push_back( static_cast<std::uint32_t>( r ) );
    }
  }
  return rows;
}

std::vector<std::uint32_t> TruthTable::offset() const
{
  std::vector<std::uint32_t> rows;
  for ( std::uint64_t r = 0; r < num_rows(); ++r )
  {
    if ( !bits_[r] )
    {
      rows.push_back( static_cast<std::uint32_t>( r ) );
    }
  }
  return rows;
}

std::string TruthTable::to_string() const
{
  std::string s;
  s.reserve( bits_.size() );
  for ( bool b : bits_ )
  {
    s += b ? '1' : '0';
  }
  return s;
}

bool eval( const Expression& e, const Assignment& a )
{
  auto const ops = e.operands();
  switch ( e.kind() )
  {
  case Kind::constant:
    return e.value();
  case Kind::variable:
    return a.at( e.name() );
  case Kind::negation:
    return !eval( ops[0], a );
  case Kind::conjunction:
    return std::all_of( ops.begin(), ops.end(), [&]( auto const& c ) { return eval( c, a ); } );
  case Kind::disjunction:
    return std::any_of( ops.begin(), ops.end(), [&]( auto const& c ) { return eval( c, a ); } );
  case Kind::iand_chain:
  {
    bool acc = eval( ops[0], a );
    for ( std::size_t i = 1; i < ops.size(); ++i )
    {
      acc = acc && !eval( ops[i], a );
    }
    return acc;
  }
  case Kind::imply_chain:
  {
    bool acc = eval( ops.back(), a );
    for ( std::size_t i = ops.size() - 1; i-- > 0; )
    {
      acc = !eval( ops[i], a ) || acc;
    }
    return acc;
  }
  }
  return false;
}

namespace
{

/* Postfix program evaluated 64 rows at a time. */
struct instruction
{
  Kind kind;
  std::uint32_t arg; // variable index, constant bit, or operand count
};

void compile( const Expression& e, const std::unordered_map<std::string, std::uint32_t>& index,
              std::vector<instruction>& out )
{
  switch ( e.kind() )
  {
  case Kind::constant:
    out.push_back( { Kind::constant, e.value() ? 1u : 0u } );
    return;
  case Kind::variable:
    out.push_back( { Kind::variable, index.at( e.name() ) } );
    return;
  default:
    for ( auto const& c : e.operands() )
    {
      compile( c, index, out );
    }
    out.push_back( { e.kind(), static_cast<std::uint32_t>( e.arity() ) } );
  }
}

// Bit j of the pattern is bit p of j, for p < 6.
constexpr std::uint64_t low_patterns[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull };

std::uint64_t run_block( const std::vector<instruction>& program, const std::vector<std::uint64_t>& var_words,
                         std::vector<std::uint64_t>& stack )
{
  stack.clear();
  for ( auto const& ins : program )
  {
    switch ( ins.kind )
    {
    case Kind::constant:
      stack.push_back( ins.arg ? ~std::uint64_t{ 0 } : 0u );
      break;
    case Kind::variable:
      stack.push_back( var_words[ins.arg] );
      break;
    case Kind::negation:
      stack.back() = ~stack.back();
      break;
    default:
    {
      auto const k = ins.arg;
      auto const base = stack.size() - k;
      std::uint64_t acc = 0u;
      switch ( ins.kind )
      {
      case Kind::conjunction:
        acc = ~std::uint64_t{ 0 };
        for ( std::size_t i = base; i < stack.size(); ++i )
        {
          acc &= stack[i];
        }
        break;
      case Kind::disjunction:
        for ( std::size_t i = base; i < stack.size(); ++i )
        {
          acc |= stack[i];
        }
        break;
      case Kind::iand_chain:
        acc = stack[base];
        for ( std::size_t i = base + 1; i < stack.size(); ++i )
        {
          acc &= ~stack[i];
        }
        break;
      case Kind::imply_chain:
        acc = stack.back();
        for ( std::size_t i = stack.size() - 1; i-- > base; )
        {
          acc = ~stack[i] | acc;
        }
        break;
      default:
        break;
      }
      stack.resize( base );
      stack.push_back( acc );
    }
    }
  }
  return stack.back();
}

} // namespace

TruthTable truth_table( const Expression& e, std::optional<std::vector<std::string>> vars )
{
  auto const used = variables( e );
  std::vector<std::string> order = vars ? std::move( *vars ) : used;
  if ( order.size() > max_table_vars )
  {
    throw capacity_error( "semantics", std::to_string( order.size() ) + " variables exceed the limit of " +
                                           std::to_string( max_table_vars ) );
  }
  std::unordered_map<std::string, std::uint32_t> index;
  for ( std::uint32_t i = 0; i < order.size(); ++i )
  {
    if ( !index.emplace( order[i], i ).second )
    {
      throw domain_error( "semantics", "duplicate variable '" + order[i] + "' in variable order" );
    }
  }
  for ( auto const& v : used )
  {
    if ( !index.count( v ) )
    {
      throw domain_error( "semantics", "variable order misses '" + v + "'" );
    }
  }

  std::vector<instruction> program;
  compile( e, index, program );

  auto const n = order.size();
  std::uint64_t const rows = std::uint64_t{ 1 } << n;
  std::vector<bool> bits( rows );
  std::vector<std::uint64_t> var_words( n );
  std::vector<std::uint64_t> stack;
  for ( std::uint64_t base = 0; base < rows; base += 64u )
  {
    for ( std::size_t i = 0; i < n; ++i )
    {
      auto const p = n - 1 - i;
      if ( p < 6u )
      {
        var_words[i] = low_patterns[p];
      }
      else
      {
        var_words[i] = ( ( base >> p ) & 1u ) ? ~std::uint64_t{ 0 } : 0u;
      }
    }
    auto const word = run_block( program, var_words, stack );
    auto const count = std::min<std::uint64_t>( 64u, rows - base );
    for ( std::uint64_t j = 0; j < count; ++j )
    {
      bits[base + j] = ( word >> j ) & 1u;
    }
  }
  return TruthTable( std::move( order ), std::move( bits ) );
}

std::vector<std::string> merge_variables( const std::vector<std::string>& a, const std::vector<std::string>& b )
{
  std::vector<std::string> out = a;
  std::unordered_set<std::string> seen( a.begin(), a.end() );
  for ( auto const& v : b )
  {
    if ( seen.insert( v ).second )
    {
      out.push_back( v );
    }
  }
  return out;
}

Verdict equivalent( const Expression& e1, const Expression& e2, const std::vector<std::string>& vars )
{
  auto const t1 = truth_table( e1, vars );
  auto const t2 = truth_table( e2, vars );
  for ( std::uint64_t r = 0; r < t1.num_rows(); ++r )
  {
    if ( t1[r] != t2[r] )
    {
      return { false, t1.assignment( r ) };
    }
  }
  return { true, std::nullopt };
}

Verdict equivalent( const Expression& e1, const Expression& e2 )
{
  return equivalent( e1, e2, merge_variables( variables( e1 ), variables( e2 ) ) );
}

TruthTable classical_dual_tt( const TruthTable& t )
{
  auto const rows = t.num_rows();
  std::vector<bool> bits( rows );
  for ( std::uint64_t r = 0; r < rows; ++r )
  {
    bits[r] = !t[rows - 1 - r];
  }
  return TruthTable( t.vars(), std::move( bits ) );
}

std::uint64_t reverse_row( std::uint64_t row, std::size_t num_vars ) noexcept
{
  std::uint64_t out = 0u;
  for ( std::size_t i = 0; i < num_vars; ++i )
  {
    out = ( out << 1 ) | ( ( row >> i ) & 1u );
  }
  return out;
}

TruthTable demorgan_dual_tt( const TruthTable& t )
{
  auto const rows = t.num_rows();
  auto const n = t.num_vars();
  std::vector<bool> bits( rows );
  for ( std::uint64_t r = 0; r < rows; ++r )
  {
    // complement every input, then reverse their order
    bits[r] = !t[reverse_row( ( rows - 1 ) ^ r, n )];
  }
  return TruthTable( t.vars(), std::move( bits ) );
}

} // namespace asym
