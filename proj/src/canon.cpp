#include <asym/canon.hpp>

#include <asym/error.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

namespace asym
{

Cube::Cube( std::uint32_t value, std::uint32_t care, unsigned width ) : value_( value & care ), care_( care ), width_( width )
{
  if ( width > max_table_vars )
  {
    throw capacity_error( "canon", "cube width " + std::to_string( width ) + " exceeds " + std::to_string( max_table_vars ) );
  }
  if ( width < 32u && ( care >> width ) != 0u )
  {
    throw range_error( "canon", "cube care mask wider than " + std::to_string( width ) );
  }
}

Cube Cube::minterm( std::uint32_t row, unsigned width )
{
  auto const mask = width == 0u ? 0u : ( ~std::uint32_t{ 0 } >> ( 32u - width ) );
  if ( ( row & ~mask ) != 0u )
  {
    throw range_error( "canon", "row " + std::to_string( row ) + " out of range for " + std::to_string( width ) + " variables" );
  }
  return Cube( row, mask, width );
}

Cube Cube::from_string( std::string_view s )
{
  std::uint32_t value = 0u;
  std::uint32_t care = 0u;
  for ( auto c : s )
  {
    value <<= 1;
    care <<= 1;
    switch ( c )
    {
    case '0':
      care |= 1u;
      break;
    case '1':
      care |= 1u;
      value |= 1u;
      break;
    case '-':
      break;
    default:
      throw format_error( "canon", std::string( "invalid cube character '" ) + c + "'" );
    }
  }
  return Cube( value, care, static_cast<unsigned>( s.size() ) );
}

Trit Cube::at( unsigned position ) const noexcept
{
  auto const bit = width_ - 1u - position;
  if ( !( ( care_ >> bit ) & 1u ) )
  {
    return Trit::dash;
  }
  return ( ( value_ >> bit ) & 1u ) ? Trit::one : Trit::zero;
}

unsigned Cube::literal_count() const noexcept
{
  return static_cast<unsigned>( std::popcount( care_ ) );
}

bool Cube::contains( const Cube& other ) const noexcept
{
  return ( care_ & other.care_ ) == care_ && ( other.value_ & care_ ) == value_;
}

std::string Cube::to_string() const
{
  std::string s;
  for ( unsigned i = 0; i < width_; ++i )
  {
    switch ( at( i ) )
    {
    case Trit::zero:
      s += '0';
      break;
    case Trit::one:
      s += '1';
      break;
    case Trit::dash:
      s += '-';
      break;
    }
  }
  return s;
}

std::strong_ordering operator<=>( const Cube& a, const Cube& b ) noexcept
{
  auto const n = std::min( a.width_, b.width_ );
  for ( unsigned i = 0; i < n; ++i )
  {
    auto const x = static_cast<int>( a.at( i ) );
    auto const y = static_cast<int>( b.at( i ) );
    if ( x != y )
    {
      return x <=> y;
    }
  }
  return a.width_ <=> b.width_;
}

void Cover::canonicalize()
{
  std::sort( cubes.begin(), cubes.end() );
  cubes.erase( std::unique( cubes.begin(), cubes.end() ), cubes.end() );
}

std::string Cover::to_text() const
{
  std::string s;
  for ( std::size_t i = 0; i < vars.size(); ++i )
  {
    s += ( i ? " " : "" ) + vars[i];
  }
  s += '\n';
  for ( auto const& c : cubes )
  {
    s += c.to_string() + '\n';
  }
  return s;
}

Cover Cover::from_text( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string line;
  Cover cover;
  if ( !std::getline( in, line ) )
  {
    throw format_error( "canon", "cover text needs a variable header line" );
  }
  std::istringstream header( line );
  for ( std::string v; header >> v; )
  {
    if ( !is_valid_identifier( v ) )
    {
      throw format_error( "canon", "invalid variable name '" + v + "' in cover header" );
    }
    cover.vars.push_back( v );
  }
  while ( std::getline( in, line ) )
  {
    if ( line.empty() )
    {
      continue;
    }
    if ( line.size() != cover.vars.size() )
    {
      throw format_error( "canon", "cube '" + line + "' does not match " + std::to_string( cover.vars.size() ) + " variables" );
    }
    cover.cubes.push_back( Cube::from_string( line ) );
  }
  cover.canonicalize();
  return cover;
}

Cover minterm_cover( const TruthTable& t )
{
  Cover cover{ t.vars(), {} };
  auto const n = static_cast<unsigned>( t.num_vars() );
  for ( auto row : t.onset() )
  {
    cover.cubes.push_back( Cube::minterm( row, n ) );
  }
  return cover;
}

std::vector<Expression> cube_literals( const Cube& c, const std::vector<std::string>& vars )
{
  if ( vars.size() != c.width() )
  {
    throw domain_error( "canon", "cube width does not match the variable list" );
  }
  std::vector<Expression> lits;
  for ( unsigned i = 0; i < c.width(); ++i )
  {
    switch ( c.at( i ) )
    {
    case Trit::one:
      lits.push_back( variable( vars[i] ) );
      break;
    case Trit::zero:
      lits.push_back( negation( variable( vars[i] ) ) );
      break;
    case Trit::dash:
      break;
    }
  }
  return lits;
}

Expression soi_term( const Cube& c, const std::vector<std::string>& vars )
{
  auto lits = cube_literals( c, vars );
  if ( lits.empty() )
  {
    return constant( true );
  }
  if ( lits.size() == 1u )
  {
    return lits.front();
  }
  // l1 & l2 & .. & lk == l1 @ !l2 @ .. @ !lk
  for ( std::size_t i = 1; i < lits.size(); ++i )
  {
    lits[i] = normalize_not( negation( lits[i] ) );
  }
  return iand_chain( std::move( lits ) );
}

Expression noi_term( const Cube& c, const std::vector<std::string>& vars )
{
  auto lits = cube_literals( c, vars );
  if ( lits.empty() )
  {
    return constant( false );
  }
  if ( lits.size() == 1u )
  {
    return normalize_not( negation( lits.front() ) );
  }
  // !(l1 -> .. -> l(k-1) -> !lk) == l1 & .. & lk
  lits.back() = normalize_not( negation( lits.back() ) );
  return imply_chain( std::move( lits ) );
}

Expression soi_from_cover( const Cover& cover )
{
  std::vector<Expression> terms;
  for ( auto const& c : cover.cubes )
  {
    if ( c.literal_count() == 0u )
    {
      return constant( true );
    }
    terms.push_back( soi_term( c, cover.vars ) );
  }
  if ( terms.empty() )
  {
    return constant( false );
  }
  if ( terms.size() == 1u )
  {
    return terms.front();
  }
  return disjunction( std::move( terms ) );
}

Expression noi_from_cover( const Cover& cover )
{
  std::vector<Expression> terms;
  for ( auto const& c : cover.cubes )
  {
    if ( c.literal_count() == 0u )
    {
      return constant( true );
    }
    terms.push_back( noi_term( c, cover.vars ) );
  }
  if ( terms.empty() )
  {
    return constant( false );
  }
  if ( terms.size() == 1u )
  {
    return negation( terms.front() );
  }
  return negation( conjunction( std::move( terms ) ) );
}

CanonicalForm soi_from_tt( const TruthTable& t )
{
  if ( t.num_vars() == 0u )
  {
    throw domain_error( "canon", "SOI needs at least one variable" );
  }
  auto const cover = minterm_cover( t );
  // no tautology shortcut: every minterm is listed
  std::vector<Expression> terms;
  for ( auto const& c : cover.cubes )
  {
    terms.push_back( soi_term( c, cover.vars ) );
  }
  if ( terms.empty() )
  {
    return { constant( false ), true };
  }
  if ( terms.size() == 1u )
  {
    return { terms.front(), false };
  }
  return { disjunction( std::move( terms ) ), false };
}

CanonicalForm noi_from_tt( const TruthTable& t )
{
  if ( t.num_vars() == 0u )
  {
    throw domain_error( "canon", "NOI needs at least one variable" );
  }
  auto const cover = minterm_cover( t );
  if ( cover.cubes.empty() )
  {
    return { constant( false ), true };
  }
  if ( cover.cubes.size() == t.num_rows() )
  {
    // a NAND over the full term list would be well-formed but the NOI of
    // the constant 1 is reported as the constant itself
    return { constant( true ), true };
  }
  return { noi_from_cover( cover ), false };
}

namespace
{

bool is_atom( const Expression& e ) noexcept
{
  return e.is_constant() || is_literal( e );
}

bool is_chain_of_atoms( const Expression& e, Kind kind ) noexcept
{
  if ( e.kind() != kind )
  {
    return false;
  }
  auto const ops = e.operands();
  return std::all_of( ops.begin(), ops.end(), is_atom );
}

bool is_soi_term( const Expression& e ) noexcept
{
  return is_atom( e ) || is_chain_of_atoms( e, Kind::iand_chain );
}

bool is_noi_term( const Expression& e ) noexcept
{
  return is_atom( e ) || is_chain_of_atoms( e, Kind::imply_chain );
}

} // namespace

bool is_soi( const Expression& e ) noexcept
{
  if ( e.kind() == Kind::disjunction )
  {
    auto const ops = e.operands();
    return std::all_of( ops.begin(), ops.end(), is_soi_term );
  }
  return is_soi_term( e );
}

bool is_noi( const Expression& e ) noexcept
{
  if ( e.is_constant() )
  {
    return true;
  }
  if ( !e.is_negation() )
  {
    return false;
  }
  auto const& inner = e.operands()[0];
  if ( inner.kind() == Kind::conjunction )
  {
    auto const ops = inner.operands();
    return std::all_of( ops.begin(), ops.end(), is_noi_term );
  }
  return is_noi_term( inner );
}

std::vector<Expression> soi_terms( const Expression& e )
{
  if ( !is_soi( e ) )
  {
    throw shape_error( "canon", "expression is not in SOI form: " + format( e ) );
  }
  if ( e.kind() == Kind::disjunction )
  {
    return { e.operands().begin(), e.operands().end() };
  }
  return { e };
}

std::vector<Expression> noi_terms( const Expression& e )
{
  if ( !is_noi( e ) || e.is_constant() )
  {
    throw shape_error( "canon", "expression is not in NOI form: " + format( e ) );
  }
  auto const& inner = e.operands()[0];
  if ( inner.kind() == Kind::conjunction )
  {
    return { inner.operands().begin(), inner.operands().end() };
  }
  return { inner };
}

namespace
{

/* Reverses the operand list and complements every operand. */
std::vector<Expression> reversed_complements( std::span<const Expression> ops )
{
  std::vector<Expression> out;
  for ( auto it = ops.rbegin(); it != ops.rend(); ++it )
  {
    out.push_back( normalize_not( negation( *it ) ) );
  }
  return out;
}

} // namespace

Expression soi_to_noi( const Expression& e )
{
  if ( e.is_constant() )
  {
    return e;
  }
  std::vector<Expression> terms;
  for ( auto const& t : soi_terms( e ) )
  {
    if ( t.kind() == Kind::iand_chain )
    {
      terms.push_back( imply_chain( reversed_complements( t.operands() ) ) );
    }
    else
    {
      terms.push_back( normalize_not( negation( t ) ) );
    }
  }
  if ( terms.size() == 1u )
  {
    return negation( terms.front() );
  }
  return negation( conjunction( std::move( terms ) ) );
}

Expression noi_to_soi( const Expression& e )
{
  if ( e.is_constant() )
  {
    return e;
  }
  std::vector<Expression> terms;
  for ( auto const& t : noi_terms( e ) )
  {
    if ( t.kind() == Kind::imply_chain )
    {
      terms.push_back( iand_chain( reversed_complements( t.operands() ) ) );
    }
    else
    {
      terms.push_back( normalize_not( negation( t ) ) );
    }
  }
  if ( terms.size() == 1u )
  {
    return terms.front();
  }
  return disjunction( std::move( terms ) );
}

Expression maxterm_sum( std::uint32_t row, const std::vector<std::string>& vars )
{
  auto const n = vars.size();
  std::vector<Expression> lits;
  for ( std::size_t i = 0; i < n; ++i )
  {
    bool const bit = ( row >> ( n - 1 - i ) ) & 1u;
    lits.push_back( bit ? negation( variable( vars[i] ) ) : variable( vars[i] ) );
  }
  if ( lits.size() == 1u )
  {
    return lits.front();
  }
  return disjunction( std::move( lits ) );
}

Expression minterm_nand( std::uint32_t row, const std::vector<std::string>& vars )
{
  auto const n = vars.size();
  std::vector<Expression> lits;
  for ( std::size_t i = 0; i < n; ++i )
  {
    bool const bit = ( row >> ( n - 1 - i ) ) & 1u;
    lits.push_back( bit ? variable( vars[i] ) : negation( variable( vars[i] ) ) );
  }
  if ( lits.size() == 1u )
  {
    return negation( lits.front() );
  }
  return negation( conjunction( std::move( lits ) ) );
}

namespace
{

void check_form( const Expression& e, const TruthTable& t, char const* form )
{
  if ( truth_table( e, t.vars() ) != t )
  {
    throw domain_error( "canon", std::string( form ) + " construction disagrees with its table for " + format( e ) );
  }
}

} // namespace

FormResult ios_from_tt( const TruthTable& t )
{
  if ( t.num_vars() == 0u )
  {
    return Unsupported{ "IOS needs at least one variable" };
  }
  auto const on = t.onset();
  if ( on.size() != 1u )
  {
    return Unsupported{ "an IAND of full-support sums S1 @ S2 = S1 & !S2 has at most one ON row; this function has " +
                        std::to_string( on.size() ) };
  }
  auto const off = t.offset();
  auto const s1 = maxterm_sum( off.front(), t.vars() );
  auto const s2 = maxterm_sum( on.front(), t.vars() );
  auto result = iand_chain( { s1, s2 } );
  check_form( result, t, "IOS" );
  return result;
}

FormResult ion_from_tt( const TruthTable& t )
{
  if ( t.num_vars() == 0u )
  {
    return Unsupported{ "ION needs at least one variable" };
  }
  auto const off = t.offset();
  if ( off.empty() )
  {
    // N -> N would do, but mirrors IOS leaving out S @ S for the constant 0
    return Unsupported{ "ION covers exactly one OFF row; the constant 1 is left to the NOI form" };
  }
  if ( off.size() > 1u )
  {
    return Unsupported{ "an IMPLY of full-support NANDs N1 -> N2 = !N1 | N2 has at most one OFF row; this function has " +
                        std::to_string( off.size() ) };
  }
  auto const on = t.onset();
  // N1 from the highest ON row (the all-positive minterm when it is ON)
  auto const n1 = minterm_nand( on.back(), t.vars() );
  auto const n2 = minterm_nand( off.front(), t.vars() );
  auto result = imply_chain( { n1, n2 } );
  check_form( result, t, "ION" );
  return result;
}

Expression make_ios( std::vector<Expression> sums )
{
  for ( auto const& s : sums )
  {
    bool ok = is_literal( s );
    if ( s.kind() == Kind::disjunction )
    {
      auto const ops = s.operands();
      ok = std::all_of( ops.begin(), ops.end(), is_literal );
    }
    if ( !ok )
    {
      throw shape_error( "canon", "IOS operand is not a sum of literals: " + format( s ) );
    }
  }
  return iand_chain( std::move( sums ) );
}

Expression make_ion( std::vector<Expression> nands )
{
  for ( auto const& n : nands )
  {
    bool ok = false;
    if ( n.is_negation() )
    {
      auto const& inner = n.operands()[0];
      ok = is_literal( inner );
      if ( inner.kind() == Kind::conjunction )
      {
        auto const ops = inner.operands();
        ok = std::all_of( ops.begin(), ops.end(), is_literal );
      }
    }
    if ( !ok )
    {
      throw shape_error( "canon", "ION operand is not a NAND of literals: " + format( n ) );
    }
  }
  return imply_chain( std::move( nands ) );
}

} // namespace asym
