#include <doctest.h>

#include "oracle.hpp"

#include <asym/canon.hpp>
#include <asym/error.hpp>
#include <asym/parse.hpp>

#include <algorithm>
#include <set>

using namespace asym;

namespace
{

TruthTable table_of( std::uint64_t f, std::size_t n )
{
  return TruthTable( oracle::names( n ), oracle::bits_of_function( f, n ) );
}

TruthTable table_of_onset( std::initializer_list<std::uint32_t> rows, std::size_t n )
{
  std::vector<bool> bits( std::size_t{ 1 } << n );
  for ( auto r : rows )
  {
    bits[r] = true;
  }
  return TruthTable( oracle::names( n ), bits );
}

std::size_t count_ones( const std::vector<bool>& bits )
{
  return static_cast<std::size_t>( std::count( bits.begin(), bits.end(), true ) );
}

std::vector<Expression> outer_terms( const Expression& e, Kind outer )
{
  if ( e.kind() == outer )
  {
    return { e.operands().begin(), e.operands().end() };
  }
  return { e };
}

} // namespace

TEST_CASE( "cubes" )
{
  auto const c = Cube::from_string( "1-0" );
  CHECK( c.width() == 3u );
  CHECK( c.at( 0 ) == Trit::one );
  CHECK( c.at( 1 ) == Trit::dash );
  CHECK( c.at( 2 ) == Trit::zero );
  CHECK( c.literal_count() == 2u );
  CHECK( c.to_string() == "1-0" );
  CHECK( c.covers( 0b100u ) );
  CHECK( c.covers( 0b110u ) );
  CHECK_FALSE( c.covers( 0b101u ) );
  CHECK( c.contains( Cube::minterm( 0b110u, 3 ) ) );
  CHECK_FALSE( Cube::minterm( 0b110u, 3 ).contains( c ) );
  CHECK( Cube::minterm( 5u, 3 ).to_string() == "101" );
  CHECK_THROWS_AS( Cube::minterm( 8u, 3 ), range_error );
  CHECK_THROWS_AS( Cube::from_string( "1x" ), format_error );

  // 0 < 1 < dash, first position most significant
  std::vector<Cube> cubes{ Cube::from_string( "-11" ), Cube::from_string( "1-1" ), Cube::from_string( "11-" ),
                           Cube::from_string( "011" ) };
  std::sort( cubes.begin(), cubes.end() );
  std::vector<std::string> order;
  for ( auto const& x : cubes )
  {
    order.push_back( x.to_string() );
  }
  CHECK( order == std::vector<std::string>{ "011", "11-", "1-1", "-11" } );
}

TEST_CASE( "cover text format" )
{
  auto const cover = Cover::from_text( "A B C\n11-\n-11\n1-1\n11-\n" );
  CHECK( cover.vars == std::vector<std::string>{ "A", "B", "C" } );
  CHECK( cover.cubes.size() == 3u );
  CHECK( cover.to_text() == "A B C\n11-\n1-1\n-11\n" );
  CHECK( Cover::from_text( cover.to_text() ) == cover );
  CHECK_THROWS_AS( Cover::from_text( "A B\n1-1\n" ), format_error );
  CHECK_THROWS_AS( Cover::from_text( "" ), format_error );
  CHECK_THROWS_AS( Cover::from_text( "A 1B\n11\n" ), format_error );
}

TEST_CASE( "SOI examples" )
{
  // minterms 100 and 111
  auto const soi = soi_from_tt( table_of_onset( { 4u, 7u }, 3 ) );
  CHECK_FALSE( soi.degenerate );
  CHECK( format( soi.expr ) == "A @ B @ C | A @ !B @ !C" );

  CHECK( soi_from_tt( table_of_onset( { 3u }, 3 ) ).expr == parse( "!A @ !B @ !C" ) );

  auto const zero = soi_from_tt( table_of( 0u, 2 ) );
  CHECK( zero.expr == constant( false ) );
  CHECK( zero.degenerate );

  // f == 1 lists every minterm
  auto const one = soi_from_tt( table_of( 0xFu, 2 ) );
  CHECK( one.expr.kind() == Kind::disjunction );
  CHECK( one.expr.arity() == 4u );
  CHECK( format( one.expr ) == "!A @ B | !A @ !B | A @ B | A @ !B" );

  // single-variable products stay bare literals
  CHECK( soi_from_tt( TruthTable( { "A" }, std::string_view( "10" ) ) ).expr == parse( "!A" ) );
  CHECK_THROWS_AS( soi_from_tt( TruthTable( {}, std::string_view( "1" ) ) ), domain_error );
}

TEST_CASE( "NOI examples" )
{
  CHECK( noi_from_tt( table_of_onset( { 7u }, 3 ) ).expr == parse( "!(A -> B -> !C)" ) );
  // minterms 010 and 110
  CHECK( format( noi_from_tt( table_of_onset( { 2u, 6u }, 3 ) ).expr ) == "!((!A -> B -> C) & (A -> B -> C))" );

  auto const carry = noi_from_tt( table_of_onset( { 3u, 5u, 6u, 7u }, 3 ) );
  CHECK( carry.expr.operand( 0 ).arity() == 4u );
  CHECK( oracle::table( carry.expr, oracle::names( 3 ) ) == table_of_onset( { 3u, 5u, 6u, 7u }, 3 ).bits() );

  auto const one = noi_from_tt( table_of( 0xFu, 2 ) );
  CHECK( one.expr == constant( true ) );
  CHECK( one.degenerate );
  auto const zero = noi_from_tt( table_of( 0u, 2 ) );
  CHECK( zero.expr == constant( false ) );
  CHECK( zero.degenerate );
}

TEST_CASE( "SOI and NOI reproduce every function up to three variables" )
{
  for ( std::size_t n = 1; n <= 3; ++n )
  {
    auto const vars = oracle::names( n );
    for ( std::uint64_t f = 0; f < ( std::uint64_t{ 1 } << ( std::size_t{ 1 } << n ) ); ++f )
    {
      auto const t = table_of( f, n );
      auto const soi = soi_from_tt( t ).expr;
      auto const noi = noi_from_tt( t ).expr;
      REQUIRE( oracle::table( soi, vars ) == t.bits() );
      REQUIRE( oracle::table( noi, vars ) == t.bits() );
      CHECK( is_soi( soi ) );
      CHECK( is_noi( noi ) );

      if ( soi.is_constant() || noi.is_constant() )
      {
        continue;
      }
      // every SOI term is one minterm, every NOI term the complement of one
      for ( auto const& term : outer_terms( soi, Kind::disjunction ) )
      {
        CHECK( count_ones( oracle::table( term, vars ) ) == 1u );
      }
      for ( auto const& term : noi_terms( noi ) )
      {
        CHECK( count_ones( oracle::table( negation( term ), vars ) ) == 1u );
      }
    }
  }
}

TEST_CASE( "SOI and NOI on random four-variable functions" )
{
  std::mt19937_64 rng( 31337u );
  auto const vars = oracle::names( 4 );
  for ( int i = 0; i < 1000; ++i )
  {
    auto const t = table_of( rng() & 0xFFFFu, 4 );
    CHECK( oracle::table( soi_from_tt( t ).expr, vars ) == t.bits() );
    CHECK( oracle::table( noi_from_tt( t ).expr, vars ) == t.bits() );
  }
}

TEST_CASE( "cover encoders" )
{
  std::vector<std::string> const vars{ "A", "B", "C" };
  CHECK( soi_term( Cube::from_string( "1-0" ), vars ) == parse( "A @ C" ) );
  CHECK( soi_term( Cube::from_string( "-0-" ), vars ) == parse( "!B" ) );
  CHECK( soi_term( Cube::from_string( "---" ), vars ) == constant( true ) );
  CHECK( noi_term( Cube::from_string( "11-" ), vars ) == parse( "A -> !B" ) );
  CHECK( noi_term( Cube::from_string( "--1" ), vars ) == parse( "!C" ) );
  CHECK( noi_term( Cube::from_string( "---" ), vars ) == constant( false ) );
  CHECK_THROWS_AS( soi_term( Cube::from_string( "11" ), vars ), domain_error );

  Cover const taut{ vars, { Cube::from_string( "---" ) } };
  CHECK( soi_from_cover( taut ) == constant( true ) );
  CHECK( noi_from_cover( taut ) == constant( true ) );
  Cover const empty{ vars, {} };
  CHECK( soi_from_cover( empty ) == constant( false ) );
  CHECK( noi_from_cover( empty ) == constant( false ) );
}

TEST_CASE( "shape predicates" )
{
  CHECK( is_soi( parse( "A @ B | C | !D @ E @ !F" ) ) );
  CHECK( is_soi( parse( "A" ) ) );
  CHECK( is_soi( parse( "0" ) ) );
  CHECK_FALSE( is_soi( parse( "A & B" ) ) );
  CHECK_FALSE( is_soi( parse( "A @ (B | C)" ) ) );
  CHECK_FALSE( is_soi( parse( "!!A" ) ) );
  CHECK( is_noi( parse( "!((A -> B) & !C & (D -> !E -> F))" ) ) );
  CHECK( is_noi( parse( "!A" ) ) );
  CHECK( is_noi( parse( "!(A -> B)" ) ) );
  CHECK_FALSE( is_noi( parse( "A -> B" ) ) );
  CHECK_FALSE( is_noi( parse( "!(A | B)" ) ) );
  CHECK_THROWS_AS( soi_terms( parse( "A & B" ) ), shape_error );
  CHECK_THROWS_AS( noi_terms( parse( "A" ) ), shape_error );
}

TEST_CASE( "SOI/NOI conversion" )
{
  CHECK( soi_to_noi( parse( "A @ B" ) ) == parse( "!(!B -> !A)" ) );
  CHECK( noi_to_soi( parse( "!(!B -> !A)" ) ) == parse( "A @ B" ) );
  CHECK( soi_to_noi( parse( "A" ) ) == parse( "!!A" ) );
  CHECK( soi_to_noi( constant( false ) ) == constant( false ) );
  CHECK_THROWS_AS( soi_to_noi( parse( "A & B" ) ), shape_error );
  CHECK_THROWS_AS( noi_to_soi( parse( "A @ B" ) ), shape_error );

  auto const two = parse( "A @ B @ C | A @ !B @ !C" );
  auto const noi = soi_to_noi( two );
  CHECK( noi == parse( "!((!C -> !B -> !A) & (C -> B -> !A))" ) );
  CHECK( oracle::table( noi, oracle::names( 3 ) ) == oracle::table( two, oracle::names( 3 ) ) );
}

TEST_CASE( "conversion round trips on random SOI expressions" )
{
  std::mt19937 rng( 8u );
  auto const vars = oracle::names( 4 );
  std::uniform_int_distribution<int> var( 0, 3 );
  std::uniform_int_distribution<int> coin( 0, 1 );
  std::uniform_int_distribution<int> len( 1, 4 );
  for ( int i = 0; i < 500; ++i )
  {
    std::vector<Expression> terms;
    auto const m = len( rng );
    for ( int t = 0; t < m; ++t )
    {
      std::vector<Expression> lits;
      auto const k = len( rng );
      for ( int j = 0; j < k; ++j )
      {
        auto x = variable( vars[static_cast<std::size_t>( var( rng ) )] );
        lits.push_back( coin( rng ) ? negation( x ) : x );
      }
      terms.push_back( k == 1 ? lits.front() : iand_chain( lits ) );
    }
    auto const soi = m == 1 ? terms.front() : disjunction( terms );
    REQUIRE( is_soi( soi ) );
    auto const noi = soi_to_noi( soi );
    REQUIRE( is_noi( noi ) );
    CHECK( oracle::table( noi, vars ) == oracle::table( soi, vars ) );
    CHECK( noi_to_soi( noi ) == soi );
  }
}

TEST_CASE( "IOS and ION examples" )
{
  // ON-set {100}
  auto const ios = ios_from_tt( table_of_onset( { 4u }, 3 ) );
  REQUIRE( std::holds_alternative<Expression>( ios ) );
  CHECK( format( std::get<Expression>( ios ) ) == "(A | B | C) @ (!A | B | C)" );

  // OFF-set {011}
  std::vector<bool> bits( 8, true );
  bits[3] = false;
  auto const ion = ion_from_tt( TruthTable( oracle::names( 3 ), bits ) );
  REQUIRE( std::holds_alternative<Expression>( ion ) );
  CHECK( format( std::get<Expression>( ion ) ) == "!(A & B & C) -> !(!A & B & C)" );

  CHECK( std::holds_alternative<Unsupported>( ios_from_tt( table_of_onset( { 4u, 7u }, 3 ) ) ) );
  CHECK( std::holds_alternative<Unsupported>( ios_from_tt( table_of( 0u, 3 ) ) ) );
  std::vector<bool> two_off( 8, true );
  two_off[0] = two_off[7] = false;
  CHECK( std::holds_alternative<Unsupported>( ion_from_tt( TruthTable( oracle::names( 3 ), two_off ) ) ) );

  CHECK( std::holds_alternative<Unsupported>( ion_from_tt( table_of( 0xFFu, 3 ) ) ) );
}

TEST_CASE( "IOS/ION support matches brute-force representability up to three variables" )
{
  for ( std::size_t n = 1; n <= 3; ++n )
  {
    auto const vars = oracle::names( n );
    auto const rows = std::uint32_t{ 1 } << n;
    // every function expressible as S1 @ S2 / N1 -> N2 over full-support operands
    std::set<std::vector<bool>> ios_reach;
    std::set<std::vector<bool>> ion_reach;
    for ( std::uint32_t p = 0; p < rows; ++p )
    {
      for ( std::uint32_t q = 0; q < rows; ++q )
      {
        ios_reach.insert( oracle::table( iand_chain( { maxterm_sum( p, vars ), maxterm_sum( q, vars ) } ), vars ) );
        ion_reach.insert( oracle::table( imply_chain( { minterm_nand( p, vars ), minterm_nand( q, vars ) } ), vars ) );
      }
    }
    for ( std::uint64_t f = 0; f < ( std::uint64_t{ 1 } << rows ); ++f )
    {
      auto const t = table_of( f, n );
      auto const ones = count_ones( t.bits() );

      auto const ios = ios_from_tt( t );
      bool const ios_ok = std::holds_alternative<Expression>( ios );
      CHECK( ios_ok == ( ones == 1u ) );
      if ( ios_ok )
      {
        CHECK( oracle::table( std::get<Expression>( ios ), vars ) == t.bits() );
      }
      // the only reachable function left out is the constant 0 (S @ S)
      CHECK( ( ios_reach.count( t.bits() ) == 1u ) == ( ones == 1u || ones == 0u ) );

      auto const ion = ion_from_tt( t );
      bool const ion_ok = std::holds_alternative<Expression>( ion );
      CHECK( ion_ok == ( ones + 1u == rows ) );
      if ( ion_ok )
      {
        CHECK( oracle::table( std::get<Expression>( ion ), vars ) == t.bits() );
      }
      // likewise the constant 1 (N -> N)
      CHECK( ( ion_reach.count( t.bits() ) == 1u ) == ( ion_ok || ones == rows ) );
    }
  }
}

TEST_CASE( "full-support building blocks" )
{
  auto const vars = oracle::names( 3 );
  for ( std::uint32_t r = 0; r < 8u; ++r )
  {
    auto const s = oracle::table( maxterm_sum( r, vars ), vars );
    auto const n = oracle::table( minterm_nand( r, vars ), vars );
    for ( std::uint32_t x = 0; x < 8u; ++x )
    {
      CHECK( s[x] == ( x != r ) );
      CHECK( n[x] == ( x != r ) );
    }
  }
  CHECK( make_ios( { parse( "A | B" ), parse( "!A" ) } ) == parse( "(A | B) @ !A" ) );
  CHECK_THROWS_AS( make_ios( { parse( "A & B" ), parse( "A" ) } ), shape_error );
  CHECK( make_ion( { parse( "!(A & B)" ), parse( "!A" ) } ) == parse( "!(A & B) -> !A" ) );
  CHECK_THROWS_AS( make_ion( { parse( "A | B" ), parse( "!A" ) } ), shape_error );
}
