#include <doctest.h>

#include "oracle.hpp"

#include <asym/canon.hpp>
#include <asym/error.hpp>
#include <asym/memristor.hpp>
#include <asym/minimize.hpp>
#include <asym/parse.hpp>

#include <fstream>
#include <sstream>

using namespace asym;

namespace
{

std::string golden( const std::string& name )
{
  std::ifstream in( std::string( ASYM_GOLDEN_DIR ) + "/" + name );
  REQUIRE( in );
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/* Reference device model: registers start at 0, inputs are loaded, then
   each step is applied literally. */
std::vector<std::vector<bool>> reference_trace( const ImplyProgram& p, const oracle::Env& env )
{
  std::vector<bool> s( p.registers, false );
  for ( auto const& [name, reg] : p.inputs )
  {
    s[reg] = env.at( name );
  }
  std::vector<std::vector<bool>> out;
  for ( auto const& step : p.steps )
  {
    if ( auto const* r = std::get_if<Reset>( &step ) )
    {
      s[r->target] = false;
    }
    else
    {
      auto const& i = std::get<Imply>( step );
      s[i.target] = !s[i.cond] || s[i.target];
    }
    out.push_back( s );
  }
  return out;
}

Assignment assignment_of( const oracle::Env& env )
{
  Assignment a;
  for ( auto const& [k, v] : env )
  {
    a.set( k, v );
  }
  return a;
}

/* Checks program output against the oracle on every row, and that no step
   writes an input register. */
void check_program( const ImplyProgram& p, const Expression& e, const std::vector<std::string>& vars )
{
  CHECK_NOTHROW( validate( p ) );
  auto const expected = oracle::table( e, vars );
  for ( std::uint64_t r = 0; r < expected.size(); ++r )
  {
    auto const env = oracle::env_of_row( vars, r );
    auto const trace = reference_trace( p, env );
    bool const out = trace.empty() ? false : trace.back()[p.output];
    REQUIRE_MESSAGE( out == expected[r], format( e ) );
  }
  for ( auto const& step : p.steps )
  {
    auto const target = std::visit( []( auto const& s ) { return s.target; }, step );
    for ( auto const& [name, reg] : p.inputs )
    {
      CHECK( target != reg );
    }
  }
}

} // namespace

TEST_CASE( "step semantics" )
{
  CHECK( step_semantics( { true, true }, Reset{ 1 } ) == ArrayState{ true, false } );
  // t <- !c | t
  CHECK( step_semantics( { false, false }, Imply{ 0, 1 } ) == ArrayState{ false, true } );
  CHECK( step_semantics( { true, false }, Imply{ 0, 1 } ) == ArrayState{ true, false } );
  CHECK( step_semantics( { true, true }, Imply{ 0, 1 } ) == ArrayState{ true, true } );
  CHECK( step_semantics( { false, true }, Imply{ 0, 1 } ) == ArrayState{ false, true } );
  CHECK_THROWS_AS( step_semantics( { false }, Reset{ 1 } ), range_error );
  CHECK_THROWS_AS( step_semantics( { false, false }, Imply{ 2, 0 } ), range_error );
  CHECK_THROWS_AS( step_semantics( { false, false }, Imply{ 1, 1 } ), domain_error );
}

TEST_CASE( "three-step NAND" )
{
  auto const p = compile_nand( "p", "q" );
  CHECK( p.registers == 3u );
  CHECK( p.output == 2u );
  CHECK( p.steps == std::vector<ImplyStep>{ Reset{ 2 }, Imply{ 0, 2 }, Imply{ 1, 2 } } );
  CHECK( step_count( p ) == StepCount{ 3, 1, 2, 3 } );
  CHECK( to_text( p ) == golden( "nand.prog" ) );
  CHECK( program_table( p ).to_string() == "1110" );
  CHECK_THROWS_AS( compile_nand( "p", "q", 1 ), domain_error );

  // per-step register states for every (p, q), s = r2
  struct Row
  {
    bool p, q;
    std::vector<bool> s_after;
  };
  for ( auto const& row : { Row{ false, false, { false, true, true } }, Row{ false, true, { false, true, true } },
                            Row{ true, false, { false, false, true } }, Row{ true, true, { false, false, false } } } )
  {
    oracle::Env const env{ { "p", row.p }, { "q", row.q } };
    auto const sim = simulate( p, assignment_of( env ) );
    auto const ref = reference_trace( p, env );
    REQUIRE( sim.trace.size() == 3u );
    for ( std::size_t i = 0; i < 3; ++i )
    {
      CHECK( sim.trace[i] == ref[i] );
      CHECK( sim.trace[i][2] == row.s_after[i] );
      CHECK( sim.trace[i][0] == row.p );
      CHECK( sim.trace[i][1] == row.q );
    }
    CHECK( sim.output == !( row.p && row.q ) );
    CHECK( sim.final_state == ref.back() );
  }
}

TEST_CASE( "NOI lowering of a two-input NAND reduces to the three-step program" )
{
  auto const e = parse( "!(p & q)" );
  auto const p = compile_noi( e );
  CHECK( p.steps == compile_nand( "p", "q" ).steps );
  CHECK( p.inputs == compile_nand( "p", "q" ).inputs );
  CHECK( step_count( p ).total == 3u );

  auto const raw = compile_noi( e, { .peephole = false } );
  CHECK( step_count( raw ).total == 11u );
  check_program( raw, e, { "p", "q" } );
}

TEST_CASE( "reduced full-adder carry" )
{
  auto const e = parse( "!((A -> !B) & (A -> !C) & (B -> !C))" );
  auto const p = compile_noi( e );
  CHECK( to_text( p ) == golden( "reduced_carry.prog" ) );
  CHECK( step_count( p ) == StepCount{ 13, 4, 9, 5 } );
  CHECK( program_table( p ).to_string() == "00010111" );
  check_program( p, e, { "A", "B", "C" } );
  auto const sim = simulate( p, assignment_of( { { "A", true }, { "B", true }, { "C", false } } ) );
  CHECK( sim.output );

  // the canonical four-term form costs more
  TruthTable const carry( oracle::names( 3 ), std::string_view( "00010111" ) );
  auto const canonical = compile_noi( noi_from_tt( carry ).expr );
  CHECK( step_count( canonical ).total > step_count( p ).total );
  CHECK( program_table( canonical ) == carry );
}

TEST_CASE( "every three-variable function compiles correctly, with and without peephole" )
{
  auto const vars = oracle::names( 3 );
  for ( std::uint64_t f = 0; f < 256u; ++f )
  {
    TruthTable const t( vars, oracle::bits_of_function( f, 3 ) );
    for ( auto const& e : { noi_from_tt( t ).expr, minimized_noi( t ) } )
    {
      auto const opt = compile_noi( e );
      auto const raw = compile_noi( e, { .peephole = false } );
      check_program( opt, e, variables( e ) );
      check_program( raw, e, variables( e ) );
      CHECK( program_table( opt ) == program_table( raw ) );
      CHECK( step_count( opt ).total <= step_count( raw ).total );
    }
  }
}

TEST_CASE( "IMPLY never clears a bit" )
{
  std::mt19937_64 rng( 31u );
  for ( int i = 0; i < 200; ++i )
  {
    TruthTable const t( oracle::names( 4 ), oracle::bits_of_function( rng() & 0xFFFFu, 4 ) );
    auto const p = compile_noi( minimized_noi( t ) );
    auto const row = rng() % 16u;
    auto const sim = simulate( p, t.assignment( row ) );
    auto prev = sim.trace.empty() ? ArrayState{} : sim.trace.front();
    for ( std::size_t k = 1; k < p.steps.size(); ++k )
    {
      auto const& cur = sim.trace[k];
      auto const target = std::visit( []( auto const& s ) { return s.target; }, p.steps[k] );
      for ( std::size_t r = 0; r < cur.size(); ++r )
      {
        if ( r != target )
        {
          CHECK( cur[r] == prev[r] );
        }
        else if ( std::holds_alternative<Imply>( p.steps[k] ) )
        {
          CHECK( ( !prev[r] || cur[r] ) );
        }
        else
        {
          CHECK_FALSE( cur[r] );
        }
      }
      prev = cur;
    }
    CHECK( sim.output == t[row] );
  }
}

TEST_CASE( "constants and literals" )
{
  auto const zero = compile_noi( constant( false ) );
  CHECK( program_table( zero ).to_string() == "0" );
  auto const one = compile_noi( constant( true ) );
  CHECK( program_table( one ).to_string() == "1" );
  check_program( compile_noi( parse( "!A" ) ), parse( "!A" ), { "A" } );
  check_program( compile_noi( parse( "!!A" ) ), parse( "!!A" ), { "A" } );
  CHECK_THROWS_AS( compile_noi( parse( "A" ) ), shape_error );
}

TEST_CASE( "program text round trip and parse errors" )
{
  auto const p = compile_noi( parse( "!((A -> !B) & (A -> !C) & (B -> !C))" ) );
  auto const back = parse_program( to_text( p ) );
  CHECK( to_text( back ) == to_text( p ) );
  CHECK( back.steps == p.steps );
  CHECK( to_text( ImplyStep{ Imply{ 0, 4 } } ) == "IMPLY r0 r4" );
  CHECK( to_text( ImplyStep{ Reset{ 3 } } ) == "RESET r3" );

  CHECK_THROWS_AS( parse_program( "registers x\n" ), format_error );
  CHECK_THROWS_AS( parse_program( "registers 2\noutput r1\nNAND r0 r1\n" ), format_error );
  CHECK_THROWS_AS( parse_program( "registers 2\noutput r1\nIMPLY r0\n" ), format_error );
  CHECK_THROWS_AS( parse_program( "registers 2\noutput q1\n" ), format_error );
}

TEST_CASE( "validation" )
{
  ImplyProgram p;
  p.registers = 2;
  p.inputs = { { "A", 0 } };
  p.output = 1;
  p.steps = { Reset{ 0 } };
  CHECK_THROWS_AS( validate( p ), domain_error ); // writes an input
  p.steps = { Imply{ 1, 1 } };
  CHECK_THROWS_AS( validate( p ), domain_error );
  p.steps = { Imply{ 0, 2 } };
  CHECK_THROWS_AS( validate( p ), domain_error );
  p.steps = {};
  p.inputs = { { "A", 0 }, { "B", 0 } };
  CHECK_THROWS_AS( validate( p ), domain_error );
  p.inputs = { { "A", 0 } };
  p.output = 5;
  CHECK_THROWS_AS( validate( p ), domain_error );
}

TEST_CASE( "compile and simulate errors" )
{
  CHECK_THROWS_AS( compile_noi( parse( "A & B" ) ), shape_error );
  CHECK_THROWS_AS( compile_noi( parse( "A @ B" ) ), shape_error );

  std::vector<Expression> terms;
  for ( int i = 0; i < 17; ++i )
  {
    terms.push_back( imply_chain( { variable( "x" + std::to_string( i ) ), negation( variable( "y" ) ) } ) );
  }
  CHECK_THROWS_AS( compile_noi( negation( conjunction( terms ) ) ), capacity_error );

  ImplyProgram empty;
  empty.registers = 1;
  CHECK( step_count( empty ) == StepCount{ 0, 0, 0, 1 } );

  auto const nand = compile_nand( "p", "q" );
  CHECK_THROWS_AS( simulate( nand, assignment_of( { { "p", true } } ) ), eval_error );
}
