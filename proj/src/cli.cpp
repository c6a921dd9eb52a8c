#include <asym/cli.hpp>

#include <asym/canon.hpp>
#include <asym/error.hpp>
#include <asym/laws.hpp>
#include <asym/memristor.hpp>
#include <asym/minimize.hpp>
#include <asym/parse.hpp>
#include <asym/semantics.hpp>
#include <asym/spindiode.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace asym::cli
{

namespace
{

using json = nlohmann::ordered_json;

class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_vars( const std::string& text )
{
  std::vector<std::string> out;
  std::string cur;
  for ( char c : text + " " )
  {
    if ( c == ',' || c == ' ' || c == '\t' )
    {
      if ( !cur.empty() )
      {
        out.push_back( cur );
        cur.clear();
      }
    }
    else
    {
      cur += c;
    }
  }
  return out;
}

TruthTable read_table_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw format_error( "cli", "cannot read table file '" + path + "'" );
  }
  std::vector<std::string> lines;
  for ( std::string line; std::getline( in, line ); )
  {
    while ( !line.empty() && ( line.back() == '\r' || line.back() == ' ' || line.back() == '\t' ) )
    {
      line.pop_back();
    }
    if ( !line.empty() )
    {
      lines.push_back( line );
    }
  }
  if ( lines.size() != 2u )
  {
    throw format_error( "cli", "table file '" + path + "' must have a variable line and a bit line" );
  }
  auto vars = split_vars( lines[0] );
  for ( auto const& v : vars )
  {
    if ( !is_valid_identifier( v ) )
    {
      throw format_error( "cli", "invalid variable name '" + v + "' in '" + path + "'" );
    }
  }
  return TruthTable( std::move( vars ), std::string_view( lines[1] ) );
}

struct Input
{
  std::optional<Expression> expr;
  TruthTable table;
};

Input read_input( const CommandRequest& r )
{
  auto const sources = ( r.table_file ? 1u : 0u ) + r.expressions.size();
  if ( sources != 1u )
  {
    throw usage_error( r.subcommand + " takes exactly one input: an expression or --table FILE" );
  }
  if ( r.table_file )
  {
    auto t = read_table_file( *r.table_file );
    if ( r.vars && *r.vars != t.vars() )
    {
      throw domain_error( "cli", "--vars does not match the table file header" );
    }
    return { std::nullopt, std::move( t ) };
  }
  auto e = parse( r.expressions.front() );
  auto t = truth_table( e, r.vars );
  return { std::move( e ), std::move( t ) };
}

Expression require_expression( const CommandRequest& r, const Input& in )
{
  if ( !in.expr )
  {
    throw usage_error( r.subcommand + " needs an expression, not a table file" );
  }
  return *in.expr;
}

json assignment_json( const Assignment& a )
{
  json j = json::object();
  for ( auto const& [name, bit] : a.entries() )
  {
    j[name] = bit ? 1 : 0;
  }
  return j;
}

json table_json( const TruthTable& t )
{
  return { { "vars", t.vars() }, { "table", t.to_string() } };
}

std::string table_text( const TruthTable& t )
{
  std::string s;
  for ( std::size_t i = 0; i < t.num_vars(); ++i )
  {
    s += ( i ? " " : "" ) + t.vars()[i];
  }
  return s + "\n" + t.to_string() + "\n";
}

class Runner
{
public:
  explicit Runner( const CommandRequest& r ) : r_( r ) {}

  CommandResult operator()()
  {
    auto const& c = r_.subcommand;
    if ( c == "table" )
    {
      table();
    }
    else if ( c == "laws" )
    {
      laws();
    }
    else if ( c == "canon" )
    {
      canon();
    }
    else if ( c == "convert" )
    {
      convert();
    }
    else if ( c == "minimize" )
    {
      minimize();
    }
    else if ( c == "compile" )
    {
      compile();
    }
    else if ( c == "simulate" )
    {
      simulate_cmd();
    }
    else if ( c == "verify" )
    {
      verify();
    }
    else if ( c == "dual" || c == "dmdual" )
    {
      duals();
    }
    else
    {
      throw usage_error( "unknown subcommand '" + c + "'" );
    }
    return result_;
  }

private:
  const CommandRequest& r_;
  CommandResult result_;

  bool json_mode() const { return r_.format == OutputFormat::json; }

  void emit( const std::string& text, json record )
  {
    if ( json_mode() )
    {
      result_.out += record.dump() + "\n";
    }
    else
    {
      result_.out += text;
    }
  }

  void table()
  {
    auto const in = read_input( r_ );
    json j = { { "command", "table" } };
    j.update( table_json( in.table ) );
    emit( table_text( in.table ), j );
  }

  void laws()
  {
    if ( r_.table_file || !r_.expressions.empty() )
    {
      throw usage_error( "laws takes no input" );
    }
    std::size_t proven = 0;
    std::size_t refuted = 0;
    auto line = []( const RuleReport& rep ) {
      auto s = to_string( rep.status ) + " " + rep.name + " (" + std::to_string( rep.rows ) + " rows) " + rep.citation;
      if ( rep.counterexample )
      {
        s += " counterexample " + rep.counterexample->to_string();
      }
      return s;
    };
    for ( auto const& rule : catalog() )
    {
      auto const rep = verify_rule( rule );
      ( rep.status == RuleStatus::proven ? proven : refuted ) += 1u;
      json j = { { "command", "laws" }, { "kind", "rule" } };
      j.update( json::parse( to_json_line( rep ) ) );
      emit( line( rep ) + "\n", j );
    }
    std::size_t unexpected = 0;
    for ( auto const& f : fixtures() )
    {
      auto const rep = verify_fixture( f );
      bool const as_expected = rep.status == f.expected;
      unexpected += as_expected ? 0u : 1u;
      json j = { { "command", "laws" }, { "kind", "fixture" } };
      j.update( json::parse( to_json_line( rep ) ) );
      j["expected"] = to_string( f.expected );
      emit( "fixture " + line( rep ) + ( as_expected ? " [as expected]" : " [UNEXPECTED]" ) + "\n", j );
    }
    json summary = { { "command", "laws" },
                     { "kind", "summary" },
                     { "proven", proven },
                     { "refuted", refuted },
                     { "fixtures_unexpected", unexpected } };
    emit( std::to_string( proven ) + " proven, " + std::to_string( refuted ) + " refuted, " + std::to_string( unexpected ) +
              " unexpected fixture outcomes\n",
          summary );
    result_.exit_code = ( refuted || unexpected ) ? 1 : 0;
  }

  void emit_expr( const std::string& command, const Expression& e, json extra = json::object() )
  {
    json j = { { "command", command }, { "status", "ok" }, { "expr", format( e ) } };
    j.update( extra );
    emit( format( e ) + "\n", j );
  }

  void emit_unsupported( const std::string& command, const std::string& reason )
  {
    json j = { { "command", command }, { "status", "unsupported" }, { "reason", reason } };
    emit( "unsupported: " + reason + "\n", j );
    result_.exit_code = 1;
  }

  void canon()
  {
    auto const in = read_input( r_ );
    auto const& f = r_.form;
    if ( f == "soi" || f == "noi" )
    {
      auto const c = f == "soi" ? soi_from_tt( in.table ) : noi_from_tt( in.table );
      emit_expr( "canon", c.expr, { { "form", f }, { "degenerate", c.degenerate } } );
      return;
    }
    auto const res = f == "ios" ? ios_from_tt( in.table ) : ion_from_tt( in.table );
    if ( auto const* u = std::get_if<Unsupported>( &res ) )
    {
      emit_unsupported( "canon", u->reason );
      return;
    }
    emit_expr( "canon", std::get<Expression>( res ), { { "form", f } } );
  }

  void convert()
  {
    auto const in = read_input( r_ );
    auto const e = require_expression( r_, in );
    auto const out = r_.to == "noi" ? soi_to_noi( e ) : noi_to_soi( e );
    emit_expr( "convert", out, { { "form", r_.to } } );
  }

  void minimize()
  {
    auto const in = read_input( r_ );
    auto const cover = minimized_cover( in.table );
    auto const e = r_.form == "soi" ? soi_from_cover( cover ) : noi_from_cover( cover );
    json cubes = json::array();
    for ( auto const& c : cover.cubes )
    {
      cubes.push_back( c.to_string() );
    }
    json j = { { "command", "minimize" }, { "status", "ok" }, { "form", r_.form }, { "expr", format( e ) }, { "cover", cubes } };
    emit( r_.cover ? cover.to_text() : format( e ) + "\n", j );
  }

  // expression in the target's shape verbatim, anything else minimized first
  Expression compile_source( const Input& in, bool memristor ) const
  {
    if ( in.expr && ( memristor ? is_noi( *in.expr ) : is_soi( *in.expr ) ) )
    {
      return *in.expr;
    }
    return memristor ? minimized_noi( in.table ) : minimized_soi( in.table );
  }

  void check_target() const
  {
    if ( r_.target != "memristor" && r_.target != "spindiode" )
    {
      throw usage_error( "--target must be memristor or spindiode" );
    }
  }

  void compile()
  {
    check_target();
    auto const in = read_input( r_ );
    if ( r_.target == "memristor" )
    {
      auto const src = compile_source( in, true );
      auto const p = compile_noi( src );
      auto const c = step_count( p );
      json j = { { "command", "compile" },
                 { "target", "memristor" },
                 { "expr", format( src ) },
                 { "steps", { { "total", c.total }, { "resets", c.resets }, { "implies", c.implies }, { "registers", c.registers } } },
                 { "program", to_text( p ) } };
      emit( to_text( p ), j );
      return;
    }
    auto const src = compile_source( in, false );
    auto const n = compile_soi( src );
    auto const s = netlist_stats( n );
    json j = { { "command", "compile" },
               { "target", "spindiode" },
               { "expr", format( src ) },
               { "gates", { { "total", s.gates }, { "depth", s.depth }, { "iand", s.iand }, { "or", s.or_gates } } },
               { "netlist", to_text( n ) } };
    emit( to_text( n ), j );
  }

  Assignment input_bits( const std::vector<std::string>& names ) const
  {
    if ( r_.inputs.size() != names.size() )
    {
      throw usage_error( "--inputs needs " + std::to_string( names.size() ) + " bits, got " + std::to_string( r_.inputs.size() ) );
    }
    Assignment a;
    for ( std::size_t i = 0; i < names.size(); ++i )
    {
      auto const c = r_.inputs[i];
      if ( c != '0' && c != '1' )
      {
        throw usage_error( "--inputs must consist of 0 and 1" );
      }
      a.set( names[i], c == '1' );
    }
    return a;
  }

  void simulate_cmd()
  {
    check_target();
    auto const in = read_input( r_ );
    if ( r_.target == "memristor" )
    {
      auto const p = compile_noi( compile_source( in, true ) );
      std::vector<std::string> names;
      for ( auto const& b : p.inputs )
      {
        names.push_back( b.first );
      }
      auto const a = input_bits( names );
      auto const sim = asym::simulate( p, a );
      std::string text;
      json trace = json::array();
      for ( std::size_t i = 0; i < p.steps.size(); ++i )
      {
        std::string state;
        for ( bool b : sim.trace[i] )
        {
          state += b ? '1' : '0';
        }
        text += to_text( p.steps[i] ) + " -> " + state + "\n";
        trace.push_back( { { "step", to_text( p.steps[i] ) }, { "state", state } } );
      }
      text += "output " + std::string( sim.output ? "1" : "0" ) + "\n";
      json j = { { "command", "simulate" },
                 { "target", "memristor" },
                 { "inputs", assignment_json( a ) },
                 { "output", sim.output ? 1 : 0 },
                 { "trace", trace } };
      emit( text, j );
      return;
    }
    auto const n = compile_soi( compile_source( in, false ) );
    auto const a = input_bits( n.inputs );
    bool const out = simulate_netlist( n, a );
    json j = { { "command", "simulate" }, { "target", "spindiode" }, { "inputs", assignment_json( a ) }, { "output", out ? 1 : 0 } };
    emit( "output " + std::string( out ? "1" : "0" ) + "\n", j );
  }

  void verify()
  {
    if ( r_.table_file || r_.expressions.size() != 2u )
    {
      throw usage_error( "verify takes exactly two expressions" );
    }
    auto const e1 = parse( r_.expressions[0] );
    auto const e2 = parse( r_.expressions[1] );
    auto const v = r_.vars ? equivalent( e1, e2, *r_.vars ) : equivalent( e1, e2 );
    json j = { { "command", "verify" }, { "status", v.equal ? "equivalent" : "inequivalent" } };
    if ( v.equal )
    {
      emit( "equivalent\n", j );
      return;
    }
    j["counterexample"] = assignment_json( *v.counterexample );
    emit( "not equivalent, counterexample " + v.counterexample->to_string() + "\n", j );
    result_.exit_code = 1;
  }

  void duals()
  {
    auto const in = read_input( r_ );
    bool const dm = r_.subcommand == "dmdual";
    if ( in.expr )
    {
      emit_expr( r_.subcommand, dm ? demorgan_dual_expr( *in.expr ) : dual( *in.expr ) );
      return;
    }
    auto const t = dm ? demorgan_dual_tt( in.table ) : classical_dual_tt( in.table );
    json j = { { "command", r_.subcommand } };
    j.update( table_json( t ) );
    emit( table_text( t ), j );
  }
};

} // namespace

std::variant<CommandRequest, CommandResult> parse_command_line( const std::vector<std::string>& args )
{
  CommandRequest req;
  std::string format = "text";
  std::string vars;

  CLI::App app{ "Synthesis toolchain for IAND/IMPLY logic", "asym" };
  app.require_subcommand( 1 );

  auto add_common = [&]( CLI::App* sub, bool with_input ) {
    sub->add_option( "--format", format, "Output format" )->check( CLI::IsMember( { "text", "json" } ) );
    if ( with_input )
    {
      sub->add_option( "--table", req.table_file, "Truth-table file: variable line, then 2^n bits" );
      sub->add_option( "--vars", vars, "Variable order, e.g. A,B,C" );
    }
  };
  auto expression_arg = [&]( CLI::App* sub ) { sub->add_option( "expr", req.expressions, "Expression" ); };

  auto* table = app.add_subcommand( "table", "Print a truth table" );
  add_common( table, true );
  expression_arg( table );

  auto* laws = app.add_subcommand( "laws", "Verify the law catalog exhaustively" );
  add_common( laws, false );

  auto* canon = app.add_subcommand( "canon", "Canonical form of a function" );
  add_common( canon, true );
  expression_arg( canon );
  canon->add_option( "--form", req.form, "soi, noi, ios or ion" )->required()->check( CLI::IsMember( { "soi", "noi", "ios", "ion" } ) );

  auto* convert = app.add_subcommand( "convert", "Convert between SOI and NOI" );
  add_common( convert, true );
  expression_arg( convert );
  convert->add_option( "--to", req.to, "noi or soi" )->required()->check( CLI::IsMember( { "soi", "noi" } ) );

  auto* minimize = app.add_subcommand( "minimize", "Two-level minimization" );
  add_common( minimize, true );
  expression_arg( minimize );
  minimize->add_option( "--form", req.form, "soi or noi" )->required()->check( CLI::IsMember( { "soi", "noi" } ) );
  minimize->add_flag( "--cover", req.cover, "Print the cube cover instead of the expression" );

  auto* compile = app.add_subcommand( "compile", "Compile to an IMPLY program or a gate netlist" );
  add_common( compile, true );
  expression_arg( compile );
  compile->add_option( "--target", req.target, "memristor or spindiode" )->required()->check( CLI::IsMember( { "memristor", "spindiode" } ) );

  auto* simulate = app.add_subcommand( "simulate", "Compile and simulate on one input vector" );
  add_common( simulate, true );
  expression_arg( simulate );
  simulate->add_option( "--target", req.target, "memristor or spindiode" )->required()->check( CLI::IsMember( { "memristor", "spindiode" } ) );
  simulate->add_option( "--inputs", req.inputs, "Input bits in binding order" )->required();

  auto* verify = app.add_subcommand( "verify", "Check two expressions for equivalence" );
  add_common( verify, false );
  verify->add_option( "--vars", vars, "Variable order for the counterexample search" );
  verify->add_option( "exprs", req.expressions, "Two expressions" )->expected( 2 );

  auto* dual = app.add_subcommand( "dual", "Classical dual" );
  add_common( dual, true );
  expression_arg( dual );

  auto* dmdual = app.add_subcommand( "dmdual", "Asymmetric De Morgan dual" );
  add_common( dmdual, true );
  expression_arg( dmdual );

  std::vector<const char*> argv{ "asym" };
  for ( auto const& a : args )
  {
    argv.push_back( a.c_str() );
  }
  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( const CLI::ParseError& e )
  {
    std::ostringstream out;
    std::ostringstream err;
    auto const code = app.exit( e, out, err );
    return CommandResult{ code == 0 ? 0 : 2, out.str(), err.str() };
  }

  req.subcommand = app.get_subcommands().front()->get_name();
  req.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  if ( !vars.empty() )
  {
    req.vars = split_vars( vars );
  }
  return req;
}

CommandResult run( const CommandRequest& request )
{
  try
  {
    return Runner( request )();
  }
  catch ( const usage_error& e )
  {
    return { 2, {}, std::string( "usage: " ) + e.what() + "\n" };
  }
  catch ( const asym::error& e )
  {
    return { 2, {}, std::string( "error: " ) + e.what() + "\n" };
  }
  catch ( const std::exception& e )
  {
    return { 3, {}, std::string( "internal error: " ) + e.what() + "\n" };
  }
}

CommandResult main_entry( const std::vector<std::string>& args )
{
  auto parsed = parse_command_line( args );
  if ( auto const* done = std::get_if<CommandResult>( &parsed ) )
  {
    return *done;
  }
  return run( std::get<CommandRequest>( parsed ) );
}

} // namespace asym::cli
