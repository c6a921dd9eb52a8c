#include <asym/spindiode.hpp>

#include <asym/canon.hpp>
#include <asym/error.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace asym
{

Signal Signal::input( std::string name, bool complemented )
{
  return { complemented ? Source::input_complement : Source::input, std::move( name ), 0 };
}

Signal Signal::of_gate( std::size_t index )
{
  return { Source::gate, {}, index };
}

Signal Signal::constant( bool value )
{
  return { value ? Source::const1 : Source::const0, {}, 0 };
}

std::string Signal::to_string() const
{
  switch ( source )
  {
  case Source::input:
    return "in:" + name;
  case Source::input_complement:
    return "in:!" + name;
  case Source::gate:
    return "g" + std::to_string( gate );
  case Source::const0:
    return "const:0";
  case Source::const1:
    return "const:1";
  }
  return {};
}

Signal Signal::from_string( std::string_view text )
{
  if ( text == "const:0" || text == "const:1" )
  {
    return constant( text.back() == '1' );
  }
  if ( text.starts_with( "in:" ) )
  {
    auto rest = text.substr( 3 );
    bool const neg = rest.starts_with( "!" );
    if ( neg )
    {
      rest.remove_prefix( 1 );
    }
    if ( is_valid_identifier( rest ) )
    {
      return input( std::string( rest ), neg );
    }
  }
  else if ( text.size() >= 2u && text[0] == 'g' &&
            std::all_of( text.begin() + 1, text.end(), []( char c ) { return c >= '0' && c <= '9'; } ) &&
            text.size() < 10u )
  {
    return of_gate( std::stoul( std::string( text.substr( 1 ) ) ) );
  }
  throw format_error( "spindiode", "bad signal reference '" + std::string( text ) + "'" );
}

void validate( const Netlist& n )
{
  std::set<std::string> const names( n.inputs.begin(), n.inputs.end() );
  if ( names.size() != n.inputs.size() )
  {
    throw domain_error( "spindiode", "duplicate primary input" );
  }
  auto check = [&]( const Signal& s, std::size_t limit, const std::string& where ) {
    switch ( s.source )
    {
    case Signal::Source::input:
    case Signal::Source::input_complement:
      if ( !names.count( s.name ) )
      {
        throw domain_error( "spindiode", where + " reads unknown input '" + s.name + "'" );
      }
      break;
    case Signal::Source::gate:
      if ( s.gate >= limit )
      {
        throw domain_error( "spindiode", where + " reads g" + std::to_string( s.gate ) + " which is not an earlier gate" );
      }
      break;
    default:
      break;
    }
  };
  for ( std::size_t i = 0; i < n.gates.size(); ++i )
  {
    auto const where = "g" + std::to_string( i );
    check( n.gates[i].a, i, where );
    check( n.gates[i].b, i, where );
  }
  check( n.output, n.gates.size(), "output" );
}

namespace
{

class Emitter
{
public:
  Netlist net;

  Signal gate( GateKind kind, Signal a, Signal b )
  {
    net.gates.push_back( { kind, std::move( a ), std::move( b ) } );
    return Signal::of_gate( net.gates.size() - 1u );
  }

  static Signal atom( const Expression& x )
  {
    if ( x.is_constant() )
    {
      return Signal::constant( x.value() );
    }
    if ( x.is_variable() )
    {
      return Signal::input( x.name() );
    }
    return Signal::input( x.operands()[0].name(), true );
  }

  static bool is_const( const Signal& s, bool v )
  {
    return s.source == ( v ? Signal::Source::const1 : Signal::Source::const0 );
  }

  static Signal complement( const Signal& s )
  {
    switch ( s.source )
    {
    case Signal::Source::input:
      return Signal::input( s.name, true );
    case Signal::Source::input_complement:
      return Signal::input( s.name, false );
    case Signal::Source::const0:
      return Signal::constant( true );
    case Signal::Source::const1:
      return Signal::constant( false );
    default:
      throw domain_error( "spindiode", "gate outputs have no free complement" );
    }
  }

  // left fold, x @ 0 = x, x @ 1 = 0, 0 @ x = 0, 1 @ x = !x
  Signal term( const Expression& t )
  {
    if ( t.kind() != Kind::iand_chain )
    {
      return atom( t );
    }
    auto acc = atom( t.operands()[0] );
    for ( std::size_t j = 1; j < t.arity(); ++j )
    {
      auto const x = atom( t.operands()[j] );
      if ( is_const( x, false ) || is_const( acc, false ) )
      {
        continue;
      }
      if ( is_const( x, true ) )
      {
        acc = Signal::constant( false );
      }
      else if ( is_const( acc, true ) )
      {
        acc = complement( x );
      }
      else
      {
        acc = gate( GateKind::IAND, acc, x );
      }
    }
    return acc;
  }

  Signal or_tree( const std::vector<Signal>& s, std::size_t lo, std::size_t hi )
  {
    if ( hi - lo == 1u )
    {
      return s[lo];
    }
    auto const mid = lo + ( hi - lo + 1u ) / 2u;
    auto left = or_tree( s, lo, mid );
    auto right = or_tree( s, mid, hi );
    return gate( GateKind::OR, std::move( left ), std::move( right ) );
  }
};

} // namespace

Netlist compile_soi( const Expression& e )
{
  if ( !is_soi( e ) )
  {
    throw shape_error( "spindiode", "expression is not in SOI form: " + format( e ) );
  }
  Emitter em;
  em.net.inputs = variables( e );
  std::vector<Signal> terms;
  bool one = false;
  for ( auto const& t : soi_terms( e ) )
  {
    auto s = em.term( t );
    if ( Emitter::is_const( s, true ) )
    {
      one = true;
    }
    else if ( !Emitter::is_const( s, false ) )
    {
      terms.push_back( std::move( s ) );
    }
  }
  if ( one )
  {
    // x | 1 = 1: cascades already emitted are unreachable; drop them
    em.net.gates.clear();
    em.net.output = Signal::constant( true );
  }
  else if ( terms.empty() )
  {
    em.net.gates.clear();
    em.net.output = Signal::constant( false );
  }
  else
  {
    em.net.output = em.or_tree( terms, 0u, terms.size() );
  }
  validate( em.net );
  return em.net;
}

namespace
{

template<typename Word, typename InputFn>
Word evaluate( const Netlist& n, InputFn&& input_word )
{
  std::vector<Word> g( n.gates.size() );
  auto value = [&]( const Signal& s ) -> Word {
    switch ( s.source )
    {
    case Signal::Source::input:
      return input_word( s.name );
    case Signal::Source::input_complement:
      return ~input_word( s.name );
    case Signal::Source::gate:
      return g[s.gate];
    case Signal::Source::const0:
      return Word{ 0 };
    case Signal::Source::const1:
      return ~Word{ 0 };
    }
    return Word{ 0 };
  };
  for ( std::size_t i = 0; i < n.gates.size(); ++i )
  {
    auto const a = value( n.gates[i].a );
    auto const b = value( n.gates[i].b );
    g[i] = n.gates[i].kind == GateKind::OR ? ( a | b ) : ( a & ~b );
  }
  return value( n.output );
}

} // namespace

bool simulate_netlist( const Netlist& n, const Assignment& inputs )
{
  validate( n );
  for ( auto const& name : n.inputs )
  {
    if ( !inputs.get( name ) )
    {
      throw eval_error( "spindiode", "unbound input variable '" + name + "'" );
    }
  }
  auto const w = evaluate<std::uint8_t>( n, [&]( const std::string& name ) -> std::uint8_t {
    return *inputs.get( name ) ? 0xFFu : 0x00u;
  } );
  return w & 1u;
}

TruthTable netlist_table( const Netlist& n )
{
  validate( n );
  auto const k = n.inputs.size();
  if ( k > max_table_vars )
  {
    throw capacity_error( "spindiode", "too many inputs for a truth table" );
  }
  std::uint64_t const rows = std::uint64_t{ 1 } << k;
  std::vector<bool> bits( rows );
  for ( std::uint64_t base = 0; base < rows; base += 64u )
  {
    auto const word = evaluate<std::uint64_t>( n, [&]( const std::string& name ) {
      auto const i = static_cast<std::size_t>( std::find( n.inputs.begin(), n.inputs.end(), name ) - n.inputs.begin() );
      std::uint64_t w = 0u;
      for ( std::uint64_t r = 0; r < 64u && base + r < rows; ++r )
      {
        if ( ( ( base + r ) >> ( k - 1 - i ) ) & 1u )
        {
          w |= std::uint64_t{ 1 } << r;
        }
      }
      return w;
    } );
    for ( std::uint64_t r = 0; r < 64u && base + r < rows; ++r )
    {
      bits[base + r] = ( word >> r ) & 1u;
    }
  }
  return TruthTable( n.inputs, std::move( bits ) );
}

NetlistStats netlist_stats( const Netlist& n )
{
  validate( n );
  NetlistStats s;
  s.gates = n.gates.size();
  std::vector<std::size_t> depth( n.gates.size(), 0u );
  auto level = [&]( const Signal& x ) { return x.source == Signal::Source::gate ? depth[x.gate] : 0u; };
  for ( std::size_t i = 0; i < n.gates.size(); ++i )
  {
    auto const& g = n.gates[i];
    depth[i] = 1u + std::max( level( g.a ), level( g.b ) );
    ( g.kind == GateKind::OR ? s.or_gates : s.iand ) += 1u;
  }
  s.depth = level( n.output );
  return s;
}

std::string to_text( const Netlist& n )
{
  std::string s = "inputs";
  for ( auto const& v : n.inputs )
  {
    s += " " + v;
  }
  s += "\n";
  for ( std::size_t i = 0; i < n.gates.size(); ++i )
  {
    auto const& g = n.gates[i];
    s += "g" + std::to_string( i ) + " = " + ( g.kind == GateKind::OR ? "OR " : "IAND " ) + g.a.to_string() + " " + g.b.to_string() + "\n";
  }
  s += "output " + n.output.to_string() + "\n";
  return s;
}

Netlist parse_netlist( std::string_view text )
{
  Netlist n;
  bool have_inputs = false;
  bool have_output = false;
  std::istringstream in{ std::string( text ) };
  std::string line;
  std::size_t lineno = 0;
  while ( std::getline( in, line ) )
  {
    ++lineno;
    std::istringstream ls( line );
    std::vector<std::string> tok;
    for ( std::string t; ls >> t; )
    {
      tok.push_back( t );
    }
    if ( tok.empty() )
    {
      continue;
    }
    auto bad = [&] { throw format_error( "spindiode", "line " + std::to_string( lineno ) + ": cannot parse '" + line + "'" ); };
    if ( tok[0] == "inputs" && !have_inputs && n.gates.empty() )
    {
      for ( std::size_t i = 1; i < tok.size(); ++i )
      {
        if ( !is_valid_identifier( tok[i] ) )
        {
          bad();
        }
        n.inputs.push_back( tok[i] );
      }
      have_inputs = true;
    }
    else if ( tok[0] == "output" && tok.size() == 2u && !have_output )
    {
      n.output = Signal::from_string( tok[1] );
      have_output = true;
    }
    else if ( tok.size() == 5u && tok[1] == "=" && !have_output )
    {
      if ( tok[0] != "g" + std::to_string( n.gates.size() ) )
      {
        throw format_error( "spindiode", "line " + std::to_string( lineno ) + ": expected gate g" + std::to_string( n.gates.size() ) );
      }
      GateKind kind{};
      if ( tok[2] == "OR" )
      {
        kind = GateKind::OR;
      }
      else if ( tok[2] == "IAND" )
      {
        kind = GateKind::IAND;
      }
      else
      {
        bad();
      }
      n.gates.push_back( { kind, Signal::from_string( tok[3] ), Signal::from_string( tok[4] ) } );
    }
    else
    {
      bad();
    }
  }
  if ( !have_inputs || !have_output )
  {
    throw format_error( "spindiode", "netlist text needs 'inputs' and 'output' lines" );
  }
  validate( n );
  return n;
}

} // namespace asym
