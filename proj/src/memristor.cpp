#include <asym/memristor.hpp>

#include <asym/canon.hpp>
#include <asym/error.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asym
{

namespace
{

void check_index( std::size_t i, std::size_t size )
{
  if ( i >= size )
  {
    throw range_error( "memristor", "register r" + std::to_string( i ) + " out of range for " + std::to_string( size ) + " registers" );
  }
}

} // namespace

ArrayState step_semantics( ArrayState s, const ImplyStep& step )
{
  if ( auto const* r = std::get_if<Reset>( &step ) )
  {
    check_index( r->target, s.size() );
    s[r->target] = false;
    return s;
  }
  auto const& im = std::get<Imply>( step );
  check_index( im.cond, s.size() );
  check_index( im.target, s.size() );
  if ( im.cond == im.target )
  {
    throw domain_error( "memristor", "IMPLY reads and writes r" + std::to_string( im.cond ) );
  }
  s[im.target] = !s[im.cond] || s[im.target];
  return s;
}

ImplyProgram compile_nand( const std::string& in1, const std::string& in2, std::size_t work )
{
  if ( !is_valid_identifier( in1 ) || !is_valid_identifier( in2 ) )
  {
    throw identifier_error( "memristor", "invalid input name" );
  }
  if ( in1 == in2 )
  {
    throw domain_error( "memristor", "NAND inputs must be distinct variables" );
  }
  if ( work < 2u )
  {
    throw domain_error( "memristor", "work register must not overlap the input registers r0, r1" );
  }
  ImplyProgram p;
  p.registers = work + 1u;
  p.inputs = { { in1, 0u }, { in2, 1u } };
  p.output = work;
  p.steps = { Reset{ work }, Imply{ 0u, work }, Imply{ 1u, work } };
  return p;
}

namespace
{

/* Step over virtual registers; inputs occupy ids 0..n-1. */
struct Op
{
  bool reset = false;
  std::size_t cond = 0;
  std::size_t target = 0;
};

class Lowering
{
public:
  explicit Lowering( const std::vector<std::string>& vars )
  {
    for ( std::size_t i = 0; i < vars.size(); ++i )
    {
      input_[vars[i]] = i;
    }
    next_ = vars.size();
  }

  std::vector<Op> ops;

  std::size_t lower( const Expression& e )
  {
    if ( e.is_constant() )
    {
      return constant_reg( e.value() );
    }
    auto const terms = noi_terms( e );
    auto const r = fresh();
    reset( r );
    for ( auto const& t : terms )
    {
      imply( term_reg( t ), r );
    }
    return r;
  }

private:
  std::map<std::string, std::size_t> input_;
  std::size_t next_ = 0;

  std::size_t fresh() { return next_++; }
  void reset( std::size_t t ) { ops.push_back( { true, 0, t } ); }
  void imply( std::size_t c, std::size_t t ) { ops.push_back( { false, c, t } ); }

  std::size_t complement_of( std::size_t src )
  {
    auto const m = fresh();
    reset( m );
    imply( src, m );
    return m;
  }

  std::size_t constant_reg( bool value )
  {
    auto const z = fresh();
    reset( z );
    if ( !value )
    {
      return z;
    }
    return complement_of( z );
  }

  std::size_t input_of( const Expression& var ) const { return input_.at( var.name() ); }

  // register holding the atom's value
  std::size_t value_reg( const Expression& atom )
  {
    if ( atom.is_constant() )
    {
      return constant_reg( atom.value() );
    }
    if ( atom.is_variable() )
    {
      return input_of( atom );
    }
    return complement_of( input_of( atom.operands()[0] ) );
  }

  // register holding the atom's complement
  std::size_t complement_reg( const Expression& atom )
  {
    if ( atom.is_constant() )
    {
      return constant_reg( !atom.value() );
    }
    if ( atom.is_variable() )
    {
      return complement_of( input_of( atom ) );
    }
    return input_of( atom.operands()[0] );
  }

  std::size_t term_reg( const Expression& t )
  {
    if ( t.is_constant() )
    {
      return constant_reg( t.value() );
    }
    if ( t.is_variable() )
    {
      // copy by double inversion
      return complement_of( complement_of( input_of( t ) ) );
    }
    if ( t.is_negation() )
    {
      return complement_of( input_of( t.operands()[0] ) );
    }
    // x1 -> .. -> xk  ==  !x1 | .. | !x(k-1) | xk
    auto const ops_ = t.operands();
    auto const w = fresh();
    reset( w );
    for ( std::size_t j = 0; j + 1 < ops_.size(); ++j )
    {
      imply( value_reg( ops_[j] ), w );
    }
    imply( complement_reg( ops_.back() ), w );
    return w;
  }
};

class Peephole
{
public:
  Peephole( std::vector<Op>& ops, std::size_t num_inputs, std::size_t& output )
      : ops_( ops ), inputs_( num_inputs ), output_( output )
  {
  }

  void run()
  {
    while ( cse() || copies() || dead() )
    {
    }
  }

private:
  std::vector<Op>& ops_;
  std::size_t inputs_;
  std::size_t& output_;

  // id -> (source, index of the defining IMPLY) for registers written exactly
  // as [RESET v, IMPLY src v]
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> complements() const
  {
    std::map<std::size_t, std::vector<std::size_t>> writes;
    for ( std::size_t i = 0; i < ops_.size(); ++i )
    {
      writes[ops_[i].target].push_back( i );
    }
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> out;
    for ( auto const& [v, idx] : writes )
    {
      if ( idx.size() == 2u && ops_[idx[0]].reset && !ops_[idx[1]].reset )
      {
        out[v] = { ops_[idx[1]].cond, idx[1] };
      }
    }
    return out;
  }

  std::size_t first_read( std::size_t v ) const
  {
    for ( std::size_t i = 0; i < ops_.size(); ++i )
    {
      if ( !ops_[i].reset && ops_[i].cond == v )
      {
        return i;
      }
    }
    return ops_.size();
  }

  void redirect( std::size_t from, std::size_t to )
  {
    for ( auto& op : ops_ )
    {
      if ( !op.reset && op.cond == from )
      {
        op.cond = to;
      }
    }
  }

  // two complements of the same source: keep the earlier one
  bool cse()
  {
    auto const comp = complements();
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_source; // src -> (id, def index)
    for ( auto const& [v, def] : comp )
    {
      auto const [src, at] = def;
      auto it = by_source.find( src );
      if ( it == by_source.end() )
      {
        by_source[src] = { v, at };
        continue;
      }
      auto [keep, keep_at] = it->second;
      auto drop = v;
      if ( at < keep_at )
      {
        std::swap( keep, drop );
        keep_at = at;
        it->second = { keep, keep_at };
      }
      auto const read = first_read( drop );
      if ( drop == output_ || read == ops_.size() || keep_at > read )
      {
        continue;
      }
      redirect( drop, keep );
      return true;
    }
    return false;
  }

  // !!x read where x is available
  bool copies()
  {
    auto const comp = complements();
    for ( auto const& [b, def] : comp )
    {
      auto const it = comp.find( def.first );
      if ( it == comp.end() || b == output_ )
      {
        continue;
      }
      auto const x = it->second.first;
      if ( first_read( b ) == ops_.size() )
      {
        continue;
      }
      redirect( b, x );
      return true;
    }
    return false;
  }

  bool dead()
  {
    std::set<std::size_t> live{ output_ };
    for ( auto const& op : ops_ )
    {
      if ( !op.reset )
      {
        live.insert( op.cond );
      }
    }
    auto const before = ops_.size();
    std::erase_if( ops_, [&]( const Op& op ) { return op.target >= inputs_ && !live.count( op.target ); } );
    return ops_.size() != before;
  }
};

/* Linear scan: lowest free physical register at first appearance, released
   after last appearance. Returns the register count. */
std::size_t allocate( std::vector<Op>& ops, std::size_t num_inputs, std::size_t& output )
{
  std::map<std::size_t, std::size_t> last;
  for ( std::size_t i = 0; i < ops.size(); ++i )
  {
    last[ops[i].target] = i;
    if ( !ops[i].reset )
    {
      last[ops[i].cond] = i;
    }
  }
  last[output] = ops.size();

  std::map<std::size_t, std::size_t> phys;
  for ( std::size_t i = 0; i < num_inputs; ++i )
  {
    phys[i] = i;
  }
  std::set<std::size_t> busy;
  std::size_t count = num_inputs;
  auto assign = [&]( std::size_t v ) {
    if ( phys.count( v ) )
    {
      return;
    }
    std::size_t r = num_inputs;
    while ( busy.count( r ) )
    {
      ++r;
    }
    busy.insert( r );
    phys[v] = r;
    count = std::max( count, r + 1u );
  };
  auto release = [&]( std::size_t v, std::size_t i ) {
    if ( v >= num_inputs && last[v] == i )
    {
      busy.erase( phys[v] );
    }
  };

  if ( ops.empty() )
  {
    assign( output );
  }
  for ( std::size_t i = 0; i < ops.size(); ++i )
  {
    auto& op = ops[i];
    assign( op.target );
    auto const vt = op.target;
    auto const vc = op.cond;
    op.target = phys[vt];
    if ( !op.reset )
    {
      op.cond = phys[vc];
      release( vc, i );
    }
    release( vt, i );
  }
  output = phys[output];
  return count;
}

} // namespace

ImplyProgram compile_noi( const Expression& e, const CompileOptions& options )
{
  if ( !is_noi( e ) )
  {
    throw shape_error( "memristor", "expression is not in NOI form: " + format( e ) );
  }
  auto const vars = variables( e );
  if ( vars.size() > max_program_inputs )
  {
    throw capacity_error( "memristor", std::to_string( vars.size() ) + " inputs exceed the limit of " + std::to_string( max_program_inputs ) );
  }

  Lowering lowering( vars );
  auto output = lowering.lower( e );
  auto ops = std::move( lowering.ops );
  auto const lowered = ops.size();
  if ( options.peephole )
  {
    Peephole( ops, vars.size(), output ).run();
  }

  ImplyProgram p;
  p.registers = allocate( ops, vars.size(), output );
  p.output = output;
  for ( std::size_t i = 0; i < vars.size(); ++i )
  {
    p.inputs.emplace_back( vars[i], i );
  }
  for ( auto const& op : ops )
  {
    if ( op.reset )
    {
      p.steps.push_back( Reset{ op.target } );
    }
    else
    {
      p.steps.push_back( Imply{ op.cond, op.target } );
    }
  }
  p.notes.push_back( "inputs r0..r" + std::to_string( vars.size() ) + " exclusive; work registers by linear scan" );
  p.notes.push_back( "lowered " + std::to_string( lowered ) + " steps, emitted " + std::to_string( p.steps.size() ) +
                     ( options.peephole ? " after peephole" : " without peephole" ) );

  validate( p );
  if ( program_table( p ) != truth_table( e, vars ) )
  {
    throw std::logic_error( "memristor: compiled program disagrees with " + format( e ) );
  }
  return p;
}

Simulation simulate( const ImplyProgram& p, const Assignment& inputs )
{
  validate( p );
  Simulation sim;
  ArrayState s( p.registers, false );
  for ( auto const& [name, reg] : p.inputs )
  {
    auto const bit = inputs.get( name );
    if ( !bit )
    {
      throw eval_error( "memristor", "unbound input variable '" + name + "'" );
    }
    s[reg] = *bit;
  }
  for ( auto const& step : p.steps )
  {
    s = step_semantics( std::move( s ), step );
    sim.trace.push_back( s );
  }
  sim.output = s[p.output];
  sim.final_state = std::move( s );
  return sim;
}

StepCount step_count( const ImplyProgram& p )
{
  StepCount c;
  c.total = p.steps.size();
  c.resets = static_cast<std::size_t>( std::count_if( p.steps.begin(), p.steps.end(), []( auto const& s ) {
    return std::holds_alternative<Reset>( s );
  } ) );
  c.implies = c.total - c.resets;
  c.registers = p.registers;
  return c;
}

TruthTable program_table( const ImplyProgram& p )
{
  validate( p );
  auto const n = p.inputs.size();
  if ( n > max_table_vars )
  {
    throw capacity_error( "memristor", "too many inputs for a truth table" );
  }
  std::uint64_t const rows = std::uint64_t{ 1 } << n;
  std::vector<bool> bits( rows );
  // 64 rows per word
  std::vector<std::uint64_t> reg( p.registers );
  for ( std::uint64_t base = 0; base < rows; base += 64u )
  {
    std::fill( reg.begin(), reg.end(), 0u );
    for ( std::size_t i = 0; i < n; ++i )
    {
      std::uint64_t w = 0u;
      for ( std::uint64_t k = 0; k < 64u && base + k < rows; ++k )
      {
        if ( ( ( base + k ) >> ( n - 1 - i ) ) & 1u )
        {
          w |= std::uint64_t{ 1 } << k;
        }
      }
      reg[p.inputs[i].second] = w;
    }
    for ( auto const& step : p.steps )
    {
      if ( auto const* r = std::get_if<Reset>( &step ) )
      {
        reg[r->target] = 0u;
      }
      else
      {
        auto const& im = std::get<Imply>( step );
        reg[im.target] = ~reg[im.cond] | reg[im.target];
      }
    }
    for ( std::uint64_t k = 0; k < 64u && base + k < rows; ++k )
    {
      bits[base + k] = ( reg[p.output] >> k ) & 1u;
    }
  }
  std::vector<std::string> names;
  for ( auto const& in : p.inputs )
  {
    names.push_back( in.first );
  }
  return TruthTable( std::move( names ), std::move( bits ) );
}

void validate( const ImplyProgram& p )
{
  auto fail = []( const std::string& what ) { throw domain_error( "memristor", what ); };
  std::set<std::size_t> input_regs;
  std::set<std::string> names;
  for ( auto const& [name, reg] : p.inputs )
  {
    if ( reg >= p.registers )
    {
      fail( "input '" + name + "' bound to r" + std::to_string( reg ) + " outside the array" );
    }
    if ( !input_regs.insert( reg ).second )
    {
      fail( "two inputs share r" + std::to_string( reg ) );
    }
    if ( !names.insert( name ).second )
    {
      fail( "input '" + name + "' bound twice" );
    }
  }
  if ( p.output >= p.registers )
  {
    fail( "output r" + std::to_string( p.output ) + " outside the array" );
  }
  for ( std::size_t i = 0; i < p.steps.size(); ++i )
  {
    auto const& s = p.steps[i];
    std::size_t target = 0;
    if ( auto const* r = std::get_if<Reset>( &s ) )
    {
      target = r->target;
    }
    else
    {
      auto const& im = std::get<Imply>( s );
      if ( im.cond >= p.registers )
      {
        fail( "step " + std::to_string( i ) + " reads r" + std::to_string( im.cond ) + " outside the array" );
      }
      if ( im.cond == im.target )
      {
        fail( "step " + std::to_string( i ) + " reads and writes r" + std::to_string( im.cond ) );
      }
      target = im.target;
    }
    if ( target >= p.registers )
    {
      fail( "step " + std::to_string( i ) + " writes r" + std::to_string( target ) + " outside the array" );
    }
    if ( input_regs.count( target ) )
    {
      fail( "step " + std::to_string( i ) + " writes input register r" + std::to_string( target ) );
    }
  }
}

std::string to_text( const ImplyStep& s )
{
  if ( auto const* r = std::get_if<Reset>( &s ) )
  {
    return "RESET r" + std::to_string( r->target );
  }
  auto const& im = std::get<Imply>( s );
  return "IMPLY r" + std::to_string( im.cond ) + " r" + std::to_string( im.target );
}

std::string to_text( const ImplyProgram& p )
{
  std::string s = "registers " + std::to_string( p.registers ) + "\n";
  for ( auto const& [name, reg] : p.inputs )
  {
    s += "input " + name + " r" + std::to_string( reg ) + "\n";
  }
  s += "output r" + std::to_string( p.output ) + "\n";
  for ( auto const& step : p.steps )
  {
    s += to_text( step ) + "\n";
  }
  return s;
}

namespace
{

std::size_t parse_register( const std::string& tok, std::size_t line )
{
  auto fail = [&] { throw format_error( "memristor", "line " + std::to_string( line ) + ": bad register '" + tok + "'" ); };
  if ( tok.size() < 2u || tok[0] != 'r' )
  {
    fail();
  }
  std::size_t value = 0;
  for ( std::size_t i = 1; i < tok.size(); ++i )
  {
    if ( tok[i] < '0' || tok[i] > '9' || value > 1'000'000u )
    {
      fail();
    }
    value = value * 10u + static_cast<std::size_t>( tok[i] - '0' );
  }
  return value;
}

} // namespace

ImplyProgram parse_program( std::string_view text )
{
  ImplyProgram p;
  bool have_registers = false;
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
    auto bad = [&] { throw format_error( "memristor", "line " + std::to_string( lineno ) + ": cannot parse '" + line + "'" ); };
    auto const& op = tok[0];
    if ( op == "registers" && tok.size() == 2u )
    {
      try
      {
        std::size_t used = 0;
        auto const v = std::stoul( tok[1], &used );
        if ( used != tok[1].size() )
        {
          bad();
        }
        p.registers = v;
      }
      catch ( const std::logic_error& )
      {
        bad();
      }
      have_registers = true;
    }
    else if ( op == "input" && tok.size() == 3u && is_valid_identifier( tok[1] ) )
    {
      p.inputs.emplace_back( tok[1], parse_register( tok[2], lineno ) );
    }
    else if ( op == "output" && tok.size() == 2u )
    {
      p.output = parse_register( tok[1], lineno );
      have_output = true;
    }
    else if ( op == "RESET" && tok.size() == 2u )
    {
      p.steps.push_back( Reset{ parse_register( tok[1], lineno ) } );
    }
    else if ( op == "IMPLY" && tok.size() == 3u )
    {
      p.steps.push_back( Imply{ parse_register( tok[1], lineno ), parse_register( tok[2], lineno ) } );
    }
    else
    {
      bad();
    }
  }
  if ( !have_registers || !have_output )
  {
    throw format_error( "memristor", "program text needs 'registers' and 'output' lines" );
  }
  validate( p );
  return p;
}

} // namespace asym
