#include <asym/expr.hpp>

#include <asym/error.hpp>

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace asym
{

struct Expression::node
{
  Kind kind;
  bool bit = false;
  std::string name;
  std::vector<Expression> children;
};

Expression make_node( Kind kind, bool bit, std::string name, std::vector<Expression> children )
{
  auto n = std::make_shared<Expression::node>();
  n->kind = kind;
  n->bit = bit;
  n->name = std::move( name );
  n->children = std::move( children );
  return Expression( std::move( n ) );
}

Kind Expression::kind() const noexcept
{
  return node_->kind;
}

bool Expression::value() const
{
  if ( node_->kind != Kind::constant )
  {
    throw domain_error( "expr", "value() requested from a non-constant node" );
  }
  return node_->bit;
}

const std::string& Expression::name() const
{
  if ( node_->kind != Kind::variable )
  {
    throw domain_error( "expr", "name() requested from a non-variable node" );
  }
  return node_->name;
}

std::span<const Expression> Expression::operands() const noexcept
{
  return node_->children;
}

const Expression& Expression::operand( std::size_t i ) const
{
  if ( i >= node_->children.size() )
  {
    throw range_error( "expr", "operand index " + std::to_string( i ) + " out of range" );
  }
  return node_->children[i];
}

bool operator==( const Expression& a, const Expression& b )
{
  if ( a.node_ == b.node_ )
  {
    return true;
  }
  if ( a.kind() != b.kind() )
  {
    return false;
  }
  switch ( a.kind() )
  {
  case Kind::constant:
    return a.node_->bit == b.node_->bit;
  case Kind::variable:
    return a.node_->name == b.node_->name;
  default:
    return a.node_->children == b.node_->children;
  }
}

bool is_valid_identifier( std::string_view name ) noexcept
{
  if ( name.empty() )
  {
    return false;
  }
  auto const head = static_cast<unsigned char>( name.front() );
  if ( !( std::isalpha( head ) || head == '_' ) )
  {
    return false;
  }
  return std::all_of( name.begin(), name.end(), []( char c ) {
    auto const u = static_cast<unsigned char>( c );
    return std::isalnum( u ) || u == '_';
  } );
}

Expression constant( bool value )
{
  return make_node( Kind::constant, value, {}, {} );
}

Expression variable( std::string name )
{
  if ( !is_valid_identifier( name ) )
  {
    throw identifier_error( "expr", "invalid variable name '" + name + "'" );
  }
  return make_node( Kind::variable, false, std::move( name ), {} );
}

Expression negation( Expression child )
{
  return make_node( Kind::negation, false, {}, { std::move( child ) } );
}

namespace
{

void require_arity( std::vector<Expression> const& children, char const* what )
{
  if ( children.size() < 2u )
  {
    throw arity_error( "expr", std::string( what ) + " needs at least 2 operands, got " + std::to_string( children.size() ) );
  }
}

} // namespace

Expression conjunction( std::vector<Expression> children )
{
  require_arity( children, "AND" );
  return make_node( Kind::conjunction, false, {}, std::move( children ) );
}

Expression disjunction( std::vector<Expression> children )
{
  require_arity( children, "OR" );
  return make_node( Kind::disjunction, false, {}, std::move( children ) );
}

Expression iand_chain( std::vector<Expression> operands )
{
  require_arity( operands, "IAND chain" );
  if ( operands.front().kind() == Kind::iand_chain )
  {
    auto head = operands.front().operands();
    std::vector<Expression> flat( head.begin(), head.end() );
    flat.insert( flat.end(), operands.begin() + 1, operands.end() );
    operands = std::move( flat );
  }
  return make_node( Kind::iand_chain, false, {}, std::move( operands ) );
}

Expression imply_chain( std::vector<Expression> operands )
{
  require_arity( operands, "IMPLY chain" );
  if ( operands.back().kind() == Kind::imply_chain )
  {
    auto const last = operands.back(); // keeps the tail alive past pop_back
    auto tail = last.operands();
    operands.pop_back();
    operands.insert( operands.end(), tail.begin(), tail.end() );
  }
  return make_node( Kind::imply_chain, false, {}, std::move( operands ) );
}

Expression unflattened_chain( Kind kind, std::vector<Expression> operands )
{
  if ( kind != Kind::iand_chain && kind != Kind::imply_chain )
  {
    throw domain_error( "expr", "unflattened_chain expects a chain kind" );
  }
  require_arity( operands, "chain" );
  return make_node( kind, false, {}, std::move( operands ) );
}

Expression with_operands( const Expression& e, std::vector<Expression> children )
{
  switch ( e.kind() )
  {
  case Kind::constant:
  case Kind::variable:
    return e;
  case Kind::negation:
    if ( children.size() != 1u )
    {
      throw arity_error( "expr", "NOT takes exactly one operand" );
    }
    return negation( std::move( children.front() ) );
  case Kind::conjunction:
    return conjunction( std::move( children ) );
  case Kind::disjunction:
    return disjunction( std::move( children ) );
  case Kind::iand_chain:
    return iand_chain( std::move( children ) );
  case Kind::imply_chain:
    return imply_chain( std::move( children ) );
  }
  return e;
}

bool is_literal( const Expression& e ) noexcept
{
  return e.is_variable() || ( e.is_negation() && e.operands()[0].is_variable() );
}

Expression normalize_not( const Expression& e )
{
  switch ( e.kind() )
  {
  case Kind::constant:
  case Kind::variable:
    return e;
  case Kind::negation:
  {
    auto child = normalize_not( e.operands()[0] );
    if ( child.is_constant() )
    {
      return constant( !child.value() );
    }
    if ( child.is_negation() )
    {
      return child.operands()[0];
    }
    return negation( std::move( child ) );
  }
  default:
  {
    std::vector<Expression> children;
    children.reserve( e.arity() );
    for ( auto const& c : e.operands() )
    {
      children.push_back( normalize_not( c ) );
    }
    return with_operands( e, std::move( children ) );
  }
  }
}

namespace
{

void collect_variables( const Expression& e, std::vector<std::string>& out, std::unordered_set<std::string>& seen )
{
  if ( e.is_variable() )
  {
    if ( seen.insert( e.name() ).second )
    {
      out.push_back( e.name() );
    }
    return;
  }
  for ( auto const& c : e.operands() )
  {
    collect_variables( c, out, seen );
  }
}

} // namespace

std::vector<std::string> variables( const Expression& e )
{
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_variables( e, out, seen );
  return out;
}

std::size_t literal_count( const Expression& e )
{
  if ( e.is_variable() )
  {
    return 1u;
  }
  std::size_t n = 0u;
  for ( auto const& c : e.operands() )
  {
    n += literal_count( c );
  }
  return n;
}

std::size_t operator_count( const Expression& e )
{
  std::size_t n = 0u;
  if ( e.is_negation() )
  {
    n = 1u;
  }
  else if ( e.arity() >= 2u )
  {
    n = e.arity() - 1u;
  }
  for ( auto const& c : e.operands() )
  {
    n += operator_count( c );
  }
  return n;
}

std::size_t node_count( const Expression& e )
{
  std::size_t n = 1u;
  for ( auto const& c : e.operands() )
  {
    n += node_count( c );
  }
  return n;
}

std::size_t depth( const Expression& e )
{
  std::size_t d = 0u;
  for ( auto const& c : e.operands() )
  {
    d = std::max( d, depth( c ) );
  }
  return d + 1u;
}

namespace
{

// binding strength, loosest first
int precedence( Kind k )
{
  switch ( k )
  {
  case Kind::imply_chain:
    return 1;
  case Kind::disjunction:
    return 2;
  case Kind::iand_chain:
    return 3;
  case Kind::conjunction:
    return 4;
  case Kind::negation:
    return 5;
  default:
    return 6;
  }
}

char const* separator( Kind k )
{
  switch ( k )
  {
  case Kind::imply_chain:
    return " -> ";
  case Kind::disjunction:
    return " | ";
  case Kind::iand_chain:
    return " @ ";
  default:
    return " & ";
  }
}

struct printed
{
  std::string text;
  bool bare_iand = false; // an unparenthesized '@' occurs in text
};

printed print( const Expression& e )
{
  switch ( e.kind() )
  {
  case Kind::constant:
    return { e.value() ? "1" : "0", false };
  case Kind::variable:
    return { e.name(), false };
  case Kind::negation:
  {
    auto const& c = e.operands()[0];
    auto inner = print( c );
    if ( precedence( c.kind() ) < precedence( Kind::negation ) )
    {
      return { "!(" + inner.text + ")", false };
    }
    return { "!" + inner.text, false };
  }
  default:
    break;
  }

  printed out;
  out.bare_iand = e.kind() == Kind::iand_chain;
  bool first = true;
  for ( auto const& c : e.operands() )
  {
    auto inner = print( c );
    bool wrap = precedence( c.kind() ) <= precedence( e.kind() );
    // '@' and '->' may not meet at one nesting level
    if ( e.kind() == Kind::imply_chain && inner.bare_iand )
    {
      wrap = true;
    }
    if ( !first )
    {
      out.text += separator( e.kind() );
    }
    first = false;
    if ( wrap )
    {
      out.text += "(" + inner.text + ")";
    }
    else
    {
      out.text += inner.text;
      out.bare_iand = out.bare_iand || inner.bare_iand;
    }
  }
  return out;
}

} // namespace

std::string format( const Expression& e )
{
  return print( e ).text;
}

const Expression& subterm( const Expression& e, std::span<const std::size_t> path )
{
  const Expression* cur = &e;
  for ( auto i : path )
  {
    if ( i >= cur->arity() )
    {
      throw range_error( "expr", "invalid path " + to_string( Path( path.begin(), path.end() ) ) );
    }
    cur = &cur->operands()[i];
  }
  return *cur;
}

Expression replace_at( const Expression& e, std::span<const std::size_t> path, Expression replacement )
{
  if ( path.empty() )
  {
    return replacement;
  }
  auto const i = path.front();
  if ( i >= e.arity() )
  {
    throw range_error( "expr", "invalid path " + to_string( Path( path.begin(), path.end() ) ) );
  }
  std::vector<Expression> children( e.operands().begin(), e.operands().end() );
  children[i] = replace_at( children[i], path.subspan( 1 ), std::move( replacement ) );
  return with_operands( e, std::move( children ) );
}

namespace
{

void collect_positions( const Expression& e, Path& cur, std::vector<Path>& out )
{
  out.push_back( cur );
  for ( std::size_t i = 0; i < e.arity(); ++i )
  {
    cur.push_back( i );
    collect_positions( e.operands()[i], cur, out );
    cur.pop_back();
  }
}

} // namespace

std::vector<Path> positions( const Expression& e )
{
  std::vector<Path> out;
  Path cur;
  collect_positions( e, cur, out );
  return out;
}

std::string to_string( const Path& p )
{
  std::string s = "[";
  for ( std::size_t i = 0; i < p.size(); ++i )
  {
    if ( i )
    {
      s += ",";
    }
    s += std::to_string( p[i] );
  }
  return s + "]";
}

} // namespace asym
