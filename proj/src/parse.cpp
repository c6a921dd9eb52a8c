#include <asym/parse.hpp>

#include <asym/error.hpp>

#include <cctype>
#include <string>
#include <vector>

namespace asym
{

namespace
{

enum class token_kind
{
  bang,
  amp,
  at,
  bar,
  arrow,
  lparen,
  rparen,
  ident,
  zero,
  one,
  end
};

struct token
{
  token_kind kind;
  std::size_t pos;
  std::string text;
};

std::vector<token> tokenize( std::string_view s )
{
  std::vector<token> out;
  std::size_t i = 0;
  while ( i < s.size() )
  {
    auto const c = static_cast<unsigned char>( s[i] );
    if ( std::isspace( c ) )
    {
      ++i;
      continue;
    }
    auto const start = i;
    switch ( c )
    {
    case '!':
      out.push_back( { token_kind::bang, start, "!" } );
      ++i;
      continue;
    case '&':
      out.push_back( { token_kind::amp, start, "&" } );
      ++i;
      continue;
    case '@':
      out.push_back( { token_kind::at, start, "@" } );
      ++i;
      continue;
    case '|':
      out.push_back( { token_kind::bar, start, "|" } );
      ++i;
      continue;
    case '(':
      out.push_back( { token_kind::lparen, start, "(" } );
      ++i;
      continue;
    case ')':
      out.push_back( { token_kind::rparen, start, ")" } );
      ++i;
      continue;
    case '-':
      if ( i + 1 < s.size() && s[i + 1] == '>' )
      {
        out.push_back( { token_kind::arrow, start, "->" } );
        i += 2;
        continue;
      }
      throw parse_error( "expected '->'", start );
    default:
      break;
    }
    if ( std::isdigit( c ) )
    {
      while ( i < s.size() && std::isalnum( static_cast<unsigned char>( s[i] ) ) )
      {
        ++i;
      }
      auto lexeme = std::string( s.substr( start, i - start ) );
      if ( lexeme == "0" )
      {
        out.push_back( { token_kind::zero, start, lexeme } );
      }
      else if ( lexeme == "1" )
      {
        out.push_back( { token_kind::one, start, lexeme } );
      }
      else
      {
        throw parse_error( "invalid constant '" + lexeme + "' (only 0 and 1 are allowed)", start );
      }
      continue;
    }
    if ( std::isalpha( c ) || c == '_' )
    {
      while ( i < s.size() && ( std::isalnum( static_cast<unsigned char>( s[i] ) ) || s[i] == '_' ) )
      {
        ++i;
      }
      out.push_back( { token_kind::ident, start, std::string( s.substr( start, i - start ) ) } );
      continue;
    }
    throw parse_error( std::string( "unexpected character '" ) + s[i] + "'", start );
  }
  out.push_back( { token_kind::end, s.size(), "" } );
  return out;
}

struct parsed
{
  Expression expr;
  bool bare_iand = false;
};

class parser
{
public:
  explicit parser( std::vector<token> tokens ) : tokens_( std::move( tokens ) ) {}

  Expression run()
  {
    if ( peek().kind == token_kind::end )
    {
      throw parse_error( "empty expression", 0 );
    }
    auto e = parse_imply();
    if ( peek().kind != token_kind::end )
    {
      throw parse_error( "unexpected '" + peek().text + "'", peek().pos );
    }
    return e.expr;
  }

private:
  const token& peek() const { return tokens_[pos_]; }
  const token& next() { return tokens_[pos_++]; }

  parsed parse_imply()
  {
    auto const start = peek().pos;
    std::vector<parsed> items{ parse_or() };
    while ( peek().kind == token_kind::arrow )
    {
      next();
      items.push_back( parse_or() );
    }
    if ( items.size() == 1u )
    {
      return items.front();
    }
    std::vector<Expression> operands;
    for ( auto& it : items )
    {
      if ( it.bare_iand )
      {
        throw parse_error( "parenthesize mixed asymmetric operators: '@' and '->' at the same level "
                           "(write e.g. '(A @ B) -> C' or 'A @ (B -> C)')",
                           start );
      }
      operands.push_back( std::move( it.expr ) );
    }
    return { imply_chain( std::move( operands ) ), false };
  }

  parsed parse_or()
  {
    std::vector<parsed> items{ parse_iand() };
    while ( peek().kind == token_kind::bar )
    {
      next();
      items.push_back( parse_iand() );
    }
    if ( items.size() == 1u )
    {
      return items.front();
    }
    bool bare = false;
    std::vector<Expression> children;
    for ( auto& it : items )
    {
      bare = bare || it.bare_iand;
      children.push_back( std::move( it.expr ) );
    }
    return { disjunction( std::move( children ) ), bare };
  }

  parsed parse_iand()
  {
    std::vector<Expression> operands{ parse_and() };
    while ( peek().kind == token_kind::at )
    {
      next();
      operands.push_back( parse_and() );
    }
    if ( operands.size() == 1u )
    {
      return { operands.front(), false };
    }
    return { iand_chain( std::move( operands ) ), true };
  }

  Expression parse_and()
  {
    std::vector<Expression> children{ parse_unary() };
    while ( peek().kind == token_kind::amp )
    {
      next();
      children.push_back( parse_unary() );
    }
    if ( children.size() == 1u )
    {
      return children.front();
    }
    return conjunction( std::move( children ) );
  }

  Expression parse_unary()
  {
    if ( peek().kind == token_kind::bang )
    {
      next();
      return negation( parse_unary() );
    }
    return parse_primary();
  }

  Expression parse_primary()
  {
    auto const& t = next();
    switch ( t.kind )
    {
    case token_kind::zero:
      return constant( false );
    case token_kind::one:
      return constant( true );
    case token_kind::ident:
      return variable( t.text );
    case token_kind::lparen:
    {
      auto inner = parse_imply();
      if ( peek().kind != token_kind::rparen )
      {
        throw parse_error( "expected ')'", peek().pos );
      }
      next();
      return inner.expr;
    }
    case token_kind::end:
      throw parse_error( "unexpected end of input", t.pos );
    default:
      throw parse_error( "unexpected '" + t.text + "'", t.pos );
    }
  }

  std::vector<token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

Expression parse( std::string_view text )
{
  return parser( tokenize( text ) ).run();
}

} // namespace asym
