#pragma once

#include <stdexcept>
#include <string>

namespace asym
{

/// Base class of every error raised by the library. Messages are prefixed
/// with the owning module, e.g. "canon: input is not in SOI form".
class error : public std::runtime_error
{
public:
  error( const std::string& module, const std::string& what )
      : std::runtime_error( module + ": " + what ), module_( module )
  {
  }

  const std::string& module() const noexcept { return module_; }

private:
  std::string module_;
};

#define ASYM_DEFINE_ERROR( name )                                  \
  class name : public error                                        \
  {                                                                \
  public:                                                          \
    using error::error;                                            \
  };

ASYM_DEFINE_ERROR( arity_error )
ASYM_DEFINE_ERROR( identifier_error )
ASYM_DEFINE_ERROR( eval_error )
ASYM_DEFINE_ERROR( capacity_error )
ASYM_DEFINE_ERROR( shape_error )
ASYM_DEFINE_ERROR( match_error )
ASYM_DEFINE_ERROR( domain_error )
ASYM_DEFINE_ERROR( range_error )
ASYM_DEFINE_ERROR( format_error )

#undef ASYM_DEFINE_ERROR

/// Syntax error in the expression grammar; `position` is a 0-based offset
/// into the parsed text.
class parse_error : public error
{
public:
  parse_error( const std::string& what, std::size_t position )
      : error( "parse", what + " at position " + std::to_string( position ) ), position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace asym
