#include <asym/cli.hpp>

#include <iostream>

int main( int argc, char** argv )
{
  auto const result = asym::cli::main_entry( { argv + 1, argv + argc } );
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
