#include <asym/minimize.hpp>

#include <asym/error.hpp>

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace asym
{

namespace
{

std::uint64_t key( std::uint32_t value, std::uint32_t care )
{
  return ( std::uint64_t{ care } << 32 ) | value;
}

void check_rows( const std::vector<std::uint32_t>& rows, unsigned n )
{
  for ( auto r : rows )
  {
    if ( ( std::uint64_t{ r } >> n ) != 0u )
    {
      throw range_error( "minimize", "row " + std::to_string( r ) + " out of range for " + std::to_string( n ) + " variables" );
    }
  }
}

} // namespace

PrimeImplicantSet prime_implicants( const std::vector<std::uint32_t>& onset, const std::vector<std::uint32_t>& dc, unsigned n )
{
  if ( n > max_minimize_vars )
  {
    throw capacity_error( "minimize", std::to_string( n ) + " variables exceed the limit of " + std::to_string( max_minimize_vars ) );
  }
  check_rows( onset, n );
  check_rows( dc, n );

  std::unordered_set<std::uint32_t> const on( onset.begin(), onset.end() );
  for ( auto r : dc )
  {
    if ( on.count( r ) )
    {
      throw domain_error( "minimize", "row " + std::to_string( r ) + " is both ON and don't-care" );
    }
  }

  auto const full = n == 0u ? 0u : ( ~std::uint32_t{ 0 } >> ( 32u - n ) );

  // current level: distinct (value, care) pairs
  std::vector<std::pair<std::uint32_t, std::uint32_t>> level;
  std::unordered_set<std::uint64_t> seen;
  for ( auto const* rows : { &onset, &dc } )
  {
    for ( auto r : *rows )
    {
      if ( seen.insert( key( r, full ) ).second )
      {
        level.emplace_back( r, full );
      }
    }
  }

  std::vector<Cube> primes;
  while ( !level.empty() )
  {
    std::unordered_set<std::uint64_t> present;
    for ( auto const& [v, c] : level )
    {
      present.insert( key( v, c ) );
    }
    std::unordered_set<std::uint64_t> merged;
    std::unordered_set<std::uint64_t> next_seen;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
    for ( auto const& [v, c] : level )
    {
      for ( unsigned b = 0; b < n; ++b )
      {
        auto const bit = std::uint32_t{ 1 } << b;
        if ( !( c & bit ) || ( v & bit ) )
        {
          continue;
        }
        if ( !present.count( key( v | bit, c ) ) )
        {
          continue;
        }
        merged.insert( key( v, c ) );
        merged.insert( key( v | bit, c ) );
        if ( next_seen.insert( key( v, c & ~bit ) ).second )
        {
          next.emplace_back( v, c & ~bit );
        }
      }
    }
    for ( auto const& [v, c] : level )
    {
      if ( !merged.count( key( v, c ) ) )
      {
        primes.emplace_back( v, c, n );
      }
    }
    level = std::move( next );
  }

  // primes covering only don't-cares are of no use to a cover
  std::erase_if( primes, [&]( const Cube& p ) {
    return std::none_of( onset.begin(), onset.end(), [&]( auto r ) { return p.covers( r ); } );
  } );
  std::sort( primes.begin(), primes.end() );
  return { n, std::move( primes ) };
}

namespace
{

struct Candidate
{
  unsigned cost = std::numeric_limits<unsigned>::max();
  std::vector<std::size_t> chosen; // indices into the prime list, ascending
  bool found = false;
};

struct Search
{
  const std::vector<Cube>& primes;
  const std::vector<std::vector<std::size_t>>& covering; // per ON-row index
  std::vector<unsigned> covered_count;                   // per ON-row index
  std::size_t node_limit;
  std::size_t nodes = 0;
  bool truncated = false;
  Candidate best{};
  unsigned min_literals = 0;

  std::vector<std::size_t> chosen{};
  unsigned cost = 0;

  // strict "a is better than b" under (cost, count, sorted cube list)
  bool better( unsigned cost_a, const std::vector<std::size_t>& a ) const
  {
    if ( !best.found )
    {
      return true;
    }
    if ( cost_a != best.cost )
    {
      return cost_a < best.cost;
    }
    if ( a.size() != best.chosen.size() )
    {
      return a.size() < best.chosen.size();
    }
    // prime indices follow ascending cube order
    return a < best.chosen;
  }

  void add( std::size_t p, int delta, const std::vector<std::uint32_t>& onset )
  {
    for ( std::size_t i = 0; i < onset.size(); ++i )
    {
      if ( primes[p].covers( onset[i] ) )
      {
        covered_count[i] += delta;
      }
    }
  }

  void run( const std::vector<std::uint32_t>& onset )
  {
    if ( ++nodes > node_limit )
    {
      truncated = true;
      return;
    }
    // most constrained uncovered row
    std::size_t pick = onset.size();
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for ( std::size_t i = 0; i < onset.size(); ++i )
    {
      if ( covered_count[i] == 0u && covering[i].size() < fewest )
      {
        fewest = covering[i].size();
        pick = i;
      }
    }
    if ( pick == onset.size() )
    {
      auto sorted = chosen;
      std::sort( sorted.begin(), sorted.end() );
      if ( better( cost, sorted ) )
      {
        best = { cost, std::move( sorted ), true };
      }
      return;
    }
    // one more cube is unavoidable
    if ( best.found && ( cost + min_literals > best.cost ||
                         ( cost + min_literals == best.cost && chosen.size() + 1u > best.chosen.size() ) ) )
    {
      return;
    }
    for ( auto p : covering[pick] )
    {
      if ( truncated )
      {
        return;
      }
      chosen.push_back( p );
      cost += primes[p].literal_count();
      add( p, 1, onset );
      run( onset );
      add( p, -1, onset );
      cost -= primes[p].literal_count();
      chosen.pop_back();
    }
  }
};

} // namespace

CoverSolution minimum_cover( const PrimeImplicantSet& p, const std::vector<std::uint32_t>& onset, std::size_t node_limit )
{
  CoverSolution sol;
  std::vector<std::uint32_t> rows( onset );
  std::sort( rows.begin(), rows.end() );
  rows.erase( std::unique( rows.begin(), rows.end() ), rows.end() );

  std::vector<std::vector<std::size_t>> covering( rows.size() );
  for ( std::size_t i = 0; i < rows.size(); ++i )
  {
    for ( std::size_t j = 0; j < p.primes.size(); ++j )
    {
      if ( p.primes[j].covers( rows[i] ) )
      {
        covering[i].push_back( j );
      }
    }
    if ( covering[i].empty() )
    {
      throw domain_error( "minimize", "row " + std::to_string( rows[i] ) + " is not covered by any prime" );
    }
    // cheaper primes first so good bounds appear early
    std::stable_sort( covering[i].begin(), covering[i].end(), [&]( auto a, auto b ) {
      return p.primes[a].literal_count() < p.primes[b].literal_count();
    } );
  }

  std::vector<bool> taken( p.primes.size(), false );
  std::vector<bool> done( rows.size(), false );
  for ( std::size_t i = 0; i < rows.size(); ++i )
  {
    if ( covering[i].size() == 1u && !taken[covering[i][0]] )
    {
      auto const j = covering[i][0];
      taken[j] = true;
      sol.trace.push_back( "essential " + p.primes[j].to_string() + " (only prime covering row " + std::to_string( rows[i] ) + ")" );
    }
  }
  for ( std::size_t i = 0; i < rows.size(); ++i )
  {
    done[i] = std::any_of( covering[i].begin(), covering[i].end(), [&]( auto j ) { return taken[j]; } );
  }

  std::vector<std::uint32_t> rest_rows;
  std::vector<std::vector<std::size_t>> rest_covering;
  for ( std::size_t i = 0; i < rows.size(); ++i )
  {
    if ( !done[i] )
    {
      rest_rows.push_back( rows[i] );
      rest_covering.push_back( covering[i] );
    }
  }

  std::vector<std::size_t> chosen;
  for ( std::size_t j = 0; j < taken.size(); ++j )
  {
    if ( taken[j] )
    {
      chosen.push_back( j );
    }
  }

  if ( !rest_rows.empty() )
  {
    sol.trace.push_back( "branch and bound over " + std::to_string( rest_rows.size() ) + " remaining rows" );
    Search s{ p.primes, rest_covering, std::vector<unsigned>( rest_rows.size(), 0u ), node_limit };
    s.min_literals = std::numeric_limits<unsigned>::max();
    for ( auto const& c : rest_covering )
    {
      for ( auto j : c )
      {
        s.min_literals = std::min( s.min_literals, p.primes[j].literal_count() );
      }
    }
    s.run( rest_rows );
    if ( s.truncated )
    {
      sol.trace.push_back( "search truncated after " + std::to_string( node_limit ) + " nodes" );
    }
    if ( !s.best.found )
    {
      // truncated before any leaf: fall back to greedy cheapest primes
      for ( std::size_t i = 0; i < rest_rows.size(); ++i )
      {
        bool const hit = std::any_of( chosen.begin(), chosen.end(), [&]( auto j ) { return p.primes[j].covers( rest_rows[i] ); } );
        if ( !hit )
        {
          chosen.push_back( rest_covering[i].front() );
        }
      }
    }
    else
    {
      for ( auto j : s.best.chosen )
      {
        sol.trace.push_back( "chose " + p.primes[j].to_string() );
        chosen.push_back( j );
      }
    }
  }

  std::sort( chosen.begin(), chosen.end() );
  chosen.erase( std::unique( chosen.begin(), chosen.end() ), chosen.end() );
  for ( auto j : chosen )
  {
    sol.cubes.push_back( p.primes[j] );
    sol.cost += p.primes[j].literal_count();
  }
  return sol;
}

Cover minimized_cover( const TruthTable& t )
{
  auto const n = static_cast<unsigned>( t.num_vars() );
  auto const on = t.onset();
  auto const primes = prime_implicants( on, {}, n );
  Cover cover{ t.vars(), minimum_cover( primes, on ).cubes };
  cover.canonicalize();
  return cover;
}

Expression minimized_soi( const TruthTable& t )
{
  return soi_from_cover( minimized_cover( t ) );
}

Expression minimized_noi( const TruthTable& t )
{
  return noi_from_cover( minimized_cover( t ) );
}

} // namespace asym
