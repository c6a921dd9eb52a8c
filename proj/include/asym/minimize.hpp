#pragma once

#include <asym/canon.hpp>
#include <asym/expr.hpp>
#include <asym/semantics.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace asym
{

inline constexpr unsigned max_minimize_vars = 12;

/// Prime implicants of ON-set plus don't-cares, restricted to primes that
/// cover at least one ON row. Cubes are kept in ascending cube order.
struct PrimeImplicantSet
{
  unsigned num_vars = 0;
  std::vector<Cube> primes;
};

struct CoverSolution
{
  std::vector<Cube> cubes; // ascending cube order
  unsigned cost = 0;       // total literal count
  std::vector<std::string> trace;
};

/*! \brief Quine-McCluskey prime generation.

  Throws range_error for rows >= 2^n, capacity_error for n > 12 and
  domain_error when a row is both ON and don't-care.
*/
PrimeImplicantSet prime_implicants( const std::vector<std::uint32_t>& onset, const std::vector<std::uint32_t>& dc, unsigned n );

/*! \brief Minimum-literal cover of `onset` by primes of `p`.

  Essential primes are taken first; the remainder is solved exactly by
  branch and bound. Ties prefer fewer cubes, then the lexicographically
  smaller sorted cube list. The search gives up after `node_limit` nodes and
  returns the best cover found so far (noted in the trace).
*/
CoverSolution minimum_cover( const PrimeImplicantSet& p, const std::vector<std::uint32_t>& onset, std::size_t node_limit = 1'000'000 );

/// Minimum cover of the table's ON-set over its variable order.
Cover minimized_cover( const TruthTable& t );

Expression minimized_soi( const TruthTable& t );
Expression minimized_noi( const TruthTable& t );

} // namespace asym
