#pragma once

#include <asym/expr.hpp>
#include <asym/semantics.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace asym
{

/// state[target] <- 0
struct Reset
{
  std::size_t target = 0;
  friend bool operator==( const Reset&, const Reset& ) = default;
};

/// state[target] <- !state[cond] | state[target]
struct Imply
{
  std::size_t cond = 0;
  std::size_t target = 0;
  friend bool operator==( const Imply&, const Imply& ) = default;
};

using ImplyStep = std::variant<Reset, Imply>;

/*! \brief RESET/IMPLY schedule over an indexed memristor array.

  Input-bound registers are read-only. `notes` carries compiler metadata
  (allocation summary); it is not part of the text format.
*/
struct ImplyProgram
{
  std::size_t registers = 0;
  std::vector<std::pair<std::string, std::size_t>> inputs;
  std::size_t output = 0;
  std::vector<ImplyStep> steps;
  std::vector<std::string> notes;
};

/// One bit per register, 1 = conductive.
using ArrayState = std::vector<bool>;

/// Throws range_error for an index outside `s`, domain_error for cond == target.
ArrayState step_semantics( ArrayState s, const ImplyStep& step );

/// The three-step NAND: RESET s, IMPLY p s, IMPLY q s with p = r0, q = r1,
/// s = `work` (must be >= 2).
ImplyProgram compile_nand( const std::string& in1, const std::string& in2, std::size_t work = 2 );

struct CompileOptions
{
  bool peephole = true;
};

inline constexpr std::size_t max_program_inputs = 16;

/*! \brief Lowers an NOI expression (or a constant) to an IMPLY program.

  The result register is reset first; each term is computed into a work
  register and folded in with IMPLY, so the result holds the NAND of all
  terms. Inputs are bound to r0..r(n-1) in first-appearance order; work
  registers are assigned by linear scan with reuse after last use.
  Throws shape_error for other shapes and capacity_error past 16 inputs.
*/
ImplyProgram compile_noi( const Expression& e, const CompileOptions& options = {} );

struct Simulation
{
  bool output = false;
  ArrayState final_state;
  std::vector<ArrayState> trace; // state after each step
};

/// Throws eval_error when an input variable is unbound in `inputs`.
Simulation simulate( const ImplyProgram& p, const Assignment& inputs );

struct StepCount
{
  std::size_t total = 0;
  std::size_t resets = 0;
  std::size_t implies = 0;
  std::size_t registers = 0;
  friend bool operator==( const StepCount&, const StepCount& ) = default;
};

StepCount step_count( const ImplyProgram& p );

/// Truth table of the program output over the input bindings, in binding order.
TruthTable program_table( const ImplyProgram& p );

/// Throws domain_error when an index is out of range, an input register is
/// written, two inputs share a register, or an IMPLY reads and writes the
/// same register.
void validate( const ImplyProgram& p );

std::string to_text( const ImplyStep& s );
std::string to_text( const ImplyProgram& p );
/// Inverse of to_text; throws format_error on malformed text.
ImplyProgram parse_program( std::string_view text );

} // namespace asym
