#pragma once

#include <asym/expr.hpp>
#include <asym/semantics.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace asym
{

enum class GateKind
{
  OR,  // a | b
  IAND // a & !b
};

/*! \brief Reference to a netlist signal.

  Primary inputs are dual-rail: both `in:A` and `in:!A` are available at
  depth 0. Text form: "in:A", "in:!A", "g<i>", "const:0", "const:1".
*/
struct Signal
{
  enum class Source
  {
    input,
    input_complement,
    gate,
    const0,
    const1
  };

  Source source = Source::const0;
  std::string name;     // input and input_complement
  std::size_t gate = 0; // gate

  static Signal input( std::string name, bool complemented = false );
  static Signal of_gate( std::size_t index );
  static Signal constant( bool value );

  std::string to_string() const;
  /// Throws format_error.
  static Signal from_string( std::string_view text );

  friend bool operator==( const Signal&, const Signal& ) = default;
};

struct Gate
{
  GateKind kind = GateKind::OR;
  Signal a; // IAND: non-inverted operand
  Signal b; // IAND: inverted operand
  friend bool operator==( const Gate&, const Gate& ) = default;
};

/// Gates are topologically ordered: gate i reads primary inputs or gates < i.
struct Netlist
{
  std::vector<std::string> inputs;
  std::vector<Gate> gates;
  Signal output;
};

/// Throws domain_error on forward/self references or unknown inputs.
void validate( const Netlist& n );

/*! \brief Maps an SOI expression onto two-input OR/IAND gates.

  Each IAND chain becomes a left-fold cascade, the outer OR a balanced tree
  (left half gets the extra term). Constants are folded before emission.
  Throws shape_error for non-SOI input.
*/
Netlist compile_soi( const Expression& e );

/// Throws eval_error for an unbound input.
bool simulate_netlist( const Netlist& n, const Assignment& inputs );

/// Output truth table over the netlist's input order.
TruthTable netlist_table( const Netlist& n );

struct NetlistStats
{
  std::size_t gates = 0;
  std::size_t depth = 0;
  std::size_t iand = 0;
  std::size_t or_gates = 0;
  friend bool operator==( const NetlistStats&, const NetlistStats& ) = default;
};

NetlistStats netlist_stats( const Netlist& n );

std::string to_text( const Netlist& n );
/// Inverse of to_text; throws format_error on malformed text.
Netlist parse_netlist( std::string_view text );

} // namespace asym
