#include <asym/laws.hpp>

#include <asym/error.hpp>
#include <asym/parse.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <tuple>

namespace asym
{

Pattern pattern( std::string_view text )
{
  return Pattern{ parse( text ) };
}

namespace
{

struct equation
{
  char const* name;
  char const* lhs;
  char const* rhs;
  char const* citation;
};

// Each equation yields "name" (lhs => rhs) and "name-rev" (rhs => lhs); the
// reverse is dropped when it would introduce a metavariable.
constexpr equation asymmetric_laws[] = {
    // interaction with constants
    { "annulment-iand-right", "X @ 1", "0", "Annulment Law (IAND)" },
    { "annulment-iand-left", "0 @ X", "0", "Annulment Law (IAND)" },
    { "annulment-imply-right", "X -> 1", "1", "Annulment Law (IMPLY)" },
    { "inversion-law-iand", "1 @ X", "!X", "Inversion Law (IAND)" },
    { "inversion-law-imply", "X -> 0", "!X", "Inversion Law (IMPLY)" },
    { "identity-law-iand", "X @ 0", "X", "Identity Law (IAND)" },
    { "identity-law-imply", "1 -> X", "X", "Identity Law (IMPLY)" },
    // idempotency variants
    { "null-idempotency-iand", "X @ X", "0", "Null Idempotency (IAND)" },
    { "null-idempotency-imply", "X -> X", "1", "Null Idempotency (IMPLY)" },
    { "inverse-idempotency-i-iand", "X @ !X", "X", "Inverse Idempotency I (IAND)" },
    { "inverse-idempotency-i-imply", "X -> !X", "!X", "Inverse Idempotency I (IMPLY)" },
    { "inverse-idempotency-ii-iand", "!X @ X", "!X", "Inverse Idempotency II (IAND)" },
    { "inverse-idempotency-ii-imply", "!X -> X", "X", "Inverse Idempotency II (IMPLY)" },
    // commutation and associativity
    { "asymmetric-commutation-iand", "X @ Y", "!Y @ !X", "Asymmetric Commutation (IAND)" },
    { "asymmetric-commutation-imply", "X -> Y", "!Y -> !X", "Asymmetric Commutation (IMPLY)" },
    { "non-inverting-assoc-iand", "X @ Y @ Z", "X @ Z @ Y", "Non-Inverting Associativity (IAND)" },
    { "non-inverting-assoc-imply", "X -> Y -> Z", "Y -> X -> Z", "Non-Inverting Associativity (IMPLY)" },
    { "inverting-assoc-iand", "X @ Y @ Z", "!Y @ !X @ Z", "Inverting Associativity (IAND)" },
    { "inverting-assoc-iand-2", "X @ Y @ Z", "!Z @ Y @ !X", "Inverting Associativity (IAND)" },
    { "inverting-assoc-iand-3", "X @ Y @ Z", "!Z @ !X @ Y", "Inverting Associativity (IAND)" },
    { "inverting-assoc-imply", "X -> Y -> Z", "!Z -> Y -> !X", "Inverting Associativity (IMPLY)" },
    { "inverting-assoc-imply-2", "X -> Y -> Z", "X -> !Z -> !Y", "Inverting Associativity (IMPLY)" },
    { "inverting-assoc-imply-3", "X -> Y -> Z", "Y -> !Z -> !X", "Inverting Associativity (IMPLY)" },
    // distributive laws
    { "distributive-law-i-iand", "X @ (Y & Z)", "(X @ Y) | (X @ Z)", "Distributive Law I (IAND)" },
    { "distributive-law-i-imply", "X -> (Y & Z)", "(X -> Y) & (X -> Z)", "Distributive Law I (IMPLY)" },
    { "distributive-law-ii-iand", "(X @ Y) & Z", "X @ Y @ !Z", "Distributive Law II (IAND)" },
    { "distributive-law-ii-imply", "(X -> Y) & Z", "(!X & Z) | (Y & Z)", "Distributive Law II (IMPLY)" },
    { "distributive-law-iii-iand", "(X | Y) @ Z", "(X @ Z) | (Y @ Z)", "Distributive Law III (IAND)" },
    { "distributive-law-iii-imply", "(X | Y) -> Z", "(X -> Z) & (Y -> Z)", "Distributive Law III (IMPLY)" },
    { "distributive-law-iv-iand", "X @ (Y | Z)", "(X @ Y) & (X @ Z)", "Distributive Law IV (IAND)" },
    { "distributive-law-iv-imply", "X -> (Y | Z)", "(X -> Y) | Z", "Distributive Law IV (IMPLY)" },
    { "distributive-law-iv-imply-chain", "X -> (Y | Z)", "X -> !Y -> Z", "Distributive Law IV (IMPLY)" },
    { "distributive-law-v-iand", "X & (Y @ Z)", "(X & Y) @ Z", "Distributive Law V (IAND)" },
    { "distributive-law-v-iand-chain", "X & (Y @ Z)", "X @ !Y @ Z", "Distributive Law V (IAND)" },
    { "distributive-law-v-imply", "X & (Y -> Z)", "(X & !Y) | (X & Z)", "Distributive Law V (IMPLY)" },
    { "distributive-law-vi-iand", "X | (Y @ Z)", "(X | Y) & (X | !Z)", "Distributive Law VI (IAND)" },
    { "distributive-law-vi-imply", "X | (Y -> Z)", "!X -> Y -> Z", "Distributive Law VI (IMPLY)" },
    { "distributive-law-vii-iand", "(X @ Y) | Z", "(X | Z) & (!Y | Z)", "Distributive Law VII (IAND)" },
    { "distributive-law-vii-imply", "(X & Y) -> Z", "X -> Y -> Z", "Distributive Law VII (IMPLY)" },
    // De Morgan for ordered operands
    { "demorgan-iand-to-or", "!(X @ Y)", "!X | Y", "De Morgan's Law (IAND)" },
    { "demorgan-imply-to-and", "!(X -> Y)", "X & !Y", "De Morgan's Law (IMPLY)" },
    { "demorgan-or-to-iand", "!(X | Y)", "!X @ Y", "De Morgan's Law, converse (IAND)" },
    { "demorgan-and-to-imply", "!(X & Y)", "X -> !Y", "De Morgan's Law, converse (IMPLY)" },
    { "demorgan-iand3-to-or", "!(X @ Y @ Z)", "!X | Y | Z", "De Morgan's Law, three inputs (IAND)" },
    { "demorgan-imply3-to-and", "!(X -> Y -> Z)", "X & Y & !Z", "De Morgan's Law, three inputs (IMPLY)" },
    { "demorgan-or3-to-iand", "!(X | Y | Z)", "!X @ Y @ Z", "De Morgan's Law, three inputs, converse (IAND)" },
    { "demorgan-and3-to-imply", "!(X & Y & Z)", "X -> Y -> !Z", "De Morgan's Law, three inputs, converse (IMPLY)" },
    // IAND / IMPLY relationship
    { "duality-nimply-to-iand", "!(X -> Y)", "X @ Y", "IAND/IMPLY De Morgan duality" },
    { "duality-nimply-to-iand-commuted", "!(X -> Y)", "!Y @ !X", "IAND/IMPLY De Morgan duality" },
    { "duality-nimply3-to-iand", "!(X -> Y -> Z)", "!Z @ !Y @ !X", "IAND/IMPLY De Morgan duality" },
    { "duality-niand-to-imply", "!(X @ Y)", "!Y -> !X", "IAND/IMPLY De Morgan duality" },
    { "duality-niand3-to-imply", "!(X @ Y @ Z)", "!Z -> !Y -> !X", "IAND/IMPLY De Morgan duality" },
};

constexpr equation classical_laws[] = {
    { "and-identity-right", "X & 1", "X", "classical AND identity" },
    { "and-identity-left", "1 & X", "X", "classical AND identity" },
    { "and-annulment-right", "X & 0", "0", "classical AND annulment" },
    { "and-annulment-left", "0 & X", "0", "classical AND annulment" },
    { "and-idempotency", "X & X", "X", "classical AND idempotency" },
    { "and-complement-right", "X & !X", "0", "classical AND complement" },
    { "and-complement-left", "!X & X", "0", "classical AND complement" },
    { "or-identity-right", "X | 0", "X", "classical OR identity" },
    { "or-identity-left", "0 | X", "X", "classical OR identity" },
    { "or-annulment-right", "X | 1", "1", "classical OR annulment" },
    { "or-annulment-left", "1 | X", "1", "classical OR annulment" },
    { "or-idempotency", "X | X", "X", "classical OR idempotency" },
    { "or-complement-right", "X | !X", "1", "classical OR complement" },
    { "or-complement-left", "!X | X", "1", "classical OR complement" },
    { "imply-from-false", "0 -> X", "1", "classical implication from 0" },
};

bool metavariables_covered( const Pattern& from, const Pattern& to )
{
  auto const have = from.metavariables();
  for ( auto const& v : to.metavariables() )
  {
    if ( std::find( have.begin(), have.end(), v ) == have.end() )
    {
      return false;
    }
  }
  return true;
}

std::vector<RewriteRule> build_rules( std::span<const equation> equations, bool admit_reverse )
{
  std::vector<RewriteRule> rules;
  for ( auto const& eq : equations )
  {
    RewriteRule fwd{ eq.name, pattern( eq.lhs ), pattern( eq.rhs ), eq.citation };
    if ( !metavariables_covered( fwd.lhs, fwd.rhs ) )
    {
      throw domain_error( "laws", std::string( "rule " ) + eq.name + " introduces a metavariable" );
    }
    bool const reversible = admit_reverse && metavariables_covered( fwd.rhs, fwd.lhs );
    rules.push_back( fwd );
    if ( reversible )
    {
      rules.push_back( RewriteRule{ std::string( eq.name ) + "-rev", fwd.rhs, fwd.lhs, eq.citation } );
    }
  }
  for ( auto const& r : rules )
  {
    auto const report = verify_rule( r );
    if ( report.status != RuleStatus::proven )
    {
      throw domain_error( "laws", "rule " + r.name + " is refuted at " + report.counterexample->to_string() );
    }
  }
  return rules;
}

} // namespace

const std::vector<RewriteRule>& catalog()
{
  static const std::vector<RewriteRule> rules = build_rules( asymmetric_laws, true );
  return rules;
}

const std::vector<RewriteRule>& support_rules()
{
  static const std::vector<RewriteRule> rules = build_rules( classical_laws, false );
  return rules;
}

const std::vector<LawFixture>& fixtures()
{
  static const std::vector<LawFixture> all = [] {
    auto const p = []( std::string_view s ) { return parse( s ); };
    auto const imply3 = p( "A -> B -> C" );
    return std::vector<LawFixture>{
        { "non-associativity-iand", p( "(A @ B) @ C" ), p( "A @ (B @ C)" ),
          "Conventional Non-Associativity (IAND)", RuleStatus::refuted },
        { "non-associativity-imply", p( "(A -> B) -> C" ), p( "A -> (B -> C)" ),
          "Conventional Non-Associativity (IMPLY)", RuleStatus::refuted },
        { "non-commutativity-iand", p( "A @ B" ), p( "B @ A" ), "Non-Commutativity (IAND)",
          RuleStatus::refuted },
        { "non-commutativity-imply", p( "A -> B" ), p( "B -> A" ), "Non-Commutativity (IMPLY)",
          RuleStatus::refuted },
        { "duality-iand-example", dual( p( "A @ B @ C" ) ), p( "A | !B | !C" ),
          "Principle of Duality, IAND example", RuleStatus::proven },
        { "duality-imply-procedure", dual( imply3 ), p( "!A & !B & C" ),
          "Principle of Duality, IMPLY chain via operator replacement", RuleStatus::proven },
        // an OR form is sometimes quoted as this dual; operator replacement
        // and the table-level dual both give the AND form above
        { "duality-imply-or-form", dual( imply3 ), p( "!A | !B | C" ),
          "Principle of Duality, IMPLY chain in OR form (not the dual)",
          RuleStatus::refuted },
    };
  }();
  return all;
}

namespace
{

RuleReport compare_sides( const std::string& name, const std::string& citation, const Expression& lhs,
                          const Expression& rhs )
{
  auto const vars = merge_variables( variables( lhs ), variables( rhs ) );
  if ( vars.size() > 10u )
  {
    throw capacity_error( "laws", name + " has " + std::to_string( vars.size() ) + " metavariables (limit 10)" );
  }
  auto const verdict = equivalent( lhs, rhs, vars );
  RuleReport report;
  report.name = name;
  report.citation = citation;
  report.rows = std::uint64_t{ 1 } << vars.size();
  report.status = verdict.equal ? RuleStatus::proven : RuleStatus::refuted;
  report.counterexample = verdict.counterexample;
  return report;
}

} // namespace

RuleReport verify_rule( const RewriteRule& r )
{
  return compare_sides( r.name, r.citation, r.lhs.tree, r.rhs.tree );
}

RuleReport verify_fixture( const LawFixture& f )
{
  return compare_sides( f.name, f.citation, f.lhs, f.rhs );
}

std::string to_string( RuleStatus s )
{
  return s == RuleStatus::proven ? "Proven" : "Refuted";
}

std::string to_json_line( const RuleReport& report )
{
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["citation"] = report.citation;
  j["status"] = to_string( report.status );
  j["rows"] = report.rows;
  if ( report.counterexample )
  {
    nlohmann::ordered_json cex = nlohmann::ordered_json::object();
    for ( auto const& [var, bit] : report.counterexample->entries() )
    {
      cex[var] = bit ? 1 : 0;
    }
    j["counterexample"] = cex;
  }
  return j.dump();
}

/* ---------------------------------------------------------------------- */
/* matching                                                               */
/* ---------------------------------------------------------------------- */

namespace
{

using bindings = std::map<std::string, Expression>;

bool match( const Expression& p, const Expression& s, bindings& b );

bool bind_meta( const std::string& meta, const Expression& s, bindings& b )
{
  auto it = b.find( meta );
  if ( it != b.end() )
  {
    return it->second == s;
  }
  b.emplace( meta, s );
  return true;
}

bool match_children( std::span<const Expression> ps, std::span<const Expression> ss, bindings& b )
{
  if ( ps.size() != ss.size() )
  {
    return false;
  }
  for ( std::size_t i = 0; i < ps.size(); ++i )
  {
    if ( !match( ps[i], ss[i], b ) )
    {
      return false;
    }
  }
  return true;
}

bool match( const Expression& p, const Expression& s, bindings& b )
{
  switch ( p.kind() )
  {
  case Kind::variable:
    return bind_meta( p.name(), s, b );
  case Kind::constant:
    return s.is_constant() && s.value() == p.value();
  case Kind::negation:
  {
    auto const& inner = p.operands()[0];
    if ( s.is_negation() )
    {
      return match( inner, s.operands()[0], b );
    }
    // !X also matches a non-negated subject s, binding X to !s
    if ( inner.is_variable() )
    {
      return bind_meta( inner.name(), normalize_not( negation( s ) ), b );
    }
    return false;
  }
  default:
    return p.kind() == s.kind() && match_children( p.operands(), s.operands(), b );
  }
}

Expression instantiate( const Expression& p, const bindings& b )
{
  switch ( p.kind() )
  {
  case Kind::variable:
    return b.at( p.name() );
  case Kind::constant:
    return p;
  default:
  {
    std::vector<Expression> children;
    for ( auto const& c : p.operands() )
    {
      children.push_back( instantiate( c, b ) );
    }
    return with_operands( p, std::move( children ) );
  }
  }
}

struct site
{
  std::size_t window; // 0 for an exact match, otherwise 1 + offset of the matched run
  Expression replacement;
};

/* All ways `r` rewrites the node `s` itself, in window order. */
std::vector<site> sites_at( const Expression& s, const RewriteRule& r )
{
  std::vector<site> out;
  auto const& p = r.lhs.tree;
  {
    bindings b;
    if ( match( p, s, b ) )
    {
      out.push_back( { 0u, instantiate( r.rhs.tree, b ) } );
    }
  }
  if ( p.kind() != s.kind() || p.arity() >= s.arity() || p.arity() < 2u )
  {
    return out;
  }

  auto const ops = s.operands();
  auto const k = ops.size();
  auto const m = p.arity();

  auto try_window = [&]( std::size_t offset ) -> std::optional<Expression> {
    bindings b;
    if ( !match_children( p.operands(), ops.subspan( offset, m ), b ) )
    {
      return std::nullopt;
    }
    return instantiate( r.rhs.tree, b );
  };

  switch ( s.kind() )
  {
  case Kind::iand_chain:
    // the head run (x1..xm) is itself a chain: ((x1 @ .. @ xm) @ x(m+1)) ..
    if ( auto rhs = try_window( 0u ) )
    {
      std::vector<Expression> rest{ *rhs };
      rest.insert( rest.end(), ops.begin() + m, ops.end() );
      out.push_back( { 1u, iand_chain( std::move( rest ) ) } );
    }
    break;
  case Kind::imply_chain:
    if ( auto rhs = try_window( k - m ) )
    {
      std::vector<Expression> rest( ops.begin(), ops.begin() + ( k - m ) );
      rest.push_back( *rhs );
      out.push_back( { 1u + k - m, imply_chain( std::move( rest ) ) } );
    }
    break;
  case Kind::conjunction:
  case Kind::disjunction:
    for ( std::size_t offset = 0; offset + m <= k; ++offset )
    {
      auto rhs = try_window( offset );
      if ( !rhs )
      {
        continue;
      }
      std::vector<Expression> children( ops.begin(), ops.begin() + offset );
      if ( rhs->kind() == s.kind() )
      {
        children.insert( children.end(), rhs->operands().begin(), rhs->operands().end() );
      }
      else
      {
        children.push_back( *rhs );
      }
      children.insert( children.end(), ops.begin() + offset + m, ops.end() );
      out.push_back( { 1u + offset, children.size() == 1u ? children.front() : with_operands( s, children ) } );
    }
    break;
  default:
    break;
  }
  return out;
}

} // namespace

Expression rewrite_once( const Expression& e, const RewriteRule& r, const Path& position )
{
  auto const& target = subterm( e, position );
  auto const found = sites_at( target, r );
  if ( found.empty() )
  {
    throw match_error( "laws", "rule " + r.name + " does not match at position " + to_string( position ) );
  }
  return normalize_not( replace_at( e, position, found.front().replacement ) );
}

Cost cost( const Expression& e )
{
  return { literal_count( e ), operator_count( e ), node_count( e ) };
}

SimplifyResult simplify( const Expression& e, std::size_t budget )
{
  SimplifyResult out{ normalize_not( e ), {} };
  std::vector<const RewriteRule*> rules;
  for ( auto const& r : catalog() )
  {
    rules.push_back( &r );
  }
  for ( auto const& r : support_rules() )
  {
    rules.push_back( &r );
  }

  for ( std::size_t step = 0; step < budget; ++step )
  {
    auto const current = cost( out.result );
    struct candidate
    {
      Cost c;
      const RewriteRule* rule;
      Path position;
      std::size_t window;
      Expression result;
    };
    std::optional<candidate> best;
    auto const better = []( const candidate& a, const candidate& b ) {
      return std::tie( a.c, a.rule->name, a.position, a.window ) < std::tie( b.c, b.rule->name, b.position, b.window );
    };

    for ( auto const& pos : positions( out.result ) )
    {
      auto const& target = subterm( out.result, pos );
      for ( auto const* rule : rules )
      {
        for ( auto& s : sites_at( target, *rule ) )
        {
          auto result = normalize_not( replace_at( out.result, pos, s.replacement ) );
          candidate cand{ cost( result ), rule, pos, s.window, std::move( result ) };
          if ( !( cand.c < current ) )
          {
            continue;
          }
          if ( !best || better( cand, *best ) )
          {
            best = std::move( cand );
          }
        }
      }
    }
    if ( !best )
    {
      break;
    }
    out.trace.push_back( { best->rule->name, best->position, best->result } );
    out.result = best->result;
  }

#ifndef NDEBUG
  auto const vars = merge_variables( variables( e ), variables( out.result ) );
  if ( vars.size() <= 16u && !equivalent( e, out.result, vars ).equal )
  {
    throw domain_error( "laws", "simplify changed the function of " + format( e ) );
  }
#endif
  return out;
}

namespace
{

Expression dual_rec( const Expression& e )
{
  auto const ops = e.operands();
  std::vector<Expression> children;
  switch ( e.kind() )
  {
  case Kind::constant:
    return constant( !e.value() );
  case Kind::variable:
    return e;
  case Kind::negation:
    return negation( dual_rec( ops[0] ) );
  case Kind::conjunction:
    for ( auto const& c : ops )
    {
      children.push_back( dual_rec( c ) );
    }
    return disjunction( std::move( children ) );
  case Kind::disjunction:
    for ( auto const& c : ops )
    {
      children.push_back( dual_rec( c ) );
    }
    return conjunction( std::move( children ) );
  case Kind::iand_chain:
    // IAND -> OR, inverted inputs complemented
    children.push_back( dual_rec( ops[0] ) );
    for ( std::size_t i = 1; i < ops.size(); ++i )
    {
      children.push_back( negation( dual_rec( ops[i] ) ) );
    }
    return disjunction( std::move( children ) );
  case Kind::imply_chain:
    // IMPLY -> AND, inverted inputs complemented
    for ( std::size_t i = 0; i + 1 < ops.size(); ++i )
    {
      children.push_back( negation( dual_rec( ops[i] ) ) );
    }
    children.push_back( dual_rec( ops.back() ) );
    return conjunction( std::move( children ) );
  }
  return e;
}

} // namespace

Expression dual( const Expression& e )
{
  auto result = normalize_not( dual_rec( e ) );
#ifndef NDEBUG
  auto const vars = variables( e );
  if ( vars.size() <= 16u && truth_table( result, vars ) != classical_dual_tt( truth_table( e, vars ) ) )
  {
    throw domain_error( "laws", "dual disagrees with the semantic dual for " + format( e ) );
  }
#endif
  return result;
}

Expression demorgan_dual_expr( const Expression& e )
{
  std::vector<Expression> ops( e.operands().begin(), e.operands().end() );
  switch ( e.kind() )
  {
  // same operand list: flattening here would regroup a nested operand
  case Kind::iand_chain:
    return unflattened_chain( Kind::imply_chain, std::move( ops ) );
  case Kind::imply_chain:
    return unflattened_chain( Kind::iand_chain, std::move( ops ) );
  default:
    throw domain_error( "laws", "De Morgan dual expects an IAND or IMPLY chain, got " + format( e ) );
  }
}

} // namespace asym
