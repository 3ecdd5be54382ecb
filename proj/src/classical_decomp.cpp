#include "qofmin/classical_decomp.hpp"

#include "qofmin/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace qofmin
{

circuit esop_to_cascade( esop_expr const& e )
{
  circuit c;
  for ( auto v = 0u; v < e.arity(); ++v )
  {
    c.add_wire( std::string( 1, static_cast<char>( 'a' + v ) ), wire_role::input );
  }
  auto const t = c.add_wire( "t", wire_role::output );
  for ( auto const& term : e.terms() )
  {
    std::vector<control> controls;
    for ( auto const& l : term.literals )
    {
      controls.push_back( { l.var, l.positive } );
    }
    c.add_gate( make_gate( op_kind::x, t, std::move( controls ) ) );
  }
  return c;
}

std::vector<gate> decompose_toffoli( gate const& g, std::span<wire_id const> ancillas, bool uncompute )
{
  auto const n = g.controls.size();
  if ( g.op != op_kind::x || n <= 2u )
  {
    return { g };
  }
  if ( ancillas.size() < n - 2u )
  {
    throw stage_error( "decomposing a " + std::to_string( n ) + "-control Toffoli needs " + std::to_string( n - 2u ) + " ancillas, got " +
                       std::to_string( ancillas.size() ) );
  }

  std::vector<gate> compute;
  compute.push_back( make_gate( op_kind::x, ancillas[0], { g.controls[0], g.controls[1] }, g.group ) );
  for ( auto k = 1u; k < n - 2u; ++k )
  {
    compute.push_back( make_gate( op_kind::x, ancillas[k], { { ancillas[k - 1], true }, g.controls[k + 1] }, g.group ) );
  }

  std::vector<gate> out = compute;
  out.push_back( make_gate( op_kind::x, g.target, { { ancillas[n - 3u], true }, g.controls[n - 1u] }, g.group ) );
  if ( uncompute )
  {
    out.insert( out.end(), compute.rbegin(), compute.rend() );
  }
  return out;
}

namespace
{

std::string fresh_ancilla_name( circuit const& c )
{
  for ( auto k = 1u;; ++k )
  {
    auto name = "t" + std::to_string( k );
    if ( !c.find_wire( name ) )
    {
      return name;
    }
  }
}

} // namespace

circuit decompose_classical( circuit const& c, classical_options const& options )
{
  circuit out( c.wires() );

  /* ancillas no gate of the input touches are free to use */
  std::vector<wire_id> clean;
  for ( auto w : c.wires_with_role( wire_role::ancilla ) )
  {
    bool const used = std::any_of( c.gates().begin(), c.gates().end(), [w]( auto const& g ) { return g.touches( w ); } );
    if ( !used )
    {
      clean.push_back( w );
    }
  }

  uint32_t next_group = 0;
  for ( auto const& g : c.gates() )
  {
    if ( g.group )
    {
      next_group = std::max( next_group, *g.group + 1u );
    }
  }

  for ( auto const& g : c.gates() )
  {
    if ( g.op != op_kind::x || g.controls.size() <= 2u )
    {
      out.add_gate( g );
      continue;
    }
    auto const needed = g.controls.size() - 2u;
    while ( clean.size() < needed )
    {
      clean.push_back( out.add_wire( fresh_ancilla_name( out ), wire_role::ancilla ) );
    }
    std::sort( clean.begin(), clean.end() );
    std::vector<wire_id> const use( clean.begin(), clean.begin() + needed );

    auto tagged = g;
    tagged.group = next_group++;
    for ( auto& d : decompose_toffoli( tagged, use, options.uncompute ) )
    {
      out.add_gate( std::move( d ) );
    }
    if ( !options.uncompute )
    {
      clean.erase( clean.begin(), clean.begin() + needed );
    }
  }
  out.renumber_groups();
  return out;
}

circuit drop_ancilla_restores( circuit const& c )
{
  std::vector<bool> live( c.num_wires(), false );
  std::vector<gate> kept;
  for ( auto it = c.gates().rbegin(); it != c.gates().rend(); ++it )
  {
    if ( c.wires()[it->target].role == wire_role::ancilla && !live[it->target] )
    {
      continue;
    }
    for ( auto const& ctl : it->controls )
    {
      live[ctl.wire] = true;
    }
    kept.push_back( *it );
  }
  std::reverse( kept.begin(), kept.end() );
  circuit out( c.wires() );
  out.set_gates( std::move( kept ) );
  out.renumber_groups();
  return out;
}

bound_check check_upper_bound_rm1( esop_expr const& e )
{
  bound_check check;
  check.actual = decompose_classical( esop_to_cascade( e ), { .uncompute = true } ).num_gates();
  check.bound = e.terms().size();
  for ( auto const& t : e.terms() )
  {
    if ( t.literals.size() > 2u )
    {
      check.bound += std::size_t{ 1 } << ( t.literals.size() - 2u );
    }
  }
  return check;
}

} // namespace qofmin
