#include "qofmin/quantum_decomp.hpp"

#include "qofmin/errors.hpp"

#include <stdexcept>

namespace qofmin
{

namespace
{

void require_two_control_toffoli( gate const& g, std::size_t cnot_target )
{
  if ( g.op != op_kind::x || g.controls.size() != 2u )
  {
    throw stage_error( "quantum decomposition needs an X gate with exactly two controls, got " + std::to_string( g.controls.size() ) );
  }
  if ( cnot_target > 1u )
  {
    throw std::invalid_argument( "cnot_target must be 0 or 1" );
  }
}

} // namespace

std::vector<gate> toffoli_to_5gate( gate const& g, std::size_t cnot_target, std::optional<uint32_t> group )
{
  require_two_control_toffoli( g, cnot_target );
  auto const x = g.controls[1u - cnot_target];
  auto const y = g.controls[cnot_target];
  /* wire y holds y ^ [x] between the CNOTs, so its literal becomes [y] ^ [x] */
  return {
      make_gate( op_kind::v, g.target, { x } ),
      make_gate( op_kind::v, g.target, { y } ),
      make_gate( op_kind::x, y.wire, { x }, group ),
      make_gate( op_kind::vdg, g.target, { y }, group ),
      make_gate( op_kind::x, y.wire, { x }, group ),
  };
}

std::vector<gate> toffoli_to_7gate( gate const& g, std::size_t cnot_target, std::optional<uint32_t> group )
{
  std::vector<gate> out;
  for ( auto const& h : toffoli_to_5gate( g, cnot_target, group ) )
  {
    if ( h.op == op_kind::x )
    {
      auto half = h;
      half.op = op_kind::v;
      out.push_back( half );
      out.push_back( half );
    }
    else
    {
      out.push_back( h );
    }
  }
  return out;
}

circuit peres( int variant )
{
  circuit c;
  auto const a = c.add_wire( "a", wire_role::input );
  auto const b = c.add_wire( "b", wire_role::input );
  auto const t = c.add_wire( "c", wire_role::output );
  control const ca{ a, true }, cb{ b, true };
  switch ( variant )
  {
  case 1:
    c.add_gate( make_gate( op_kind::v, t, { ca } ) );
    c.add_gate( make_gate( op_kind::v, t, { cb } ) );
    c.add_gate( make_gate( op_kind::x, b, { ca } ) );
    c.add_gate( make_gate( op_kind::vdg, t, { cb } ) );
    break;
  case 2:
    c.add_gate( make_gate( op_kind::vdg, t, { ca } ) );
    c.add_gate( make_gate( op_kind::vdg, t, { cb } ) );
    c.add_gate( make_gate( op_kind::x, b, { ca } ) );
    c.add_gate( make_gate( op_kind::v, t, { cb } ) );
    break;
  case 3:
    c.add_gate( make_gate( op_kind::v, t, { cb } ) );
    c.add_gate( make_gate( op_kind::x, b, { ca } ) );
    c.add_gate( make_gate( op_kind::vdg, t, { cb } ) );
    c.add_gate( make_gate( op_kind::v, t, { ca } ) );
    break;
  default:
    throw std::invalid_argument( "Peres variant must be 1, 2 or 3" );
  }
  return c;
}

circuit decompose_quantum( circuit const& c, quantum_options const& options )
{
  circuit out( c.wires() );
  uint32_t group = 0;
  for ( auto const& g : c.gates() )
  {
    if ( g.op != op_kind::x || g.controls.size() < 2u )
    {
      auto copy = g;
      copy.group.reset();
      out.add_gate( std::move( copy ) );
      continue;
    }
    if ( g.controls.size() > 2u )
    {
      throw stage_error( "X gate with " + std::to_string( g.controls.size() ) + " controls; run decompose-classical first" );
    }
    auto is_input = [&]( control const& ctl ) { return c.wires()[ctl.wire].role == wire_role::input; };
    std::size_t y = 1u;
    if ( is_input( g.controls[0] ) && !is_input( g.controls[1] ) )
    {
      y = 0u;
    }
    auto seq = options.cv_only ? toffoli_to_7gate( g, y, group ) : toffoli_to_5gate( g, y, group );
    ++group;
    for ( auto& h : seq )
    {
      out.add_gate( std::move( h ) );
    }
  }
  return out;
}

circuit cnots_to_cv_pairs( circuit const& c )
{
  circuit out( c.wires() );
  for ( auto const& g : c.gates() )
  {
    if ( g.op == op_kind::x && g.controls.size() == 1u )
    {
      auto half = g;
      half.op = op_kind::v;
      out.add_gate( half );
      out.add_gate( half );
    }
    else
    {
      out.add_gate( g );
    }
  }
  return out;
}

bound_check check_upper_bound_rm2( esop_expr const& e )
{
  bound_check check;
  auto const classical = decompose_classical( esop_to_cascade( e ), { .uncompute = false } );
  check.actual = decompose_quantum( classical ).num_gates();
  check.bound = e.terms().size();
  for ( auto const& t : e.terms() )
  {
    if ( t.literals.size() >= 2u )
    {
      check.bound += 5u * ( std::size_t{ 1 } << ( t.literals.size() - 2u ) );
    }
  }
  return check;
}

} // namespace qofmin
