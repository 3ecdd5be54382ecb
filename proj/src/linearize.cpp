#include "qofmin/linearize.hpp"

#include "qofmin/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace qofmin
{

std::vector<gate> expand_xor_control( gate const& terminal, std::vector<control> xor_support )
{
  if ( xor_support.empty() )
  {
    throw std::invalid_argument( "XOR support must not be empty" );
  }
  if ( !is_v_type( terminal.op ) )
  {
    throw std::invalid_argument( "only V/V+ gates can absorb an XOR control" );
  }
  std::sort( xor_support.begin(), xor_support.end() );
  for ( auto k = 1u; k < xor_support.size(); ++k )
  {
    if ( xor_support[k - 1].wire == xor_support[k].wire )
    {
      throw std::invalid_argument( "XOR support repeats a wire" );
    }
  }

  auto const power = v_power( terminal.op );
  auto const n = xor_support.size();
  if ( n == 1u )
  {
    return { make_gate( *op_from_power( power, 1u ), terminal.target, { xor_support[0] } ) };
  }

  std::vector<gate> out;
  for ( uint64_t m = 0; m < ( uint64_t{ 1 } << n ); ++m )
  {
    bool parity = false;
    std::vector<control> controls;
    for ( auto k = 0u; k < n; ++k )
    {
      bool const bit = ( m >> ( n - 1u - k ) ) & 1u;
      parity ^= ( bit == xor_support[k].positive );
      controls.push_back( { xor_support[k].wire, bit } );
    }
    if ( parity )
    {
      out.push_back( make_gate( *op_from_power( power, n ), terminal.target, std::move( controls ) ) );
    }
  }
  return out;
}

namespace
{

/* value of a wire as an XOR of original wire values plus a constant */
struct xor_value
{
  std::vector<bool> wires;
  bool constant{ false };

  bool is_identity( wire_id self ) const
  {
    return !constant && std::count( wires.begin(), wires.end(), true ) == 1 && wires[self];
  }

  xor_value& operator^=( xor_value const& other )
  {
    for ( auto k = 0u; k < wires.size(); ++k )
    {
      wires[k] = wires[k] != other.wires[k];
    }
    constant = constant != other.constant;
    return *this;
  }

  /* literals whose XOR equals this value, the constant folded into the first */
  std::vector<control> literals() const
  {
    std::vector<control> out;
    for ( wire_id w = 0; w < wires.size(); ++w )
    {
      if ( wires[w] )
      {
        out.push_back( { w, true } );
      }
    }
    if ( constant && !out.empty() )
    {
      out.front().positive = false;
    }
    return out;
  }
};

std::string position_text( std::size_t i ) { return "gate at position " + std::to_string( i ); }

} // namespace

circuit linearize_circuit( circuit const& c )
{
  auto const n = c.num_wires();
  std::vector<xor_value> value( n );
  for ( wire_id w = 0; w < n; ++w )
  {
    value[w].wires.assign( n, false );
    value[w].wires[w] = true;
  }
  auto const is_input = [&]( wire_id w ) { return c.wires()[w].role == wire_role::input; };
  auto const modified = [&]( wire_id w ) { return !value[w].is_identity( w ); };
  auto const referenced = [&]( wire_id w ) {
    for ( wire_id u = 0; u < n; ++u )
    {
      if ( u != w && is_input( u ) && modified( u ) && value[u].wires[w] )
      {
        return true;
      }
    }
    return false;
  };

  circuit out( c.wires() );
  auto const& gates = c.gates();
  for ( std::size_t i = 0; i < gates.size(); ++i )
  {
    auto const& g = gates[i];
    bool const single_x = g.op == op_kind::x && g.controls.size() <= 1u;

    if ( is_input( g.target ) )
    {
      if ( !single_x )
      {
        throw stage_error( position_text( i ) + " targets input wire '" + c.wires()[g.target].name + "' with an operator other than a CNOT" );
      }
      xor_value delta{ std::vector<bool>( n, false ), true };
      if ( !g.controls.empty() )
      {
        delta = value[g.controls[0].wire];
        delta.constant = delta.constant != !g.controls[0].positive;
      }
      value[g.target] ^= delta;
      continue;
    }

    if ( referenced( g.target ) )
    {
      throw stage_error( position_text( i ) + " changes wire '" + c.wires()[g.target].name + "' while an input still holds an XOR involving it" );
    }

    auto const dirty = std::find_if( g.controls.begin(), g.controls.end(), [&]( auto const& ctl ) { return modified( ctl.wire ); } );
    if ( dirty == g.controls.end() )
    {
      out.add_gate( g );
      continue;
    }
    if ( g.controls.size() != 1u || !( is_v_type( g.op ) || g.op == op_kind::x ) )
    {
      throw stage_error( position_text( i ) + " has several controls while input wire '" + c.wires()[dirty->wire].name + "' holds an XOR" );
    }

    auto effective = value[dirty->wire];
    effective.constant = effective.constant != !dirty->positive;
    auto const support = effective.literals();
    if ( support.empty() )
    {
      if ( effective.constant )
      {
        out.add_gate( make_gate( g.op, g.target ) );
      }
      continue;
    }
    if ( g.op == op_kind::x )
    {
      /* an XOR-controlled NOT is a fan of CNOTs */
      for ( auto const& l : effective.literals() )
      {
        out.add_gate( make_gate( op_kind::x, g.target, { { l.wire, true } } ) );
      }
      if ( effective.constant )
      {
        out.add_gate( make_gate( op_kind::x, g.target ) );
      }
      continue;
    }
    for ( auto& h : expand_xor_control( g, support ) )
    {
      out.add_gate( std::move( h ) );
    }
  }

  for ( wire_id w = 0; w < n; ++w )
  {
    if ( is_input( w ) && modified( w ) )
    {
      throw stage_error( "input wire '" + c.wires()[w].name + "' is not restored at the end of the circuit" );
    }
  }
  out.renumber_groups();
  return out;
}

} // namespace qofmin
