#include "qofmin/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qofmin
{

uint32_t v_power( op_kind op )
{
  switch ( op )
  {
  case op_kind::x:
    return 2u;
  case op_kind::v:
  case op_kind::virt_v:
    return 1u;
  case op_kind::vdg:
  case op_kind::virt_vdg:
    return 3u;
  }
  return 0u;
}

bool is_virtual( op_kind op )
{
  return op == op_kind::virt_v || op == op_kind::virt_vdg;
}

bool is_v_type( op_kind op )
{
  return op != op_kind::x;
}

op_kind inverse( op_kind op )
{
  switch ( op )
  {
  case op_kind::v:
    return op_kind::vdg;
  case op_kind::vdg:
    return op_kind::v;
  case op_kind::virt_v:
    return op_kind::virt_vdg;
  case op_kind::virt_vdg:
    return op_kind::virt_v;
  case op_kind::x:
    break;
  }
  return op_kind::x;
}

std::optional<op_kind> op_from_power( uint32_t power, std::size_t num_controls )
{
  switch ( power % 4u )
  {
  case 1u:
    return num_controls > 1u ? op_kind::virt_v : op_kind::v;
  case 2u:
    return op_kind::x;
  case 3u:
    return num_controls > 1u ? op_kind::virt_vdg : op_kind::vdg;
  default:
    return std::nullopt;
  }
}

std::string_view to_string( op_kind op )
{
  switch ( op )
  {
  case op_kind::x:
    return "X";
  case op_kind::v:
    return "V";
  case op_kind::vdg:
    return "V+";
  case op_kind::virt_v:
    return "~V";
  case op_kind::virt_vdg:
    return "~V+";
  }
  return "?";
}

bool gate::controls_wire( wire_id w ) const
{
  return std::any_of( controls.begin(), controls.end(), [w]( auto const& c ) { return c.wire == w; } );
}

gate make_gate( op_kind op, wire_id target, std::vector<control> controls, std::optional<uint32_t> group )
{
  std::sort( controls.begin(), controls.end() );
  return gate{ std::move( controls ), target, op, group };
}

std::string_view to_string( wire_role role )
{
  switch ( role )
  {
  case wire_role::input:
    return "input";
  case wire_role::ancilla:
    return "ancilla";
  case wire_role::output:
    return "output";
  }
  return "input";
}

std::optional<wire_role> role_from_string( std::string_view s )
{
  if ( s == "input" )
    return wire_role::input;
  if ( s == "ancilla" )
    return wire_role::ancilla;
  if ( s == "output" )
    return wire_role::output;
  return std::nullopt;
}

wire_id circuit::add_wire( std::string name, wire_role role )
{
  if ( find_wire( name ) )
  {
    throw std::invalid_argument( "duplicate wire name '" + name + "'" );
  }
  wires_.push_back( { std::move( name ), role } );
  return static_cast<wire_id>( wires_.size() - 1u );
}

void circuit::add_gate( gate g )
{
  std::sort( g.controls.begin(), g.controls.end() );
  gates_.push_back( std::move( g ) );
}

std::optional<wire_id> circuit::find_wire( std::string_view name ) const
{
  for ( auto i = 0u; i < wires_.size(); ++i )
  {
    if ( wires_[i].name == name )
    {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<wire_id> circuit::wires_with_role( wire_role role ) const
{
  std::vector<wire_id> ids;
  for ( auto i = 0u; i < wires_.size(); ++i )
  {
    if ( wires_[i].role == role )
    {
      ids.push_back( i );
    }
  }
  return ids;
}

std::optional<wire_id> circuit::output_wire() const
{
  auto outs = wires_with_role( wire_role::output );
  if ( outs.empty() )
  {
    return std::nullopt;
  }
  return outs.front();
}

void circuit::validate() const
{
  std::set<uint32_t> closed_groups;
  std::optional<uint32_t> open_group;
  for ( auto i = 0u; i < gates_.size(); ++i )
  {
    auto const& g = gates_[i];
    auto const where = " (gate " + std::to_string( i ) + ")";
    if ( g.target >= wires_.size() )
    {
      throw std::invalid_argument( "target wire out of range" + where );
    }
    for ( auto k = 0u; k < g.controls.size(); ++k )
    {
      auto const w = g.controls[k].wire;
      if ( w >= wires_.size() )
      {
        throw std::invalid_argument( "control wire out of range" + where );
      }
      if ( w == g.target )
      {
        throw std::invalid_argument( "target is also a control" + where );
      }
      if ( k > 0 && g.controls[k - 1].wire >= w )
      {
        throw std::invalid_argument( "control wires must be distinct and sorted" + where );
      }
    }
    if ( g.group != open_group )
    {
      if ( open_group )
      {
        closed_groups.insert( *open_group );
      }
      if ( g.group && closed_groups.count( *g.group ) )
      {
        throw std::invalid_argument( "group " + std::to_string( *g.group ) + " is not contiguous" + where );
      }
      open_group = g.group;
    }
  }
}

void circuit::renumber_groups()
{
  std::map<uint32_t, uint32_t> mapping;
  for ( auto& g : gates_ )
  {
    if ( g.group )
    {
      auto [it, inserted] = mapping.try_emplace( *g.group, static_cast<uint32_t>( mapping.size() ) );
      g.group = it->second;
    }
  }
}

std::size_t two_qubit_count( circuit const& c )
{
  return std::count_if( c.gates().begin(), c.gates().end(), []( auto const& g ) { return g.controls.size() == 1u; } );
}

circuit inverse( circuit const& c )
{
  circuit inv( c.wires() );
  for ( auto it = c.gates().rbegin(); it != c.gates().rend(); ++it )
  {
    auto g = *it;
    g.op = inverse( g.op );
    inv.add_gate( std::move( g ) );
  }
  return inv;
}

bool gates_commute( gate const& g1, gate const& g2 )
{
  return !g1.controls_wire( g2.target ) && !g2.controls_wire( g1.target );
}

bool gates_commute( circuit const& c, std::size_t i, std::size_t j )
{
  if ( i >= c.num_gates() || j >= c.num_gates() )
  {
    throw std::out_of_range( "gate position out of range" );
  }
  return gates_commute( c.gates()[i], c.gates()[j] );
}

bool is_uninterrupted( circuit const& c, wire_id w, std::size_t from, std::size_t to )
{
  if ( from >= to || to >= c.num_gates() )
  {
    throw std::out_of_range( "invalid gate range" );
  }
  for ( auto k = from + 1; k < to; ++k )
  {
    if ( c.gates()[k].target == w )
    {
      return false;
    }
  }
  return true;
}

bool is_terminal( gate const& g, circuit const& c )
{
  return g.target < c.num_wires() && c.wires()[g.target].role == wire_role::output;
}

bool is_linearized( circuit const& c, std::size_t begin, std::size_t end )
{
  end = std::min( end, c.num_gates() );
  std::vector<bool> targeted( c.num_wires(), false );
  for ( auto k = begin; k < end; ++k )
  {
    auto const& g = c.gates()[k];
    for ( auto const& ctl : g.controls )
    {
      if ( targeted[ctl.wire] )
      {
        return false;
      }
    }
    targeted[g.target] = true;
  }
  return true;
}

bool is_linearized( circuit const& c )
{
  return is_linearized( c, 0u, c.num_gates() );
}

} // namespace qofmin
