#include "qofmin/oracle.hpp"

#include "qofmin/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qofmin
{

using cd = std::complex<double>;

matrix2 v_matrix()
{
  matrix2 m;
  m << cd( 0.5, 0.5 ), cd( 0.5, -0.5 ),
      cd( 0.5, -0.5 ), cd( 0.5, 0.5 );
  return m;
}

matrix2 vdg_matrix()
{
  return v_matrix().adjoint();
}

matrix2 x_matrix()
{
  matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

matrix2 op_matrix( op_kind op )
{
  switch ( op )
  {
  case op_kind::x:
    return x_matrix();
  case op_kind::v:
  case op_kind::virt_v:
    return v_matrix();
  case op_kind::vdg:
  case op_kind::virt_vdg:
    return vdg_matrix();
  }
  return matrix2::Identity();
}

std::vector<identity_check> check_operator_identities( double tolerance )
{
  matrix2 const v = v_matrix(), vd = vdg_matrix(), x = x_matrix(), id = matrix2::Identity();
  std::vector<std::pair<std::string, double>> errors = {
      { "V*V = NOT", ( v * v - x ).cwiseAbs().maxCoeff() },
      { "V+*V+ = NOT", ( vd * vd - x ).cwiseAbs().maxCoeff() },
      { "V*V+ = I", ( v * vd - id ).cwiseAbs().maxCoeff() },
      { "V+*V = I", ( vd * v - id ).cwiseAbs().maxCoeff() },
      { "V*NOT = V+", ( v * x - vd ).cwiseAbs().maxCoeff() },
      { "NOT*V = V+", ( x * v - vd ).cwiseAbs().maxCoeff() },
      { "V+*NOT = V", ( vd * x - v ).cwiseAbs().maxCoeff() },
      { "NOT*V+ = V", ( x * vd - v ).cwiseAbs().maxCoeff() },
  };
  std::vector<identity_check> checks;
  for ( auto const& [name, err] : errors )
  {
    checks.push_back( { name, err, err <= tolerance } );
  }
  return checks;
}

namespace
{

struct gate_masks
{
  uint64_t target{ 0 };
  uint64_t care{ 0 };
  uint64_t value{ 0 };
};

gate_masks masks_for( gate const& g, std::size_t num_wires )
{
  auto bit = [num_wires]( wire_id w ) { return uint64_t{ 1 } << ( num_wires - 1u - w ); };
  gate_masks m;
  m.target = bit( g.target );
  for ( auto const& c : g.controls )
  {
    m.care |= bit( c.wire );
    if ( c.positive )
    {
      m.value |= bit( c.wire );
    }
  }
  return m;
}

void check_size( circuit const& c, std::size_t max_qubits )
{
  if ( c.num_wires() > max_qubits )
  {
    throw std::length_error( "circuit has " + std::to_string( c.num_wires() ) + " wires, oracle limit is " + std::to_string( max_qubits ) );
  }
}

} // namespace

void apply_gate( gate const& g, std::size_t num_wires, state_vector& state )
{
  auto const m = masks_for( g, num_wires );
  auto const op = op_matrix( g.op );
  uint64_t const dim = uint64_t{ 1 } << num_wires;
  for ( uint64_t i = 0; i < dim; ++i )
  {
    if ( ( i & m.target ) || ( i & m.care ) != m.value )
    {
      continue;
    }
    auto const j = i | m.target;
    cd const a = state[i], b = state[j];
    state[i] = op( 0, 0 ) * a + op( 0, 1 ) * b;
    state[j] = op( 1, 0 ) * a + op( 1, 1 ) * b;
  }
}

state_vector simulate( circuit const& c, uint64_t basis_index, std::size_t max_qubits )
{
  check_size( c, max_qubits );
  state_vector s = state_vector::Zero( Eigen::Index( 1 ) << c.num_wires() );
  s[basis_index] = 1.0;
  for ( auto const& g : c.gates() )
  {
    apply_gate( g, c.num_wires(), s );
  }
  return s;
}

unitary circuit_unitary( circuit const& c, std::size_t max_qubits )
{
  check_size( c, max_qubits );
  auto const dim = Eigen::Index( 1 ) << c.num_wires();
  unitary u = unitary::Identity( dim, dim );
  for ( auto const& g : c.gates() )
  {
    auto const m = masks_for( g, c.num_wires() );
    auto const op = op_matrix( g.op );
    for ( uint64_t i = 0; i < static_cast<uint64_t>( dim ); ++i )
    {
      if ( ( i & m.target ) || ( i & m.care ) != m.value )
      {
        continue;
      }
      auto const j = i | m.target;
      Eigen::RowVectorXcd const a = u.row( i ), b = u.row( j );
      u.row( i ) = op( 0, 0 ) * a + op( 0, 1 ) * b;
      u.row( j ) = op( 1, 0 ) * a + op( 1, 1 ) * b;
    }
  }
  return u;
}

bool approx_equal( unitary const& a, unitary const& b, double tolerance )
{
  if ( a.rows() != b.rows() || a.cols() != b.cols() )
  {
    return false;
  }
  return a.size() == 0 || ( a - b ).cwiseAbs().maxCoeff() <= tolerance;
}

uint64_t basis_index_for( circuit const& c, uint64_t assignment )
{
  auto const inputs = c.wires_with_role( wire_role::input );
  uint64_t index = 0;
  for ( auto k = 0u; k < inputs.size(); ++k )
  {
    if ( ( assignment >> ( inputs.size() - 1u - k ) ) & 1u )
    {
      index |= uint64_t{ 1 } << ( c.num_wires() - 1u - inputs[k] );
    }
  }
  return index;
}

bool boolean_output( circuit const& c, uint64_t assignment, std::size_t max_qubits )
{
  auto out = c.output_wire();
  if ( !out )
  {
    throw std::invalid_argument( "circuit has no output wire" );
  }
  auto const s = simulate( c, basis_index_for( c, assignment ), max_qubits );
  Eigen::Index best = 0;
  double const peak = s.cwiseAbs2().maxCoeff( &best );
  if ( std::abs( peak - 1.0 ) > equality_tolerance )
  {
    throw verification_error( "non-classical output state for input assignment " + std::to_string( assignment ) );
  }
  return ( static_cast<uint64_t>( best ) >> ( c.num_wires() - 1u - *out ) ) & 1u;
}

std::vector<uint8_t> output_truth_table( circuit const& c, std::size_t max_qubits )
{
  auto const n = c.wires_with_role( wire_role::input ).size();
  std::vector<uint8_t> table( std::size_t{ 1 } << n );
  for ( uint64_t i = 0; i < table.size(); ++i )
  {
    table[i] = boolean_output( c, i, max_qubits ) ? 1u : 0u;
  }
  return table;
}

std::string_view to_string( equivalence_mode mode )
{
  switch ( mode )
  {
  case equivalence_mode::exact:
    return "exact";
  case equivalence_mode::output_wire:
    return "output-wire";
  case equivalence_mode::ancilla0_subspace:
    return "ancilla0-subspace";
  }
  return "exact";
}

std::optional<equivalence_mode> equivalence_mode_from_string( std::string_view s )
{
  if ( s == "exact" )
    return equivalence_mode::exact;
  if ( s == "output-wire" )
    return equivalence_mode::output_wire;
  if ( s == "ancilla0-subspace" )
    return equivalence_mode::ancilla0_subspace;
  return std::nullopt;
}

namespace
{

std::vector<std::string> names_with_role( circuit const& c, wire_role role )
{
  std::vector<std::string> names;
  for ( auto w : c.wires_with_role( role ) )
  {
    names.push_back( c.wires()[w].name );
  }
  return names;
}

} // namespace

bool equivalent( circuit const& c1, circuit const& c2, equivalence_mode mode, std::size_t max_qubits )
{
  switch ( mode )
  {
  case equivalence_mode::exact:
    if ( c1.num_wires() != c2.num_wires() )
    {
      throw std::invalid_argument( "exact equivalence needs equal wire counts" );
    }
    return approx_equal( circuit_unitary( c1, max_qubits ), circuit_unitary( c2, max_qubits ) );

  case equivalence_mode::output_wire:
  {
    if ( names_with_role( c1, wire_role::input ) != names_with_role( c2, wire_role::input ) ||
         names_with_role( c1, wire_role::output ) != names_with_role( c2, wire_role::output ) ||
         names_with_role( c1, wire_role::output ).size() != 1u )
    {
      throw std::invalid_argument( "output-wire equivalence needs identical input wires and one identical output wire" );
    }
    auto const n = names_with_role( c1, wire_role::input ).size();
    for ( uint64_t i = 0; i < ( uint64_t{ 1 } << n ); ++i )
    {
      if ( boolean_output( c1, i, max_qubits ) != boolean_output( c2, i, max_qubits ) )
      {
        return false;
      }
    }
    return true;
  }

  case equivalence_mode::ancilla0_subspace:
  {
    if ( c1.wires() != c2.wires() )
    {
      throw std::invalid_argument( "ancilla0-subspace equivalence needs identical wire tables" );
    }
    uint64_t ancilla_mask = 0;
    for ( auto w : c1.wires_with_role( wire_role::ancilla ) )
    {
      ancilla_mask |= uint64_t{ 1 } << ( c1.num_wires() - 1u - w );
    }
    for ( uint64_t i = 0; i < ( uint64_t{ 1 } << c1.num_wires() ); ++i )
    {
      if ( i & ancilla_mask )
      {
        continue;
      }
      auto const s1 = simulate( c1, i, max_qubits ), s2 = simulate( c2, i, max_qubits );
      if ( ( s1 - s2 ).cwiseAbs().maxCoeff() > equality_tolerance )
      {
        return false;
      }
    }
    return true;
  }
  }
  return false;
}

} // namespace qofmin
