#include "qofmin/classical_decomp.hpp"
#include "qofmin/errors.hpp"
#include "qofmin/esop.hpp"
#include "qofmin/linearize.hpp"
#include "qofmin/oracle.hpp"
#include "qofmin/quantum_decomp.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace qofmin;
using test::neg;
using test::pos;

namespace
{

/* no gate targets an input and the output-targeting gates alone are linearized */
bool linear_on_output( circuit const& c )
{
  circuit out( c.wires() );
  for ( auto const& g : c.gates() )
  {
    if ( c.wires()[g.target].role == wire_role::input )
    {
      return false;
    }
    if ( c.wires()[g.target].role == wire_role::output )
    {
      out.add_gate( g );
    }
  }
  return is_linearized( out );
}

} // namespace

TEST( linearize, expand_three_literal_xor )
{
  /* (!a ^ b ^ c)^V onto t */
  auto const terminal = make_gate( op_kind::v, 3, { pos( 0 ) } );
  auto const gates = expand_xor_control( terminal, { neg( 0 ), pos( 1 ), pos( 2 ) } );
  ASSERT_EQ( gates.size(), 4u );
  for ( auto const& g : gates )
  {
    EXPECT_EQ( g.op, op_kind::virt_v );
    EXPECT_EQ( g.target, 3u );
    ASSERT_EQ( g.controls.size(), 3u );
    bool const a = g.controls[0].positive, b = g.controls[1].positive, c = g.controls[2].positive;
    EXPECT_TRUE( ( !a ) != b != c );
  }
  /* the CNOT cascade form computing !a^b^c onto wire a */
  auto lhs = test::wires_circuit( { "a", "b", "c" } );
  lhs.add_gate( make_gate( op_kind::x, 0 ) );
  lhs.add_gate( make_gate( op_kind::x, 0, { pos( 1 ) } ) );
  lhs.add_gate( make_gate( op_kind::x, 0, { pos( 2 ) } ) );
  lhs.add_gate( terminal );
  lhs.add_gate( make_gate( op_kind::x, 0, { pos( 2 ) } ) );
  lhs.add_gate( make_gate( op_kind::x, 0, { pos( 1 ) } ) );
  lhs.add_gate( make_gate( op_kind::x, 0 ) );
  auto rhs = test::wires_circuit( { "a", "b", "c" } );
  for ( auto const& g : gates )
  {
    rhs.add_gate( g );
  }
  EXPECT_TRUE( equivalent( lhs, rhs, equivalence_mode::exact ) );
}

TEST( linearize, expansion_size_is_power_of_two )
{
  for ( auto n = 1u; n <= 6u; ++n )
  {
    std::vector<control> support;
    for ( auto k = 0u; k < n; ++k )
    {
      support.push_back( pos( k ) );
    }
    EXPECT_EQ( expand_xor_control( make_gate( op_kind::vdg, 7, { pos( 0 ) } ), support ).size(), 1u << ( n - 1 ) );
  }
}

TEST( linearize, single_literal_gives_plain_gate )
{
  auto const gates = expand_xor_control( make_gate( op_kind::v, 3, { pos( 1 ) } ), { pos( 0 ) } );
  ASSERT_EQ( gates.size(), 1u );
  EXPECT_EQ( gates[0], make_gate( op_kind::v, 3, { pos( 0 ) } ) );
}

TEST( linearize, two_literal_vdg )
{
  auto const gates = expand_xor_control( make_gate( op_kind::vdg, 2, { pos( 1 ) } ), { pos( 0 ), pos( 1 ) } );
  ASSERT_EQ( gates.size(), 2u );
  EXPECT_EQ( gates[0], make_gate( op_kind::virt_vdg, 2, { neg( 0 ), pos( 1 ) } ) );
  EXPECT_EQ( gates[1], make_gate( op_kind::virt_vdg, 2, { pos( 0 ), neg( 1 ) } ) );
}

TEST( linearize, expansion_errors )
{
  EXPECT_THROW( expand_xor_control( make_gate( op_kind::v, 2, { pos( 0 ) } ), {} ), std::invalid_argument );
  EXPECT_THROW( expand_xor_control( make_gate( op_kind::x, 2, { pos( 0 ) } ), { pos( 0 ) } ), std::invalid_argument );
}

TEST( linearize, toffoli_five_gate )
{
  auto five = test::wires_circuit( { "a", "b" }, {}, "c" );
  for ( auto const& g : toffoli_to_5gate( make_gate( op_kind::x, 2, { pos( 0 ), pos( 1 ) } ) ) )
  {
    five.add_gate( g );
  }
  auto const lin = linearize_circuit( five );
  ASSERT_EQ( lin.num_gates(), 4u );
  EXPECT_EQ( lin.gates()[0], make_gate( op_kind::v, 2, { pos( 0 ) } ) );
  EXPECT_EQ( lin.gates()[1], make_gate( op_kind::v, 2, { pos( 1 ) } ) );
  EXPECT_EQ( lin.gates()[2], make_gate( op_kind::virt_vdg, 2, { neg( 0 ), pos( 1 ) } ) );
  EXPECT_EQ( lin.gates()[3], make_gate( op_kind::virt_vdg, 2, { pos( 0 ), neg( 1 ) } ) );
  EXPECT_TRUE( is_linearized( lin ) );
  EXPECT_TRUE( equivalent( five, lin, equivalence_mode::exact ) );
}

TEST( linearize, fixpoint_on_linear_circuit )
{
  auto c = test::wires_circuit( { "a", "b" } );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 0 ) } ) );
  c.add_gate( make_gate( op_kind::virt_vdg, 2, { neg( 0 ), pos( 1 ) } ) );
  EXPECT_EQ( linearize_circuit( c ), c );
}

TEST( linearize, stray_input_target_is_stage_error )
{
  auto c = test::wires_circuit( { "a", "b" } );
  c.add_gate( make_gate( op_kind::x, 1, { pos( 0 ) } ) );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 1 ) } ) );
  EXPECT_THROW( linearize_circuit( c ), stage_error );
}

TEST( linearize, running_example )
{
  auto const f = parse_esop( "!cd ^ !ab!c ^ abd" );
  auto const split2 = decompose_quantum( drop_ancilla_restores( decompose_classical( esop_to_cascade( f ) ) ) );
  EXPECT_EQ( split2.num_gates(), 30u );
  auto const split3 = linearize_circuit( split2 );
  EXPECT_EQ( split3.num_gates(), 24u );
  EXPECT_TRUE( linear_on_output( split3 ) );
  auto const t = *split3.find_wire( "t" );
  auto const t1 = *split3.find_wire( "t1" );
  std::size_t on_t = 0, on_t1 = 0, virtuals = 0;
  for ( auto const& g : split3.gates() )
  {
    on_t += g.target == t;
    on_t1 += g.target == t1;
    virtuals += is_virtual( g.op );
    EXPECT_TRUE( is_v_type( g.op ) );
  }
  EXPECT_EQ( on_t, 12u );
  EXPECT_EQ( on_t1, 12u );
  EXPECT_EQ( virtuals, 12u );
  EXPECT_EQ( output_truth_table( split3 ), test::esop_table( f ) );
  EXPECT_TRUE( equivalent( split2, split3, equivalence_mode::exact ) );
}

TEST( linearize, property_random_pipelines )
{
  std::mt19937_64 rng( 31 );
  for ( auto i = 0; i < 60; ++i )
  {
    auto const e = test::random_esop( rng, 4, 4 );
    auto const q = decompose_quantum( drop_ancilla_restores( decompose_classical( esop_to_cascade( e ) ) ) );
    if ( q.num_wires() > 9 )
    {
      continue;
    }
    auto const lin = linearize_circuit( q );
    EXPECT_TRUE( linear_on_output( lin ) );
    ASSERT_TRUE( equivalent( q, lin, equivalence_mode::exact ) ) << to_string( e );
  }
}
