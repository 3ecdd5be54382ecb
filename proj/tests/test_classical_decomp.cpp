#include "qofmin/classical_decomp.hpp"
#include "qofmin/errors.hpp"
#include "qofmin/esop.hpp"
#include "qofmin/oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

using namespace qofmin;
using test::pos;

namespace
{

std::size_t gates_on( circuit const& c, std::string const& name )
{
  auto const w = *c.find_wire( name );
  std::size_t n = 0;
  for ( auto const& g : c.gates() )
  {
    n += g.target == w;
  }
  return n;
}

} // namespace

TEST( classical_decomp, cascade_of_grm_form )
{
  auto const e = parse_esop( "abc ^ !abd ^ e!d" );
  auto const c = esop_to_cascade( e );
  EXPECT_EQ( c.num_gates(), 3u );
  EXPECT_EQ( c.wires_with_role( wire_role::input ).size(), 5u );
  for ( auto const& g : c.gates() )
  {
    EXPECT_EQ( g.op, op_kind::x );
    EXPECT_EQ( g.target, *c.output_wire() );
  }
  EXPECT_EQ( output_truth_table( c ), test::esop_table( e ) );
}

TEST( classical_decomp, trivial_cascades )
{
  EXPECT_EQ( esop_to_cascade( esop_expr( 2, {} ) ).num_gates(), 0u );
  auto const c = esop_to_cascade( parse_esop( "a" ) );
  ASSERT_EQ( c.num_gates(), 1u );
  EXPECT_EQ( c.gates()[0].controls.size(), 1u );
  auto const one = esop_to_cascade( parse_esop( "1", 2 ) );
  ASSERT_EQ( one.num_gates(), 1u );
  EXPECT_TRUE( one.gates()[0].controls.empty() );
}

TEST( classical_decomp, three_control_toffoli )
{
  auto c = test::wires_circuit( { "a", "b", "c" }, { "t1" } );
  auto const g = make_gate( op_kind::x, 3, { pos( 0 ), pos( 1 ), test::neg( 2 ) } );
  std::array<wire_id, 1> const anc = { 4 };
  auto const seq = decompose_toffoli( g, anc );
  ASSERT_EQ( seq.size(), 3u );
  for ( auto const& s : seq )
  {
    EXPECT_EQ( s.controls.size(), 2u );
  }
  auto orig = c;
  orig.add_gate( g );
  auto dec = c;
  for ( auto const& s : seq )
  {
    dec.add_gate( s );
  }
  EXPECT_TRUE( equivalent( orig, dec, equivalence_mode::ancilla0_subspace ) );
  /* classical simulation over all 16 basis inputs with the ancilla at 0 */
  for ( uint64_t m = 0; m < 16; ++m )
  {
    std::vector<bool> bits = { bool( m & 8 ), bool( m & 4 ), bool( m & 2 ), bool( m & 1 ), false };
    EXPECT_EQ( test::classical_run( orig, bits ), test::classical_run( dec, bits ) );
  }
  EXPECT_EQ( decompose_toffoli( g, anc, false ).size(), 2u );
  EXPECT_THROW( decompose_toffoli( g, {} ), stage_error );
}

TEST( classical_decomp, two_control_unchanged )
{
  auto const g = make_gate( op_kind::x, 2, { pos( 0 ), pos( 1 ) } );
  auto const seq = decompose_toffoli( g, {} );
  ASSERT_EQ( seq.size(), 1u );
  EXPECT_EQ( seq[0], g );
}

TEST( classical_decomp, chain_length )
{
  for ( auto n = 3u; n <= 7u; ++n )
  {
    std::vector<control> controls;
    std::vector<wire_id> anc;
    for ( auto k = 0u; k < n; ++k )
    {
      controls.push_back( pos( k ) );
    }
    for ( auto k = 0u; k < n - 2; ++k )
    {
      anc.push_back( n + 1 + k );
    }
    auto const g = make_gate( op_kind::x, n, controls );
    EXPECT_EQ( decompose_toffoli( g, anc ).size(), 2 * ( n - 2 ) + 1 );
    EXPECT_EQ( decompose_toffoli( g, anc, false ).size(), n - 1 );
  }
}

TEST( classical_decomp, grm_expansion_adds_one_product_per_three_control_term )
{
  auto const e = parse_esop( "abc ^ !abd ^ e!d" );
  auto const c = decompose_classical( esop_to_cascade( e ) );
  EXPECT_EQ( c.wires_with_role( wire_role::ancilla ).size(), 1u );
  EXPECT_EQ( c.num_gates(), 3u + 3u + 1u );
  for ( auto const& g : c.gates() )
  {
    EXPECT_LE( g.controls.size(), 2u );
  }
  EXPECT_TRUE( equivalent( esop_to_cascade( e ), c, equivalence_mode::output_wire ) );
  EXPECT_NO_THROW( c.validate() );
}

TEST( classical_decomp, running_example_split )
{
  auto const f = parse_esop( "!cd ^ !ab!c ^ abd" );
  auto const full = decompose_classical( esop_to_cascade( f ) );
  EXPECT_EQ( full.num_gates(), 7u );
  auto const split = drop_ancilla_restores( full );
  EXPECT_EQ( split.num_gates(), 6u );
  EXPECT_EQ( gates_on( split, "t" ), 3u );
  EXPECT_EQ( output_truth_table( split ), test::esop_table( f ) );
}

TEST( classical_decomp, no_uncompute_uses_fresh_ancillas )
{
  auto const f = parse_esop( "abc ^ !abd" );
  auto const c = decompose_classical( esop_to_cascade( f ), { .uncompute = false } );
  EXPECT_EQ( c.wires_with_role( wire_role::ancilla ).size(), 2u );
  EXPECT_EQ( c.num_gates(), 4u );
  EXPECT_EQ( output_truth_table( c ), test::esop_table( f ) );
}

TEST( classical_decomp, bound_rm1 )
{
  auto const two_big = check_upper_bound_rm1( parse_esop( "abc ^ !abd" ) );
  EXPECT_EQ( two_big.actual, 6u );
  EXPECT_EQ( two_big.bound, 2u + 2u + 2u );
  auto const small = check_upper_bound_rm1( parse_esop( "ab ^ cd ^ !ad" ) );
  EXPECT_EQ( small.actual, 3u );
  EXPECT_TRUE( small.holds() );
  auto const f = check_upper_bound_rm1( parse_esop( "!cd ^ !ab!c ^ abd" ) );
  EXPECT_EQ( f.actual, 7u );
  EXPECT_TRUE( f.holds() );
}

TEST( classical_decomp, property_random_esops_preserve_function )
{
  std::mt19937_64 rng( 23 );
  for ( auto i = 0; i < 80; ++i )
  {
    auto const e = test::random_esop( rng, 5, 4 );
    auto const c = decompose_classical( esop_to_cascade( e ) );
    if ( c.num_wires() > 10 )
    {
      continue;
    }
    ASSERT_EQ( output_truth_table( c ), test::esop_table( e ) ) << to_string( e );
    ASSERT_EQ( output_truth_table( drop_ancilla_restores( c ) ), test::esop_table( e ) ) << to_string( e );
  }
}
