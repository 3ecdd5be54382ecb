#include "qofmin/classical_decomp.hpp"
#include "qofmin/errors.hpp"
#include "qofmin/esop.hpp"
#include "qofmin/linearize.hpp"
#include "qofmin/minimize.hpp"
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

circuit running_example_linearized()
{
  auto const f = parse_esop( "!cd ^ !ab!c ^ abd" );
  return linearize_circuit( decompose_quantum( drop_ancilla_restores( decompose_classical( esop_to_cascade( f ) ) ) ) );
}

minimize_options checked()
{
  minimize_options o;
  o.debug_verify = true;
  o.verify_mode = equivalence_mode::exact;
  return o;
}

} // namespace

TEST( minimize, group_brings_equal_gates_together )
{
  auto c = test::wires_circuit( { "a", "b" } );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 0 ) } ) );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 1 ) } ) );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 0 ) } ) );
  minimizer m( checked() );
  auto const g = m.group_on_uninterrupted_lines( c );
  ASSERT_EQ( g.num_gates(), 3u );
  bool adjacent = false;
  for ( auto k = 0u; k + 1 < g.num_gates(); ++k )
  {
    adjacent |= g.gates()[k] == c.gates()[0] && g.gates()[k + 1] == c.gates()[0];
  }
  EXPECT_TRUE( adjacent );
  EXPECT_TRUE( equivalent( c, g, equivalence_mode::exact ) );
}

TEST( minimize, group_leaves_dependent_circuit )
{
  auto c = test::wires_circuit( { "a", "b" } );
  c.add_gate( make_gate( op_kind::x, 1, { pos( 0 ) } ) );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 1 ) } ) );
  c.add_gate( make_gate( op_kind::x, 1, { pos( 0 ) } ) );
  EXPECT_EQ( group_on_uninterrupted_lines( c ), c );
}

TEST( minimize, merge_flipped_virtual_pair )
{
  auto c = test::wires_circuit( { "a", "b" }, {}, "t1" );
  c.add_gate( make_gate( op_kind::virt_v, 2, { neg( 0 ), neg( 1 ) } ) );
  c.add_gate( make_gate( op_kind::virt_v, 2, { neg( 0 ), pos( 1 ) } ) );
  minimizer m( checked() );
  auto const r = m.merge_pe_gates( c );
  ASSERT_EQ( r.num_gates(), 1u );
  EXPECT_EQ( r.gates()[0], make_gate( op_kind::v, 2, { neg( 0 ) } ) );
  EXPECT_EQ( m.applications(), 1u );
  EXPECT_EQ( m.verifications(), 1u );
  EXPECT_TRUE( equivalent( c, r, equivalence_mode::exact ) );
}

TEST( minimize, merge_inverse_pair_vanishes )
{
  auto c = test::wires_circuit( { "a" } );
  c.add_gate( make_gate( op_kind::v, 1, { pos( 0 ) } ) );
  c.add_gate( make_gate( op_kind::vdg, 1, { pos( 0 ) } ) );
  EXPECT_EQ( merge_pe_gates( c ).num_gates(), 0u );
}

TEST( minimize, merge_powers )
{
  auto c = test::wires_circuit( { "a" } );
  c.add_gate( make_gate( op_kind::v, 1, { pos( 0 ) } ) );
  c.add_gate( make_gate( op_kind::v, 1, { pos( 0 ) } ) );
  auto const r = merge_pe_gates( c );
  ASSERT_EQ( r.num_gates(), 1u );
  EXPECT_EQ( r.gates()[0].op, op_kind::x );
  auto d = r;
  d.add_gate( make_gate( op_kind::v, 1, { pos( 0 ) } ) );
  auto const r2 = merge_pe_gates( d );
  ASSERT_EQ( r2.num_gates(), 1u );
  EXPECT_EQ( r2.gates()[0].op, op_kind::vdg );
}

TEST( minimize, running_example_combines_b_controlled_pair )
{
  minimizer m( checked() );
  auto const lin = running_example_linearized();
  auto const r = m.minimize( lin );
  auto const t1 = *r.find_wire( "t1" );
  auto const b = *r.find_wire( "b" );
  EXPECT_NE( std::find( r.gates().begin(), r.gates().end(), make_gate( op_kind::x, t1, { pos( b ) } ) ), r.gates().end() );
  EXPECT_LT( r.num_gates(), lin.num_gates() );
  EXPECT_GT( m.applications(), 0u );
  EXPECT_EQ( m.verifications(), m.applications() );
  EXPECT_TRUE( equivalent( lin, r, equivalence_mode::exact ) );
}

TEST( minimize, minimize_reaches_fixpoint )
{
  auto const r = minimizer().minimize( running_example_linearized() );
  EXPECT_EQ( minimizer().run_pass( r ), r );
}

TEST( minimize, reduction_match )
{
  wire_id const a = 0, b = 1, c = 2, d = 3, e = 4, t = 5;
  auto const m = match_toffoli_reduction( make_gate( op_kind::x, t, { pos( a ), pos( b ), pos( d ), pos( e ) } ),
                                          make_gate( op_kind::x, t, { pos( a ), neg( b ), pos( d ), pos( e ) } ) );
  ASSERT_TRUE( m );
  EXPECT_EQ( m->flipped, b );
  EXPECT_EQ( m->shared.size(), 3u );
  EXPECT_TRUE( m->extension.empty() );
  /* abcd e against a e: no flipped literal */
  EXPECT_FALSE( match_toffoli_reduction( make_gate( op_kind::x, t, { pos( a ), pos( b ), pos( c ), pos( d ), pos( e ) } ),
                                         make_gate( op_kind::x, t, { pos( a ), pos( e ) } ) ) );
  EXPECT_FALSE( match_toffoli_reduction( make_gate( op_kind::v, t, { pos( a ) } ), make_gate( op_kind::v, t, { neg( a ) } ) ) );
  auto const ext = match_toffoli_reduction( make_gate( op_kind::x, t, { pos( a ), pos( b ) } ), make_gate( op_kind::x, t, { neg( a ) } ) );
  ASSERT_TRUE( ext );
  EXPECT_EQ( ext->extension.size(), 1u );
}

TEST( minimize, reduce_pairs )
{
  for ( auto flip : { 1u, 3u } )
  {
    auto c = test::wires_circuit( { "a", "b", "c", "d", "e" } );
    std::vector<control> lits;
    for ( wire_id w = 0; w < 5; ++w )
    {
      if ( flip == 1u && w == 2 )
      {
        continue;
      }
      lits.push_back( pos( w ) );
    }
    auto flipped = lits;
    for ( auto& l : flipped )
    {
      l.positive = l.wire != flip;
    }
    c.add_gate( make_gate( op_kind::x, 5, lits ) );
    c.add_gate( make_gate( op_kind::x, 5, flipped ) );
    minimizer m( checked() );
    auto const r = m.toffoli_adjacency_reduce( c );
    EXPECT_LT( r.num_gates(), c.num_gates() );
    EXPECT_TRUE( equivalent( c, r, equivalence_mode::exact ) );
    ASSERT_EQ( m.log().size(), 1u );
    EXPECT_EQ( m.log()[0].rule, "reduce" );
  }
}

TEST( minimize, reduce_ignores_non_flip_pattern )
{
  auto c = test::wires_circuit( { "a", "b", "c", "d", "e" } );
  c.add_gate( make_gate( op_kind::x, 5, { pos( 0 ), pos( 1 ), pos( 2 ), pos( 3 ), pos( 4 ) } ) );
  c.add_gate( make_gate( op_kind::x, 5, { pos( 0 ), pos( 4 ) } ) );
  EXPECT_EQ( toffoli_adjacency_reduce( c ), c );
}

TEST( minimize, rematerialize_linear_toffoli )
{
  auto c = test::wires_circuit( { "a", "b" }, {}, "c" );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 0 ) } ) );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 1 ) } ) );
  c.add_gate( make_gate( op_kind::virt_vdg, 2, { neg( 0 ), pos( 1 ) } ) );
  c.add_gate( make_gate( op_kind::virt_vdg, 2, { pos( 0 ), neg( 1 ) } ) );
  minimizer m( checked() );
  auto const r = m.rematerialize_virtual( c );
  EXPECT_EQ( r.num_gates(), 5u );
  EXPECT_EQ( two_qubit_count( r ), 5u );
  EXPECT_EQ( r.num_wires(), 3u );
  auto tof = test::wires_circuit( { "a", "b" }, {}, "c" );
  tof.add_gate( make_gate( op_kind::x, 2, { pos( 0 ), pos( 1 ) } ) );
  EXPECT_TRUE( equivalent( r, tof, equivalence_mode::exact ) );
}

TEST( minimize, rematerialize_without_virtual_is_identity )
{
  auto c = test::wires_circuit( { "a", "b" } );
  c.add_gate( make_gate( op_kind::v, 2, { pos( 0 ) } ) );
  c.add_gate( make_gate( op_kind::x, 2, { pos( 0 ), pos( 1 ) } ) );
  EXPECT_EQ( rematerialize_virtual( c ), c );
}

TEST( minimize, rematerialize_incomplete_class_uses_ancilla )
{
  auto c = test::wires_circuit( { "a", "b" } );
  c.add_gate( make_gate( op_kind::virt_v, 2, { pos( 0 ), pos( 1 ) } ) );
  c.add_gate( make_gate( op_kind::virt_v, 2, { pos( 0 ), pos( 1 ) } ) );
  minimize_options o = checked();
  o.verify_mode = equivalence_mode::ancilla0_subspace;
  minimizer m( o );
  auto const r = m.rematerialize_virtual( c );
  EXPECT_EQ( r.num_wires(), 4u );
  EXPECT_EQ( r.wires().back().name, "r0" );
  for ( auto const& g : r.gates() )
  {
    EXPECT_FALSE( is_virtual( g.op ) );
  }
  minimize_options none;
  none.ancilla_budget = 0;
  EXPECT_THROW( minimizer( none ).rematerialize_virtual( c ), stage_error );
}

TEST( minimize, debug_verify_catches_nothing_on_random_linear_circuits )
{
  std::mt19937_64 rng( 37 );
  std::size_t total = 0;
  for ( auto i = 0; i < 40; ++i )
  {
    auto c = test::wires_circuit( { "a", "b", "c" } );
    for ( auto k = 0; k < 10; ++k )
    {
      auto g = test::random_gate( rng, 3, 2 );
      g.target = 3;
      auto& ctl = g.controls;
      ctl.erase( std::remove_if( ctl.begin(), ctl.end(), []( auto const& x ) { return x.wire == 3; } ), ctl.end() );
      g.op = *op_from_power( v_power( g.op ), ctl.size() );
      c.add_gate( g );
    }
    minimizer m( checked() );
    auto const r = m.minimize( c );
    total += m.applications();
    ASSERT_TRUE( equivalent( c, r, equivalence_mode::exact ) );
  }
  EXPECT_GT( total, 0u );
}
