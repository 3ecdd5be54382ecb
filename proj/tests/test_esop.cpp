#include "qofmin/errors.hpp"
#include "qofmin/esop.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace qofmin;

TEST( esop, parses_reed_muller_form )
{
  auto const e = parse_esop( "abc ^ ad ^ bce ^ ade" );
  EXPECT_EQ( e.arity(), 5u );
  EXPECT_EQ( e.terms().size(), 4u );
  EXPECT_EQ( classify_polarity( e ), polarity_class::pprm );
}

TEST( esop, parses_negative_literals )
{
  auto const e = parse_esop( "abc ^ a!d ^ bce ^ ade" );
  ASSERT_EQ( e.terms().size(), 4u );
  bool found = false;
  for ( auto const& t : e.terms() )
  {
    if ( t.literals == std::vector<literal>{ { 0, true }, { 3, false } } )
    {
      found = true;
    }
  }
  EXPECT_TRUE( found );
  EXPECT_EQ( to_string( parse_esop( to_string( e ) ) ), to_string( e ) );
}

TEST( esop, empty_input_is_zero )
{
  EXPECT_TRUE( parse_esop( "" ).is_constant_zero() );
  EXPECT_TRUE( parse_esop( "  \n " ).is_constant_zero() );
  EXPECT_EQ( to_string( parse_esop( "" ) ), "0" );
}

TEST( esop, self_cancellation )
{
  EXPECT_TRUE( parse_esop( "abc ^ abc" ).is_constant_zero() );
  EXPECT_TRUE( parse_esop( "bca ^ abc" ).is_constant_zero() );
}

TEST( esop, constants )
{
  auto const one = parse_esop( "1" );
  ASSERT_EQ( one.terms().size(), 1u );
  EXPECT_TRUE( one.terms()[0].is_constant_one() );
  EXPECT_TRUE( parse_esop( "0 ^ 0" ).is_constant_zero() );
  EXPECT_TRUE( parse_esop( "1 ^ 1" ).is_constant_zero() );
}

TEST( esop, syntax_error_has_position )
{
  try
  {
    parse_esop( "ab ^\n a^^b" );
    FAIL();
  }
  catch ( parse_error const& e )
  {
    EXPECT_EQ( e.line(), 2u );
    EXPECT_GT( e.column(), 0u );
  }
  EXPECT_THROW( parse_esop( "aB" ), parse_error );
  EXPECT_THROW( parse_esop( "ab ^" ), parse_error );
  EXPECT_THROW( parse_esop( "!" ), parse_error );
}

TEST( esop, duplicate_variable_rejected )
{
  EXPECT_THROW( parse_esop( "aba" ), parse_error );
  EXPECT_THROW( parse_esop( "a!a" ), parse_error );
}

TEST( esop, arity_mismatch_rejected )
{
  EXPECT_THROW( parse_esop( "ad", 3 ), parse_error );
  EXPECT_EQ( parse_esop( "a", 3 ).arity(), 3u );
}

TEST( esop, pla_input )
{
  auto const e = parse_esop_pla( ".i 3\n.o 1\n.type esop\n11- 1\n1-0 1\n.e\n" );
  EXPECT_EQ( e.arity(), 3u );
  EXPECT_EQ( e, parse_esop( "ab ^ a!c", 3 ) );
  EXPECT_THROW( parse_esop_pla( ".i 3\n1x1 1\n" ), parse_error );
}

TEST( esop, classify_reed_muller_forms )
{
  EXPECT_EQ( classify_polarity( parse_esop( "abc ^ ad ^ bce ^ ade" ) ), polarity_class::pprm );
  EXPECT_EQ( classify_polarity( parse_esop( "abc ^ a!de ^ bc!d" ) ), polarity_class::fprm );
  EXPECT_EQ( classify_polarity( parse_esop( "abc ^ !abd ^ e!d" ) ), polarity_class::grm );
  EXPECT_EQ( classify_polarity( parse_esop( "ab ^ !ab ^ a" ) ), polarity_class::esop );
}

TEST( esop, merge_single_polarity_pair )
{
  auto const e = parse_esop( "abc ^ a!bc ^ abd" );
  auto const m = merge_terms( e );
  EXPECT_EQ( m, parse_esop( "ac ^ abd", 4 ) );
  EXPECT_EQ( truth_table( m ), truth_table( e ) );
}

TEST( esop, merge_cancellation_and_constant )
{
  EXPECT_TRUE( merge_terms( parse_esop( "ab ^ ab" ) ).is_constant_zero() );
  auto const one = merge_terms( parse_esop( "a ^ !a" ) );
  ASSERT_EQ( one.terms().size(), 1u );
  EXPECT_TRUE( one.terms()[0].is_constant_one() );
  EXPECT_EQ( truth_table( one ), ( std::vector<uint8_t>{ 1, 1 } ) );
}

TEST( esop, truth_table_values )
{
  EXPECT_EQ( truth_table( parse_esop( "ab" ) ), ( std::vector<uint8_t>{ 0, 0, 0, 1 } ) );
  EXPECT_EQ( truth_table( esop_expr( 3, {} ) ), std::vector<uint8_t>( 8, 0 ) );
  auto const f = parse_esop( "!cd ^ !ab!c ^ abd" );
  auto const tt = truth_table( f );
  ASSERT_EQ( tt.size(), 16u );
  /* hand-evaluated: a=MSB */
  std::vector<uint8_t> const expected = { 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1 };
  EXPECT_EQ( tt, expected );
  EXPECT_EQ( tt, test::esop_table( f ) );
}

TEST( esop, property_merge_preserves_function_and_is_idempotent )
{
  std::mt19937_64 rng( 7 );
  for ( auto i = 0; i < 300; ++i )
  {
    auto const e = test::random_esop( rng, 6, 6 );
    auto const m = merge_terms( e );
    ASSERT_EQ( truth_table( m ), test::esop_table( e ) ) << to_string( e );
    EXPECT_LE( m.terms().size(), e.terms().size() );
    EXPECT_EQ( merge_terms( m ), m ) << to_string( e );
  }
}

TEST( esop, property_normalization_ignores_term_order )
{
  std::mt19937_64 rng( 11 );
  for ( auto i = 0; i < 200; ++i )
  {
    auto const e = test::random_esop( rng, 5, 5 );
    auto terms = e.terms();
    std::shuffle( terms.begin(), terms.end(), rng );
    EXPECT_EQ( esop_expr( e.arity(), terms ), e );
    EXPECT_EQ( parse_esop( to_string( e ), static_cast<int>( e.arity() ) ), e );
  }
}

TEST( esop, property_all_positive_is_pprm )
{
  std::mt19937_64 rng( 3 );
  for ( auto i = 0; i < 100; ++i )
  {
    auto const e = test::random_esop( rng, 5, 4 );
    std::vector<product_term> terms = e.terms();
    for ( auto& t : terms )
    {
      for ( auto& l : t.literals )
      {
        l.positive = true;
      }
    }
    esop_expr const p( e.arity(), terms );
    EXPECT_EQ( classify_polarity( p ), polarity_class::pprm );
  }
}
