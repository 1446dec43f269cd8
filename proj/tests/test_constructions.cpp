#include "oracles.hpp"

#include "fei/constructions.hpp"
#include "fei/dnf.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace fei;

namespace
{

void expect_all_hold( const ConstructionReport& r )
{
  for ( const auto& c : r.checks )
  {
    EXPECT_TRUE( c.holds ) << r.operation << ": " << c.name << " residual " << c.residual;
    if ( c.exact )
    {
      EXPECT_EQ( c.residual, 0.0 ) << c.name;
    }
    else
    {
      EXPECT_LE( std::fabs( c.residual ), 1e-12 ) << c.name;
    }
  }
  EXPECT_TRUE( r.all_hold() );
}

BooleanFunction tribes22()
{
  return BooleanFunction::from_string( 4, oracle::tribes22_table );
}

} // namespace

TEST( Tensor, Examples )
{
  const SpectralProfile pp( tensor( parity( 2 ), parity( 2 ) ) );
  EXPECT_EQ( pp.function, parity( 4 ) );
  EXPECT_EQ( pp.influence_exact, Dyadic( 4 ) );
  EXPECT_DOUBLE_EQ( pp.entropy, 0.0 );

  const SpectralProfile mm( tensor( majority( 3 ), majority( 3 ) ) );
  EXPECT_NEAR( mm.entropy, 4.0, 1e-12 );
  EXPECT_EQ( mm.influence_exact, Dyadic( 3 ) );

  const SpectralProfile xx( tensor( max_function(), max_function() ) );
  EXPECT_NEAR( xx.entropy, 4.0, 1e-12 );
  EXPECT_EQ( xx.influence_exact, Dyadic( 2 ) );
}

TEST( Tensor, LayoutPutsFirstFactorInLowBits )
{
  const auto h = tensor( dictator( 2, 1 ), dictator( 1, 1 ) );
  EXPECT_EQ( h, character( 3, 0b101 ) );
  EXPECT_THROW( tensor( constant_function( 20 ), constant_function( 12 ) ), capacity_error );
}

TEST( Tensor, RandomPairsAreAdditive )
{
  std::mt19937_64 rng( 101 );
  std::uniform_int_distribution<unsigned> nd( 0, 6 );
  for ( int i = 0; i < 500; ++i )
  {
    const auto f = random_function( nd( rng ), rng );
    const auto g = random_function( nd( rng ), rng );
    const auto r = tensor_report( f, g );
    ASSERT_EQ( r.checks.size(), 4u );
    expect_all_hold( r );
  }
}

TEST( SelfTensor, MaxDoubles )
{
  const auto steps = self_tensor_iterate( max_function(), 3, []( double n ) { return std::sqrt( n ); } );
  ASSERT_EQ( steps.size(), 4u );
  const double h[] = { 2, 4, 8, 16 };
  const double inf[] = { 1, 2, 4, 8 };
  for ( unsigned i = 0; i < 4; ++i )
  {
    EXPECT_EQ( steps[i].n, 2u << i );
    EXPECT_NEAR( steps[i].entropy, h[i], 1e-12 );
    EXPECT_NEAR( steps[i].influence, inf[i], 1e-12 );
    EXPECT_NEAR( steps[i].ratio, 2.0, 1e-12 );
    EXPECT_NEAR( steps[i].scaled_term, std::sqrt( 2.0 * ( 1u << i ) ) / ( 1u << i ), 1e-12 );
  }
  EXPECT_LT( steps[3].scaled_term, steps[0].scaled_term );
}

TEST( SelfTensor, ParityStaysAtZeroEntropy )
{
  for ( const auto& s : self_tensor_iterate( parity( 2 ), 3 ) )
  {
    EXPECT_DOUBLE_EQ( s.entropy, 0.0 );
    EXPECT_DOUBLE_EQ( s.scaled_term, 0.0 );
  }
}

TEST( SelfTensor, RatioIsInvariant )
{
  std::mt19937_64 rng( 19 );
  for ( int i = 0; i < 10; ++i )
  {
    const auto steps = self_tensor_iterate( random_function( 3, rng ), 2 );
    for ( const auto& s : steps )
    {
      EXPECT_NEAR( s.ratio, steps[0].ratio, 1e-12 );
    }
  }
}

TEST( AndPad, Examples )
{
  const auto g1 = and_pad( dictator( 1, 1 ), 1 );
  // g = 1/2 + 1/2 y + 1/2 x - 1/2 x y
  const auto s = wht( g1 );
  EXPECT_EQ( s.coefficient( 0 ), Dyadic::from_ratio( 1, 1 ) );
  EXPECT_EQ( s.coefficient( 1 ), Dyadic::from_ratio( 1, 1 ) );
  EXPECT_EQ( s.coefficient( 2 ), Dyadic::from_ratio( 1, 1 ) );
  EXPECT_EQ( s.coefficient( 3 ), Dyadic::from_ratio( -1, 1 ) );
  EXPECT_EQ( SpectralProfile( g1 ).influence_exact, Dyadic( 1 ) );

  EXPECT_EQ( SpectralProfile( and_pad( parity( 2 ), 2 ) ).influence_exact, Dyadic( 1 ) );
  EXPECT_EQ( SpectralProfile( and_pad( majority( 3 ), 3 ) ).influence_exact, Dyadic::from_ratio( 9, 4 ) );
  EXPECT_EQ( and_pad_influence_formula( Dyadic::from_ratio( 3, 1 ), 3 ), Dyadic::from_ratio( 9, 4 ) );
  EXPECT_THROW( and_pad( parity( 2 ), 0 ), std::invalid_argument );
}

TEST( AndPad, ExhaustiveBalancedUpToFourVariables )
{
  for ( unsigned n = 1; n <= 4; ++n )
  {
    for ( std::uint64_t idx = 0; idx < ( std::uint64_t( 1 ) << ( 1u << n ) ); ++idx )
    {
      const auto f = BooleanFunction::from_index( n, idx );
      if ( 2 * f.count_minus() != f.size() )
      {
        continue;
      }
      for ( unsigned k = 1; k <= 3; ++k )
      {
        const auto r = and_pad_report( f, k );
        ASSERT_EQ( r.checks.size(), 2u );
        EXPECT_TRUE( r.checks[0].asserted );
        EXPECT_TRUE( r.checks[0].holds ) << f.to_string() << " k=" << k;
        EXPECT_TRUE( r.checks[1].holds ) << f.to_string() << " k=" << k;
      }
    }
  }
}

TEST( AndPad, UnbalancedChecksAreNotAsserted )
{
  const auto r = and_pad_report( max_function(), 2 );
  for ( const auto& c : r.checks )
  {
    EXPECT_FALSE( c.asserted );
  }
  EXPECT_TRUE( r.all_hold() );
  // the formula genuinely breaks without balance
  EXPECT_FALSE( r.checks[0].holds );
}

TEST( BalanceExtend, Examples )
{
  const SpectralProfile c( balance_extend( constant_function( 2 ) ) );
  EXPECT_EQ( c.function, dictator( 3, 3 ) );
  EXPECT_EQ( c.influence_exact, Dyadic( 1 ) );
  EXPECT_DOUBLE_EQ( c.entropy, 0.0 );

  const SpectralProfile m( balance_extend( max_function() ) );
  EXPECT_EQ( m.influence_exact, Dyadic( 2 ) );
  EXPECT_NEAR( m.entropy, 2.0, 1e-12 );

  const SpectralProfile t( balance_extend( tribes22() ) );
  EXPECT_EQ( t.influence_exact, Dyadic::from_ratio( 5, 1 ) );
  EXPECT_NEAR( t.entropy, SpectralProfile( tribes22() ).entropy, 1e-12 );
  expect_all_hold( balance_extend_report( tribes22() ) );
}

TEST( BalanceExtend, ShiftsSpectrumByNewVariable )
{
  std::mt19937_64 rng( 23 );
  for ( int i = 0; i < 50; ++i )
  {
    const auto f = random_function( 4, rng );
    const auto sf = wht( f );
    const auto sh = wht( balance_extend( f ) );
    for ( std::uint64_t s = 0; s < sf.size(); ++s )
    {
      EXPECT_EQ( sh.coefficient( s | 16u ), sf.coefficient( s ) );
      EXPECT_TRUE( sh.coefficient( s ).is_zero() );
    }
    expect_all_hold( balance_extend_report( f ) );
  }
}

TEST( MaxPad, Examples )
{
  const SpectralProfile d( max_pad( dictator( 1, 1 ), 1 ) );
  EXPECT_NEAR( d.entropy, 2.0, 1e-12 );
  EXPECT_EQ( d.influence_exact, Dyadic( 2 ) );

  const SpectralProfile m( max_pad( majority( 3 ), 2 ) );
  EXPECT_NEAR( m.entropy, 6.0, 1e-12 );
  EXPECT_EQ( m.influence_exact, Dyadic::from_ratio( 7, 1 ) );

  const SpectralProfile p( max_pad( parity( 2 ), 1 ) );
  EXPECT_NEAR( p.min_entropy, 2.0, 1e-12 );
}

TEST( MaxPad, SplitsEveryAtomIntoFourToTheK )
{
  std::mt19937_64 rng( 29 );
  for ( unsigned k = 1; k <= 2; ++k )
  {
    for ( int i = 0; i < 20; ++i )
    {
      const auto f = random_function( 3, rng );
      const SpectralDistribution df( wht( f ) );
      const SpectralDistribution dg( wht( max_pad( f, k ) ) );
      const Dyadic scale = Dyadic( 1 ).scaled( -2 * static_cast<int>( k ) );
      for ( std::uint64_t s = 0; s < dg.size(); ++s )
      {
        ASSERT_EQ( dg.weight( s ), df.weight( s & 7u ) * scale ) << "s=" << s;
      }
      expect_all_hold( max_pad_report( f, k ) );
    }
  }
}

TEST( Tribes, UnbiasedCounts )
{
  EXPECT_EQ( unbiased_tribes_count( 1 ), 1u );
  EXPECT_EQ( unbiased_tribes_count( 2 ), 2u );
  EXPECT_EQ( unbiased_tribes_count( 3 ), 5u );
  EXPECT_EQ( dnf_to_function( tribes( 2, 2 ) ), oracle::tribes_by_definition( 2, 2 ) );
  EXPECT_EQ( dnf_to_function( unbiased_tribes( 2 ) ).to_string(), oracle::tribes22_table );
}

TEST( ConstructionReport, SerializesToJson )
{
  const nlohmann::json j = max_pad_report( parity( 2 ), 1 );
  EXPECT_EQ( j.at( "operation" ), "max_pad" );
  EXPECT_EQ( j.at( "checks" ).size(), 3u );
  EXPECT_TRUE( j.at( "all_hold" ).get<bool>() );
  EXPECT_EQ( j.at( "output" ).at( "I_exact" ), "3" );
}
