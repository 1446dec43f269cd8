#include "oracles.hpp"

#include "fei/dnf.hpp"
#include "fei/io.hpp"
#include "fei/measures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace fei;

namespace
{

void expect_dnf_parse_error( std::string_view text, std::size_t line, std::size_t column )
{
  try
  {
    parse_dnf( text );
    ADD_FAILURE() << "accepted: " << text;
  }
  catch ( const parse_error& e )
  {
    EXPECT_EQ( e.line(), line ) << e.what();
    EXPECT_EQ( e.column(), column ) << e.what();
  }
}

const BoundCertificate& certificate( const RegularFmeiReport& r, const std::string& name )
{
  for ( const auto& c : r.certificates )
  {
    if ( c.name == name )
    {
      return c;
    }
  }
  throw std::out_of_range( name );
}

Dnf random_dnf( std::mt19937_64& rng )
{
  std::uniform_int_distribution<unsigned> nd( 1, 10 );
  const unsigned n = nd( rng );
  std::uniform_int_distribution<unsigned> sd( 1, 5 ), wd( 1, std::min( n, 4u ) );
  std::bernoulli_distribution neg( 0.3 );
  std::vector<unsigned> vars( n );
  std::iota( vars.begin(), vars.end(), 1u );
  std::vector<Clause> clauses( sd( rng ) );
  for ( auto& c : clauses )
  {
    std::shuffle( vars.begin(), vars.end(), rng );
    const unsigned w = wd( rng );
    for ( unsigned j = 0; j < w; ++j )
    {
      c.push_back( { vars[j], !neg( rng ) } );
    }
  }
  return Dnf( n, std::move( clauses ) );
}

} // namespace

TEST( DnfParse, Examples )
{
  const auto and2 = parse_dnf( "x1 x2" );
  const auto f = dnf_to_function( and2 );
  EXPECT_EQ( f, and_function( 2 ) );
  EXPECT_EQ( f.count_minus(), 1u );

  const auto tr = parse_dnf( "x1 x2\nx3 x4\n" );
  EXPECT_EQ( tr, tribes( 2, 2 ) );
  EXPECT_EQ( parse_dnf( "x1 x2 / x3 x4" ), tr );
  EXPECT_EQ( dnf_to_function( tr ).to_string(), oracle::tribes22_table );

  const auto neg = parse_dnf( "n=3 # header\n!x1 x3\n" );
  EXPECT_EQ( neg.num_vars(), 3u );
  EXPECT_EQ( neg.clause( 0 )[0], ( Literal{ 1, false } ) );
  EXPECT_EQ( neg.evaluate( 0b100 ), -1 );
  EXPECT_EQ( neg.evaluate( 0b101 ), 1 );
}

TEST( DnfParse, Errors )
{
  expect_dnf_parse_error( "x1 !x1", 1, 4 );
  expect_dnf_parse_error( "x1 x2\nx3 y4", 2, 4 );
  expect_dnf_parse_error( "x1 / / x2", 1, 6 );
  expect_dnf_parse_error( "x0", 1, 1 );
  expect_dnf_parse_error( "n=2\nx3", 2, 1 );
  expect_dnf_parse_error( "# nothing\n", 2, 1 );
  EXPECT_THROW( Dnf( 2, {} ), std::invalid_argument );
  EXPECT_THROW( Dnf( 2, { Clause{} } ), std::invalid_argument );
}

TEST( DnfParse, RoundTripAndMaterialization )
{
  std::mt19937_64 rng( 31 );
  for ( int i = 0; i < 200; ++i )
  {
    const auto d = random_dnf( rng );
    EXPECT_EQ( parse_dnf( serialize_dnf( d ) ), d ) << serialize_dnf( d );
    const auto f = dnf_to_function( d );
    for ( std::uint64_t m = 0; m < f.size(); ++m )
    {
      // clause-wise evaluation straight from the literals
      bool any = false;
      for ( const auto& c : d.clauses() )
      {
        bool all = true;
        for ( const auto& l : c )
        {
          const bool is_true = ( m >> ( l.var - 1 ) ) & 1u;
          all = all && ( is_true == l.positive );
        }
        any = any || all;
      }
      ASSERT_EQ( f( m ), any ? -1 : 1 );
    }
  }
}

TEST( DnfParse, MaterializationUpToSixteenVariables )
{
  EXPECT_EQ( dnf_to_function( tribes( 4, 4 ) ), oracle::tribes_by_definition( 4, 4 ) );
  EXPECT_EQ( dnf_to_function( tribes( 3, 5 ) ), oracle::tribes_by_definition( 3, 5 ) );
}

TEST( DnfReadK, Examples )
{
  EXPECT_EQ( dnf_read_k( tribes( 2, 2 ) ), 1u );
  EXPECT_EQ( dnf_read_k( parse_dnf( "x1 x2 / x1 x3" ) ), 2u );
  EXPECT_EQ( dnf_read_k( parse_dnf( "x1 x2 x3" ) ), 1u );
  EXPECT_EQ( dnf_read_k( cyclic_read2_dnf() ), 2u );
  EXPECT_EQ( dnf_read_k( grid_read2_dnf() ), 2u );
}

TEST( Regularity, Examples )
{
  const auto a = regularity( tribes( 2, 2 ), 1.0, 0.5 );
  EXPECT_EQ( a.w, 2u );
  EXPECT_DOUBLE_EQ( a.target_count, 2.0 );
  EXPECT_TRUE( a.holds );

  EXPECT_TRUE( regularity( tribes( 3, 5 ), 1.0, std::log2( 5.0 ) / 3.0 ).holds );

  const auto c = regularity( parse_dnf( "x1 / x2 x3 x4 x5" ), 1.0, 0.25 );
  EXPECT_FALSE( c.width_ok );
  EXPECT_FALSE( c.holds );

  // clause count off by more than a factor of two
  const auto d = regularity( tribes( 2, 2 ), 1.0, 2.0 );
  EXPECT_TRUE( d.width_ok );
  EXPECT_FALSE( d.count_ok );
}

TEST( Tribes, ClosedFormExamples )
{
  EXPECT_EQ( tribes_coefficient( 1, 2, 2 ), Dyadic::from_ratio( 9, 6 ) );
  EXPECT_EQ( tribes_coefficient( 2, 2, 2 ), Dyadic::from_ratio( 1, 6 ) );
  EXPECT_EQ( tribes_coefficient( 1, 1, 1 ), Dyadic( 1 ) );
  EXPECT_THROW( tribes_coefficient( 0, 2, 2 ), domain_error );
  EXPECT_THROW( tribes_coefficient( 3, 2, 2 ), domain_error );
  EXPECT_EQ( tribes_met( 0b0101, 2, 2 ), 2u );
  EXPECT_EQ( tribes_met( 0b0011, 2, 2 ), 1u );
}

TEST( Tribes, ClosedFormMatchesTransform )
{
  for ( unsigned w = 1; w <= 3; ++w )
  {
    const unsigned s = unbiased_tribes_count( w );
    const auto f = oracle::tribes_by_definition( w, s );
    const SpectralDistribution d( wht( f ) );
    for ( std::uint64_t S = 1; S < d.size(); ++S )
    {
      ASSERT_EQ( d.weight( S ), tribes_coefficient( tribes_met( S, w, s ), w, s ) ) << "w=" << w << " S=" << S;
    }
  }
}

TEST( Cover, Examples )
{
  const auto tr = tribes( 2, 2 );
  EXPECT_EQ( smallest_cover( tr, 0b0011 ), ( std::vector<std::size_t>{ 0 } ) );
  EXPECT_EQ( cover_cost( tr, { 0 }, CoverMeasure::unique_variables ), 2u );

  const auto chain = parse_dnf( "x1 x2 / x2 x3" );
  EXPECT_EQ( smallest_cover( chain, 0b101 ), ( std::vector<std::size_t>{ 0, 1 } ) );
  EXPECT_EQ( cover_cost( chain, { 0, 1 }, CoverMeasure::unique_variables ), 3u );
  EXPECT_EQ( covers( chain, 0b101 ), ( std::vector<std::uint64_t>{ 0b11 } ) );

  const auto tri = parse_dnf( "x1 x2 / x1 x3 / x2 x3" );
  EXPECT_EQ( smallest_cover( tri, 0b111 ), ( std::vector<std::size_t>{ 0, 1 } ) );
  EXPECT_EQ( covers( tri, 0b111 ), ( std::vector<std::uint64_t>{ 0b011, 0b101, 0b110, 0b111 } ) );
}

TEST( Cover, MeasuresAndErrors )
{
  const auto d = parse_dnf( "x1 x2 x3 x4 / x1 / x4" );
  EXPECT_EQ( smallest_cover( d, 0b1001, CoverMeasure::unique_variables ), ( std::vector<std::size_t>{ 1, 2 } ) );
  EXPECT_EQ( smallest_cover( d, 0b1001, CoverMeasure::clause_count ), ( std::vector<std::size_t>{ 0 } ) );
  EXPECT_EQ( smallest_cover( d, 0b1001, CoverMeasure::total_width ), ( std::vector<std::size_t>{ 1, 2 } ) );
  EXPECT_EQ( parse_cover_measure( to_string( CoverMeasure::total_width ) ), CoverMeasure::total_width );
  EXPECT_THROW( parse_cover_measure( "bogus" ), std::invalid_argument );

  EXPECT_THROW( smallest_cover( parse_dnf( "n=3\nx1 x2" ), 0b100 ), no_cover_error );
  EXPECT_THROW( smallest_cover( tribes( 1, 21 ), 1 ), capacity_error );
  EXPECT_THROW( smallest_cover( tribes( 2, 2 ), 0 ), std::invalid_argument );
}

TEST( Family, Examples )
{
  const auto tr = bfjkmr_family( tribes( 2, 2 ), 1 );
  EXPECT_EQ( tr.members.size(), 7u );
  EXPECT_EQ( tr.weight, Dyadic::from_ratio( 55, 6 ) );
  EXPECT_TRUE( tr.weight_bound.holds );
  EXPECT_TRUE( tr.size_bound.holds );

  const auto single = bfjkmr_family( parse_dnf( "x1 x2" ), 1 );
  EXPECT_EQ( single.members, ( std::vector<std::uint64_t>{ 0, 1, 2, 3 } ) );
  EXPECT_EQ( single.weight, Dyadic( 1 ) );

  const auto read2 = bfjkmr_family( parse_dnf( "x1 x2 / x1 x3" ), 2 );
  EXPECT_GE( read2.weight, Dyadic::from_ratio( 1, 3 ) );
  EXPECT_TRUE( read2.weight_bound.holds );
  EXPECT_THROW( bfjkmr_family( tribes( 2, 2 ), 0 ), std::invalid_argument );
}

TEST( RegularFmei, Tribes22 )
{
  const auto r = regular_fmei_report( tribes( 2, 2 ), 1.0, 0.5, 1 );
  ASSERT_TRUE( r.regularity.holds );
  const auto& hinf = certificate( r, "min_entropy_bound" );
  EXPECT_NEAR( hinf.lhs, std::log2( 64.0 / 9.0 ), 1e-12 );
  EXPECT_NEAR( hinf.lhs, 2.830, 1e-3 );
  EXPECT_NEAR( hinf.rhs, 11.0, 1e-12 );
  const auto& kkl = certificate( r, "kkl_influence" );
  EXPECT_NEAR( kkl.lhs, std::log2( 8.0 / 3.0 ), 1e-12 );
  EXPECT_NEAR( kkl.rhs, 1.5, 1e-12 );
  EXPECT_TRUE( r.passed() );
}

TEST( RegularFmei, NotApplicableOutsideTheClass )
{
  const auto r = regular_fmei_report( parse_dnf( "x1 / x2 x3 x4 x5" ), 1.0, 0.5, 1 );
  ASSERT_EQ( r.certificates.size(), 1u );
  EXPECT_FALSE( r.certificates[0].applicable );
  const auto over = regular_fmei_report( cyclic_read2_dnf(), 1.0, 2.0 / 3.0, 1 );
  EXPECT_FALSE( over.certificates[0].applicable );
}

TEST( RegularFmei, Tribes35StructuralCertificates )
{
  const auto r = regular_fmei_report( tribes( 3, 5 ), 1.0, std::log2( 5.0 ) / 3.0, 1 );
  ASSERT_TRUE( r.regularity.holds );
  for ( const char* name : { "family_weight", "family_size", "family_max_coefficient", "min_entropy_bound",
                             "max_variable_influence" } )
  {
    EXPECT_TRUE( passed( certificate( r, name ) ) ) << name;
  }
  // every variable has influence 2^{-(w-1)} (1 - 2^{-w})^{s-1}
  EXPECT_EQ( certificate( r, "max_variable_influence" ).exact_lhs, "2401/16384" );
}

TEST( RegularFmei, KklFormOnTribes35 )
{
  // I = 15 (1/4)(7/8)^4 against log2(1 / ((1/4)(7/8)^4)); asserted as stated
  const auto r = regular_fmei_report( tribes( 3, 5 ), 1.0, std::log2( 5.0 ) / 3.0, 1 );
  const auto& kkl = certificate( r, "kkl_influence" );
  EXPECT_TRUE( kkl.holds ) << "I = " << kkl.rhs << ", log2(1/MaxInf) = " << kkl.lhs;
}

TEST( RegularFmei, ConstructedReadTwoFormulas )
{
  for ( const auto& d : { cyclic_read2_dnf(), grid_read2_dnf() } )
  {
    const double c2 = std::log2( static_cast<double>( d.num_clauses() ) ) / d.max_width();
    const auto r = regular_fmei_report( d, 1.0, c2, 2 );
    ASSERT_TRUE( r.regularity.holds ) << serialize_dnf( d );
    for ( const auto& c : r.certificates )
    {
      if ( c.name != "kkl_influence" )
      {
        EXPECT_TRUE( passed( c ) ) << c.name << " lhs " << c.lhs << " rhs " << c.rhs;
      }
    }
  }
}

TEST( RegularFmei, KklFormOnReadTwoFormulas )
{
  // asserted as stated; the 3x3 grid has I below log2(1 / MaxInf)
  for ( const auto& d : { cyclic_read2_dnf(), grid_read2_dnf() } )
  {
    const double c2 = std::log2( static_cast<double>( d.num_clauses() ) ) / d.max_width();
    const auto r = regular_fmei_report( d, 1.0, c2, 2 );
    const auto& kkl = certificate( r, "kkl_influence" );
    EXPECT_TRUE( kkl.holds ) << serialize_dnf( d ) << "I = " << kkl.rhs << ", log2(1/MaxInf) = " << kkl.lhs;
  }
}

TEST( RegularFmei, SerializesToJson )
{
  const nlohmann::json j = regular_fmei_report( tribes( 2, 2 ), 1.0, 0.5, 1 );
  EXPECT_TRUE( j.at( "passed" ).get<bool>() );
  EXPECT_EQ( j.at( "family" ).at( "weight_exact" ), "55/64" );
  EXPECT_EQ( j.at( "regularity" ).at( "w" ), 2 );
}
