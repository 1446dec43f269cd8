#include "oracles.hpp"

#include "fei/decision_tree.hpp"
#include "fei/io.hpp"
#include "fei/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace fei;

namespace
{

const char* const maj3_tree_text = "(x1 (x2 1 (x3 1 -1)) (x2 (x3 1 -1) -1))";
const char* const parity2_tree_text = "(x1 (x2 1 -1) (x2 -1 1))";

DecisionTree maj3_tree()
{
  return parse_tree( maj3_tree_text );
}

DecisionTree parity2_tree()
{
  return parse_tree( parity2_tree_text );
}

/// sum_{S != empty} g^(S) h^(S) of two functions, by brute force over truth tables.
Dyadic oracle_cov( const BooleanFunction& g, const BooleanFunction& h )
{
  Dyadic acc;
  for ( std::uint64_t s = 1; s < g.size(); ++s )
  {
    acc += Dyadic::from_ratio( oracle::coefficient_numerator( g, s ), static_cast<int>( g.num_vars() ) ) *
           Dyadic::from_ratio( oracle::coefficient_numerator( h, s ), static_cast<int>( h.num_vars() ) );
  }
  return acc;
}

void expect_tree_parse_error( std::string_view text, std::size_t line, std::size_t column )
{
  try
  {
    parse_tree( text );
    ADD_FAILURE() << "accepted: " << text;
  }
  catch ( const parse_error& e )
  {
    EXPECT_EQ( e.line(), line ) << e.what();
    EXPECT_EQ( e.column(), column ) << e.what();
  }
}

std::vector<DecisionTree> random_trees( std::uint64_t seed, int count, unsigned max_k )
{
  std::mt19937_64 rng( seed );
  std::uniform_int_distribution<unsigned> nd( 1, 8 ), kd( 1, max_k ), dd( 1, 8 );
  std::uniform_real_distribution<double> pd( 0.0, 0.4 );
  std::vector<DecisionTree> out;
  for ( int i = 0; i < count; ++i )
  {
    RandomTreeParams p;
    p.n = nd( rng );
    p.read_budget = kd( rng );
    p.max_depth = std::min( dd( rng ), p.n );
    p.leaf_probability = pd( rng );
    out.push_back( random_tree( p, rng ) );
  }
  return out;
}

} // namespace

TEST( TreeParse, Examples )
{
  const auto d = parse_tree( "(x1 1 -1)" );
  EXPECT_EQ( tree_to_function( d ), dictator( 1, 1 ) );
  EXPECT_EQ( tree_to_function( parity2_tree() ), parity( 2 ) );
  EXPECT_EQ( tree_to_function( maj3_tree() ).to_string(), oracle::maj3_table );
  EXPECT_EQ( tree_to_function( parse_tree( "1" ), 2 ), constant_function( 2 ) );
  EXPECT_EQ( tree_to_function( parse_tree( "-1" ) ), constant_function( 0, -1 ) );
}

TEST( TreeParse, RoundTrip )
{
  for ( const char* text : { "1", "-1", "(x1 1 -1)", parity2_tree_text, maj3_tree_text } )
  {
    const auto t = parse_tree( text );
    EXPECT_EQ( serialize_tree( t ), text );
    EXPECT_EQ( parse_tree( serialize_tree( t ) ), t );
  }
  for ( const auto& t : random_trees( 1, 100, 3 ) )
  {
    EXPECT_EQ( parse_tree( serialize_tree( t ) ), t );
  }
}

TEST( TreeParse, Errors )
{
  expect_tree_parse_error( "(x1 (x1 1 -1) 1)", 1, 5 );
  expect_tree_parse_error( "(x1 1\n  2)", 2, 3 );
  expect_tree_parse_error( "(y1 1 -1)", 1, 2 );
  expect_tree_parse_error( "(x1 1 -1", 1, 9 );
  expect_tree_parse_error( "(x1 1 -1) 1", 1, 11 );
  expect_tree_parse_error( "", 1, 1 );
  EXPECT_THROW( parse_tree( "(x0 1 -1)" ), parse_error );
}

TEST( TreeModel, ConstructionValidatesInvariants )
{
  const auto leaf = DecisionTree::leaf( 1 );
  EXPECT_THROW( DecisionTree::query( 1, DecisionTree::query( 1, leaf, leaf ), leaf ), std::invalid_argument );
  EXPECT_THROW( DecisionTree::leaf( 0 ), std::invalid_argument );
  EXPECT_THROW( tree_to_function( maj3_tree(), 2 ), std::invalid_argument );
  // same variable on disjoint paths is fine
  EXPECT_NO_THROW( DecisionTree::query( 2, DecisionTree::query( 1, leaf, leaf ), DecisionTree::query( 1, leaf, leaf ) ) );
}

TEST( TreeModel, PolynomialRecursionAgrees )
{
  // f = (1 + x_r)/2 g + (1 - x_r)/2 h with g, h the subtree functions
  for ( const auto& t : random_trees( 2, 100, 2 ) )
  {
    const unsigned n = 8;
    const auto f = tree_to_function( t, n );
    const auto& root = t.node( t.root() );
    if ( root.is_leaf() )
    {
      continue;
    }
    const auto g = subtree_function( t, root.left, n );
    const auto h = subtree_function( t, root.right, n );
    for ( std::uint64_t m = 0; m < f.size(); ++m )
    {
      const bool minus = ( m >> ( root.var - 1 ) ) & 1u;
      ASSERT_EQ( f( m ), minus ? h( m ) : g( m ) );
    }
  }
}

TEST( TreeCov, Examples )
{
  const auto par = parity2_tree();
  EXPECT_EQ( node_cov( par, par.root() ), Dyadic( -1 ) );
  EXPECT_EQ( tree_cov( par ), Dyadic( -1 ) );

  const auto dict = parse_tree( "(x1 1 -1)" );
  EXPECT_EQ( node_cov( dict, dict.root() ), Dyadic( 0 ) );

  const auto maj = maj3_tree();
  EXPECT_EQ( node_cov( maj, maj.root() ), Dyadic::from_ratio( 1, 2 ) );
  EXPECT_EQ( tree_cov( maj ), tree_cov_recursive( maj ) );
  // root 1/4; each depth-1 node has Cov(1, x3) = 0 and each x3 node has constant children
  EXPECT_EQ( tree_cov( maj ), Dyadic::from_ratio( 1, 2 ) );
  EXPECT_EQ( tree_cov( parse_tree( "1" ) ), Dyadic( 0 ) );
}

TEST( TreeCov, NodeCovMatchesBruteForce )
{
  for ( const auto& t : random_trees( 3, 50, 3 ) )
  {
    for ( auto v : t.preorder() )
    {
      const auto& nd = t.node( v );
      if ( nd.is_leaf() )
      {
        continue;
      }
      const auto g = subtree_function( t, nd.left, 8 );
      const auto h = subtree_function( t, nd.right, 8 );
      ASSERT_EQ( node_cov( t, v, 8 ), oracle_cov( g, h ) );
    }
  }
}

TEST( TreeCov, TwoDefinitionsAgree )
{
  for ( const auto& t : random_trees( 4, 500, 4 ) )
  {
    ASSERT_EQ( tree_cov( t, 8 ), tree_cov_recursive( t, 8 ) ) << serialize_tree( t );
  }
}

TEST( TreeReads, Examples )
{
  EXPECT_EQ( read_profile( parity2_tree() ), ( std::vector<unsigned>{ 1, 2 } ) );
  EXPECT_TRUE( is_read_k( parity2_tree(), 2 ) );
  EXPECT_FALSE( is_read_k( parity2_tree(), 1 ) );
  EXPECT_EQ( read_profile( maj3_tree() ), ( std::vector<unsigned>{ 1, 2, 2 } ) );
  EXPECT_EQ( read_profile( parse_tree( "1" ), 3 ), ( std::vector<unsigned>{ 0, 0, 0 } ) );
  EXPECT_EQ( max_read( parse_tree( "1" ) ), 0u );
  EXPECT_EQ( read_multiplicity( maj3_tree(), 3 ), 2u );
}

TEST( TreeReads, MultiplicityFunctions )
{
  EXPECT_EQ( m_T( parity2_tree(), 0b11 ), 2u );
  EXPECT_NEAR( sq_T( parity2_tree(), 0b11 ), 2.0 * ( 1.0 + std::sqrt( 2.0 ) ), 1e-12 );
  EXPECT_EQ( m_T( parity2_tree(), 0b01 ), 1u );
  EXPECT_NEAR( sq_T( parity2_tree(), 0b01 ), 2.0, 1e-12 );
  EXPECT_EQ( m_T( maj3_tree(), 0b111 ), 2u );
  EXPECT_NEAR( sq_T( maj3_tree(), 0b111 ), 2.0 * ( 1.0 + 2.0 * std::sqrt( 2.0 ) ), 1e-12 );
  EXPECT_THROW( m_T( parse_tree( "(x1 1 -1)" ), 0b10 ), domain_error );
  EXPECT_THROW( sq_T( parse_tree( "(x1 1 -1)" ), 0b11 ), domain_error );
}

TEST( CovBounds, ParityExample )
{
  const auto r = cov_bounds_report( parity2_tree() );
  EXPECT_EQ( r.cov, Dyadic( -1 ) );
  EXPECT_EQ( r.k, 2u );
  ASSERT_EQ( r.certificates.size(), 4u );
  EXPECT_EQ( r.certificates[0].exact_rhs, "1" );
  for ( const auto& c : r.certificates )
  {
    EXPECT_TRUE( c.holds ) << c.name;
  }
  EXPECT_GE( r.certificates[2].rhs, 0.0 );
  EXPECT_GE( r.certificates[3].rhs, 0.0 );
  EXPECT_FALSE( r.log_k_conjecture.asserted );
  EXPECT_TRUE( r.passed() );
}

TEST( CovBounds, ReadOnceTreesHaveNonPositiveCov )
{
  for ( const auto& t : random_trees( 5, 200, 1 ) )
  {
    const auto r = cov_bounds_report( t, 8 );
    EXPECT_LE( r.cov, Dyadic( 0 ) ) << serialize_tree( t );
    EXPECT_EQ( r.certificates[0].exact_rhs, "0" );
    EXPECT_TRUE( r.passed() );
  }
}

TEST( CovBounds, RandomReadKTrees )
{
  for ( const auto& t : random_trees( 6, 500, 4 ) )
  {
    const auto r = cov_bounds_report( t, 8 );
    ASSERT_LE( r.k, 4u );
    for ( const auto& c : r.certificates )
    {
      ASSERT_TRUE( c.holds ) << c.name << " " << serialize_tree( t );
    }
  }
}

TEST( TreeBoundary, Examples )
{
  EXPECT_EQ( boundary_size( parity2_tree() ), 2u );
  EXPECT_EQ( inner_nodes( parity2_tree() ), ( std::vector<std::size_t>{ parity2_tree().root() } ) );
  EXPECT_EQ( boundary_size( maj3_tree() ), 4u );
  EXPECT_EQ( inner_nodes( maj3_tree() ).size(), 1u );
  EXPECT_EQ( boundary_size( parse_tree( "(x1 1 -1)" ) ), 1u );
  EXPECT_TRUE( inner_nodes( parse_tree( "(x1 1 -1)" ) ).empty() );
  // literal count for the full parity tree is 2^{n-1}
  EXPECT_EQ( boundary_size( full_parity_tree( 3 ) ), 4u );
  EXPECT_EQ( inner_nodes( full_parity_tree( 3 ) ).size(), 3u );
}

TEST( L1TreeBound, Examples )
{
  const auto par = l1_tree_bound( parity2_tree() );
  EXPECT_EQ( par.exact_lhs, "1" );
  EXPECT_EQ( par.exact_rhs, "1" );
  EXPECT_TRUE( passed( par ) );

  const auto maj = l1_tree_bound( maj3_tree() );
  EXPECT_EQ( maj.exact_lhs, "2" );
  EXPECT_DOUBLE_EQ( maj.rhs, 3.75 );
  EXPECT_TRUE( passed( maj ) );

  for ( unsigned n = 2; n <= 4; ++n )
  {
    const auto c = l1_tree_bound( full_parity_tree( n ) );
    EXPECT_EQ( c.exact_lhs, "1" ) << n;
    EXPECT_EQ( c.exact_rhs, "1" ) << n;
    EXPECT_DOUBLE_EQ( c.slack, 0.0 );
  }
  EXPECT_FALSE( l1_tree_bound( parse_tree( "1" ) ).applicable );
}

TEST( L1TreeBound, RandomTreesAgainstGroundTruth )
{
  for ( const auto& t : random_trees( 7, 500, 4 ) )
  {
    const auto c = l1_tree_bound( t, 8 );
    if ( !c.applicable )
    {
      continue;
    }
    ASSERT_TRUE( passed( c ) ) << serialize_tree( t );
    EXPECT_EQ( *c.exact_lhs, l1_norm( wht( tree_to_function( t, 8 ) ) ).to_string() );
    // never weaker than the leaf count
    EXPECT_LE( c.rhs, static_cast<double>( t.leaf_count() ) );
  }
}

TEST( SplitIdentity, Examples )
{
  const auto par = parity2_tree();
  const auto c = www_split_identity( par );
  EXPECT_EQ( c.exact_lhs, "0" );
  EXPECT_TRUE( c.holds );
  // S = {2}: g^ = 1, h^ = -1, f^({2}) = 0, f^({1,2}) = 1
  const auto g = subtree_function( par, par.node( par.root() ).left, 2 );
  const auto h = subtree_function( par, par.node( par.root() ).right, 2 );
  EXPECT_EQ( oracle::coefficient_numerator( g, 0b10 ), 4 );
  EXPECT_EQ( oracle::coefficient_numerator( h, 0b10 ), -4 );
  EXPECT_FALSE( www_split_identity( parse_tree( "-1" ) ).applicable );
}

TEST( SplitIdentity, RandomTreesExact )
{
  for ( const auto& t : random_trees( 8, 500, 4 ) )
  {
    const auto c = www_split_identity( t, 8 );
    if ( c.applicable )
    {
      ASSERT_EQ( c.exact_lhs, "0" ) << serialize_tree( t );
    }
  }
}

TEST( SplitIdentity, AbsoluteSumIdentity )
{
  std::mt19937_64 rng( 9 );
  std::uniform_real_distribution<double> u( -10.0, 10.0 );
  for ( int i = 0; i < 1000; ++i )
  {
    const double a = u( rng ), b = u( rng );
    EXPECT_NEAR( std::fabs( a + b ) + std::fabs( a - b ), 2.0 * std::max( std::fabs( a ), std::fabs( b ) ), 1e-12 );
  }
}

TEST( RandomTree, SeededAndWithinBudget )
{
  RandomTreeParams p;
  p.n = 6;
  p.max_depth = 5;
  p.read_budget = 2;
  p.leaf_probability = 0.1;
  std::mt19937_64 a( 42 ), b( 42 );
  for ( int i = 0; i < 50; ++i )
  {
    const auto t = random_tree( p, a );
    EXPECT_EQ( t, random_tree( p, b ) );
    EXPECT_TRUE( is_read_k( t, 2 ) );
    EXPECT_LE( t.depth(), 5u );
    EXPECT_FALSE( t.node( t.root() ).is_leaf() );
  }
  p.n = 0;
  EXPECT_THROW( random_tree( p, a ), std::invalid_argument );
}

TEST( TreeStats, CsvRow )
{
  const auto s = tree_stats( maj3_tree() );
  EXPECT_EQ( tree_stats_csv_header(), "depth,size,leaves,boundary,inner,max_read,read_profile" );
  EXPECT_EQ( tree_stats_csv_row( s ), "3,11,6,4,1,2,\"1 2 2\"" );
}
