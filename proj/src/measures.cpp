#include "fei/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fei
{

namespace
{

double binary_entropy_local( double p )
{
  if ( p <= 0.0 || p >= 1.0 )
  {
    return 0.0;
  }
  return -p * std::log2( p ) - ( 1.0 - p ) * std::log2( 1.0 - p );
}

} // namespace

double entropy( const SpectralDistribution& d )
{
  double h = 0.0;
  if ( d.is_exact() )
  {
    // -log2(p) = 2n - log2(numerator), avoiding one rounding
    const double two_n = 2.0 * d.num_vars();
    for ( std::uint64_t s = 0; s < d.size(); ++s )
    {
      const auto e = d.exact_numerator( s );
      if ( e != 0 )
      {
        h += d.prob( s ) * ( two_n - std::log2( static_cast<double>( e ) ) );
      }
    }
    return h;
  }
  for ( auto p : d.probs() )
  {
    if ( p > 0.0 )
    {
      h -= p * std::log2( p );
    }
  }
  return h;
}

double min_entropy( const SpectralDistribution& d )
{
  const auto probs = d.probs();
  const double top = *std::max_element( probs.begin(), probs.end() );
  if ( top <= 0.0 )
  {
    throw domain_error( "min-entropy of the zero distribution is undefined" );
  }
  if ( d.is_exact() )
  {
    const auto e = d.exact_numerators();
    return 2.0 * d.num_vars() - std::log2( static_cast<double>( *std::max_element( e.begin(), e.end() ) ) );
  }
  return -std::log2( top );
}

double renyi_entropy( const SpectralDistribution& d, double a )
{
  if ( !( a >= 0.0 ) )
  {
    throw domain_error( "Renyi order must be nonnegative" );
  }
  if ( a == 1.0 )
  {
    return entropy( d );
  }
  if ( std::isinf( a ) )
  {
    return min_entropy( d );
  }
  double sum = 0.0;
  for ( auto p : d.probs() )
  {
    if ( p > 0.0 )
    {
      sum += a == 0.5 ? std::sqrt( p ) : std::pow( p, a );
    }
  }
  return std::log2( sum ) / ( 1.0 - a );
}

Dyadic total_influence_exact( const SpectralDistribution& d )
{
  if ( !d.is_exact() )
  {
    throw std::logic_error( "exact influence needs a Boolean source" );
  }
  int128 acc = 0;
  for ( std::uint64_t s = 0; s < d.size(); ++s )
  {
    acc += static_cast<int128>( d.exact_numerator( s ) ) * std::popcount( s );
  }
  return Dyadic::from_ratio( acc, 2 * static_cast<int>( d.num_vars() ) );
}

double total_influence( const SpectralDistribution& d )
{
  if ( d.is_exact() )
  {
    return total_influence_exact( d ).to_double();
  }
  double acc = 0.0;
  for ( std::uint64_t s = 0; s < d.size(); ++s )
  {
    acc += d.prob( s ) * std::popcount( s );
  }
  return acc;
}

Dyadic variable_influence_exact( const BooleanFunction& f, unsigned i )
{
  if ( i == 0 || i > f.num_vars() )
  {
    throw std::out_of_range( "variable index out of range" );
  }
  const std::uint64_t bit = std::uint64_t( 1 ) << ( i - 1 );
  std::uint64_t flips = 0;
  for ( std::uint64_t m = 0; m < f.size(); ++m )
  {
    if ( !( m & bit ) && f( m ) != f( m | bit ) )
    {
      ++flips;
    }
  }
  // each unordered edge counts for both endpoints
  return Dyadic::from_ratio( static_cast<int128>( flips ) * 2, static_cast<int>( f.num_vars() ) );
}

double variable_influence( const BooleanFunction& f, unsigned i )
{
  return variable_influence_exact( f, i ).to_double();
}

std::vector<Dyadic> variable_influences( const BooleanFunction& f )
{
  std::vector<Dyadic> out;
  out.reserve( f.num_vars() );
  for ( unsigned i = 1; i <= f.num_vars(); ++i )
  {
    out.push_back( variable_influence_exact( f, i ) );
  }
  return out;
}

Dyadic mean( const BooleanFunction& f )
{
  const auto minus = static_cast<int128>( f.count_minus() );
  const auto total = static_cast<int128>( f.size() );
  return Dyadic::from_ratio( total - 2 * minus, static_cast<int>( f.num_vars() ) );
}

Dyadic variance( const BooleanFunction& f )
{
  const Dyadic mu = mean( f );
  return Dyadic( 1 ) - mu * mu;
}

Dyadic variance( const SpectralDistribution& d )
{
  return d.exact_mass() - d.weight( 0 );
}

std::vector<Dyadic> level_weights( const SpectralDistribution& d )
{
  if ( !d.is_exact() )
  {
    throw std::logic_error( "exact level weights need a Boolean source" );
  }
  std::vector<int128> acc( d.num_vars() + 1, 0 );
  for ( std::uint64_t s = 0; s < d.size(); ++s )
  {
    acc[std::popcount( s )] += static_cast<int128>( d.exact_numerator( s ) );
  }
  std::vector<Dyadic> out;
  out.reserve( acc.size() );
  for ( auto a : acc )
  {
    out.push_back( Dyadic::from_ratio( a, 2 * static_cast<int>( d.num_vars() ) ) );
  }
  return out;
}

Dyadic weight_at_most( const SpectralDistribution& d, unsigned t )
{
  const auto w = level_weights( d );
  Dyadic acc;
  for ( unsigned k = 0; k < w.size() && k <= t; ++k )
  {
    acc += w[k];
  }
  return acc;
}

Dyadic weight_above( const SpectralDistribution& d, unsigned t )
{
  const auto w = level_weights( d );
  Dyadic acc;
  for ( unsigned k = t + 1; k < w.size(); ++k )
  {
    acc += w[k];
  }
  return acc;
}

Dyadic l1_norm( const Spectrum& s )
{
  int128 acc = 0;
  for ( auto v : s.numerators() )
  {
    acc += v < 0 ? -static_cast<int128>( v ) : static_cast<int128>( v );
  }
  return Dyadic::from_ratio( acc, static_cast<int>( s.num_vars() ) );
}

std::uint64_t sparsity( const Spectrum& s )
{
  const auto nums = s.numerators();
  return static_cast<std::uint64_t>( std::count_if( nums.begin(), nums.end(), []( auto v ) { return v != 0; } ) );
}

unsigned degree( const Spectrum& s )
{
  unsigned d = 0;
  for ( std::uint64_t m = 0; m < s.size(); ++m )
  {
    if ( s.numerator( m ) != 0 )
    {
      d = std::max( d, static_cast<unsigned>( std::popcount( m ) ) );
    }
  }
  return d;
}

unsigned granularity( const Spectrum& s )
{
  int g = 0;
  for ( auto v : s.numerators() )
  {
    if ( v != 0 )
    {
      const int tz = std::countr_zero( static_cast<std::uint64_t>( v < 0 ? -v : v ) );
      g = std::max( g, static_cast<int>( s.num_vars() ) - tz );
    }
  }
  return static_cast<unsigned>( g );
}

unsigned sensitivity_at( const BooleanFunction& f, std::uint64_t m )
{
  unsigned c = 0;
  for ( unsigned i = 0; i < f.num_vars(); ++i )
  {
    c += f( m ) != f( m ^ ( std::uint64_t( 1 ) << i ) );
  }
  return c;
}

unsigned max_sensitivity( const BooleanFunction& f )
{
  unsigned best = 0;
  for ( std::uint64_t m = 0; m < f.size(); ++m )
  {
    best = std::max( best, sensitivity_at( f, m ) );
  }
  return best;
}

EntropyPartition entropy_partition( const SpectralDistribution& d, const SubsetPredicate& family )
{
  EntropyPartition part;
  double mass_in = 0.0;
  bool any_out_mass = false;
  bool any_in_mass = false;
  for ( std::uint64_t s = 0; s < d.size(); ++s )
  {
    if ( d.prob( s ) <= 0.0 )
    {
      continue;
    }
    if ( family( s ) )
    {
      mass_in += d.prob( s );
      any_in_mass = true;
    }
    else
    {
      any_out_mass = true;
    }
  }
  const double total = entropy( d );
  if ( !any_in_mass || !any_out_mass )
  {
    part.degenerate = true;
    part.mass_in = any_in_mass ? 1.0 : 0.0;
    ( any_in_mass ? part.entropy_in : part.entropy_out ) = total;
    return part;
  }
  const double mass_out = d.mass() - mass_in;
  double h_in = 0.0;
  double h_out = 0.0;
  for ( std::uint64_t s = 0; s < d.size(); ++s )
  {
    const double p = d.prob( s );
    if ( p <= 0.0 )
    {
      continue;
    }
    if ( family( s ) )
    {
      const double q = p / mass_in;
      h_in -= q * std::log2( q );
    }
    else
    {
      const double q = p / mass_out;
      h_out -= q * std::log2( q );
    }
  }
  part.mass_in = mass_in;
  part.entropy_in = h_in;
  part.entropy_out = h_out;
  part.binary_term = binary_entropy_local( mass_in );
  return part;
}

SpectralProfile::SpectralProfile( BooleanFunction f )
    : function( std::move( f ) ),
      n( function.num_vars() ),
      spectrum( wht( function ) ),
      distribution( spectrum )
{
  entropy = fei::entropy( distribution );
  min_entropy = fei::min_entropy( distribution );
  influence_exact = total_influence_exact( distribution );
  influence = influence_exact.to_double();
  const auto mu = Dyadic::from_ratio( spectrum.numerator( 0 ), static_cast<int>( n ) );
  mean = mu;
  variance_exact = Dyadic( 1 ) - mu * mu;
  variance = variance_exact.to_double();
  l1_exact = l1_norm( spectrum );
  l1 = l1_exact.to_double();
  sparsity = fei::sparsity( spectrum );
  degree = fei::degree( spectrum );
  granularity = fei::granularity( spectrum );
}

} // namespace fei
