#include "fei/boolean_function.hpp"

#include <bit>
#include <cmath>

namespace fei
{

void check_dense_limit( unsigned n )
{
  if ( n > max_dense_vars )
  {
    throw capacity_error( "dense table limit exceeded: n = " + std::to_string( n ) +
                          " > " + std::to_string( max_dense_vars ) );
  }
}

BooleanFunction::BooleanFunction( unsigned n ) : n_( n )
{
  check_dense_limit( n );
  table_.assign( std::uint64_t( 1 ) << n, 1 );
}

BooleanFunction::BooleanFunction( unsigned n, std::vector<std::int8_t> table )
    : n_( n ), table_( std::move( table ) )
{
  check_dense_limit( n );
  if ( table_.size() != ( std::uint64_t( 1 ) << n ) )
  {
    throw std::invalid_argument( "truth table length must be 2^n" );
  }
  for ( auto v : table_ )
  {
    if ( v != 1 && v != -1 )
    {
      throw std::invalid_argument( "truth table entries must be +1 or -1" );
    }
  }
}

std::uint64_t BooleanFunction::count_minus() const
{
  std::uint64_t c = 0;
  for ( auto v : table_ )
  {
    c += v < 0;
  }
  return c;
}

BooleanFunction BooleanFunction::transformed( std::span<const unsigned> perm, mask_t flip ) const
{
  if ( perm.size() != n_ )
  {
    throw std::invalid_argument( "permutation size mismatch" );
  }
  std::vector<std::int8_t> out( table_.size() );
  for ( std::uint64_t m = 0; m < table_.size(); ++m )
  {
    const auto y = static_cast<mask_t>( m ) ^ flip;
    mask_t src = 0;
    for ( unsigned i = 0; i < n_; ++i )
    {
      if ( ( y >> i ) & 1u )
      {
        src |= mask_t( 1 ) << perm[i];
      }
    }
    out[m] = table_[src];
  }
  return BooleanFunction( n_, std::move( out ) );
}

std::string BooleanFunction::to_string() const
{
  std::string s( table_.size(), '+' );
  for ( std::uint64_t m = 0; m < table_.size(); ++m )
  {
    if ( table_[m] < 0 )
    {
      s[m] = '-';
    }
  }
  return s;
}

BooleanFunction BooleanFunction::from_string( unsigned n, std::string_view pm )
{
  check_dense_limit( n );
  if ( pm.size() != ( std::uint64_t( 1 ) << n ) )
  {
    throw std::invalid_argument( "truth table string must have 2^n characters" );
  }
  std::vector<std::int8_t> t( pm.size() );
  for ( std::size_t i = 0; i < pm.size(); ++i )
  {
    if ( pm[i] == '+' )
    {
      t[i] = 1;
    }
    else if ( pm[i] == '-' )
    {
      t[i] = -1;
    }
    else
    {
      throw std::invalid_argument( "truth table characters must be '+' or '-'" );
    }
  }
  return BooleanFunction( n, std::move( t ) );
}

std::uint64_t BooleanFunction::to_index() const
{
  if ( n_ > 6 )
  {
    throw capacity_error( "truth table index needs n <= 6" );
  }
  std::uint64_t idx = 0;
  for ( std::uint64_t m = 0; m < table_.size(); ++m )
  {
    if ( table_[m] < 0 )
    {
      idx |= std::uint64_t( 1 ) << m;
    }
  }
  return idx;
}

BooleanFunction BooleanFunction::from_index( unsigned n, std::uint64_t index )
{
  if ( n > 6 )
  {
    throw capacity_error( "truth table index needs n <= 6" );
  }
  std::vector<std::int8_t> t( std::size_t( 1 ) << n );
  for ( std::size_t m = 0; m < t.size(); ++m )
  {
    t[m] = ( ( index >> m ) & 1u ) ? -1 : 1;
  }
  return BooleanFunction( n, std::move( t ) );
}

RealFunction::RealFunction( unsigned n, std::vector<double> table ) : n_( n ), table_( std::move( table ) )
{
  check_dense_limit( n );
  if ( table_.size() != ( std::uint64_t( 1 ) << n ) )
  {
    throw std::invalid_argument( "table length must be 2^n" );
  }
}

BooleanFunction constant_function( unsigned n, int value )
{
  check_dense_limit( n );
  return BooleanFunction( n, std::vector<std::int8_t>( std::size_t( 1 ) << n, value < 0 ? -1 : 1 ) );
}

BooleanFunction character( unsigned n, mask_t subset )
{
  check_dense_limit( n );
  std::vector<std::int8_t> t( std::size_t( 1 ) << n );
  for ( std::size_t m = 0; m < t.size(); ++m )
  {
    t[m] = ( std::popcount( static_cast<mask_t>( m ) & subset ) & 1 ) ? -1 : 1;
  }
  return BooleanFunction( n, std::move( t ) );
}

BooleanFunction dictator( unsigned n, unsigned i )
{
  if ( i == 0 || i > n )
  {
    throw std::out_of_range( "dictator variable out of range" );
  }
  return character( n, mask_t( 1 ) << ( i - 1 ) );
}

BooleanFunction parity( unsigned n )
{
  check_dense_limit( n );
  return character( n, n == 32 ? ~mask_t( 0 ) : static_cast<mask_t>( ( std::uint64_t( 1 ) << n ) - 1 ) );
}

BooleanFunction majority( unsigned n )
{
  if ( n % 2 == 0 )
  {
    throw std::invalid_argument( "majority needs an odd number of variables" );
  }
  check_dense_limit( n );
  std::vector<std::int8_t> t( std::size_t( 1 ) << n );
  for ( std::size_t m = 0; m < t.size(); ++m )
  {
    t[m] = 2u * std::popcount( static_cast<mask_t>( m ) ) > n ? -1 : 1;
  }
  return BooleanFunction( n, std::move( t ) );
}

BooleanFunction max_function()
{
  return and_function( 2 );
}

BooleanFunction and_function( unsigned n )
{
  check_dense_limit( n );
  std::vector<std::int8_t> t( std::size_t( 1 ) << n, 1 );
  t.back() = -1;
  return BooleanFunction( n, std::move( t ) );
}

BooleanFunction random_function( unsigned n, std::mt19937_64& rng )
{
  check_dense_limit( n );
  std::vector<std::int8_t> t( std::size_t( 1 ) << n );
  std::uint64_t bits = 0;
  for ( std::size_t m = 0; m < t.size(); ++m )
  {
    if ( m % 64 == 0 )
    {
      bits = rng();
    }
    t[m] = ( bits & 1u ) ? -1 : 1;
    bits >>= 1;
  }
  return BooleanFunction( n, std::move( t ) );
}

RealFunction normalized_sum( unsigned n )
{
  check_dense_limit( n );
  std::vector<double> t( std::size_t( 1 ) << n );
  const double scale = 1.0 / std::sqrt( static_cast<double>( n ) );
  for ( std::size_t m = 0; m < t.size(); ++m )
  {
    const int minus = std::popcount( static_cast<mask_t>( m ) );
    t[m] = ( static_cast<int>( n ) - 2 * minus ) * scale;
  }
  return RealFunction( n, std::move( t ) );
}

} // namespace fei
