#include "fei/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace fei
{

namespace
{

template<typename T>
void butterfly( std::vector<T>& a )
{
  for ( std::size_t h = 1; h < a.size(); h <<= 1 )
  {
    for ( std::size_t i = 0; i < a.size(); i += h << 1 )
    {
      for ( std::size_t j = i; j < i + h; ++j )
      {
        const T x = a[j];
        const T y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

} // namespace

Spectrum::Spectrum( unsigned n, std::vector<std::int64_t> numerators ) : n_( n ), numer_( std::move( numerators ) )
{
  check_dense_limit( n );
  if ( numer_.size() != ( std::uint64_t( 1 ) << n ) )
  {
    throw std::invalid_argument( "spectrum length must be 2^n" );
  }
}

double Spectrum::value( std::uint64_t s ) const
{
  return std::ldexp( static_cast<double>( numer_[s] ), -static_cast<int>( n_ ) );
}

RealSpectrum::RealSpectrum( unsigned n, std::vector<double> coeffs ) : n_( n ), coeffs_( std::move( coeffs ) )
{
  check_dense_limit( n );
  if ( coeffs_.size() != ( std::uint64_t( 1 ) << n ) )
  {
    throw std::invalid_argument( "spectrum length must be 2^n" );
  }
}

SpectralDistribution::SpectralDistribution( const Spectrum& s ) : n_( s.num_vars() )
{
  probs_.resize( s.size() );
  exact_.resize( s.size() );
  const int e = -2 * static_cast<int>( n_ );
  for ( std::uint64_t i = 0; i < s.size(); ++i )
  {
    const auto a = static_cast<std::uint64_t>( std::llabs( s.numerator( i ) ) );
    exact_[i] = a * a;
    probs_[i] = std::ldexp( static_cast<double>( exact_[i] ), e );
  }
}

SpectralDistribution::SpectralDistribution( const RealSpectrum& s ) : n_( s.num_vars() )
{
  probs_.resize( s.size() );
  for ( std::uint64_t i = 0; i < s.size(); ++i )
  {
    probs_[i] = s.value( i ) * s.value( i );
  }
}

Dyadic SpectralDistribution::weight( std::uint64_t s ) const
{
  if ( !is_exact() )
  {
    throw std::logic_error( "exact weights need a Boolean source" );
  }
  return Dyadic::from_ratio( static_cast<int128>( exact_[s] ), 2 * static_cast<int>( n_ ) );
}

Dyadic SpectralDistribution::exact_mass() const
{
  if ( !is_exact() )
  {
    throw std::logic_error( "exact mass needs a Boolean source" );
  }
  int128 total = 0;
  for ( auto w : exact_ )
  {
    total += static_cast<int128>( w );
  }
  return Dyadic::from_ratio( total, 2 * static_cast<int>( n_ ) );
}

double SpectralDistribution::mass() const
{
  double t = 0.0;
  for ( auto p : probs_ )
  {
    t += p;
  }
  return t;
}

Spectrum wht( const BooleanFunction& f )
{
  auto t = f.table();
  std::vector<std::int64_t> a( t.begin(), t.end() );
  butterfly( a );
  return Spectrum( f.num_vars(), std::move( a ) );
}

RealSpectrum wht( const RealFunction& f )
{
  auto t = f.table();
  std::vector<double> a( t.begin(), t.end() );
  butterfly( a );
  const int e = -static_cast<int>( f.num_vars() );
  for ( auto& v : a )
  {
    v = std::ldexp( v, e );
  }
  return RealSpectrum( f.num_vars(), std::move( a ) );
}

RealFunction inverse_wht( const Spectrum& s )
{
  // integer butterfly of the numerators gives 2^n f(x)
  auto nums = s.numerators();
  std::vector<std::int64_t> a( nums.begin(), nums.end() );
  butterfly( a );
  std::vector<double> out( a.size() );
  const int e = -static_cast<int>( s.num_vars() );
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    out[i] = std::ldexp( static_cast<double>( a[i] ), e );
  }
  return RealFunction( s.num_vars(), std::move( out ) );
}

RealFunction inverse_wht( const RealSpectrum& s )
{
  auto v = s.values();
  std::vector<double> a( v.begin(), v.end() );
  butterfly( a );
  return RealFunction( s.num_vars(), std::move( a ) );
}

BooleanFunction to_boolean( const Spectrum& s )
{
  auto nums = s.numerators();
  std::vector<std::int64_t> a( nums.begin(), nums.end() );
  butterfly( a );
  const std::int64_t scale = std::int64_t( 1 ) << s.num_vars();
  std::vector<std::int8_t> t( a.size() );
  for ( std::size_t i = 0; i < a.size(); ++i )
  {
    if ( a[i] == scale )
    {
      t[i] = 1;
    }
    else if ( a[i] == -scale )
    {
      t[i] = -1;
    }
    else
    {
      throw std::invalid_argument( "spectrum is not that of a Boolean function" );
    }
  }
  return BooleanFunction( s.num_vars(), std::move( t ) );
}

} // namespace fei
