#include "fei/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fei
{

namespace
{

int128 shift_left_checked( int128 v, int k )
{
  if ( k == 0 || v == 0 )
  {
    return v;
  }
  if ( k >= 126 )
  {
    throw std::overflow_error( "dyadic: shift overflow" );
  }
  const int128 limit = ( int128( 1 ) << ( 126 - k ) );
  if ( v >= limit || v <= -limit )
  {
    throw std::overflow_error( "dyadic: shift overflow" );
  }
  return v * ( int128( 1 ) << k );
}

} // namespace

Dyadic::Dyadic( std::int64_t integer ) : num_( integer ), exp_( 0 ) {}

Dyadic Dyadic::from_ratio( int128 num, int exp )
{
  Dyadic d;
  if ( exp < 0 )
  {
    d.num_ = shift_left_checked( num, -exp );
    d.exp_ = 0;
  }
  else
  {
    d.num_ = num;
    d.exp_ = exp;
  }
  d.normalize();
  return d;
}

void Dyadic::normalize()
{
  if ( num_ == 0 )
  {
    exp_ = 0;
    return;
  }
  while ( exp_ > 0 && ( num_ & 1 ) == 0 )
  {
    num_ /= 2;
    --exp_;
  }
}

double Dyadic::to_double() const
{
  return static_cast<double>( to_long_double() );
}

long double Dyadic::to_long_double() const
{
  return std::ldexp( static_cast<long double>( num_ ), -exp_ );
}

std::string to_string( int128 v )
{
  if ( v == 0 )
  {
    return "0";
  }
  const bool neg = v < 0;
  std::string s;
  // work on the negative side so INT128_MIN is representable
  int128 w = neg ? v : -v;
  while ( w != 0 )
  {
    const int digit = -static_cast<int>( w % 10 );
    s.push_back( static_cast<char>( '0' + digit ) );
    w /= 10;
  }
  if ( neg )
  {
    s.push_back( '-' );
  }
  std::reverse( s.begin(), s.end() );
  return s;
}

std::string Dyadic::to_string() const
{
  if ( exp_ == 0 )
  {
    return fei::to_string( num_ );
  }
  if ( exp_ < 126 )
  {
    return fei::to_string( num_ ) + "/" + fei::to_string( int128( 1 ) << exp_ );
  }
  return fei::to_string( num_ ) + "/2^" + std::to_string( exp_ );
}

Dyadic Dyadic::abs() const
{
  Dyadic d = *this;
  if ( d.num_ < 0 )
  {
    d.num_ = -d.num_;
  }
  return d;
}

Dyadic Dyadic::operator-() const
{
  Dyadic d = *this;
  d.num_ = -d.num_;
  return d;
}

Dyadic operator+( const Dyadic& a, const Dyadic& b )
{
  const int e = std::max( a.exp_, b.exp_ );
  const int128 x = shift_left_checked( a.num_, e - a.exp_ );
  const int128 y = shift_left_checked( b.num_, e - b.exp_ );
  int128 sum;
  if ( __builtin_add_overflow( x, y, &sum ) )
  {
    throw std::overflow_error( "dyadic: addition overflow" );
  }
  return Dyadic::from_ratio( sum, e );
}

Dyadic operator-( const Dyadic& a, const Dyadic& b )
{
  return a + ( -b );
}

Dyadic operator*( const Dyadic& a, const Dyadic& b )
{
  int128 prod;
  if ( __builtin_mul_overflow( a.num_, b.num_, &prod ) )
  {
    throw std::overflow_error( "dyadic: multiplication overflow" );
  }
  return Dyadic::from_ratio( prod, a.exp_ + b.exp_ );
}

Dyadic Dyadic::scaled( int k ) const
{
  return from_ratio( num_, exp_ - k );
}

std::strong_ordering operator<=>( const Dyadic& a, const Dyadic& b )
{
  const int s = ( a - b ).sign();
  if ( s < 0 )
  {
    return std::strong_ordering::less;
  }
  if ( s > 0 )
  {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

} // namespace fei
