#pragma once

// Brute-force reference computations, written straight from the definitions
// and independent of the library's fast paths.

#include "fei/boolean_function.hpp"
#include "fei/dyadic.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle
{

/// Frozen truth tables ('+' = +1, index bit i set means x_{i+1} = -1).
inline const std::string maj3_table = "+++-+---";
inline const std::string max2_table = "+++-";
inline const std::string tribes22_table = "+++-+++-+++-----";

/// 2^n f^(S) = sum_m f(m) (-1)^{|S & m|}
inline std::int64_t coefficient_numerator( const fei::BooleanFunction& f, std::uint64_t s )
{
  std::int64_t acc = 0;
  for ( std::uint64_t m = 0; m < f.size(); ++m )
  {
    acc += ( std::popcount( s & m ) % 2 ? -1 : 1 ) * f( m );
  }
  return acc;
}

inline std::vector<long double> squared_coefficients( const fei::BooleanFunction& f )
{
  std::vector<long double> out( f.size() );
  const long double scale = std::ldexp( 1.0L, -static_cast<int>( f.num_vars() ) );
  for ( std::uint64_t s = 0; s < f.size(); ++s )
  {
    const long double c = coefficient_numerator( f, s ) * scale;
    out[s] = c * c;
  }
  return out;
}

inline double entropy( const fei::BooleanFunction& f )
{
  long double h = 0;
  for ( auto p : squared_coefficients( f ) )
  {
    if ( p > 0 )
    {
      h -= p * std::log2( p );
    }
  }
  return static_cast<double>( h );
}

/// sum_i Pr_m[f(m) != f(m ^ e_i)], exact.
inline fei::Dyadic influence_by_flips( const fei::BooleanFunction& f )
{
  std::int64_t flips = 0;
  for ( std::uint64_t m = 0; m < f.size(); ++m )
  {
    for ( unsigned i = 0; i < f.num_vars(); ++i )
    {
      flips += f( m ) != f( m ^ ( std::uint64_t( 1 ) << i ) );
    }
  }
  return fei::Dyadic::from_ratio( flips, static_cast<int>( f.num_vars() ) );
}

/// OR of s disjoint ANDs of width w, evaluated literally.
inline fei::BooleanFunction tribes_by_definition( unsigned w, unsigned s )
{
  const unsigned n = w * s;
  std::vector<std::int8_t> t( std::size_t( 1 ) << n );
  for ( std::uint64_t m = 0; m < t.size(); ++m )
  {
    bool any = false;
    for ( unsigned i = 0; i < s; ++i )
    {
      bool all = true;
      for ( unsigned j = 0; j < w; ++j )
      {
        all = all && ( ( m >> ( i * w + j ) ) & 1u );
      }
      any = any || all;
    }
    t[m] = any ? -1 : 1;
  }
  return fei::BooleanFunction( n, std::move( t ) );
}

} // namespace oracle
