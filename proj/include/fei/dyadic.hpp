#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace fei
{

using int128 = __int128;

/*! \brief Exact dyadic rational num / 2^exp.

  Every Fourier coefficient of a Boolean function on n variables is an
  integer multiple of 2^-n, so sums and products of coefficients stay in this
  ring. Values are kept normalized (odd numerator or zero, exp >= 0).
  Arithmetic that would overflow 127 bits throws std::overflow_error.
*/
class Dyadic
{
public:
  constexpr Dyadic() = default;
  Dyadic( std::int64_t integer ); // NOLINT(google-explicit-constructor)

  /// num / 2^exp, normalized. exp may be negative (the numerator is shifted).
  static Dyadic from_ratio( int128 num, int exp );

  int128 numerator() const { return num_; }
  int exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : ( num_ < 0 ? -1 : 0 ); }

  double to_double() const;
  long double to_long_double() const;

  /// "p/2^k" written as "p/q", or an integer.
  std::string to_string() const;

  Dyadic abs() const;
  Dyadic operator-() const;

  friend Dyadic operator+( const Dyadic& a, const Dyadic& b );
  friend Dyadic operator-( const Dyadic& a, const Dyadic& b );
  friend Dyadic operator*( const Dyadic& a, const Dyadic& b );

  Dyadic& operator+=( const Dyadic& o ) { return *this = *this + o; }
  Dyadic& operator-=( const Dyadic& o ) { return *this = *this - o; }
  Dyadic& operator*=( const Dyadic& o ) { return *this = *this * o; }

  /// Multiplies by 2^k (k may be negative).
  Dyadic scaled( int k ) const;

  friend bool operator==( const Dyadic& a, const Dyadic& b ) = default;
  friend std::strong_ordering operator<=>( const Dyadic& a, const Dyadic& b );

private:
  void normalize();

  int128 num_ = 0;
  int exp_ = 0;
};

std::string to_string( int128 v );

} // namespace fei
