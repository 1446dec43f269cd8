#pragma once

#include "fei/boolean_function.hpp"
#include "fei/dyadic.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace fei
{

/*! \brief Exact Fourier spectrum of a Boolean function.

  Coefficient f^(S) is numerator(S) / 2^n, where S is a subset bit-mask
  (bit 0 = variable 1).
*/
class Spectrum
{
public:
  Spectrum( unsigned n, std::vector<std::int64_t> numerators );

  unsigned num_vars() const { return n_; }
  std::uint64_t size() const { return numer_.size(); }

  std::int64_t numerator( std::uint64_t s ) const { return numer_[s]; }
  std::span<const std::int64_t> numerators() const { return numer_; }

  Dyadic coefficient( std::uint64_t s ) const { return Dyadic::from_ratio( numer_[s], static_cast<int>( n_ ) ); }
  double value( std::uint64_t s ) const;

  friend bool operator==( const Spectrum&, const Spectrum& ) = default;

private:
  unsigned n_;
  std::vector<std::int64_t> numer_;
};

/// Floating-point spectrum of a real-valued function.
class RealSpectrum
{
public:
  RealSpectrum( unsigned n, std::vector<double> coeffs );

  unsigned num_vars() const { return n_; }
  std::uint64_t size() const { return coeffs_.size(); }
  double value( std::uint64_t s ) const { return coeffs_[s]; }
  std::span<const double> values() const { return coeffs_; }

private:
  unsigned n_;
  std::vector<double> coeffs_;
};

/*! \brief The squared coefficients viewed as a distribution over subsets.

  For Boolean sources the weights are exact: weight(S) = exact_numerator(S) / 4^n.
  Real sources only carry floating-point probabilities.
*/
class SpectralDistribution
{
public:
  explicit SpectralDistribution( const Spectrum& s );
  explicit SpectralDistribution( const RealSpectrum& s );

  unsigned num_vars() const { return n_; }
  std::uint64_t size() const { return probs_.size(); }

  double prob( std::uint64_t s ) const { return probs_[s]; }
  std::span<const double> probs() const { return probs_; }

  bool is_exact() const { return !exact_.empty(); }
  /// Requires is_exact().
  Dyadic weight( std::uint64_t s ) const;
  std::uint64_t exact_numerator( std::uint64_t s ) const { return exact_[s]; }
  std::span<const std::uint64_t> exact_numerators() const { return exact_; }

  /// Exact total mass (Boolean sources); Parseval says this is 1.
  Dyadic exact_mass() const;
  double mass() const;

private:
  unsigned n_;
  std::vector<double> probs_;
  std::vector<std::uint64_t> exact_;
};

/// Walsh-Hadamard transform in O(n 2^n) integer operations.
Spectrum wht( const BooleanFunction& f );
RealSpectrum wht( const RealFunction& f );

/// Evaluates the multilinear polynomial on every input.
RealFunction inverse_wht( const Spectrum& s );
RealFunction inverse_wht( const RealSpectrum& s );

/// Boolean function recovered from an exact spectrum; throws if some value is not +-1.
BooleanFunction to_boolean( const Spectrum& s );

} // namespace fei
