#pragma once

#include "fei/boolean_function.hpp"
#include "fei/dyadic.hpp"
#include "fei/spectrum.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace fei
{

/// Thrown for arguments outside an operation's mathematical domain.
class domain_error : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

inline constexpr double infinite_order = std::numeric_limits<double>::infinity();

/// Shannon entropy of the spectral distribution, in bits.
double entropy( const SpectralDistribution& d );
/// log2(1 / max_S weight(S)).
double min_entropy( const SpectralDistribution& d );
/// Renyi entropy of order a >= 0; a = 1 and a = infinity dispatch to entropy / min_entropy.
double renyi_entropy( const SpectralDistribution& d, double a );

double total_influence( const SpectralDistribution& d );
Dyadic total_influence_exact( const SpectralDistribution& d );

/// Pr_m[f(m) != f(m ^ e_i)], i is 1-based.
double variable_influence( const BooleanFunction& f, unsigned i );
Dyadic variable_influence_exact( const BooleanFunction& f, unsigned i );
std::vector<Dyadic> variable_influences( const BooleanFunction& f );

Dyadic mean( const BooleanFunction& f );
/// 1 - mean^2.
Dyadic variance( const BooleanFunction& f );
Dyadic variance( const SpectralDistribution& d );

/// W^0 .. W^n.
std::vector<Dyadic> level_weights( const SpectralDistribution& d );
/// W^{<=t}
Dyadic weight_at_most( const SpectralDistribution& d, unsigned t );
/// W^{>t}
Dyadic weight_above( const SpectralDistribution& d, unsigned t );

Dyadic l1_norm( const Spectrum& s );
std::uint64_t sparsity( const Spectrum& s );
/// Largest |S| with a nonzero coefficient; 0 for the zero spectrum.
unsigned degree( const Spectrum& s );
/// Least g >= 0 with 2^g f^(S) integral for every S.
unsigned granularity( const Spectrum& s );

unsigned sensitivity_at( const BooleanFunction& f, std::uint64_t m );
unsigned max_sensitivity( const BooleanFunction& f );

/// The four terms of H = mass_in H_in + (1 - mass_in) H_out + h(mass_in).
struct EntropyPartition
{
  double mass_in = 0;
  double entropy_in = 0;
  double entropy_out = 0;
  double binary_term = 0;
  bool degenerate = false;

  double reassembled() const { return mass_in * entropy_in + ( 1.0 - mass_in ) * entropy_out + binary_term; }
};

using SubsetPredicate = std::function<bool( std::uint64_t )>;

/// Splits the entropy by a subset family. When the family carries all or none
/// of the mass the undecomposed entropy is returned on the nonempty side.
EntropyPartition entropy_partition( const SpectralDistribution& d, const SubsetPredicate& family );

/*! \brief All spectral quantities of one function, computed once.

  The certificate code works off this record so sweeps do not redo the
  transform per check.
*/
struct SpectralProfile
{
  explicit SpectralProfile( BooleanFunction f );

  BooleanFunction function;
  unsigned n;
  Spectrum spectrum;
  SpectralDistribution distribution;
  double entropy;
  double min_entropy;
  Dyadic influence_exact;
  double influence;
  Dyadic mean;
  Dyadic variance_exact;
  double variance;
  Dyadic l1_exact;
  double l1;
  std::uint64_t sparsity;
  unsigned degree;
  unsigned granularity;
};

} // namespace fei
