#pragma once

#include "fei/measures.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fei
{

inline constexpr double certificate_tolerance = 1e-12;

/*! \brief Outcome of checking one inequality lhs <= rhs.

  holds is always lhs <= rhs + certificate_tolerance. A certificate that is
  not applicable (precondition failed) has lhs = rhs = 0 and holds = true.
  Sub-certificates with asserted = false are intermediate steps that the
  bound's derivation only justifies asymptotically; they are reported but
  never counted as failures.
*/
struct BoundCertificate
{
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;
  bool applicable = true;
  bool asserted = true;
  std::map<std::string, double> params;
  std::optional<std::string> exact_lhs;
  std::optional<std::string> exact_rhs;
  std::string note;
  std::vector<BoundCertificate> subs;

  friend bool operator==( const BoundCertificate&, const BoundCertificate& ) = default;
};

BoundCertificate make_certificate( std::string name, double lhs, double rhs,
                                   std::map<std::string, double> params = {} );
/// Certificate whose two sides are exact; holds is decided exactly.
BoundCertificate make_exact_certificate( std::string name, const Dyadic& lhs, const Dyadic& rhs,
                                         std::map<std::string, double> params = {} );
BoundCertificate not_applicable( std::string name, std::string reason,
                                 std::map<std::string, double> params = {} );
BoundCertificate report_only( BoundCertificate c );

/// False when this certificate or any asserted sub-certificate fails.
bool passed( const BoundCertificate& c );

void to_json( nlohmann::json& j, const BoundCertificate& c );
void from_json( const nlohmann::json& j, BoundCertificate& c );

/* binary entropy */
double binary_entropy( double p );
/// Unique p in [0, 1/2] with h(p) = y, by bisection.
double binary_entropy_inv( double y );

/// sum_{j <= t} C(n, j)
double hamming_ball_volume( unsigned n, unsigned t );

/* certificates */
BoundCertificate weak_fei( const SpectralDistribution& d );
BoundCertificate weak_fei( const SpectralProfile& p );
BoundCertificate edge_iso_alpha( const SpectralProfile& p );
BoundCertificate edge_iso_var( const SpectralProfile& p );
BoundCertificate edge_iso_lowinf( const SpectralProfile& p );
BoundCertificate entropy_above_min_entropy( const SpectralProfile& p );
BoundCertificate entropy_below_l1( const SpectralProfile& p );
/// L1 <= 2^degree, L1 <= 2^granularity, L1 <= sqrt(sparsity), decided exactly.
BoundCertificate l1_norm_facts( const SpectralProfile& p );
BoundCertificate theorem_eli( const SpectralProfile& p, double c );
BoundCertificate theorem_lhe( const SpectralProfile& p, double c );
BoundCertificate theorem_l1( const SpectralProfile& p );
BoundCertificate fmei_biased( const SpectralProfile& p );

/// -log2(I) / n: the largest c with I <= 2^{-cn}. Empty for constants (any c works) or I >= 1.
std::optional<double> largest_admissible_c( const SpectralProfile& p );

/// H / I and H_inf / I, with 0 for constant functions.
double fei_ratio( const SpectralProfile& p );
double fmei_ratio( const SpectralProfile& p );

struct SensitivityReport
{
  double entropy;
  unsigned max_sensitivity;
  std::optional<double> log_sensitivity;
  std::optional<double> ratio;
};

SensitivityReport gstw_report( const SpectralProfile& p );
void to_json( nlohmann::json& j, const SensitivityReport& r );

} // namespace fei
