#include "fei/bounds.hpp"

#include <cmath>

namespace fei
{

namespace
{

double xlog_inv( double x )
{
  return x > 0.0 ? -x * std::log2( x ) : 0.0;
}

} // namespace

BoundCertificate make_certificate( std::string name, double lhs, double rhs, std::map<std::string, double> params )
{
  BoundCertificate c;
  c.name = std::move( name );
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.holds = lhs <= rhs + certificate_tolerance;
  c.params = std::move( params );
  return c;
}

BoundCertificate make_exact_certificate( std::string name, const Dyadic& lhs, const Dyadic& rhs,
                                         std::map<std::string, double> params )
{
  auto c = make_certificate( std::move( name ), lhs.to_double(), rhs.to_double(), std::move( params ) );
  c.exact_lhs = lhs.to_string();
  c.exact_rhs = rhs.to_string();
  c.holds = lhs <= rhs;
  return c;
}

BoundCertificate not_applicable( std::string name, std::string reason, std::map<std::string, double> params )
{
  BoundCertificate c;
  c.name = std::move( name );
  c.applicable = false;
  c.note = std::move( reason );
  c.params = std::move( params );
  return c;
}

BoundCertificate report_only( BoundCertificate c )
{
  c.asserted = false;
  return c;
}

bool passed( const BoundCertificate& c )
{
  if ( !c.asserted || !c.applicable )
  {
    return true;
  }
  if ( !c.holds )
  {
    return false;
  }
  for ( const auto& s : c.subs )
  {
    if ( !passed( s ) )
    {
      return false;
    }
  }
  return true;
}

void to_json( nlohmann::json& j, const BoundCertificate& c )
{
  j = nlohmann::json{ { "name", c.name },
                      { "lhs", c.lhs },
                      { "rhs", c.rhs },
                      { "slack", c.slack },
                      { "holds", c.holds },
                      { "applicable", c.applicable },
                      { "asserted", c.asserted },
                      { "params", c.params } };
  if ( c.exact_lhs )
  {
    j["exact_lhs"] = *c.exact_lhs;
  }
  if ( c.exact_rhs )
  {
    j["exact_rhs"] = *c.exact_rhs;
  }
  if ( !c.note.empty() )
  {
    j["note"] = c.note;
  }
  if ( !c.subs.empty() )
  {
    j["subs"] = c.subs;
  }
}

void from_json( const nlohmann::json& j, BoundCertificate& c )
{
  c.name = j.at( "name" ).get<std::string>();
  c.lhs = j.at( "lhs" ).get<double>();
  c.rhs = j.at( "rhs" ).get<double>();
  c.slack = j.at( "slack" ).get<double>();
  c.holds = j.at( "holds" ).get<bool>();
  c.applicable = j.value( "applicable", true );
  c.asserted = j.value( "asserted", true );
  c.params = j.value( "params", std::map<std::string, double>{} );
  c.exact_lhs = j.contains( "exact_lhs" ) ? std::optional( j["exact_lhs"].get<std::string>() ) : std::nullopt;
  c.exact_rhs = j.contains( "exact_rhs" ) ? std::optional( j["exact_rhs"].get<std::string>() ) : std::nullopt;
  c.note = j.value( "note", std::string{} );
  c.subs = j.value( "subs", std::vector<BoundCertificate>{} );
}

double binary_entropy( double p )
{
  if ( !( p >= 0.0 && p <= 1.0 ) )
  {
    throw domain_error( "binary entropy argument outside [0,1]" );
  }
  return xlog_inv( p ) + xlog_inv( 1.0 - p );
}

double binary_entropy_inv( double y )
{
  if ( !( y >= 0.0 && y <= 1.0 ) )
  {
    throw domain_error( "binary entropy inverse argument outside [0,1]" );
  }
  if ( y == 0.0 )
  {
    return 0.0;
  }
  if ( y == 1.0 )
  {
    return 0.5;
  }
  double lo = 0.0;
  double hi = 0.5;
  // h is strictly increasing on [0, 1/2]
  while ( hi - lo > 1e-15 )
  {
    const double mid = 0.5 * ( lo + hi );
    if ( binary_entropy( mid ) < y )
    {
      lo = mid;
    }
    else
    {
      hi = mid;
    }
  }
  return 0.5 * ( lo + hi );
}

double hamming_ball_volume( unsigned n, unsigned t )
{
  double total = 0.0;
  double binom = 1.0;
  for ( unsigned j = 0; j <= std::min( n, t ); ++j )
  {
    total += binom;
    binom = binom * ( n - j ) / ( j + 1 );
  }
  return total;
}

BoundCertificate weak_fei( const SpectralDistribution& d )
{
  const double h = entropy( d );
  const double inf = total_influence( d );
  const unsigned n = d.num_vars();
  return make_certificate( "weak_fei", h, std::log2( n + 1.0 ) * ( inf + 1.0 ),
                           { { "n", n }, { "I", inf }, { "mass", d.mass() } } );
}

BoundCertificate weak_fei( const SpectralProfile& p )
{
  return make_certificate( "weak_fei", p.entropy, std::log2( p.n + 1.0 ) * ( p.influence + 1.0 ),
                           { { "n", p.n }, { "I", p.influence } } );
}

BoundCertificate edge_iso_alpha( const SpectralProfile& p )
{
  // alpha = min(Pr[f=1], Pr[f=-1]) = (1 - |E f|) / 2
  const Dyadic alpha = ( Dyadic( 1 ) - p.mean.abs() ).scaled( -1 );
  const double a = alpha.to_double();
  const double lhs = a > 0.0 ? 2.0 * a * std::log2( 1.0 / a ) : 0.0;
  return make_certificate( "edge_iso_alpha", lhs, p.influence, { { "alpha", a } } );
}

BoundCertificate edge_iso_var( const SpectralProfile& p )
{
  const double v = p.variance;
  const double lhs = v > 0.0 ? 0.5 * v * std::log2( 1.0 / v ) : 0.0;
  auto c = make_certificate( "edge_iso_var", lhs, p.influence, { { "var", v } } );
  c.subs.push_back( make_exact_certificate( "var_le_influence", p.variance_exact, p.influence_exact ) );
  return c;
}

BoundCertificate edge_iso_lowinf( const SpectralProfile& p )
{
  const double inf = p.influence;
  if ( !( inf < 1.0 ) )
  {
    return not_applicable( "edge_iso_lowinf", "requires I[f] < 1", { { "I", inf } } );
  }
  if ( p.influence_exact.is_zero() )
  {
    return make_certificate( "edge_iso_lowinf", 0.0, 0.0, { { "I", 0.0 } } );
  }
  return make_certificate( "edge_iso_lowinf", p.variance, 2.0 * inf / std::log2( 1.0 / inf ), { { "I", inf } } );
}

BoundCertificate entropy_above_min_entropy( const SpectralProfile& p )
{
  return make_certificate( "min_entropy_le_entropy", p.min_entropy, p.entropy );
}

BoundCertificate entropy_below_l1( const SpectralProfile& p )
{
  return make_certificate( "entropy_le_2log_l1", p.entropy, 2.0 * std::log2( p.l1 ), { { "L1", p.l1 } } );
}

BoundCertificate l1_norm_facts( const SpectralProfile& p )
{
  const Dyadic& l1 = p.l1_exact;
  auto c = make_certificate( "l1_norm_facts", p.l1, p.l1 );
  c.note = "L1 against degree, granularity and sparsity";
  const Dyadic by_degree = Dyadic( 1 ).scaled( static_cast<int>( p.degree ) );
  const Dyadic by_gran = Dyadic( 1 ).scaled( static_cast<int>( p.granularity ) );
  c.subs.push_back( make_exact_certificate( "l1_le_2pow_degree", l1, by_degree, { { "degree", p.degree } } ) );
  c.subs.push_back(
      make_exact_certificate( "l1_le_2pow_granularity", l1, by_gran, { { "granularity", p.granularity } } ) );
  // L1 <= sqrt(sparsity) decided as L1^2 <= sparsity
  auto sq = make_exact_certificate( "l1_squared_le_sparsity", l1 * l1,
                                    Dyadic( static_cast<std::int64_t>( p.sparsity ) ),
                                    { { "sparsity", static_cast<double>( p.sparsity ) } } );
  c.subs.push_back( sq );
  return c;
}

std::optional<double> largest_admissible_c( const SpectralProfile& p )
{
  if ( p.influence_exact.is_zero() || !( p.influence < 1.0 ) )
  {
    return std::nullopt;
  }
  return -std::log2( p.influence ) / p.n;
}

BoundCertificate theorem_eli( const SpectralProfile& p, double c )
{
  if ( !( c > 0.0 ) )
  {
    throw domain_error( "theorem_eli needs c > 0" );
  }
  const double inf = p.influence;
  const bool member = p.influence_exact.is_zero() || -std::log2( inf ) >= c * p.n - certificate_tolerance;
  std::map<std::string, double> params{ { "c", c }, { "n", p.n }, { "I", inf }, { "member", member ? 1.0 : 0.0 } };
  if ( !member )
  {
    return not_applicable( "theorem_eli", "I[f] > 2^{-cn}", params );
  }
  auto cert = make_certificate( "theorem_eli", p.entropy, 4.0 * ( c + 1.0 ) / c * inf, params );
  const double v = p.variance;
  cert.subs.push_back( make_certificate( "entropy_le_var_n_plus_h", p.entropy, v * p.n + binary_entropy( v ) ) );
  return cert;
}

BoundCertificate theorem_lhe( const SpectralProfile& p, double c )
{
  if ( !( c > 0.0 && c < 0.5 ) )
  {
    throw domain_error( "theorem_lhe needs c in (0, 1/2)" );
  }
  const double hinv = binary_entropy_inv( c * c );
  std::map<std::string, double> params{ { "c", c }, { "n", p.n }, { "h_inv_c2", hinv } };
  if ( p.entropy < c * p.n - certificate_tolerance )
  {
    return not_applicable( "theorem_lhe", "H[f] < cn", params );
  }
  auto cert = make_certificate( "theorem_lhe", p.entropy, ( 1.0 + c ) / hinv * p.influence, params );

  const auto t = static_cast<unsigned>( std::floor( hinv * p.n ) );
  const Dyadic low = weight_at_most( p.distribution, t );
  const Dyadic high = Dyadic( 1 ) - low;
  const double w_low = low.to_double();
  const double w_high = high.to_double();
  std::map<std::string, double> tp{ { "t", t }, { "W_le_t", w_low } };

  const double ball = hamming_ball_volume( p.n, t );
  cert.subs.push_back( make_certificate( "lhe_partition_chain", p.entropy,
                                         w_low * std::log2( ball ) + w_high * p.n + 1.0,
                                         { { "t", t }, { "ball_volume", ball } } ) );
  const double ht = binary_entropy( static_cast<double>( t ) / p.n );
  auto low_weight = make_certificate( "lhe_low_level_weight", w_low, ( 1.0 - c ) / ( 1.0 - ht ), tp );
  low_weight.note = "follows only after dropping the additive 1 in the partition chain";
  cert.subs.push_back( report_only( low_weight ) );
  cert.subs.push_back( make_exact_certificate( "influence_ge_high_weight_times_t",
                                               high * Dyadic( static_cast<std::int64_t>( t ) ), p.influence_exact,
                                               tp ) );
  return cert;
}

BoundCertificate theorem_l1( const SpectralProfile& p )
{
  const double l = p.l1;
  const double v = p.variance;
  const double inf = p.influence;
  auto cert = make_certificate( "theorem_l1", p.entropy, ( 4.0 * std::log2( l ) + 11.0 ) * v + 10.0 * inf,
                                { { "L1", l }, { "var", v }, { "I", inf } } );
  cert.subs.push_back( make_certificate( "theorem_l1_corollary", p.entropy, ( 4.0 * std::log2( l ) + 21.0 ) * inf ) );

  // three-way split of the entropy at theta = (Var / 4L)^2
  const double theta = ( v / ( 4.0 * l ) ) * ( v / ( 4.0 * l ) );
  double zero_term = xlog_inv( p.distribution.prob( 0 ) );
  double large_term = 0.0;
  double small_term = 0.0;
  for ( std::uint64_t s = 1; s < p.spectrum.size(); ++s )
  {
    const double q = p.distribution.prob( s );
    if ( q <= 0.0 )
    {
      continue;
    }
    if ( std::fabs( p.spectrum.value( s ) ) > theta )
    {
      large_term += xlog_inv( q );
    }
    else
    {
      small_term += xlog_inv( q );
    }
  }
  const double log_inv_var = v > 0.0 ? std::log2( 1.0 / v ) : 0.0;
  cert.params["theta"] = theta;
  cert.subs.push_back( make_certificate( "l1_split_empty_set", zero_term, ( 2.0 + log_inv_var ) * v ) );
  cert.subs.push_back( make_certificate( "l1_split_large", large_term,
                                         ( 4.0 * std::log2( l ) + 8.0 + 4.0 * log_inv_var ) * v ) );
  cert.subs.push_back( make_certificate( "l1_split_small", small_term, 0.5 * v ) );
  return cert;
}

BoundCertificate fmei_biased( const SpectralProfile& p )
{
  if ( p.variance_exact > Dyadic::from_ratio( 1, 1 ) )
  {
    return not_applicable( "fmei_biased", "requires Var(f) <= 1/2", { { "var", p.variance } } );
  }
  return make_certificate( "fmei_biased", p.min_entropy, 2.0 * p.influence, { { "var", p.variance } } );
}

double fei_ratio( const SpectralProfile& p )
{
  return p.influence_exact.is_zero() ? 0.0 : p.entropy / p.influence;
}

double fmei_ratio( const SpectralProfile& p )
{
  return p.influence_exact.is_zero() ? 0.0 : p.min_entropy / p.influence;
}

SensitivityReport gstw_report( const SpectralProfile& p )
{
  SensitivityReport r;
  r.entropy = p.entropy;
  r.max_sensitivity = max_sensitivity( p.function );
  if ( r.max_sensitivity > 0 )
  {
    r.log_sensitivity = std::log2( static_cast<double>( r.max_sensitivity ) );
    if ( *r.log_sensitivity > 0.0 )
    {
      r.ratio = p.entropy / *r.log_sensitivity;
    }
  }
  return r;
}

void to_json( nlohmann::json& j, const SensitivityReport& r )
{
  j = nlohmann::json{ { "entropy", r.entropy }, { "max_sensitivity", r.max_sensitivity } };
  j["log2_sensitivity"] = r.log_sensitivity ? nlohmann::json( *r.log_sensitivity ) : nlohmann::json();
  j["ratio"] = r.ratio ? nlohmann::json( *r.ratio ) : nlohmann::json();
}

} // namespace fei
