#include "fei/constructions.hpp"

#include <cmath>

namespace fei
{

namespace
{

IdentityCheck approx_check( std::string name, double expected, double observed )
{
  IdentityCheck c;
  c.name = std::move( name );
  c.expected = expected;
  c.observed = observed;
  c.residual = observed - expected;
  c.holds = std::fabs( c.residual ) <= certificate_tolerance;
  return c;
}

IdentityCheck exact_check( std::string name, const Dyadic& expected, const Dyadic& observed )
{
  IdentityCheck c;
  c.name = std::move( name );
  c.expected = expected.to_double();
  c.observed = observed.to_double();
  c.residual = ( observed - expected ).to_double();
  c.exact = true;
  c.holds = expected == observed;
  return c;
}

/// observed >= floor
IdentityCheck lower_bound_check( std::string name, double floor, double observed )
{
  IdentityCheck c;
  c.name = std::move( name );
  c.expected = floor;
  c.observed = observed;
  c.residual = observed - floor;
  c.holds = observed >= floor - certificate_tolerance;
  return c;
}

} // namespace

BooleanFunction tensor( const BooleanFunction& f, const BooleanFunction& g )
{
  const unsigned n = f.num_vars() + g.num_vars();
  check_dense_limit( n );
  std::vector<std::int8_t> t( std::size_t( 1 ) << n );
  const unsigned shift = f.num_vars();
  const std::uint64_t low = f.size() - 1;
  for ( std::uint64_t m = 0; m < t.size(); ++m )
  {
    t[m] = static_cast<std::int8_t>( f( m & low ) * g( m >> shift ) );
  }
  return BooleanFunction( n, std::move( t ) );
}

BooleanFunction and_pad( const BooleanFunction& f, unsigned k )
{
  if ( k == 0 )
  {
    throw std::invalid_argument( "and_pad needs k >= 1" );
  }
  const unsigned n = f.num_vars() + k;
  check_dense_limit( n );
  std::vector<std::int8_t> t( std::size_t( 1 ) << n );
  const std::uint64_t low = f.size() - 1;
  const std::uint64_t all_y = ( std::uint64_t( 1 ) << k ) - 1;
  for ( std::uint64_t m = 0; m < t.size(); ++m )
  {
    t[m] = ( m >> f.num_vars() ) == all_y ? f( m & low ) : 1;
  }
  return BooleanFunction( n, std::move( t ) );
}

BooleanFunction balance_extend( const BooleanFunction& f )
{
  return tensor( f, dictator( 1, 1 ) );
}

BooleanFunction max_pad( const BooleanFunction& f, unsigned k )
{
  check_dense_limit( f.num_vars() + 2 * k );
  BooleanFunction g = f;
  const auto mx = max_function();
  for ( unsigned j = 0; j < k; ++j )
  {
    g = tensor( g, mx );
  }
  return g;
}

MetricRecord metrics_of( const SpectralProfile& p )
{
  MetricRecord r;
  r.n = p.n;
  r.entropy = p.entropy;
  r.influence = p.influence;
  r.min_entropy = p.min_entropy;
  r.variance = p.variance;
  r.influence_exact = p.influence_exact.to_string();
  return r;
}

bool ConstructionReport::all_hold() const
{
  for ( const auto& c : checks )
  {
    if ( c.asserted && !c.holds )
    {
      return false;
    }
  }
  return true;
}

void to_json( nlohmann::json& j, const MetricRecord& r )
{
  j = nlohmann::json{ { "n", r.n },
                      { "H", r.entropy },
                      { "I", r.influence },
                      { "I_exact", r.influence_exact },
                      { "H_inf", r.min_entropy },
                      { "Var", r.variance } };
}

void to_json( nlohmann::json& j, const IdentityCheck& c )
{
  j = nlohmann::json{ { "name", c.name },     { "expected", c.expected }, { "observed", c.observed },
                      { "residual", c.residual }, { "exact", c.exact },       { "asserted", c.asserted },
                      { "holds", c.holds } };
}

void to_json( nlohmann::json& j, const ConstructionReport& r )
{
  j = nlohmann::json{ { "operation", r.operation },
                      { "inputs", r.inputs },
                      { "output", r.output },
                      { "checks", r.checks },
                      { "all_hold", r.all_hold() } };
}

ConstructionReport tensor_report( const BooleanFunction& f, const BooleanFunction& g )
{
  const SpectralProfile pf( f ), pg( g ), ph( tensor( f, g ) );
  ConstructionReport r;
  r.operation = "tensor";
  r.inputs = { metrics_of( pf ), metrics_of( pg ) };
  r.output = metrics_of( ph );
  r.checks.push_back( approx_check( "H_additive", pf.entropy + pg.entropy, ph.entropy ) );
  r.checks.push_back( exact_check( "I_additive", pf.influence_exact + pg.influence_exact, ph.influence_exact ) );
  r.checks.push_back( approx_check( "H_inf_additive", pf.min_entropy + pg.min_entropy, ph.min_entropy ) );
  r.checks.push_back( approx_check( "n_additive", pf.n + pg.n, ph.n ) );
  return r;
}

Dyadic and_pad_influence_formula( const Dyadic& source_influence, unsigned k )
{
  return ( Dyadic( k ) + source_influence ).scaled( -static_cast<int>( k ) );
}

double and_pad_entropy_floor( double source_entropy, unsigned k )
{
  return std::ldexp( 2.0 * k + 2.0 + source_entropy, -static_cast<int>( k ) - 3 );
}

ConstructionReport and_pad_report( const BooleanFunction& f, unsigned k )
{
  const SpectralProfile pf( f ), pg( and_pad( f, k ) );
  ConstructionReport r;
  r.operation = "and_pad";
  r.inputs = { metrics_of( pf ) };
  r.output = metrics_of( pg );
  const bool balanced = pf.mean.is_zero();
  auto inf = exact_check( "I_formula", and_pad_influence_formula( pf.influence_exact, k ), pg.influence_exact );
  auto ent = lower_bound_check( "H_floor", and_pad_entropy_floor( pf.entropy, k ), pg.entropy );
  inf.asserted = balanced;
  ent.asserted = balanced;
  r.checks.push_back( inf );
  r.checks.push_back( ent );
  return r;
}

ConstructionReport balance_extend_report( const BooleanFunction& f )
{
  const SpectralProfile pf( f ), ph( balance_extend( f ) );
  ConstructionReport r;
  r.operation = "balance_extend";
  r.inputs = { metrics_of( pf ) };
  r.output = metrics_of( ph );
  r.checks.push_back( exact_check( "I_plus_one", pf.influence_exact + Dyadic( 1 ), ph.influence_exact ) );
  r.checks.push_back( approx_check( "H_unchanged", pf.entropy, ph.entropy ) );
  r.checks.push_back( exact_check( "mean_zero", Dyadic( 0 ), ph.mean ) );
  return r;
}

ConstructionReport max_pad_report( const BooleanFunction& f, unsigned k )
{
  const SpectralProfile pf( f ), pg( max_pad( f, k ) );
  ConstructionReport r;
  r.operation = "max_pad";
  r.inputs = { metrics_of( pf ) };
  r.output = metrics_of( pg );
  r.checks.push_back( approx_check( "H_plus_2k", pf.entropy + 2.0 * k, pg.entropy ) );
  r.checks.push_back( exact_check( "I_plus_k", pf.influence_exact + Dyadic( k ), pg.influence_exact ) );
  r.checks.push_back( approx_check( "H_inf_plus_2k", pf.min_entropy + 2.0 * k, pg.min_entropy ) );
  return r;
}

std::vector<TensorStep> self_tensor_iterate( const BooleanFunction& f, unsigned iterations,
                                             const std::function<double( double )>& sublinear )
{
  std::vector<TensorStep> out;
  BooleanFunction cur = f;
  for ( unsigned it = 0; it <= iterations; ++it )
  {
    if ( it > 0 )
    {
      cur = tensor( cur, cur );
    }
    const SpectralProfile p( cur );
    TensorStep s;
    s.iteration = it;
    s.n = p.n;
    s.entropy = p.entropy;
    s.influence = p.influence;
    s.min_entropy = p.min_entropy;
    s.ratio = fei_ratio( p );
    s.scaled_term = sublinear ? std::ldexp( sublinear( static_cast<double>( p.n ) ), -static_cast<int>( it ) ) : 0.0;
    out.push_back( s );
  }
  return out;
}

void to_json( nlohmann::json& j, const TensorStep& s )
{
  j = nlohmann::json{ { "iteration", s.iteration }, { "n", s.n },         { "H", s.entropy },
                      { "I", s.influence },         { "H_inf", s.min_entropy }, { "ratio", s.ratio },
                      { "scaled_term", s.scaled_term } };
}

} // namespace fei
