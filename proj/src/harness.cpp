#include "fei/harness.hpp"

#include "fei/io.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <thread>

namespace fei
{

BoundCertificate www_trivial( const SpectralProfile& p )
{
  return make_certificate( "www_trivial", p.entropy, p.n * p.variance + 2.0 * p.influence,
                           { { "alphabet_size", 2.0 }, { "expected_cost", p.n * p.variance } } );
}

const std::vector<SweepCheck>& sweep_checks()
{
  static const std::vector<SweepCheck> checks = {
      { "weak_fei", []( const SpectralProfile& p ) { return weak_fei( p ); } },
      { "edge_iso_alpha", edge_iso_alpha },
      { "edge_iso_var", edge_iso_var },
      { "edge_iso_lowinf", edge_iso_lowinf },
      { "h_ge_hmin", entropy_above_min_entropy },
      { "h_le_2logl1", entropy_below_l1 },
      { "l1_facts", l1_norm_facts },
      { "theorem_l1", theorem_l1 },
      { "fmei_biased", fmei_biased },
      { "theorem_lhe_0.25", []( const SpectralProfile& p ) { return theorem_lhe( p, 0.25 ); } },
      { "theorem_lhe_0.4", []( const SpectralProfile& p ) { return theorem_lhe( p, 0.4 ); } },
      { "theorem_eli",
        []( const SpectralProfile& p ) {
          if ( p.influence_exact.is_zero() )
          {
            return theorem_eli( p, 1.0 );
          }
          const auto c = largest_admissible_c( p );
          return c ? theorem_eli( p, *c ) : not_applicable( "theorem_eli", "I[f] >= 1 admits no c > 0" );
        } },
      { "www_trivial", www_trivial },
  };
  return checks;
}

std::vector<std::string> sweep_check_names()
{
  std::vector<std::string> out;
  for ( const auto& c : sweep_checks() )
  {
    out.push_back( c.name );
  }
  return out;
}

std::vector<std::string> parse_check_list( const std::string& spec )
{
  const auto known = sweep_check_names();
  if ( spec == "all" )
  {
    return known;
  }
  std::vector<std::string> out;
  std::stringstream ss( spec );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    if ( item.empty() )
    {
      continue;
    }
    if ( std::find( known.begin(), known.end(), item ) == known.end() )
    {
      throw std::invalid_argument( "unknown check '" + item + "'" );
    }
    if ( std::find( out.begin(), out.end(), item ) == out.end() )
    {
      out.push_back( item );
    }
  }
  if ( out.empty() )
  {
    throw std::invalid_argument( "no checks selected" );
  }
  return out;
}

double SweepReport::mean_influence() const
{
  if ( count == 0 )
  {
    return 0.0;
  }
  return std::ldexp( static_cast<double>( influence_sum ), -2 * static_cast<int>( n ) ) / static_cast<double>( count );
}

std::uint64_t SweepReport::total_failures() const
{
  std::uint64_t t = 0;
  for ( const auto& c : checks )
  {
    t += c.failures;
  }
  return t;
}

void accumulate( SweepReport& r, const BooleanFunction& f, const std::vector<std::size_t>& check_indices )
{
  const SpectralProfile p( f );
  const auto& all = sweep_checks();
  for ( std::size_t i = 0; i < check_indices.size(); ++i )
  {
    const auto cert = all[check_indices[i]].run( p );
    auto& t = r.checks[i];
    ++t.evaluated;
    t.applicable += cert.applicable;
    if ( !passed( cert ) )
    {
      if ( t.failures == 0 )
      {
        t.first_failure = f.to_string();
      }
      ++t.failures;
    }
  }
  const double fei = fei_ratio( p );
  const double fmei = fmei_ratio( p );
  if ( r.count == 0 || fei > r.max_fei.ratio )
  {
    r.max_fei = { fei, f.to_string() };
  }
  if ( r.count == 0 || fmei > r.max_fmei.ratio )
  {
    r.max_fmei = { fmei, f.to_string() };
  }
  if ( p.influence_exact.is_zero() )
  {
    ++r.constants;
  }
  else
  {
    const auto bin = static_cast<std::size_t>( std::floor( fei / histogram_bin_width ) );
    if ( r.histogram.size() <= bin )
    {
      r.histogram.resize( bin + 1, 0 );
    }
    ++r.histogram[bin];
  }
  const int shift = 2 * static_cast<int>( p.n ) - p.influence_exact.exponent();
  r.influence_sum += p.influence_exact.numerator() << shift;
  const double hn = p.n > 0 ? p.entropy / p.n : 0.0;
  r.min_entropy_per_var = r.count == 0 ? hn : std::min( r.min_entropy_per_var, hn );
  ++r.count;
}

void merge_into( SweepReport& a, const SweepReport& b )
{
  if ( b.count == 0 )
  {
    return;
  }
  if ( a.count == 0 || b.max_fei.ratio > a.max_fei.ratio )
  {
    a.max_fei = b.max_fei;
  }
  if ( a.count == 0 || b.max_fmei.ratio > a.max_fmei.ratio )
  {
    a.max_fmei = b.max_fmei;
  }
  a.min_entropy_per_var = a.count == 0 ? b.min_entropy_per_var : std::min( a.min_entropy_per_var, b.min_entropy_per_var );
  for ( std::size_t i = 0; i < a.checks.size(); ++i )
  {
    auto& t = a.checks[i];
    const auto& u = b.checks[i];
    if ( t.failures == 0 && u.failures > 0 )
    {
      t.first_failure = u.first_failure;
    }
    t.evaluated += u.evaluated;
    t.applicable += u.applicable;
    t.failures += u.failures;
  }
  if ( a.histogram.size() < b.histogram.size() )
  {
    a.histogram.resize( b.histogram.size(), 0 );
  }
  for ( std::size_t i = 0; i < b.histogram.size(); ++i )
  {
    a.histogram[i] += b.histogram[i];
  }
  a.influence_sum += b.influence_sum;
  a.constants += b.constants;
  a.count += b.count;
}

void to_json( nlohmann::json& j, const SweepReport& r )
{
  nlohmann::json checks = nlohmann::json::array();
  for ( const auto& c : r.checks )
  {
    checks.push_back( { { "name", c.name },
                        { "evaluated", c.evaluated },
                        { "applicable", c.applicable },
                        { "failures", c.failures },
                        { "first_failure", c.first_failure } } );
  }
  j = nlohmann::json{ { "class", r.descriptor },
                      { "n", r.n },
                      { "count", r.count },
                      { "max_fei", { { "ratio", r.max_fei.ratio }, { "witness", r.max_fei.table } } },
                      { "max_fmei", { { "ratio", r.max_fmei.ratio }, { "witness", r.max_fmei.table } } },
                      { "checks", checks },
                      { "total_failures", r.total_failures() },
                      { "histogram", { { "bin_width", histogram_bin_width }, { "counts", r.histogram } } },
                      { "constants", r.constants },
                      { "influence_sum_numerator", to_string( r.influence_sum ) },
                      { "mean_influence", r.mean_influence() },
                      { "min_entropy_per_var", r.min_entropy_per_var } };
}

void from_json( const nlohmann::json& j, SweepReport& r )
{
  r = SweepReport{};
  r.descriptor = j.at( "class" ).get<std::string>();
  r.n = j.at( "n" ).get<unsigned>();
  r.count = j.at( "count" ).get<std::uint64_t>();
  r.max_fei = { j.at( "max_fei" ).at( "ratio" ).get<double>(), j.at( "max_fei" ).at( "witness" ).get<std::string>() };
  r.max_fmei = { j.at( "max_fmei" ).at( "ratio" ).get<double>(), j.at( "max_fmei" ).at( "witness" ).get<std::string>() };
  for ( const auto& c : j.at( "checks" ) )
  {
    r.checks.push_back( { c.at( "name" ).get<std::string>(), c.at( "evaluated" ).get<std::uint64_t>(),
                          c.at( "applicable" ).get<std::uint64_t>(), c.at( "failures" ).get<std::uint64_t>(),
                          c.at( "first_failure" ).get<std::string>() } );
  }
  r.histogram = j.at( "histogram" ).at( "counts" ).get<std::vector<std::uint64_t>>();
  r.constants = j.at( "constants" ).get<std::uint64_t>();
  const auto digits = j.at( "influence_sum_numerator" ).get<std::string>();
  int128 v = 0;
  for ( char ch : digits )
  {
    if ( ch < '0' || ch > '9' )
    {
      throw std::invalid_argument( "malformed influence sum" );
    }
    v = v * 10 + ( ch - '0' );
  }
  r.influence_sum = v;
  r.min_entropy_per_var = j.at( "min_entropy_per_var" ).get<double>();
}

unsigned effective_jobs( unsigned requested )
{
  unsigned jobs = requested == 0 ? std::max( 1u, std::thread::hardware_concurrency() ) : requested;
  if ( const char* cap = std::getenv( "FEI_MAX_JOBS" ) )
  {
    const long v = std::strtol( cap, nullptr, 10 );
    if ( v > 0 )
    {
      jobs = std::min( jobs, static_cast<unsigned>( v ) );
    }
  }
  return jobs;
}

namespace
{

struct OrbitMaps
{
  /// maps[g][m] is the input index read by the transformed function at m.
  std::vector<std::vector<std::uint8_t>> maps;
};

const OrbitMaps& orbit_maps( unsigned n )
{
  static const auto cache = [] {
    std::vector<OrbitMaps> all( 6 );
    for ( unsigned k = 0; k <= 5; ++k )
    {
      std::vector<unsigned> perm( k );
      std::iota( perm.begin(), perm.end(), 0u );
      const unsigned size = 1u << k;
      do
      {
        for ( unsigned flip = 0; flip < size; ++flip )
        {
          std::vector<std::uint8_t> map( size );
          for ( unsigned m = 0; m < size; ++m )
          {
            unsigned src = 0;
            for ( unsigned i = 0; i < k; ++i )
            {
              src |= ( ( m >> i ) & 1u ) << perm[i];
            }
            map[m] = static_cast<std::uint8_t>( src ^ flip );
          }
          all[k].maps.push_back( std::move( map ) );
        }
      } while ( std::next_permutation( perm.begin(), perm.end() ) );
    }
    return all;
  }();
  return cache.at( n );
}

std::vector<std::size_t> resolve_checks( const std::vector<std::string>& names )
{
  std::vector<std::size_t> out;
  const auto& all = sweep_checks();
  for ( const auto& name : names )
  {
    const auto it = std::find_if( all.begin(), all.end(), [&]( const auto& c ) { return c.name == name; } );
    if ( it == all.end() )
    {
      throw std::invalid_argument( "unknown check '" + name + "'" );
    }
    out.push_back( static_cast<std::size_t>( it - all.begin() ) );
  }
  return out;
}

SweepReport empty_report( std::string descriptor, unsigned n, const std::vector<std::string>& names )
{
  SweepReport r;
  r.descriptor = std::move( descriptor );
  r.n = n;
  for ( const auto& name : names )
  {
    r.checks.push_back( { name, 0, 0, 0, {} } );
  }
  return r;
}

/// Runs work(first, last) over fixed shards of [begin, end) and merges them in index order.
void run_sharded( SweepReport& into, std::uint64_t begin, std::uint64_t end, unsigned jobs,
                  const std::function<void( SweepReport&, std::uint64_t, std::uint64_t )>& work )
{
  const std::uint64_t shards = ( end - begin + shard_size - 1 ) / shard_size;
  std::vector<SweepReport> parts( shards );
  std::atomic<std::uint64_t> next{ 0 };
  auto worker = [&] {
    for ( std::uint64_t s = next++; s < shards; s = next++ )
    {
      SweepReport part;
      part.descriptor = into.descriptor;
      part.n = into.n;
      for ( const auto& c : into.checks )
      {
        part.checks.push_back( { c.name, 0, 0, 0, {} } );
      }
      const std::uint64_t first = begin + s * shard_size;
      work( part, first, std::min( end, first + shard_size ) );
      parts[s] = std::move( part );
    }
  };
  const unsigned threads = static_cast<unsigned>( std::min<std::uint64_t>( jobs, shards ) );
  if ( threads <= 1 )
  {
    worker();
  }
  else
  {
    std::vector<std::thread> pool;
    for ( unsigned t = 0; t < threads; ++t )
    {
      pool.emplace_back( worker );
    }
    for ( auto& t : pool )
    {
      t.join();
    }
  }
  for ( const auto& part : parts )
  {
    merge_into( into, part );
  }
}

void write_checkpoint( const std::string& path, std::uint64_t next, const SweepReport& r )
{
  const nlohmann::json j{ { "next", next }, { "report", r } };
  const std::string tmp = path + ".tmp";
  write_file( tmp, j.dump() );
  std::filesystem::rename( tmp, path );
}

} // namespace

bool is_canonical( unsigned n, std::uint64_t index )
{
  if ( n > 5 )
  {
    throw capacity_error( "symmetry reduction supports n <= 5" );
  }
  const unsigned size = 1u << n;
  for ( const auto& map : orbit_maps( n ).maps )
  {
    std::uint64_t image = 0;
    for ( unsigned m = 0; m < size; ++m )
    {
      image |= ( ( index >> map[m] ) & 1u ) << m;
    }
    if ( image < index )
    {
      return false;
    }
  }
  return true;
}

SweepReport exhaustive_scan( unsigned n, const ScanOptions& options )
{
  if ( n >= 6 )
  {
    throw capacity_error( "exhaustive scans support n <= 5" );
  }
  if ( n == 5 && !options.parallel )
  {
    throw std::invalid_argument( "exhaustive n = 5 needs the parallel flag" );
  }
  const auto indices = resolve_checks( options.checks );
  std::string descriptor = "exhaustive n=" + std::to_string( n );
  if ( options.symmetry )
  {
    descriptor += " symmetry=canonical";
  }
  SweepReport report = empty_report( descriptor, n, options.checks );
  const std::uint64_t total = std::uint64_t( 1 ) << ( 1u << n );
  std::uint64_t start = 0;
  if ( !options.checkpoint_path.empty() && std::filesystem::exists( options.checkpoint_path ) )
  {
    const auto j = nlohmann::json::parse( read_file( options.checkpoint_path ) );
    SweepReport saved = j.at( "report" ).get<SweepReport>();
    std::vector<std::string> saved_names;
    for ( const auto& c : saved.checks )
    {
      saved_names.push_back( c.name );
    }
    if ( saved.descriptor != descriptor || saved_names != options.checks )
    {
      throw std::invalid_argument( "checkpoint was written for a different scan" );
    }
    report = std::move( saved );
    start = j.at( "next" ).get<std::uint64_t>();
  }
  const unsigned jobs = effective_jobs( options.jobs );
  const std::uint64_t interval = std::max<std::uint64_t>( options.checkpoint_interval, shard_size );
  auto work = [&]( SweepReport& part, std::uint64_t first, std::uint64_t last ) {
    for ( std::uint64_t i = first; i < last; ++i )
    {
      if ( options.symmetry && !is_canonical( n, i ) )
      {
        continue;
      }
      accumulate( part, BooleanFunction::from_index( n, i ), indices );
    }
  };
  for ( std::uint64_t block = start; block < total; block += interval )
  {
    const std::uint64_t stop = std::min( total, block + interval );
    run_sharded( report, block, stop, jobs, work );
    if ( !options.checkpoint_path.empty() )
    {
      write_checkpoint( options.checkpoint_path, stop, report );
    }
  }
  return report;
}

BooleanFunction random_sample( unsigned n, std::uint64_t seed, std::uint64_t index )
{
  std::seed_seq seq{ static_cast<std::uint32_t>( seed ), static_cast<std::uint32_t>( seed >> 32 ),
                     static_cast<std::uint32_t>( index ), static_cast<std::uint32_t>( index >> 32 ) };
  std::mt19937_64 rng( seq );
  return random_function( n, rng );
}

SweepReport random_scan( unsigned n, std::uint64_t count, std::uint64_t seed, const ScanOptions& options )
{
  check_dense_limit( n );
  const auto indices = resolve_checks( options.checks );
  SweepReport report = empty_report(
      "random n=" + std::to_string( n ) + " count=" + std::to_string( count ) + " seed=" + std::to_string( seed ), n,
      options.checks );
  run_sharded( report, 0, count, effective_jobs( options.jobs ),
               [&]( SweepReport& part, std::uint64_t first, std::uint64_t last ) {
                 for ( std::uint64_t i = first; i < last; ++i )
                 {
                   accumulate( part, random_sample( n, seed, i ), indices );
                 }
               } );
  return report;
}

} // namespace fei
