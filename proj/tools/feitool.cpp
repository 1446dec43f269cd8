// feitool: command-line front end for the spectral analysis library.
//
// Exit codes: 0 when every asserted certificate holds, 2 when one fails,
// 1 on usage or I/O errors.

#include "fei/bounds.hpp"
#include "fei/constructions.hpp"
#include "fei/decision_tree.hpp"
#include "fei/dnf.hpp"
#include "fei/harness.hpp"
#include "fei/io.hpp"
#include "fei/measures.hpp"
#include "fei/protocol.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failed = 2;

json metrics_json( const fei::SpectralProfile& p )
{
  json levels = json::array();
  for ( const auto& w : fei::level_weights( p.distribution ) )
  {
    levels.push_back( w.to_string() );
  }
  json influences = json::array();
  for ( const auto& v : fei::variable_influences( p.function ) )
  {
    influences.push_back( v.to_double() );
  }
  return json{ { "n", p.n },
               { "H", p.entropy },
               { "H_inf", p.min_entropy },
               { "H_half", fei::renyi_entropy( p.distribution, 0.5 ) },
               { "H_2", fei::renyi_entropy( p.distribution, 2.0 ) },
               { "I", p.influence },
               { "I_exact", p.influence_exact.to_string() },
               { "variable_influences", influences },
               { "mean", p.mean.to_string() },
               { "Var", p.variance },
               { "Var_exact", p.variance_exact.to_string() },
               { "level_weights", levels },
               { "L1", p.l1 },
               { "L1_exact", p.l1_exact.to_string() },
               { "sparsity", p.sparsity },
               { "degree", p.degree },
               { "granularity", p.granularity },
               { "max_sensitivity", fei::max_sensitivity( p.function ) },
               { "fei_ratio", fei::fei_ratio( p ) },
               { "fmei_ratio", fei::fmei_ratio( p ) } };
}

/// Runs every sweep check; returns false if one fails.
bool certificates_json( const fei::SpectralProfile& p, json& out )
{
  bool ok = true;
  out = json::array();
  for ( const auto& c : fei::sweep_checks() )
  {
    const auto cert = c.run( p );
    ok = ok && fei::passed( cert );
    out.push_back( cert );
  }
  return ok;
}

void emit( const json& j, const std::string& out )
{
  const std::string text = j.dump( 2 ) + "\n";
  if ( out.empty() )
  {
    std::cout << text;
  }
  else
  {
    fei::write_file( out, text );
  }
}

int cmd_analyze( const std::string& path, const std::string& spectrum_csv, const std::string& out )
{
  const fei::SpectralProfile p( fei::read_truth_table( path ) );
  json j;
  j["table"] = p.function.to_string();
  j["metrics"] = metrics_json( p );
  j["sensitivity"] = fei::gstw_report( p );
  json certs;
  const bool ok = certificates_json( p, certs );
  j["certificates"] = certs;
  j["passed"] = ok;
  if ( !spectrum_csv.empty() )
  {
    std::ostringstream os;
    fei::write_spectrum_csv( os, p.spectrum );
    fei::write_file( spectrum_csv, os.str() );
  }
  emit( j, out );
  return ok ? exit_ok : exit_failed;
}

int cmd_tree( const std::string& path, unsigned n, const std::string& stats_csv, const std::string& out )
{
  const auto t = fei::parse_tree( fei::read_file( path ) );
  n = std::max( n, t.max_var() );
  const fei::SpectralProfile p( fei::tree_to_function( t, n ) );
  const auto stats = fei::tree_stats( t, n );
  const auto cov = fei::cov_bounds_report( t, n );
  const auto l1 = fei::l1_tree_bound( t, n );
  const auto split = fei::www_split_identity( t, n );
  json j;
  j["tree"] = fei::serialize_tree( t );
  j["stats"] = { { "depth", stats.depth },       { "size", stats.size },     { "leaves", stats.leaves },
                 { "boundary", stats.boundary }, { "inner", stats.inner },   { "max_read", stats.max_read },
                 { "read_profile", stats.read_profile } };
  j["metrics"] = metrics_json( p );
  j["cov"] = fei::tree_cov( t, n ).to_double();
  j["cov_recursive"] = fei::tree_cov_recursive( t, n ).to_double();
  j["cov_bounds"] = cov;
  j["l1_tree_bound"] = l1;
  j["split_identity"] = split;
  const bool ok = cov.passed() && fei::passed( l1 ) && fei::passed( split );
  j["passed"] = ok;
  if ( !stats_csv.empty() )
  {
    fei::write_file( stats_csv, fei::tree_stats_csv_header() + "\n" + fei::tree_stats_csv_row( stats ) + "\n" );
  }
  emit( j, out );
  return ok ? exit_ok : exit_failed;
}

int cmd_dnf( const std::string& path, std::optional<unsigned> k, std::optional<double> c1, std::optional<double> c2,
             const std::string& out )
{
  const auto d = fei::parse_dnf( fei::read_file( path ) );
  const unsigned w = d.max_width();
  const unsigned kk = k.value_or( fei::dnf_read_k( d ) );
  const double cc1 = c1.value_or( static_cast<double>( d.min_width() ) / w );
  const double cc2 = c2.value_or( std::log2( static_cast<double>( d.num_clauses() ) ) / w );
  const fei::SpectralProfile p( fei::dnf_to_function( d ) );
  const auto report = fei::regular_fmei_report( d, cc1, cc2, kk );
  json j;
  j["dnf"] = fei::serialize_dnf( d );
  j["clauses"] = d.num_clauses();
  j["width"] = w;
  j["read_k"] = fei::dnf_read_k( d );
  j["metrics"] = metrics_json( p );
  j["fmei"] = report;
  emit( j, out );
  return report.passed() ? exit_ok : exit_failed;
}

int cmd_tribes( unsigned w, std::optional<unsigned> s_opt, const std::string& out )
{
  const unsigned s = s_opt.value_or( fei::unbiased_tribes_count( w ) );
  const auto d = fei::tribes( w, s );
  const fei::SpectralProfile p( fei::dnf_to_function( d ) );
  bool closed_form_ok = true;
  for ( std::uint64_t m = 1; m < p.distribution.size(); ++m )
  {
    const auto l = fei::tribes_met( m, w, s );
    closed_form_ok = closed_form_ok && p.distribution.weight( m ) == fei::tribes_coefficient( l, w, s );
  }
  json coeffs = json::array();
  for ( unsigned l = 1; l <= s; ++l )
  {
    coeffs.push_back( { { "l", l }, { "squared_coefficient", fei::tribes_coefficient( l, w, s ).to_string() } } );
  }
  const auto protocol = fei::price_protocol( "tribes", fei::tribes_protocol( w, s ), p );
  json j;
  j["w"] = w;
  j["s"] = s;
  j["dnf"] = fei::serialize_dnf( d );
  j["metrics"] = metrics_json( p );
  j["closed_form"] = coeffs;
  j["closed_form_matches"] = closed_form_ok;
  j["protocol"] = protocol;
  const bool ok = closed_form_ok && protocol.passed();
  j["passed"] = ok;
  emit( j, out );
  return ok ? exit_ok : exit_failed;
}

int cmd_protocol( const std::string& kind, const std::string& target, const std::string& measure,
                  const std::string& codebook_csv, const std::string& out )
{
  std::optional<fei::ProtocolCodebook> book;
  std::optional<fei::SpectralProfile> p;
  if ( kind == "trivial" )
  {
    p.emplace( fei::read_truth_table( target ) );
    book.emplace( fei::trivial_protocol( p->n ) );
  }
  else if ( kind == "tribes" )
  {
    // target is "w" or "w,s"
    const auto comma = target.find( ',' );
    const unsigned w = static_cast<unsigned>( std::stoul( target.substr( 0, comma ) ) );
    const unsigned s = comma == std::string::npos ? fei::unbiased_tribes_count( w )
                                                  : static_cast<unsigned>( std::stoul( target.substr( comma + 1 ) ) );
    p.emplace( fei::dnf_to_function( fei::tribes( w, s ) ) );
    book.emplace( fei::tribes_protocol( w, s ) );
  }
  else if ( kind == "readk" )
  {
    const auto d = fei::parse_dnf( fei::read_file( target ) );
    p.emplace( fei::dnf_to_function( d ) );
    book.emplace( fei::readk_dnf_protocol( d, fei::parse_cover_measure( measure ) ) );
  }
  else
  {
    throw CLI::ValidationError( "kind", "expected trivial, tribes or readk" );
  }
  const auto report = fei::price_protocol( kind, *book, *p );
  if ( !codebook_csv.empty() )
  {
    std::ostringstream os;
    fei::write_codebook_csv( os, *book );
    fei::write_file( codebook_csv, os.str() );
  }
  emit( json( report ), out );
  return report.passed() ? exit_ok : exit_failed;
}

int cmd_construct( const std::string& op, const std::vector<std::string>& inputs, unsigned k, const std::string& emit_path,
                   const std::string& out )
{
  auto need = [&]( std::size_t count ) {
    if ( inputs.size() != count )
    {
      throw CLI::ValidationError( "inputs", op + " takes " + std::to_string( count ) + " truth-table file(s)" );
    }
  };
  fei::ConstructionReport report;
  std::optional<fei::BooleanFunction> result;
  if ( op == "tensor" )
  {
    need( 2 );
    const auto f = fei::read_truth_table( inputs[0] );
    const auto g = fei::read_truth_table( inputs[1] );
    report = fei::tensor_report( f, g );
    result = fei::tensor( f, g );
  }
  else if ( op == "and-pad" )
  {
    need( 1 );
    const auto f = fei::read_truth_table( inputs[0] );
    report = fei::and_pad_report( f, k );
    result = fei::and_pad( f, k );
  }
  else if ( op == "balance" )
  {
    need( 1 );
    const auto f = fei::read_truth_table( inputs[0] );
    report = fei::balance_extend_report( f );
    result = fei::balance_extend( f );
  }
  else if ( op == "max-pad" )
  {
    need( 1 );
    const auto f = fei::read_truth_table( inputs[0] );
    report = fei::max_pad_report( f, k );
    result = fei::max_pad( f, k );
  }
  else
  {
    throw CLI::ValidationError( "op", "expected tensor, and-pad, balance or max-pad" );
  }
  if ( !emit_path.empty() )
  {
    fei::write_truth_table( emit_path, *result );
  }
  emit( json( report ), out );
  return report.all_hold() ? exit_ok : exit_failed;
}

struct ScanArgs
{
  unsigned n = 4;
  bool exhaustive = false;
  bool random = false;
  std::uint64_t count = 1000;
  std::uint64_t seed = 1;
  std::string checks = "all";
  unsigned jobs = 1;
  bool parallel = false;
  bool symmetry = false;
  std::string checkpoint;
  std::string out;
};

int cmd_scan( const ScanArgs& a )
{
  if ( a.exhaustive == a.random )
  {
    throw CLI::ValidationError( "scan", "choose exactly one of --exhaustive and --random" );
  }
  fei::ScanOptions opt;
  opt.checks = fei::parse_check_list( a.checks );
  opt.jobs = a.jobs;
  opt.parallel = a.parallel;
  opt.symmetry = a.symmetry;
  opt.checkpoint_path = a.checkpoint;
  const auto report = a.exhaustive ? fei::exhaustive_scan( a.n, opt ) : fei::random_scan( a.n, a.count, a.seed, opt );
  emit( json( report ), a.out );
  return report.total_failures() == 0 ? exit_ok : exit_failed;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Fourier entropy and influence toolkit" };
  app.require_subcommand( 1 );
  app.fallthrough();
  std::string out;
  app.add_option( "--out", out, "Write the JSON report to this file" );

  std::string path, csv;
  auto* analyze = app.add_subcommand( "analyze", "Spectral metrics and certificates of a truth table" );
  analyze->add_option( "file", path, "Truth-table file" )->required();
  analyze->add_option( "--spectrum-csv", csv, "Also export the spectrum as CSV" );

  unsigned tree_n = 0;
  auto* tree = app.add_subcommand( "tree", "Decision-tree metrics, covariance bounds and the L1 bound" );
  tree->add_option( "file", path, "S-expression tree file" )->required();
  tree->add_option( "--n", tree_n, "Ambient variable count (default: largest queried index)" );
  tree->add_option( "--stats-csv", csv, "Also export tree statistics as CSV" );

  std::optional<unsigned> dnf_k;
  std::optional<double> c1, c2;
  auto* dnf = app.add_subcommand( "dnf", "DNF classification and regular read-k FMEI report" );
  dnf->add_option( "file", path, "DNF file" )->required();
  dnf->add_option( "--k", dnf_k, "Read parameter (default: the formula's read count)" );
  dnf->add_option( "--c1", c1, "Width lower-bound constant (default: min width / max width)" );
  dnf->add_option( "--c2", c2, "Clause-count constant (default: log2(s) / w)" );

  unsigned tw = 0;
  std::optional<unsigned> ts;
  auto* tribes = app.add_subcommand( "tribes", "Tribes formula, closed-form coefficients and protocol price" );
  tribes->add_option( "--w", tw, "Clause width" )->required()->check( CLI::Range( 1u, 31u ) );
  tribes->add_option( "--s", ts, "Clause count (default: the unbiased count)" );

  std::string kind, target, measure = "unique_variables";
  auto* protocol = app.add_subcommand( "protocol", "Price a protocol against a spectral distribution" );
  protocol->add_option( "kind", kind, "trivial | tribes | readk" )->required();
  protocol->add_option( "target", target, "Truth-table file, 'w[,s]', or DNF file" )->required();
  protocol->add_option( "--measure", measure, "Cover measure for readk: unique_variables | clause_count | total_width" );
  protocol->add_option( "--codebook-csv", csv, "Also export the codebook as CSV" );

  std::string op, emit_path;
  std::vector<std::string> inputs;
  unsigned pad_k = 1;
  auto* construct = app.add_subcommand( "construct", "Build a composite function and check its identities" );
  construct->add_option( "op", op, "tensor | and-pad | balance | max-pad" )->required();
  construct->add_option( "inputs", inputs, "Truth-table file(s)" )->required();
  construct->add_option( "--k", pad_k, "Padding parameter for and-pad and max-pad" )->check( CLI::PositiveNumber );
  construct->add_option( "--emit", emit_path, "Write the composite truth table here" );

  ScanArgs sa;
  auto* scan = app.add_subcommand( "scan", "Exhaustive or random sweep over truth tables" );
  scan->add_option( "--n", sa.n, "Variable count" )->required();
  scan->add_flag( "--exhaustive", sa.exhaustive, "Every truth table (n <= 5)" );
  scan->add_flag( "--random", sa.random, "Uniform random truth tables" );
  scan->add_option( "--count", sa.count, "Sample count for --random" );
  scan->add_option( "--seed", sa.seed, "Seed for --random" );
  scan->add_option( "--checks", sa.checks, "Comma-separated check names or 'all'" );
  scan->add_option( "--jobs", sa.jobs, "Worker threads (0: all cores; FEI_MAX_JOBS caps)" );
  scan->add_flag( "--parallel", sa.parallel, "Allow the n = 5 exhaustive scan" );
  scan->add_flag( "--symmetry", sa.symmetry, "Scan canonical representatives only" );
  scan->add_option( "--checkpoint", sa.checkpoint, "Resumable checkpoint file" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( *analyze )
    {
      return cmd_analyze( path, csv, out );
    }
    if ( *tree )
    {
      return cmd_tree( path, tree_n, csv, out );
    }
    if ( *dnf )
    {
      return cmd_dnf( path, dnf_k, c1, c2, out );
    }
    if ( *tribes )
    {
      return cmd_tribes( tw, ts, out );
    }
    if ( *protocol )
    {
      return cmd_protocol( kind, target, measure, csv, out );
    }
    if ( *construct )
    {
      return cmd_construct( op, inputs, pad_k, emit_path, out );
    }
    if ( *scan )
    {
      sa.out = out;
      return cmd_scan( sa );
    }
  }
  catch ( const fei::parse_error& e )
  {
    std::cerr << "feitool: " << e.what() << '\n';
    return exit_usage;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "feitool: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
