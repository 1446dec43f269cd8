#pragma once

#include "fei/bounds.hpp"
#include "fei/measures.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fei
{

/// Certificate selectable in a sweep.
struct SweepCheck
{
  std::string name;
  std::function<BoundCertificate( const SpectralProfile& )> run;
};

/// Every available check, in report order.
const std::vector<SweepCheck>& sweep_checks();
std::vector<std::string> sweep_check_names();
/// Comma-separated names, or "all"; unknown names throw std::invalid_argument.
std::vector<std::string> parse_check_list( const std::string& spec );

/// H <= n Var + 2 I: the protocol lemma for the trivial n-bit protocol.
BoundCertificate www_trivial( const SpectralProfile& p );

struct CheckTally
{
  std::string name;
  std::uint64_t evaluated = 0;
  std::uint64_t applicable = 0;
  std::uint64_t failures = 0;
  /// Truth table of the first failing function in scan order.
  std::string first_failure;

  friend bool operator==( const CheckTally&, const CheckTally& ) = default;
};

struct RatioWitness
{
  double ratio = 0;
  /// Truth table over {+,-}; empty when nothing has been scanned.
  std::string table;

  friend bool operator==( const RatioWitness&, const RatioWitness& ) = default;
};

/*! \brief Aggregate of a sweep.

  Partial reports over consecutive index ranges merge associatively; ties in
  the extremal ratios keep the earlier witness.
*/
struct SweepReport
{
  std::string descriptor;
  unsigned n = 0;
  std::uint64_t count = 0;
  RatioWitness max_fei;
  RatioWitness max_fmei;
  std::vector<CheckTally> checks;
  /// Bin i counts functions with I > 0 and H / I in [0.1 i, 0.1 (i + 1)).
  std::vector<std::uint64_t> histogram;
  /// Sum of I over scanned functions, numerator over 4^n.
  int128 influence_sum = 0;
  /// Smallest H / n seen; 0 when nothing has been scanned.
  double min_entropy_per_var = 0;
  std::uint64_t constants = 0;

  double mean_influence() const;
  /// Failures of asserted certificates over all checks.
  std::uint64_t total_failures() const;

  friend bool operator==( const SweepReport&, const SweepReport& ) = default;
};

inline constexpr double histogram_bin_width = 0.1;

/// Folds one function into the report.
void accumulate( SweepReport& r, const BooleanFunction& f, const std::vector<std::size_t>& check_indices );
/// Appends b (covering the next index range) to a.
void merge_into( SweepReport& a, const SweepReport& b );

void to_json( nlohmann::json& j, const SweepReport& r );
void from_json( const nlohmann::json& j, SweepReport& r );

struct ScanOptions
{
  std::vector<std::string> checks;
  /// 0 means std::thread::hardware_concurrency(); FEI_MAX_JOBS caps either.
  unsigned jobs = 1;
  /// Required for n = 5.
  bool parallel = false;
  /// Only canonical representatives under variable permutation and input negation.
  bool symmetry = false;
  /// Resumable state written every checkpoint_interval functions when set.
  std::string checkpoint_path;
  std::uint64_t checkpoint_interval = std::uint64_t( 1 ) << 24;
};

inline constexpr std::uint64_t shard_size = 4096;

unsigned effective_jobs( unsigned requested );

/// Every truth table on n <= 5 variables; n >= 6 throws capacity_error.
SweepReport exhaustive_scan( unsigned n, const ScanOptions& options );
/// count uniform truth tables; sample i is drawn from a generator seeded by (seed, i).
SweepReport random_scan( unsigned n, std::uint64_t count, std::uint64_t seed, const ScanOptions& options );

/// Sample i of random_scan( n, _, seed, _ ).
BooleanFunction random_sample( unsigned n, std::uint64_t seed, std::uint64_t index );

/// True when index is minimal over its orbit under permutations and input negations.
bool is_canonical( unsigned n, std::uint64_t index );

} // namespace fei
