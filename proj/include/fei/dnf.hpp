#pragma once

#include "fei/boolean_function.hpp"
#include "fei/bounds.hpp"
#include "fei/dyadic.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fei
{

/// x_var when positive, !x_var otherwise. x_var is True when it equals -1.
struct Literal
{
  unsigned var = 1;
  bool positive = true;

  friend bool operator==( const Literal&, const Literal& ) = default;
};

using Clause = std::vector<Literal>;

/*! \brief OR of AND-clauses; outputs -1 (True) iff some clause is satisfied.

  Invariants: at least one clause, every clause is nonempty, no clause
  mentions a variable twice, every variable index is in [1, n].
*/
class Dnf
{
public:
  Dnf( unsigned n, std::vector<Clause> clauses );

  unsigned num_vars() const { return n_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause( std::size_t i ) const { return clauses_.at( i ); }

  /// Variable set of clause i as a mask.
  std::uint64_t clause_mask( std::size_t i ) const { return masks_.at( i ); }
  std::uint64_t support_mask() const;
  unsigned max_width() const;
  unsigned min_width() const;

  int evaluate( std::uint64_t m ) const;

  friend bool operator==( const Dnf&, const Dnf& ) = default;

private:
  unsigned n_;
  std::vector<Clause> clauses_;
  std::vector<std::uint64_t> masks_;
};

/// Clauses separated by newlines or '/', literals `xI` / `!xI`, optional first line `n=<k>`,
/// '#' starts a comment. Without a header n is the largest index used.
Dnf parse_dnf( std::string_view text );
std::string serialize_dnf( const Dnf& d );

BooleanFunction dnf_to_function( const Dnf& d );
unsigned dnf_read_k( const Dnf& d );

struct RegularityWitness
{
  unsigned w = 0;
  double c1 = 0;
  double c2 = 0;
  std::size_t clauses = 0;
  /// 2^{c2 w}
  double target_count = 0;
  bool width_ok = false;
  bool count_ok = false;
  bool holds = false;
};

/// w is the largest clause width; widths must lie in [c1 w, w] and s within a factor 2 of 2^{c2 w}.
RegularityWitness regularity( const Dnf& d, double c1, double c2 );
void to_json( nlohmann::json& j, const RegularityWitness& r );

/// Clause i covers x_{(i-1)w+1} .. x_{iw}, all positive.
Dnf tribes( unsigned w, unsigned s );
/// Largest s with 1 - (1 - 2^-w)^s <= 1/2.
unsigned unbiased_tribes_count( unsigned w );
Dnf unbiased_tribes( unsigned w );

/// 4 * 2^{-2lw} (1 - 2^-w)^{2(s-l)}; the squared coefficient of any S meeting exactly l tribes.
Dyadic tribes_coefficient( unsigned l, unsigned w, unsigned s );

/// Number of tribes of Tr_{w,s} whose block meets S.
unsigned tribes_met( std::uint64_t subset, unsigned w, unsigned s );

class no_cover_error : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

inline constexpr std::size_t max_cover_clauses = 20;

enum class CoverMeasure
{
  unique_variables,
  clause_count,
  total_width
};

CoverMeasure parse_cover_measure( std::string_view name );
std::string to_string( CoverMeasure m );

/// Clause subsets (bit i = clause i) whose variable union contains S, ascending.
std::vector<std::uint64_t> covers( const Dnf& d, std::uint64_t subset );
/// Minimizes the measure, then clause count, then the sorted clause-index list lexicographically.
std::vector<std::size_t> smallest_cover( const Dnf& d, std::uint64_t subset,
                                         CoverMeasure measure = CoverMeasure::unique_variables );
std::size_t cover_cost( const Dnf& d, const std::vector<std::size_t>& cover, CoverMeasure measure );

inline constexpr std::size_t max_family_size = std::size_t( 1 ) << 24;

struct FamilyReport
{
  double width_threshold = 0;
  std::vector<std::uint64_t> members;
  Dyadic weight;
  Dyadic max_weight;
  std::uint64_t argmax = 0;
  BoundCertificate size_bound;
  BoundCertificate weight_bound;
};

/// Union of the power sets of the variable sets of clauses with width <= log2(24 k n).
FamilyReport bfjkmr_family( const Dnf& d, unsigned k );
void to_json( nlohmann::json& j, const FamilyReport& r );

struct RegularFmeiReport
{
  RegularityWitness regularity;
  unsigned read = 0;
  unsigned k = 0;
  FamilyReport family;
  /// family weight, max coefficient, H_inf, per-variable influence, KKL form.
  std::vector<BoundCertificate> certificates;

  bool passed() const;
};

RegularFmeiReport regular_fmei_report( const Dnf& d, double c1, double c2, unsigned k );
void to_json( nlohmann::json& j, const RegularFmeiReport& r );

/// Clauses {x_{2i+1}, x_{2i+2}, x_{2i+3}} (indices mod 8) for i = 0..3: read-2, width 3, four clauses.
Dnf cyclic_read2_dnf();
/// Rows and columns of a 3x3 grid of variables: read-2, width 3, six clauses on nine variables.
Dnf grid_read2_dnf();

} // namespace fei
