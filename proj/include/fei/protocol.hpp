#pragma once

#include "fei/bounds.hpp"
#include "fei/dnf.hpp"
#include "fei/measures.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fei
{

/// Display characters for the non-binary symbols.
inline constexpr char terminator_symbol = '|';
inline constexpr char escape_symbol = '*';

/*! \brief Map from subset masks to codewords over a finite alphabet.

  Each symbol is one character of alphabet(); the empty set maps to the empty
  string. Prefix-freeness is a property checked against a distribution, not
  a construction invariant.
*/
class ProtocolCodebook
{
public:
  ProtocolCodebook( unsigned n, std::string alphabet, std::vector<std::string> codewords );

  unsigned num_vars() const { return n_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const std::string& alphabet() const { return alphabet_; }
  const std::string& encode( std::uint64_t subset ) const { return codes_.at( subset ); }
  std::size_t length( std::uint64_t subset ) const { return codes_.at( subset ).size(); }
  /// The subset with this codeword, if any (first match for duplicates).
  std::optional<std::uint64_t> decode( const std::string& codeword ) const;
  std::uint64_t size() const { return codes_.size(); }

private:
  unsigned n_;
  std::string alphabet_;
  std::vector<std::string> codes_;
};

struct PrefixReport
{
  bool prefix_free = true;
  double kraft_sum = 0;
  /// A violating pair (shorter codeword first) when not prefix-free.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> conflict;
};

/// Restricted to nonempty subsets with positive spectral mass.
PrefixReport validate_prefix_free( const ProtocolCodebook& p, const SpectralDistribution& d );

/// sum_S f^(S)^2 len(S), exact.
Dyadic expected_cost_exact( const ProtocolCodebook& p, const SpectralDistribution& d );
double expected_cost( const ProtocolCodebook& p, const SpectralDistribution& d );

/// H[f] <= log2|alphabet| E[cost] + 2 I[f]
BoundCertificate www_lemma_check( const ProtocolCodebook& p, const SpectralProfile& f );
/// H[S_f | S != empty] <= log2|alphabet| E[cost | S != empty]; not applicable when f is constant.
BoundCertificate shannon_conditional_check( const ProtocolCodebook& p, const SpectralProfile& f );

/// Bit i of the codeword is '1' iff x_{i+1} is in S.
ProtocolCodebook trivial_protocol( unsigned n );

/// For each tribe meeting S: ceil(log2 s) index symbols then w membership symbols; then a terminator.
ProtocolCodebook tribes_protocol( unsigned w, unsigned s );

/// Same wire format with clauses from smallest_cover; uncoverable subsets get the escape symbol
/// followed by their trivial codeword, and only then is the escape symbol added to the alphabet.
ProtocolCodebook readk_dnf_protocol( const Dnf& d, CoverMeasure measure = CoverMeasure::unique_variables );

/// ceil(log2 s), 0 for s = 1.
unsigned index_width( std::size_t s );

struct ProtocolReport
{
  std::string kind;
  std::size_t alphabet_size = 0;
  double expected_cost = 0;
  std::string expected_cost_exact;
  double influence = 0;
  double entropy = 0;
  /// expected_cost / I, 0 for constants.
  double cost_over_influence = 0;
  PrefixReport prefix;
  BoundCertificate www_lemma;
  BoundCertificate shannon;

  bool passed() const;
};

ProtocolReport price_protocol( std::string kind, const ProtocolCodebook& p, const SpectralProfile& f );

void to_json( nlohmann::json& j, const PrefixReport& r );
void to_json( nlohmann::json& j, const ProtocolReport& r );

/// CSV columns mask,codeword,length.
void write_codebook_csv( std::ostream& os, const ProtocolCodebook& p );

} // namespace fei
