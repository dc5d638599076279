/*!
  \file signatures.hpp
  \brief Signature vectors over cofactor counts, influence, and sensitivity

  Every ordered vector is a sorted multiset in non-decreasing order.
  The mixed signature vector (MSV) concatenates the selected families on
  the polarity-normalized function and is invariant under input
  negation, input permutation, and output negation.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "truth_table.hpp"

namespace npnsig
{

/*! \brief Enables a subset of the signature families. */
struct signature_selection
{
  bool ocv1 = false;
  bool ocv2 = false;
  bool oiv = false;
  bool osv = false;
  bool osdv = false;

  static signature_selection all() { return { true, true, true, true, true }; }

  bool any() const { return ocv1 || ocv2 || oiv || osv || osdv; }

  bool operator==( const signature_selection& other ) const = default;
};

/*! \brief Parses a comma-separated list of family names (ocv1, ocv2, oiv, osv, osdv, all). */
signature_selection parse_selection( std::string_view text );

std::string to_string( const signature_selection& sel );

/*! \brief Maxima of the local sensitivities over all words / 0-words / 1-words.

  A maximum over an empty word set (constant functions) is reported as 0.
*/
struct sensitivity_summary
{
  uint32_t sen = 0;
  uint32_t sen0 = 0;
  uint32_t sen1 = 0;

  bool operator==( const sensitivity_summary& other ) const = default;
};

struct osv_vectors
{
  std::vector<uint32_t> osv;  /* all words */
  std::vector<uint32_t> osv0; /* words with f(X) = 0 */
  std::vector<uint32_t> osv1; /* words with f(X) = 1 */
};

/*! \brief Same-sensitivity pair counts by Hamming distance.

  Each grid is (n+1) x n, flattened row-major: entry (i, j) with
  i in [0, n], j in [1, n] counts the unordered word pairs with local
  sensitivity i on both members and Hamming distance j.
*/
struct osdv_grids
{
  std::vector<uint32_t> osdv;
  std::vector<uint32_t> osdv0;
  std::vector<uint32_t> osdv1;
};

/*! \brief All per-function vectors plus scalar summaries. */
struct signature_vectors
{
  std::vector<uint32_t> ocv1;
  std::vector<uint32_t> ocv2;
  std::vector<uint32_t> oiv;
  std::vector<uint32_t> osv0;
  std::vector<uint32_t> osv1;
  std::vector<uint32_t> osdv0;
  std::vector<uint32_t> osdv1;
  uint64_t satisfy = 0;
  uint32_t influence_total = 0;
  sensitivity_summary sensitivity;
};

/*! \brief Classification key: the selected families concatenated in a fixed
    order on the polarity-normalized function. */
struct mixed_signature_vector
{
  signature_selection selection;
  std::vector<uint32_t> key;

  bool operator==( const mixed_signature_vector& other ) const = default;
};

/*! \brief Sorted multiset of the satisfy counts of all \p arity-variable cofactors.

  Length C(n, arity) * 2^arity; a single entry (the satisfy count) for
  arity 0.
*/
std::vector<uint32_t> ocv( const truth_table& t, uint32_t arity );

/*! \brief Sorted per-variable influences under the integer convention
    (half the diff-vector popcount). */
std::vector<uint32_t> oiv( const truth_table& t );

/*! \brief Local sensitivity of every input word: entry X counts the
    variables whose flip changes the output on X. */
std::vector<uint8_t> local_sensitivities( const truth_table& t );

osv_vectors osv_split( const truth_table& t );

osdv_grids osdv_split( const truth_table& t );

/*! \brief Sum of all per-variable influences. */
uint32_t total_influence( const truth_table& t );

sensitivity_summary max_sensitivity( const truth_table& t );

signature_vectors compute_signature_vectors( const truth_table& t );

/*! \brief Builds the MSV key (n, |f*|, ocv1*, ocv2*, oiv*, osv1*, osv0*,
    osdv1*, osdv0*), omitting unselected families.

  Polarity normalization picks f* = f when |f| < 2^(n-1) and f* = ~f when
  |f| > 2^(n-1); for balanced functions both candidate sequences are built
  and the lexicographically smaller one is kept.
*/
mixed_signature_vector build_msv( const truth_table& t, const signature_selection& sel );

} // namespace npnsig
