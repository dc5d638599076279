/*!
  \file truth_table.hpp
  \brief Bit-parallel truth-table kernel

  Truth tables are stored as packed 64-bit words in little-endian bit
  order: bit X of the table is the function value on the input word X,
  and variable i (0-based) is bit i of X.  All operations are pure; no
  operation mutates its input.
*/

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace npnsig
{

inline constexpr uint32_t min_vars = 1;
inline constexpr uint32_t max_vars = 16;

namespace detail
{

/* bits of a 64-bit word where variable i (i < 6) is 1 */
inline constexpr uint64_t var_mask_pos[6] = {
    0xaaaaaaaaaaaaaaaaull,
    0xccccccccccccccccull,
    0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull,
    0xffff0000ffff0000ull,
    0xffffffff00000000ull };

/* ones in the low 2^n bit positions, for n < 6 */
inline constexpr uint64_t tail_mask( uint32_t num_vars )
{
  return num_vars >= 6 ? ~0ull : ( 1ull << ( 1u << num_vars ) ) - 1;
}

inline constexpr uint64_t word_count( uint32_t num_vars )
{
  return num_vars <= 6 ? 1 : 1ull << ( num_vars - 6 );
}

/* dst = src XOR (src with variable var flipped); spans must have equal size */
void xor_flip_words( std::span<const uint64_t> src, std::span<uint64_t> dst, uint32_t var );

} // namespace detail

/*! \brief Value type holding the 2^n output bits of an n-variable Boolean function. */
class truth_table
{
public:
  /*! \brief Constructs the constant-0 function on \p num_vars variables. */
  explicit truth_table( uint32_t num_vars )
      : num_vars_( num_vars ), words_( detail::word_count( num_vars ), 0 )
  {
    if ( num_vars < min_vars || num_vars > max_vars )
    {
      throw unsupported_arity( "variable count must be in [1, 16], got " + std::to_string( num_vars ) );
    }
  }

  uint32_t num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return 1ull << num_vars_; }
  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  bool get_bit( uint64_t index ) const
  {
    return ( words_[index >> 6] >> ( index & 63 ) ) & 1;
  }

  void set_bit( uint64_t index, bool value )
  {
    if ( value )
    {
      words_[index >> 6] |= 1ull << ( index & 63 );
    }
    else
    {
      words_[index >> 6] &= ~( 1ull << ( index & 63 ) );
    }
  }

  /* unused high bits of the last word stay zero */
  void mask_tail()
  {
    words_.back() &= detail::tail_mask( num_vars_ );
  }

  bool operator==( const truth_table& other ) const = default;

  /*! \brief Total order: variable count first, then table value as a 2^n-bit integer. */
  std::strong_ordering operator<=>( const truth_table& other ) const
  {
    if ( auto cmp = num_vars_ <=> other.num_vars_; cmp != 0 )
    {
      return cmp;
    }
    for ( std::size_t i = words_.size(); i-- > 0; )
    {
      if ( auto cmp = words_[i] <=> other.words_[i]; cmp != 0 )
      {
        return cmp;
      }
    }
    return std::strong_ordering::equal;
  }

private:
  uint32_t num_vars_;
  std::vector<uint64_t> words_;
};

struct truth_table_hash
{
  std::size_t operator()( const truth_table& t ) const
  {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ t.num_vars();
    for ( auto w : t.words() )
    {
      h ^= w + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
    }
    return static_cast<std::size_t>( h );
  }
};

/*! \brief An input permutation, input negation mask, and output negation bit.

  Applying a transform t to f yields g with g(X) = out_neg XOR f(Y),
  where bit perm[i] of Y is bit i of X XOR bit i of neg_mask.
*/
struct np_transform
{
  std::vector<uint8_t> perm; /* perm[i] is the position variable i maps to */
  uint32_t neg_mask = 0;
  bool out_neg = false;

  static np_transform identity( uint32_t num_vars );

  bool operator==( const np_transform& other ) const = default;
};

/*! \brief Throws unless \p t is a bijection on [0, n) with an n-bit negation mask. */
void validate_transform( const np_transform& t, uint32_t num_vars );

/*! \brief Maps an input word through the permutation and negation parts of \p t. */
uint64_t transform_word( const np_transform& t, uint64_t index );

/*! \brief Transform equivalent to applying \p first, then \p second. */
np_transform compose( const np_transform& first, const np_transform& second );

np_transform inverse( const np_transform& t );

/*! \brief Parses a hex truth table.

  The string may carry a \c 0x prefix and must then hold exactly
  max(1, 2^n / 4) hex digits, case-insensitive, most significant digit
  first (bit 2^n - 1 leftmost).  For n < 2 the unused high bits of the
  single digit must be zero.
*/
truth_table parse_truth_table( std::string_view hex, uint32_t num_vars );

/*! \brief Uppercase hex, inverse of parse_truth_table. */
std::string format_hex( const truth_table& t );

/*! \brief Value of the function on input word \p index. */
bool evaluate( const truth_table& t, uint64_t index );

/*! \brief Number of input words on which the function is 1. */
uint64_t satisfy_count( const truth_table& t );

/*! \brief True iff the satisfy count is exactly 2^(n-1). */
bool is_balanced( const truth_table& t );

/*! \brief Bitwise complement of the table. */
truth_table negate_output( const truth_table& t );

truth_table apply_np_transform( const truth_table& t, const np_transform& transform );

/*! \brief One variable of a partial assignment. */
struct literal
{
  uint32_t var; /* 0-based */
  bool value;
};

/*! \brief Number of 1-bits on the subcube selected by \p assignment.

  Counts the indices consistent with the assignment where the table is 1,
  i.e. the satisfy count of the cofactor with respect to the assigned
  literals.  An empty assignment yields satisfy_count(t).
*/
uint64_t cofactor_count( const truth_table& t, std::span<const literal> assignment );

inline uint64_t cofactor_count( const truth_table& t, std::initializer_list<literal> assignment )
{
  return cofactor_count( t, std::span<const literal>( assignment.begin(), assignment.size() ) );
}

/*! \brief Indicator table of the inputs where flipping variable \p var flips the output.

  Bit X of the result is 1 iff f(X) != f(X with bit var flipped).  The
  result is symmetric under flipping bit var of the index, so its
  satisfy count is even.
*/
truth_table diff_vector( const truth_table& t, uint32_t var );

} // namespace npnsig
