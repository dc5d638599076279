#include "npnsig/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

namespace npnsig
{

namespace
{

void check_arity( uint32_t num_vars )
{
  if ( num_vars < min_vars || num_vars > oracle_max_vars )
  {
    throw oracle_arity_limit( "exhaustive oracle supports 1.." +
                              std::to_string( oracle_max_vars ) + " variables, got " +
                              std::to_string( num_vars ) );
  }
}

/*! Exhaustive canonicalizer for one variable count.

    Tables with up to six variables fit one 64-bit word, so every
    permutation/negation pair is precomputed as a gather map over bit
    positions and applying a transform is a single pass over the word.
*/
class canonicalizer
{
public:
  explicit canonicalizer( uint32_t num_vars )
      : num_vars_( num_vars ),
        num_bits_( uint64_t{ 1 } << num_vars ),
        mask_( detail::tail_mask( num_vars ) )
  {
    check_arity( num_vars );
    np_transform t = np_transform::identity( num_vars );
    std::vector<uint8_t> sorted_perm = t.perm;
    do
    {
      t.perm = sorted_perm;
      for ( t.neg_mask = 0; t.neg_mask < num_bits_; ++t.neg_mask )
      {
        auto& map = maps_.emplace_back();
        for ( uint64_t index = 0; index < num_bits_; ++index )
        {
          map[index] = static_cast<uint8_t>( transform_word( t, index ) );
        }
        transforms_.push_back( t );
      }
    } while ( std::next_permutation( sorted_perm.begin(), sorted_perm.end() ) );
  }

  uint64_t representative( uint64_t word ) const
  {
    return canonicalize( word ).first;
  }

  canonical_form canonical( const truth_table& t ) const
  {
    const auto [best, index] = canonicalize( t.words().front() );
    canonical_form out{ truth_table( num_vars_ ), transforms_[index >> 1] };
    out.transform.out_neg = ( index & 1 ) != 0;
    out.representative.words().front() = best;
    return out;
  }

  uint32_t num_vars() const
  {
    return num_vars_;
  }

private:
  /*! Returns the minimum word and 2 * map index + out_neg of its transform. */
  std::pair<uint64_t, std::size_t> canonicalize( uint64_t word ) const
  {
    uint64_t best = ~uint64_t{ 0 };
    std::size_t best_index = 0;
    for ( std::size_t m = 0; m < maps_.size(); ++m )
    {
      const auto& map = maps_[m];
      uint64_t gathered = 0;
      for ( uint64_t index = 0; index < num_bits_; ++index )
      {
        gathered |= ( ( word >> map[index] ) & 1 ) << index;
      }
      if ( gathered < best )
      {
        best = gathered;
        best_index = 2 * m;
      }
      const uint64_t negated = ~gathered & mask_;
      if ( negated < best )
      {
        best = negated;
        best_index = 2 * m + 1;
      }
    }
    return { best, best_index };
  }

  uint32_t num_vars_;
  uint64_t num_bits_;
  uint64_t mask_;
  std::vector<std::array<uint8_t, 64>> maps_;
  std::vector<np_transform> transforms_;
};

} // namespace

std::vector<np_transform> enumerate_transforms( uint32_t num_vars )
{
  check_arity( num_vars );
  std::vector<np_transform> out;
  np_transform t = np_transform::identity( num_vars );
  std::vector<uint8_t> sorted_perm = t.perm;
  do
  {
    t.perm = sorted_perm;
    for ( t.neg_mask = 0; t.neg_mask < ( 1u << num_vars ); ++t.neg_mask )
    {
      t.out_neg = false;
      out.push_back( t );
      t.out_neg = true;
      out.push_back( t );
    }
  } while ( std::next_permutation( sorted_perm.begin(), sorted_perm.end() ) );
  return out;
}

canonical_form npn_canonical( const truth_table& t )
{
  return canonicalizer( t.num_vars() ).canonical( t );
}

classification exact_classify( std::span<const truth_table> functions )
{
  if ( functions.empty() )
  {
    throw empty_input( "cannot classify an empty set of functions" );
  }

  classification out;
  out.num_vars = functions.front().num_vars();
  const canonicalizer canon( out.num_vars );
  out.input_count = functions.size();

  std::unordered_map<truth_table, uint32_t, truth_table_hash> seen;
  std::unordered_map<uint64_t, uint32_t> class_of_rep;
  for ( const auto& t : functions )
  {
    if ( t.num_vars() != out.num_vars )
    {
      throw input_mismatch( "all functions must have the same variable count" );
    }
    auto [it, inserted] = seen.try_emplace( t, static_cast<uint32_t>( out.functions.size() ) );
    if ( !inserted )
    {
      continue;
    }
    const uint32_t index = it->second;
    out.functions.push_back( t );
    const uint64_t rep = canon.representative( t.words().front() );
    auto [cls, fresh] = class_of_rep.try_emplace( rep, static_cast<uint32_t>( out.classes.size() ) );
    if ( fresh )
    {
      out.classes.emplace_back();
    }
    out.class_of.push_back( cls->second );
    out.classes[cls->second].push_back( index );
  }
  return out;
}

} // namespace npnsig
