#include "npnsig/classifier.hpp"

#include <algorithm>
#include <unordered_map>

namespace npnsig
{

namespace
{

uint64_t fnv1a( std::span<const uint32_t> key )
{
  uint64_t hash = 0xcbf29ce484222325ull;
  for ( auto value : key )
  {
    for ( int byte = 0; byte < 4; ++byte )
    {
      hash ^= ( value >> ( 8 * byte ) ) & 0xffu;
      hash *= 0x100000001b3ull;
    }
  }
  return hash;
}

/*! Collapses duplicate truth tables, keeping first-appearance order. */
void dedupe( std::span<const truth_table> input, classification& out )
{
  std::unordered_map<truth_table, uint32_t, truth_table_hash> seen;
  seen.reserve( input.size() );
  for ( const auto& t : input )
  {
    if ( t.num_vars() != out.num_vars )
    {
      throw input_mismatch( "all functions must have the same variable count" );
    }
    auto [it, inserted] = seen.try_emplace( t, static_cast<uint32_t>( out.functions.size() ) );
    if ( inserted )
    {
      out.functions.push_back( t );
    }
  }
}

} // namespace

classification classify( std::span<const truth_table> functions, const signature_selection& sel )
{
  if ( functions.empty() )
  {
    throw empty_input( "cannot classify an empty set of functions" );
  }

  classification out;
  out.num_vars = functions.front().num_vars();
  out.selection = sel;
  out.input_count = functions.size();
  dedupe( functions, out );
  const uint32_t count = static_cast<uint32_t>( out.functions.size() );

  /* Phase 1: bucket by 64-bit key hash.  Keys themselves are discarded to
     keep memory linear in the number of functions. */
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
  buckets.reserve( count );
  for ( uint32_t index = 0; index < count; ++index )
  {
    buckets[fnv1a( build_msv( out.functions[index], sel ).key )].push_back( index );
  }

  /* Phase 2: split buckets whose members carry different full keys.  Bucket
     members are in ascending index order, so the first member holding a key
     is also the class's earliest function. */
  std::vector<uint32_t> leader( count );
  std::vector<std::pair<std::vector<uint32_t>, uint32_t>> keys_in_bucket;
  for ( auto& [hash, members] : buckets )
  {
    if ( members.size() == 1 )
    {
      leader[members.front()] = members.front();
      continue;
    }
    keys_in_bucket.clear();
    for ( uint32_t index : members )
    {
      auto key = build_msv( out.functions[index], sel ).key;
      auto it = std::find_if( keys_in_bucket.begin(), keys_in_bucket.end(),
                              [&]( const auto& entry ) { return entry.first == key; } );
      if ( it == keys_in_bucket.end() )
      {
        keys_in_bucket.emplace_back( std::move( key ), index );
        leader[index] = index;
      }
      else
      {
        leader[index] = it->second;
      }
    }
  }

  /* number classes by first appearance */
  out.class_of.assign( count, 0 );
  for ( uint32_t index = 0; index < count; ++index )
  {
    if ( leader[index] == index )
    {
      out.class_of[index] = static_cast<uint32_t>( out.classes.size() );
      out.classes.emplace_back();
    }
    else
    {
      out.class_of[index] = out.class_of[leader[index]];
    }
    out.classes[out.class_of[index]].push_back( index );
  }
  return out;
}

comparison compare( const classification& signature, const classification& reference )
{
  if ( signature.functions != reference.functions )
  {
    throw input_mismatch( "groupings cover different function sets" );
  }

  comparison out;
  out.signature_classes = signature.classes.size();
  out.reference_classes = reference.classes.size();
  for ( uint32_t ref_class = 0; ref_class < reference.classes.size(); ++ref_class )
  {
    const auto& members = reference.classes[ref_class];
    for ( std::size_t i = 1; i < members.size(); ++i )
    {
      const uint32_t a = members.front();
      const uint32_t b = members[i];
      if ( signature.class_of[a] != signature.class_of[b] )
      {
        out.violations.push_back(
            { a, b, ref_class, signature.class_of[a], signature.class_of[b] } );
        break;
      }
    }
  }
  out.accuracy = signature.classes.empty()
                     ? 0.0
                     : static_cast<double>( out.reference_classes ) /
                           static_cast<double>( out.signature_classes );
  return out;
}

} // namespace npnsig
