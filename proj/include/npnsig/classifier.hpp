/*! \file classifier.hpp
    \brief Signature-based grouping of Boolean functions into candidate
           NPN classes.

    Functions are grouped by the canonical mixed signature vector: two
    functions land in the same class exactly when their polarity-normalized
    signature keys coincide.  Keys are hashed to keep memory linear in the
    input; buckets that collide are split by recomputing and comparing the
    full keys, so grouping is always exact.
*/

#pragma once

#include "signatures.hpp"
#include "truth_table.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace npnsig
{

/*! \brief Result of grouping a set of functions by signature keys. */
struct classification
{
  uint32_t num_vars{ 0 };

  /*! \brief Selection used to build the keys; absent for exact groupings. */
  std::optional<signature_selection> selection;

  /*! \brief Number of input functions, including duplicates. */
  uint64_t input_count{ 0 };

  /*! \brief Distinct input functions in order of first appearance. */
  std::vector<truth_table> functions;

  /*! \brief Class index of functions[i]; classes are numbered by first
             appearance. */
  std::vector<uint32_t> class_of;

  /*! \brief Members of each class, as indices into functions. */
  std::vector<std::vector<uint32_t>> classes;
};

/*! \brief Mismatch between a signature grouping and a reference grouping. */
struct soundness_violation
{
  uint32_t function_a{ 0 }; /*!< index into the reference's functions */
  uint32_t function_b{ 0 };
  uint32_t reference_class{ 0 };
  uint32_t signature_class_a{ 0 };
  uint32_t signature_class_b{ 0 };
};

/*! \brief Comparison of a signature grouping against a reference grouping
           of the same functions. */
struct comparison
{
  uint64_t signature_classes{ 0 };
  uint64_t reference_classes{ 0 };

  /*! \brief Pairs that the reference puts in one class but the signature
             grouping separates.  Empty iff the signature grouping is sound;
             at most one witness is recorded per reference class. */
  std::vector<soundness_violation> violations;

  /*! \brief reference_classes / signature_classes, in [0, 1] when sound. */
  double accuracy{ 0.0 };
};

/*! \brief Groups functions by canonical mixed signature vector.

    All functions must share one variable count.  Duplicate truth tables are
    collapsed before grouping; `class_of` and `classes` refer to the deduped
    `functions` list.

    \throws empty_input if `functions` is empty
    \throws input_mismatch if the functions disagree on variable count
*/
classification classify( std::span<const truth_table> functions, const signature_selection& sel );

/*! \brief Checks a signature grouping against a reference grouping.

    Both groupings must cover the same deduped function list in the same
    order.  A violation is a pair of functions that the reference considers
    equivalent but the signature grouping separates; signature classes that
    merely merge reference classes are expected (signatures are necessary,
    not sufficient) and only affect `accuracy`.

    \throws input_mismatch if the groupings cover different functions
*/
comparison compare( const classification& signature, const classification& reference );

} // namespace npnsig
