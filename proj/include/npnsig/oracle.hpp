/*! \file oracle.hpp
    \brief Exact NPN canonicalization by exhaustive transform enumeration.

    For small variable counts every input permutation, input polarity, and
    output polarity is applied and the numerically smallest truth table is
    kept as the class representative.  This is the ground truth that the
    signature-based grouping is validated against.
*/

#pragma once

#include "classifier.hpp"
#include "truth_table.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace npnsig
{

/*! \brief Largest variable count the exhaustive oracle accepts. */
inline constexpr uint32_t oracle_max_vars = 6;

/*! \brief Canonical representative together with a transform that reaches
           it: `representative == apply_np_transform(input, transform)`. */
struct canonical_form
{
  truth_table representative;
  np_transform transform;
};

/*! \brief All n! * 2^(n+1) NPN transforms for \p num_vars variables.

    Ordered by permutation (lexicographic), then negation mask (ascending),
    then output polarity (plain before negated).

    \throws oracle_arity_limit if `num_vars` exceeds oracle_max_vars
*/
std::vector<np_transform> enumerate_transforms( uint32_t num_vars );

/*! \brief Exhaustive canonical form: the minimum truth table over all NPN
           transforms of \p t, with ties resolved by enumeration order.

    \throws oracle_arity_limit if the arity exceeds oracle_max_vars
*/
canonical_form npn_canonical( const truth_table& t );

/*! \brief Groups functions into exact NPN classes.

    Same contract as classify(), but with ground-truth equivalence and no
    signature selection.

    \throws empty_input if `functions` is empty
    \throws input_mismatch if the functions disagree on variable count
    \throws oracle_arity_limit if the arity exceeds oracle_max_vars
*/
classification exact_classify( std::span<const truth_table> functions );

} // namespace npnsig
