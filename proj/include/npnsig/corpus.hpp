/*! \file corpus.hpp
    \brief Reading, writing, and generating truth table corpora.

    A corpus file is line-oriented text: a header line `n=<k>` fixes the
    variable count, every following non-empty line holds one hex truth
    table, and `#` starts a comment that runs to the end of the line.
*/

#pragma once

#include "truth_table.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace npnsig
{

/*! \brief A list of same-arity truth tables, as stored in a corpus file. */
struct corpus
{
  uint32_t num_vars{ 0 };
  std::vector<truth_table> functions;
};

/*! \brief Parses a corpus from a stream.

    The `n=<k>` header may be omitted when \p arity supplies the variable
    count; a header that contradicts \p arity is an error.

    \param name used in error messages, typically the file name
    \throws corpus_error on a malformed header, a bad table line, or when
            neither a header nor \p arity fixes the variable count;
            messages carry `name:line`
*/
corpus read_corpus( std::istream& in, const std::string& name,
                    std::optional<uint32_t> arity = std::nullopt );

/*! \brief Reads a corpus file from disk.

    \throws corpus_error if the file cannot be opened or is malformed
*/
corpus load_corpus( const std::string& path, std::optional<uint32_t> arity = std::nullopt );

/*! \brief Writes a corpus in the text format read_corpus() accepts.

    \param comment optional `#` comment emitted above the header; may span
           multiple lines
*/
void write_corpus( std::ostream& out, const corpus& c, const std::string& comment = "" );

/*! \brief Generates tables by drawing every word uniformly at random.

    Deterministic for a fixed (num_vars, count, seed) triple.
*/
corpus generate_uniform( uint32_t num_vars, uint64_t count, uint64_t seed );

/*! \brief Generates tables with consecutive integer values starting at
           \p first, wrapping around at 2^2^n. */
corpus generate_consecutive( uint32_t num_vars, uint64_t count, uint64_t first );

} // namespace npnsig
