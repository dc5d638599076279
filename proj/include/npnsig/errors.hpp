/*!
  \file errors.hpp
  \brief Error types thrown by the npnsig library
*/

#pragma once

#include <stdexcept>
#include <string>

namespace npnsig
{

/*! \brief Base class of all npnsig errors. */
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Variable count outside the supported range, or arity mismatch between arguments. */
class unsupported_arity : public error
{
public:
  using error::error;
};

/*! \brief Hex string length does not match the declared variable count. */
class invalid_length : public error
{
public:
  using error::error;
};

/*! \brief Non-hex character, or a digit setting bits beyond the table size. */
class invalid_digit : public error
{
public:
  using error::error;
};

/*! \brief Word index outside [0, 2^n). */
class invalid_word : public error
{
public:
  using error::error;
};

/*! \brief Variable index outside [0, n). */
class invalid_variable : public error
{
public:
  using error::error;
};

/*! \brief Malformed cofactor assignment, e.g. the same variable assigned twice. */
class invalid_assignment : public error
{
public:
  using error::error;
};

/*! \brief Cofactor vector arity outside [0, n]. */
class invalid_arity : public error
{
public:
  using error::error;
};

/*! \brief Signature selection with no family enabled, or an unknown family name. */
class invalid_selection : public error
{
public:
  using error::error;
};

/*! \brief Classification requested over an empty function set. */
class empty_input : public error
{
public:
  using error::error;
};

/*! \brief Two classifications built over different function sets. */
class input_mismatch : public error
{
public:
  using error::error;
};

/*! \brief Exhaustive canonicalization requested above the oracle arity bound. */
class oracle_arity_limit : public error
{
public:
  using error::error;
};

/*! \brief Malformed corpus file; the message names the offending line. */
class corpus_error : public error
{
public:
  using error::error;
};

} // namespace npnsig
