#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mindeg {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed group expression. Carries the 1-based column of the failure and
/// the tokens that would have been accepted there.
class ParseError : public Error
{
public:
  ParseError(std::size_t column, std::vector<std::string> expected,
             std::string const &found);

  std::size_t column() const { return column_; }
  std::vector<std::string> const &expected() const { return expected_; }

private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Malformed input file or table (multiplication table, sd-file).
class FormatError : public Error
{
public:
  using Error::Error;
};

/// An operation was called outside its domain (nonabelian input to an
/// abelian-only routine, bad constructor parameter, failed hypothesis).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// A group or search exceeds a configured size cap.
class ResourceError : public Error
{
public:
  using Error::Error;
};

/// A semidirect-product action is not a homomorphism into Aut(G).
class InvalidActionError : public Error
{
public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one is a bug, or a
/// counterexample to a theorem the library checks.
class InvariantViolation : public Error
{
public:
  using Error::Error;
};

} // namespace mindeg
