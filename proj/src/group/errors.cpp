#include "mindeg/errors.hpp"

namespace mindeg {

namespace {

std::string describe(std::size_t column, std::vector<std::string> const &expected,
                     std::string const &found)
{
  std::string msg = "parse error at column " + std::to_string(column) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i)
      msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'");
  return msg;
}

} // namespace

ParseError::ParseError(std::size_t column, std::vector<std::string> expected,
                       std::string const &found)
  : Error(describe(column, expected, found)), column_(column), expected_(std::move(expected))
{
}

} // namespace mindeg
