/*!
  \file cli.hpp
  \brief Batch driver behind the `qofmin` executable
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qofmin
{

namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int parse = 2;
inline constexpr int stage = 3;
inline constexpr int verification = 4;
} // namespace exit_code

/*! \brief Runs one subcommand; `args` excludes the program name. */
int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace qofmin
