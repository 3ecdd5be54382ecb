/*!
  \file errors.hpp
  \brief Exception types shared by all stages
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qofmin
{

/*! \brief Malformed textual input (ESOP, PLA, netlist or QOF). */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::string const& what, std::size_t line, std::size_t column )
      : std::runtime_error( what + " at " + std::to_string( line ) + ":" + std::to_string( column ) ),
        line_( line ),
        column_( column )
  {
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/*! \brief A transformation stage could not be applied to its input. */
class stage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief The oracle rejected a rewrite or a final result. */
class verification_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace qofmin
