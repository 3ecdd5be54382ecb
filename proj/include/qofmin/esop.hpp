/*!
  \file esop.hpp
  \brief ESOP and Reed-Muller expressions

  An expression is an XOR of product terms over variables `a`..`z`.  Values
  are normalized on construction: literals of a term are kept in ascending
  variable order, equal terms cancel in pairs and the remaining terms are
  sorted by `term_less`.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qofmin
{

struct literal
{
  uint32_t var{ 0 };
  bool positive{ true };

  auto operator<=>( literal const& ) const = default;
};

/*! \brief Product of literals; the empty product is the constant 1. */
struct product_term
{
  std::vector<literal> literals;

  bool operator==( product_term const& ) const = default;

  bool is_constant_one() const { return literals.empty(); }
  bool evaluate( uint64_t assignment, uint32_t arity ) const;
};

/*! \brief Total order on terms: lexicographic over (variable, positive < negative), shorter prefix first. */
bool term_less( product_term const& lhs, product_term const& rhs );

enum class polarity_class
{
  pprm,
  fprm,
  grm,
  esop
};

std::string_view to_string( polarity_class cls );

class esop_expr
{
public:
  esop_expr() = default;

  /*! \brief Builds a normalized expression; throws std::invalid_argument on malformed terms. */
  esop_expr( uint32_t arity, std::vector<product_term> terms );

  uint32_t arity() const { return arity_; }
  std::vector<product_term> const& terms() const { return terms_; }
  bool is_constant_zero() const { return terms_.empty(); }

  bool operator==( esop_expr const& ) const = default;

private:
  uint32_t arity_{ 0 };
  std::vector<product_term> terms_;
};

/*! \brief Parses `abc ^ a!d ^ 1`.

  Arity defaults to one past the highest variable letter used.  When
  `arity` is given, any variable outside it is an error.
*/
esop_expr parse_esop( std::string_view text, int arity = -1 );

/*! \brief Parses the PLA-style form (`.i N`, `.type esop`, rows over {0,1,-}). */
esop_expr parse_esop_pla( std::string_view text );

/*! \brief Prints with `!` for negation, ` ^ ` between terms, `1`/`0` for constants. */
std::string to_string( esop_expr const& e );
std::string to_string( product_term const& t );

polarity_class classify_polarity( esop_expr const& e );

/*! \brief Replaces pairs of terms that differ in one literal's polarity by the shorter term, to fixpoint. */
esop_expr merge_terms( esop_expr const& e );

/*! \brief Entry `i` is the value of `e` where variable `k` takes bit `arity - 1 - k` of `i`.

  Variable `a` is the most significant bit.  Arity is limited to 20.
*/
std::vector<uint8_t> truth_table( esop_expr const& e );

inline constexpr uint32_t max_truth_table_arity = 20u;

} // namespace qofmin
