#include "qofmin/esop.hpp"

#include "qofmin/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qofmin
{

namespace
{

void normalize_terms( std::vector<product_term>& terms )
{
  std::sort( terms.begin(), terms.end(), term_less );
  std::vector<product_term> out;
  out.reserve( terms.size() );
  for ( auto& t : terms )
  {
    if ( !out.empty() && out.back() == t )
    {
      out.pop_back();
    }
    else
    {
      out.push_back( std::move( t ) );
    }
  }
  terms = std::move( out );
}

} // namespace

bool product_term::evaluate( uint64_t assignment, uint32_t arity ) const
{
  for ( auto const& l : literals )
  {
    bool const value = ( assignment >> ( arity - 1u - l.var ) ) & 1u;
    if ( value != l.positive )
    {
      return false;
    }
  }
  return true;
}

bool term_less( product_term const& lhs, product_term const& rhs )
{
  /* literal's operator<=> orders positive before negative only if we flip the flag */
  return std::lexicographical_compare( lhs.literals.begin(), lhs.literals.end(), rhs.literals.begin(), rhs.literals.end(),
                                       []( literal const& a, literal const& b ) {
                                         if ( a.var != b.var )
                                         {
                                           return a.var < b.var;
                                         }
                                         return a.positive && !b.positive;
                                       } );
}

std::string_view to_string( polarity_class cls )
{
  switch ( cls )
  {
  case polarity_class::pprm:
    return "PPRM";
  case polarity_class::fprm:
    return "FPRM";
  case polarity_class::grm:
    return "GRM";
  case polarity_class::esop:
    return "ESOP";
  }
  return "ESOP";
}

esop_expr::esop_expr( uint32_t arity, std::vector<product_term> terms ) : arity_( arity ), terms_( std::move( terms ) )
{
  for ( auto& t : terms_ )
  {
    std::sort( t.literals.begin(), t.literals.end(), []( auto const& a, auto const& b ) { return a.var < b.var; } );
    for ( auto i = 0u; i < t.literals.size(); ++i )
    {
      if ( t.literals[i].var >= arity_ )
      {
        throw std::invalid_argument( "variable index " + std::to_string( t.literals[i].var ) + " outside arity " + std::to_string( arity_ ) );
      }
      if ( i > 0 && t.literals[i - 1].var == t.literals[i].var )
      {
        throw std::invalid_argument( "variable repeated within a product term" );
      }
    }
  }
  normalize_terms( terms_ );
}

esop_expr parse_esop( std::string_view text, int arity )
{
  std::size_t line = 1, column = 1;
  std::size_t pos = 0;

  auto advance = [&]() {
    if ( text[pos] == '\n' )
    {
      ++line;
      column = 1;
    }
    else
    {
      ++column;
    }
    ++pos;
  };
  auto skip_ws = [&]() {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
    {
      advance();
    }
  };

  std::vector<product_term> terms;
  uint32_t max_var = 0;
  bool any_var = false;

  skip_ws();
  if ( pos == text.size() )
  {
    return esop_expr( arity < 0 ? 0u : static_cast<uint32_t>( arity ), {} );
  }

  while ( true )
  {
    skip_ws();
    if ( pos == text.size() )
    {
      throw parse_error( "expected a term", line, column );
    }

    auto const term_line = line, term_col = column;
    if ( text[pos] == '0' || text[pos] == '1' )
    {
      bool const one = text[pos] == '1';
      advance();
      if ( one )
      {
        terms.emplace_back();
      }
    }
    else
    {
      product_term term;
      while ( pos < text.size() )
      {
        skip_ws();
        if ( pos == text.size() || text[pos] == '^' )
        {
          break;
        }
        auto const lit_line = line, lit_col = column;
        bool positive = true;
        if ( text[pos] == '!' )
        {
          positive = false;
          advance();
          skip_ws();
        }
        if ( pos == text.size() || text[pos] < 'a' || text[pos] > 'z' )
        {
          throw parse_error( "expected a variable a..z", line, column );
        }
        uint32_t const var = static_cast<uint32_t>( text[pos] - 'a' );
        advance();
        for ( auto const& l : term.literals )
        {
          if ( l.var == var )
          {
            throw parse_error( std::string( "duplicate variable '" ) + static_cast<char>( 'a' + var ) + "' in term", lit_line, lit_col );
          }
        }
        if ( arity >= 0 && var >= static_cast<uint32_t>( arity ) )
        {
          throw parse_error( std::string( "variable '" ) + static_cast<char>( 'a' + var ) + "' exceeds arity " + std::to_string( arity ), lit_line, lit_col );
        }
        max_var = std::max( max_var, var );
        any_var = true;
        term.literals.push_back( { var, positive } );
      }
      if ( term.literals.empty() )
      {
        throw parse_error( "empty term", term_line, term_col );
      }
      terms.push_back( std::move( term ) );
    }

    skip_ws();
    if ( pos == text.size() )
    {
      break;
    }
    if ( text[pos] != '^' )
    {
      throw parse_error( std::string( "unexpected character '" ) + text[pos] + "'", line, column );
    }
    advance();
  }

  uint32_t const n = arity >= 0 ? static_cast<uint32_t>( arity ) : ( any_var ? max_var + 1u : 0u );
  return esop_expr( n, std::move( terms ) );
}

esop_expr parse_esop_pla( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string raw;
  std::size_t line = 0;
  int inputs = -1;
  std::vector<product_term> terms;

  while ( std::getline( in, raw ) )
  {
    ++line;
    if ( auto hash = raw.find( '#' ); hash != std::string::npos )
    {
      raw.erase( hash );
    }
    std::istringstream ls( raw );
    std::string head;
    if ( !( ls >> head ) )
    {
      continue;
    }
    if ( head[0] == '.' )
    {
      if ( head == ".i" )
      {
        if ( !( ls >> inputs ) || inputs < 0 || inputs > 26 )
        {
          throw parse_error( "bad .i value", line, 1 );
        }
      }
      else if ( head == ".type" )
      {
        std::string type;
        ls >> type;
        if ( type != "esop" )
        {
          throw parse_error( "unsupported .type '" + type + "'", line, 1 );
        }
      }
      else if ( head == ".o" )
      {
        int outputs = 0;
        if ( !( ls >> outputs ) || outputs != 1 )
        {
          throw parse_error( "only single-output PLA files are supported", line, 1 );
        }
      }
      else if ( head == ".e" || head == ".end" )
      {
        break;
      }
      else if ( head != ".p" && head != ".ilb" && head != ".ob" )
      {
        throw parse_error( "unknown directive '" + head + "'", line, 1 );
      }
      continue;
    }

    if ( inputs < 0 )
    {
      throw parse_error( "cube before .i header", line, 1 );
    }
    if ( head.size() != static_cast<std::size_t>( inputs ) )
    {
      throw parse_error( "cube width " + std::to_string( head.size() ) + " does not match .i " + std::to_string( inputs ), line, 1 );
    }
    std::string output;
    if ( ls >> output && output == "0" )
    {
      continue;
    }
    product_term term;
    for ( auto i = 0u; i < head.size(); ++i )
    {
      switch ( head[i] )
      {
      case '0':
        term.literals.push_back( { i, false } );
        break;
      case '1':
        term.literals.push_back( { i, true } );
        break;
      case '-':
        break;
      default:
        throw parse_error( std::string( "bad cube character '" ) + head[i] + "'", line, i + 1 );
      }
    }
    terms.push_back( std::move( term ) );
  }
  if ( inputs < 0 )
  {
    throw parse_error( "missing .i header", line, 1 );
  }
  return esop_expr( static_cast<uint32_t>( inputs ), std::move( terms ) );
}

std::string to_string( product_term const& t )
{
  if ( t.literals.empty() )
  {
    return "1";
  }
  std::string s;
  for ( auto const& l : t.literals )
  {
    if ( !l.positive )
    {
      s += '!';
    }
    s += static_cast<char>( 'a' + l.var );
  }
  return s;
}

std::string to_string( esop_expr const& e )
{
  if ( e.terms().empty() )
  {
    return "0";
  }
  std::string s;
  for ( auto const& t : e.terms() )
  {
    if ( !s.empty() )
    {
      s += " ^ ";
    }
    s += to_string( t );
  }
  return s;
}

polarity_class classify_polarity( esop_expr const& e )
{
  bool all_positive = true;
  std::vector<int> seen( e.arity(), 0 ); /* bit 0: positive seen, bit 1: negative seen */
  for ( auto const& t : e.terms() )
  {
    for ( auto const& l : t.literals )
    {
      all_positive &= l.positive;
      seen[l.var] |= l.positive ? 1 : 2;
    }
  }
  if ( all_positive )
  {
    return polarity_class::pprm;
  }
  if ( std::none_of( seen.begin(), seen.end(), []( int s ) { return s == 3; } ) )
  {
    return polarity_class::fprm;
  }

  /* GRM: every variable support set occurs at most once */
  std::vector<std::vector<uint32_t>> supports;
  for ( auto const& t : e.terms() )
  {
    std::vector<uint32_t> s;
    for ( auto const& l : t.literals )
    {
      s.push_back( l.var );
    }
    supports.push_back( std::move( s ) );
  }
  std::sort( supports.begin(), supports.end() );
  if ( std::adjacent_find( supports.begin(), supports.end() ) == supports.end() )
  {
    return polarity_class::grm;
  }
  return polarity_class::esop;
}

namespace
{

/* index of the single literal whose polarity differs, or -1 */
int single_flip( product_term const& x, product_term const& y )
{
  if ( x.literals.size() != y.literals.size() )
  {
    return -1;
  }
  int flip = -1;
  for ( auto i = 0u; i < x.literals.size(); ++i )
  {
    if ( x.literals[i].var != y.literals[i].var )
    {
      return -1;
    }
    if ( x.literals[i].positive != y.literals[i].positive )
    {
      if ( flip != -1 )
      {
        return -1;
      }
      flip = static_cast<int>( i );
    }
  }
  return flip;
}

} // namespace

esop_expr merge_terms( esop_expr const& e )
{
  auto terms = e.terms();
  bool changed = true;
  while ( changed )
  {
    changed = false;
    for ( auto i = 0u; i < terms.size() && !changed; ++i )
    {
      for ( auto j = i + 1; j < terms.size() && !changed; ++j )
      {
        auto const flip = single_flip( terms[i], terms[j] );
        if ( flip < 0 )
        {
          continue;
        }
        product_term merged = terms[i];
        merged.literals.erase( merged.literals.begin() + flip );
        terms.erase( terms.begin() + j );
        terms[i] = std::move( merged );
        normalize_terms( terms );
        changed = true;
      }
    }
  }
  return esop_expr( e.arity(), std::move( terms ) );
}

std::vector<uint8_t> truth_table( esop_expr const& e )
{
  if ( e.arity() > max_truth_table_arity )
  {
    throw std::invalid_argument( "truth table arity " + std::to_string( e.arity() ) + " exceeds limit " + std::to_string( max_truth_table_arity ) );
  }
  std::vector<uint8_t> table( std::size_t{ 1 } << e.arity(), 0u );
  for ( uint64_t i = 0; i < table.size(); ++i )
  {
    uint8_t v = 0;
    for ( auto const& t : e.terms() )
    {
      v ^= t.evaluate( i, e.arity() ) ? 1u : 0u;
    }
    table[i] = v;
  }
  return table;
}

} // namespace qofmin
