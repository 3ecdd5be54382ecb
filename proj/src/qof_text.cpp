#include "qofmin/qof_text.hpp"

#include "qofmin/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qofmin
{

namespace
{

bool is_simple_name( std::string const& name )
{
  if ( name.empty() || !std::isalpha( static_cast<unsigned char>( name[0] ) ) )
  {
    return false;
  }
  return std::all_of( name.begin() + 1, name.end(), []( char ch ) { return std::isdigit( static_cast<unsigned char>( ch ) ); } );
}

std::string literal_text( control const& ctl, circuit const& c )
{
  return ( ctl.positive ? "" : "!" ) + c.wires()[ctl.wire].name;
}

std::string term_text( gate const& g, circuit const& c, bool joined )
{
  auto const& target = c.wires()[g.target].name;
  if ( g.op == op_kind::x && g.controls.size() == 1u )
  {
    return "(" + literal_text( g.controls[0], c ) + "+" + target + ")_" + target;
  }
  std::string s;
  if ( g.controls.empty() )
  {
    s = "1";
  }
  for ( auto k = 0u; k < g.controls.size(); ++k )
  {
    if ( k > 0 && !joined )
    {
      s += '*';
    }
    s += literal_text( g.controls[k], c );
  }
  if ( g.op != op_kind::x )
  {
    s += "^" + std::string( to_string( g.op ) );
  }
  return s + "_" + target;
}

} // namespace

std::string emit_qof( circuit const& c, bool with_header )
{
  bool const joined = std::all_of( c.wires().begin(), c.wires().end(), []( auto const& w ) { return is_simple_name( w.name ); } );
  auto const out_wire = c.output_wire();

  std::string s;
  if ( with_header )
  {
    s = "# wires:";
    for ( auto const& w : c.wires() )
    {
      s += " " + w.name + ":" + std::string( to_string( w.role ) );
    }
    s += "\n";
  }

  std::string body;
  auto const& gates = c.gates();
  for ( std::size_t i = 0; i < gates.size(); )
  {
    std::size_t j = i + 1;
    if ( gates[i].group )
    {
      while ( j < gates.size() && gates[j].group == gates[i].group )
      {
        ++j;
      }
    }
    bool const terminal = std::any_of( gates.begin() + i, gates.begin() + j, [&]( auto const& g ) { return out_wire && g.target == *out_wire; } );
    if ( !body.empty() )
    {
      body += terminal ? " (+) " : " ";
    }
    if ( gates[i].group )
    {
      body += "[ ";
      for ( auto k = i; k < j; ++k )
      {
        body += ( k > i ? " o " : "" ) + term_text( gates[k], c, joined );
      }
      body += " ]";
    }
    else
    {
      body += term_text( gates[i], c, joined );
    }
    i = j;
  }
  return s + ( body.empty() ? "0" : body ) + "\n";
}

namespace
{

class qof_parser
{
public:
  explicit qof_parser( std::string_view text ) : text_( text ) {}

  circuit parse()
  {
    read_header();
    skip_ws();
    if ( peek() == '0' )
    {
      advance();
      skip_ws();
      if ( !at_end() )
      {
        fail( "unexpected text after '0'" );
      }
      return c_;
    }
    uint32_t next_group = 0;
    while ( true )
    {
      skip_ws();
      if ( at_end() )
      {
        break;
      }
      if ( text_.substr( pos_, 3 ) == "(+)" )
      {
        advance( 3 );
        continue;
      }
      if ( peek() == '[' )
      {
        advance();
        auto const group = next_group++;
        while ( true )
        {
          skip_ws();
          auto g = parse_term();
          g.group = group;
          c_.add_gate( std::move( g ) );
          skip_ws();
          if ( peek() == ']' )
          {
            advance();
            break;
          }
          if ( peek() != 'o' )
          {
            fail( "expected 'o' or ']' in group" );
          }
          advance();
        }
        continue;
      }
      c_.add_gate( parse_term() );
    }
    if ( c_.num_gates() == 0 && !saw_zero_ )
    {
      fail( "empty expression" );
    }
    try
    {
      c_.validate();
    }
    catch ( std::invalid_argument const& e )
    {
      fail( e.what() );
    }
    return c_;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek( std::size_t ahead = 0 ) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void advance( std::size_t n = 1 )
  {
    for ( auto k = 0u; k < n && !at_end(); ++k )
    {
      if ( text_[pos_] == '\n' )
      {
        ++line_;
        col_ = 1;
      }
      else
      {
        ++col_;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail( std::string const& what ) const { throw parse_error( what, line_, col_ ); }

  void skip_ws()
  {
    while ( !at_end() )
    {
      if ( std::isspace( static_cast<unsigned char>( peek() ) ) )
      {
        advance();
      }
      else if ( peek() == '#' )
      {
        while ( !at_end() && peek() != '\n' )
        {
          advance();
        }
      }
      else
      {
        break;
      }
    }
  }

  void read_header()
  {
    skip_plain_ws();
    static constexpr std::string_view tag = "# wires:";
    if ( text_.substr( pos_, tag.size() ) != tag )
    {
      return;
    }
    advance( tag.size() );
    std::string line;
    while ( !at_end() && peek() != '\n' )
    {
      line += peek();
      advance();
    }
    std::istringstream in( line );
    std::string entry;
    while ( in >> entry )
    {
      auto colon = entry.rfind( ':' );
      auto role = colon == std::string::npos ? std::nullopt : role_from_string( entry.substr( colon + 1 ) );
      if ( !role || colon == 0 )
      {
        fail( "bad wire entry '" + entry + "'" );
      }
      auto name = entry.substr( 0, colon );
      if ( c_.find_wire( name ) )
      {
        fail( "duplicate wire '" + name + "'" );
      }
      c_.add_wire( name, *role );
    }
    header_ = true;
  }

  void skip_plain_ws()
  {
    while ( !at_end() && std::isspace( static_cast<unsigned char>( peek() ) ) )
    {
      advance();
    }
  }

  wire_id parse_name()
  {
    if ( header_ )
    {
      std::optional<wire_id> best;
      std::size_t best_len = 0;
      for ( auto w = 0u; w < c_.num_wires(); ++w )
      {
        auto const& name = c_.wires()[w].name;
        if ( name.size() > best_len && text_.substr( pos_, name.size() ) == name )
        {
          best = w;
          best_len = name.size();
        }
      }
      if ( !best )
      {
        fail( "expected a wire name" );
      }
      advance( best_len );
      return *best;
    }
    if ( !std::isalpha( static_cast<unsigned char>( peek() ) ) )
    {
      fail( "expected a wire name" );
    }
    std::string name( 1, peek() );
    advance();
    while ( std::isdigit( static_cast<unsigned char>( peek() ) ) )
    {
      name += peek();
      advance();
    }
    if ( auto w = c_.find_wire( name ) )
    {
      return *w;
    }
    auto role = wire_role::input;
    if ( name == "t" )
    {
      role = wire_role::output;
    }
    else if ( name.size() > 1 && ( name[0] == 't' || name[0] == 'r' ) )
    {
      role = wire_role::ancilla;
    }
    return c_.add_wire( name, role );
  }

  control parse_literal()
  {
    bool positive = true;
    if ( peek() == '!' )
    {
      positive = false;
      advance();
    }
    return { parse_name(), positive };
  }

  gate parse_term()
  {
    if ( peek() == '(' )
    {
      advance();
      auto const ctl = parse_literal();
      if ( peek() != '+' )
      {
        fail( "expected '+' in CNOT term" );
      }
      advance();
      auto const inner = parse_name();
      if ( peek() != ')' || peek( 1 ) != '_' )
      {
        fail( "expected ')_' after CNOT term" );
      }
      advance( 2 );
      auto const target = parse_name();
      if ( target != inner )
      {
        fail( "CNOT target must match the second operand" );
      }
      return make_gate( op_kind::x, target, { ctl } );
    }

    std::vector<control> controls;
    if ( peek() == '1' )
    {
      advance();
    }
    else
    {
      controls.push_back( parse_literal() );
      while ( peek() == '!' || peek() == '*' || ( peek() != '^' && peek() != '_' && std::isalpha( static_cast<unsigned char>( peek() ) ) ) )
      {
        if ( peek() == '*' )
        {
          advance();
        }
        controls.push_back( parse_literal() );
      }
    }

    op_kind op = op_kind::x;
    if ( peek() == '^' )
    {
      advance();
      bool virt = false;
      if ( peek() == '~' )
      {
        virt = true;
        advance();
      }
      if ( peek() == 'X' && !virt )
      {
        advance();
      }
      else if ( peek() == 'V' )
      {
        advance();
        bool dagger = false;
        if ( peek() == '+' )
        {
          dagger = true;
          advance();
        }
        op = virt ? ( dagger ? op_kind::virt_vdg : op_kind::virt_v ) : ( dagger ? op_kind::vdg : op_kind::v );
      }
      else
      {
        fail( "expected operator V, V+, ~V, ~V+ or X after '^'" );
      }
    }
    if ( peek() != '_' )
    {
      fail( "expected '_' before the target" );
    }
    advance();
    auto const target = parse_name();
    return make_gate( op, target, std::move( controls ) );
  }

  std::string_view text_;
  std::size_t pos_{ 0 };
  std::size_t line_{ 1 };
  std::size_t col_{ 1 };
  bool header_{ false };
  bool saw_zero_{ false };
  circuit c_;
};

} // namespace

circuit parse_qof( std::string_view text )
{
  return qof_parser( text ).parse();
}

} // namespace qofmin
