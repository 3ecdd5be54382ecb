/*!
  \file circuit.hpp
  \brief Gate and circuit model shared by every stage

  A gate is a single-target operator controlled by a conjunction of
  polarity literals over wires.  Operators are powers of V: X = V^2,
  V^dagger = V^3.  Multi-controlled V/V^dagger gates are virtual until
  they are re-materialized.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qofmin
{

using wire_id = uint32_t;

enum class op_kind : uint8_t
{
  x,
  v,
  vdg,
  virt_v,
  virt_vdg
};

/*! \brief Exponent of V implemented by `op` (0..3). */
uint32_t v_power( op_kind op );

bool is_virtual( op_kind op );
bool is_v_type( op_kind op );

/*! \brief Inverse operator (V <-> V^dagger, X self-inverse). */
op_kind inverse( op_kind op );

/*! \brief Operator for a V-power with the given control count; nullopt for the identity.

  V/V^dagger with two or more controls are returned as virtual.
*/
std::optional<op_kind> op_from_power( uint32_t power, std::size_t num_controls );

std::string_view to_string( op_kind op );

struct control
{
  wire_id wire{ 0 };
  bool positive{ true };

  auto operator<=>( control const& ) const = default;
};

struct gate
{
  std::vector<control> controls; /* sorted by wire */
  wire_id target{ 0 };
  op_kind op{ op_kind::x };
  std::optional<uint32_t> group;

  bool operator==( gate const& ) const = default;

  bool controls_wire( wire_id w ) const;
  bool touches( wire_id w ) const { return target == w || controls_wire( w ); }
};

gate make_gate( op_kind op, wire_id target, std::vector<control> controls = {}, std::optional<uint32_t> group = std::nullopt );

enum class wire_role : uint8_t
{
  input,
  ancilla,
  output
};

std::string_view to_string( wire_role role );
std::optional<wire_role> role_from_string( std::string_view s );

struct wire
{
  std::string name;
  wire_role role{ wire_role::input };

  bool operator==( wire const& ) const = default;
};

class circuit
{
public:
  circuit() = default;
  explicit circuit( std::vector<wire> wires ) : wires_( std::move( wires ) ) {}

  wire_id add_wire( std::string name, wire_role role );
  void add_gate( gate g );

  std::vector<wire> const& wires() const { return wires_; }
  std::vector<gate> const& gates() const { return gates_; }
  std::vector<gate>& mutable_gates() { return gates_; }
  void set_gates( std::vector<gate> gates ) { gates_ = std::move( gates ); }

  std::size_t num_wires() const { return wires_.size(); }
  std::size_t num_gates() const { return gates_.size(); }

  std::optional<wire_id> find_wire( std::string_view name ) const;
  std::vector<wire_id> wires_with_role( wire_role role ) const;
  std::optional<wire_id> output_wire() const;

  /*! \brief Throws std::invalid_argument when a gate or group breaks an invariant. */
  void validate() const;

  /*! \brief Renumbers groups 0,1,2,.. in order of first appearance. */
  void renumber_groups();

  bool operator==( circuit const& ) const = default;

private:
  std::vector<wire> wires_;
  std::vector<gate> gates_;
};

/*! \brief Number of gates with exactly one control. */
std::size_t two_qubit_count( circuit const& c );

/*! \brief Inverse circuit: reversed gate order with inverted operators. */
circuit inverse( circuit const& c );

/*! \brief True when swapping two adjacent gates provably preserves the unitary.

  Sufficient conditions: neither gate's target is a control of the other.
  This covers disjoint supports, permutation-equivalent gates on a shared
  target and identical gates.  All operators are powers of V and so commute
  on a common target.
*/
bool gates_commute( gate const& g1, gate const& g2 );

/*! \brief Variant taking positions; throws std::out_of_range for bad indices. */
bool gates_commute( circuit const& c, std::size_t i, std::size_t j );

/*! \brief No gate strictly between `from` and `to` targets `w`. */
bool is_uninterrupted( circuit const& c, wire_id w, std::size_t from, std::size_t to );

bool is_terminal( gate const& g, circuit const& c );

/*! \brief No gate is controlled by a wire that an earlier gate in `[begin, end)` targets. */
bool is_linearized( circuit const& c, std::size_t begin, std::size_t end );
bool is_linearized( circuit const& c );

} // namespace qofmin
