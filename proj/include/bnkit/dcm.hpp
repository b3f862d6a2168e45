/*!
  \file dcm.hpp
  \brief Canalizing maps and the dynamics canalizing map as threshold networks

  Every node contributes two state units (s-units), one per Boolean value.
  Each schema of the node becomes a threshold unit (t-unit) whose inputs are
  the s-units named by the schema's literals and whose single output fiber
  ends at the s-unit of the schema's output. A schema with exactly one
  condition is drawn as direct fibers instead, and one with no condition
  marks its target s-unit as always on.

  Position-free groups contribute quotas: a group requiring `n` ones fires
  when at least `n` of its member inputs are 1 (likewise for zeros). The
  t-unit threshold is the number of fixed literals plus all quota sizes.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canalization.hpp"
#include "core.hpp"
#include "minimize.hpp"

namespace bnkit
{

enum class fiber_kind
{
  direct,
  input_necessary,
  input_disjunctive,
  output
};

inline const char* to_string( fiber_kind kind )
{
  switch ( kind )
  {
  case fiber_kind::direct:
    return "direct";
  case fiber_kind::input_necessary:
    return "input-necessary";
  case fiber_kind::input_disjunctive:
    return "input-disjunctive";
  case fiber_kind::output:
    return "output";
  }
  return "direct";
}

/*! \brief Index of the s-unit for node `node` in state `state` */
inline constexpr std::size_t s_unit_index( std::size_t node, std::uint8_t state ) { return 2u * node + state; }

struct s_unit
{
  std::size_t node;
  std::uint8_t state;
  bool always_on = false;
};

struct quota
{
  std::size_t required;
};

struct terminal
{
  std::size_t s_unit;
  fiber_kind kind;                  // input_necessary or input_disjunctive
  std::optional<std::size_t> quota; // index into t_unit::quotas for disjunctive terminals
};

struct t_unit
{
  std::size_t node;   // originating automaton
  std::uint8_t state; // output value
  std::size_t schema; // index of the originating schema within the node's redescription
  std::size_t threshold;
  std::vector<terminal> inputs;
  std::vector<quota> quotas;

  std::size_t target() const { return s_unit_index( node, state ); }

  /*! \brief Stable textual id "t<node>_<state>_<schema>" */
  std::string id() const
  {
    return "t" + std::to_string( node ) + "_" + std::to_string( state ) + "_" + std::to_string( schema );
  }
};

/*! \brief A fiber between units; t-unit endpoints refer to positions in the t-unit list */
struct fiber
{
  enum class end
  {
    s_unit,
    t_unit
  };

  end source_type;
  std::size_t source;
  end target_type;
  std::size_t target;
  fiber_kind kind;
  std::optional<std::size_t> merge; // fibers sharing a merge id are alternatives of one disjunction
};

struct dynamics_canalizing_map
{
  std::size_t num_nodes = 0u;
  std::vector<s_unit> s_units;
  std::vector<t_unit> t_units;
  std::vector<fiber> fibers;

  std::size_t count( fiber_kind kind ) const
  {
    return static_cast<std::size_t>( std::count_if( fibers.begin(), fibers.end(), [kind]( const auto& f ) { return f.kind == kind; } ) );
  }
};

/*! \brief The canalizing map of a single node */
using canalizing_map_fragment = dynamics_canalizing_map;

struct dcm_options
{
  /*! \brief Build from wildcard schemata instead of two-symbol schemata */
  bool wildcard_only = false;
};

namespace detail
{

struct dcm_builder
{
  dynamics_canalizing_map& map;
  std::size_t next_merge = 0u;

  void add_schema( const boolean_node& node, std::size_t schema_index, const schema& rep, const std::vector<symbol_group>& groups )
  {
    const auto target = s_unit_index( node.id(), rep.output );
    std::vector<bool> grouped( rep.k, false );
    for ( const auto& g : groups )
    {
      for ( auto p : g.positions )
      {
        grouped[p] = true;
      }
    }

    t_unit unit{ node.id(), rep.output, schema_index, 0u, {}, {} };
    for ( std::size_t t = 0u; t < rep.k; ++t )
    {
      if ( grouped[t] || rep.is_wildcard( t ) )
      {
        continue;
      }
      const auto state = static_cast<std::uint8_t>( rep.literal( t ) == symbol::one ? 1u : 0u );
      unit.inputs.push_back( { s_unit_index( node.inputs()[t], state ), fiber_kind::input_necessary, std::nullopt } );
      ++unit.threshold;
    }
    for ( const auto& g : groups )
    {
      for ( auto [state, required] : { std::pair<std::uint8_t, std::size_t>{ 0u, g.zeros }, { 1u, g.ones } } )
      {
        if ( required == 0u )
        {
          continue;
        }
        const auto q = unit.quotas.size();
        unit.quotas.push_back( { required } );
        for ( auto p : g.positions )
        {
          unit.inputs.push_back( { s_unit_index( node.inputs()[p], state ), fiber_kind::input_disjunctive, q } );
        }
        unit.threshold += required;
      }
    }

    if ( unit.threshold == 0u )
    {
      map.s_units[target].always_on = true;
      return;
    }
    if ( unit.threshold == 1u )
    {
      // one condition: a single necessary literal, or one member of a group
      std::optional<std::size_t> merge;
      if ( unit.inputs.size() > 1u )
      {
        merge = next_merge++;
      }
      for ( const auto& in : unit.inputs )
      {
        map.fibers.push_back( { fiber::end::s_unit, in.s_unit, fiber::end::s_unit, target, fiber_kind::direct, merge } );
      }
      return;
    }

    const auto index = map.t_units.size();
    std::vector<std::optional<std::size_t>> quota_merge( unit.quotas.size() );
    for ( const auto& in : unit.inputs )
    {
      std::optional<std::size_t> merge;
      if ( in.quota )
      {
        if ( !quota_merge[*in.quota] )
        {
          quota_merge[*in.quota] = next_merge++;
        }
        merge = quota_merge[*in.quota];
      }
      map.fibers.push_back( { fiber::end::s_unit, in.s_unit, fiber::end::t_unit, index, in.kind, merge } );
    }
    map.fibers.push_back( { fiber::end::t_unit, index, fiber::end::s_unit, target, fiber_kind::output, std::nullopt } );
    map.t_units.push_back( std::move( unit ) );
  }

  void add_node( const boolean_node& node, const redescription& red, const dcm_options& options )
  {
    if ( options.wildcard_only )
    {
      for ( std::size_t s = 0u; s < red.wildcard.size(); ++s )
      {
        add_schema( node, s, red.wildcard[s], {} );
      }
    }
    else
    {
      for ( std::size_t s = 0u; s < red.two_symbol.size(); ++s )
      {
        add_schema( node, s, red.two_symbol[s].representative, red.two_symbol[s].groups );
      }
    }
  }
};

inline dynamics_canalizing_map empty_map( std::size_t num_nodes )
{
  dynamics_canalizing_map map;
  map.num_nodes = num_nodes;
  map.s_units.reserve( 2u * num_nodes );
  for ( std::size_t i = 0u; i < num_nodes; ++i )
  {
    map.s_units.push_back( { i, 0u, false } );
    map.s_units.push_back( { i, 1u, false } );
  }
  return map;
}

} // namespace detail

/*! \brief Canalizing map of one node within its network

  The fragment carries s-units for every network node so that unit indices
  agree with the network-wide map.
*/
inline canalizing_map_fragment canalizing_map( const boolean_network& net, std::size_t node_id, const redescription& red,
                                               const dcm_options& options = {} )
{
  auto map = detail::empty_map( net.size() );
  detail::dcm_builder builder{ map };
  builder.add_node( net.node( node_id ), red, options );
  return map;
}

inline canalizing_map_fragment canalizing_map( const boolean_network& net, std::size_t node_id, const dcm_options& options = {},
                                               const two_symbol_options& ts_options = {} )
{
  return canalizing_map( net, node_id, redescribe( net.node( node_id ), ts_options ), options );
}

/*! \brief Links the canalizing maps of all nodes over shared s-units */
inline dynamics_canalizing_map build_dcm( const boolean_network& net, const std::vector<redescription>& reds,
                                          const dcm_options& options = {} )
{
  auto map = detail::empty_map( net.size() );
  detail::dcm_builder builder{ map };
  for ( const auto& node : net.nodes() )
  {
    builder.add_node( node, reds.at( node.id() ), options );
  }
  return map;
}

inline dynamics_canalizing_map build_dcm( const boolean_network& net, const dcm_options& options = {},
                                          const two_symbol_options& ts_options = {}, std::size_t threads = 1u )
{
  return build_dcm( net, redescribe( net, ts_options, threads ), options );
}

/*! \brief Whether an s-unit is active in a configuration stored in one word */
inline bool is_active( const s_unit& u, std::uint64_t x ) { return ( ( x >> u.node ) & 1u ) == u.state; }

/*! \brief Whether a t-unit's conditions hold in configuration `x`

  Every necessary terminal must be active and every quota must be met by its
  active disjunctive terminals.
*/
inline bool fires( const dynamics_canalizing_map& map, const t_unit& unit, std::uint64_t x )
{
  std::vector<std::size_t> counts( unit.quotas.size(), 0u );
  for ( const auto& in : unit.inputs )
  {
    const bool active = is_active( map.s_units[in.s_unit], x );
    if ( in.quota )
    {
      counts[*in.quota] += active ? 1u : 0u;
    }
    else if ( !active )
    {
      return false;
    }
  }
  for ( std::size_t q = 0u; q < unit.quotas.size(); ++q )
  {
    if ( counts[q] < unit.quotas[q].required )
    {
      return false;
    }
  }
  return true;
}

} // namespace bnkit
