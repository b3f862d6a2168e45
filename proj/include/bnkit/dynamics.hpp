/*!
  \file dynamics.hpp
  \brief Exhaustive synchronous dynamics: state-transition graph, attractors, basins, trajectories

  Configurations are stored as words with node 0 in the least significant
  bit, so the state space of N nodes is [0, 2^N).
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "parallel.hpp"

namespace bnkit
{

/*! \brief Default limit on the number of nodes for exhaustive state-space methods */
inline constexpr std::size_t default_max_nodes = 25u;

/*! \brief Hard limit imposed by the 32-bit successor storage */
inline constexpr std::size_t hard_max_nodes = 32u;

struct stg_options
{
  std::size_t max_nodes = default_max_nodes;
  std::size_t threads = 1u;
};

/*! \brief State-transition graph: the unique successor of every configuration */
class state_graph
{
public:
  state_graph() = default;

  state_graph( std::size_t num_nodes, std::vector<std::uint32_t> successors )
      : n_( num_nodes ), succ_( std::move( successors ) )
  {
    if ( succ_.size() != ( std::size_t{ 1 } << n_ ) )
    {
      throw argument_error( "successor array has the wrong size for " + std::to_string( n_ ) + " nodes" );
    }
  }

  std::size_t num_nodes() const noexcept { return n_; }
  std::uint64_t num_states() const noexcept { return succ_.size(); }

  std::uint64_t successor( std::uint64_t x ) const { return succ_[x]; }

  const std::vector<std::uint32_t>& successors() const noexcept { return succ_; }

  bool operator==( const state_graph& ) const = default;

private:
  std::size_t n_ = 0u;
  std::vector<std::uint32_t> succ_;
};

namespace detail
{

inline void check_state_space( std::size_t n, std::size_t max_nodes )
{
  const auto limit = std::min( max_nodes, hard_max_nodes );
  if ( n > limit )
  {
    throw capacity_error( "exhaustive state space needs N <= " + std::to_string( limit ) + ", network has N = " +
                          std::to_string( n ) );
  }
}

} // namespace detail

/*! \brief Builds the state-transition graph by evaluating every configuration */
inline state_graph state_transition_graph( const boolean_network& net, const stg_options& options = {} )
{
  detail::check_state_space( net.size(), options.max_nodes );
  const std::uint64_t states = std::uint64_t{ 1 } << net.size();
  std::vector<std::uint32_t> succ( states );
  constexpr std::uint64_t chunk = 1u << 12;
  const auto chunks = static_cast<std::size_t>( ( states + chunk - 1u ) / chunk );
  parallel_for( chunks, options.threads, [&]( std::size_t c ) {
    const auto end = std::min( states, ( c + 1u ) * chunk );
    for ( std::uint64_t x = c * chunk; x < end; ++x )
    {
      succ[x] = static_cast<std::uint32_t>( step( net, x ) );
    }
  } );
  return state_graph( net.size(), std::move( succ ) );
}

struct attractor
{
  std::vector<std::uint64_t> states; // cycle order, starting at the smallest configuration
  std::uint64_t basin_size = 0u;

  std::size_t period() const noexcept { return states.size(); }
  std::uint64_t representative() const { return states.front(); }
  bool is_fixed_point() const noexcept { return states.size() == 1u; }
};

/*! \brief Attractors with the attractor index reached from every configuration */
struct attractor_landscape
{
  std::vector<attractor> attractors;
  std::vector<std::uint32_t> basin_of;
};

/*! \brief Single coloring pass over the successor array */
inline attractor_landscape attractor_landscape_of( const state_graph& stg )
{
  constexpr std::uint32_t unvisited = 0xffffffffu;
  constexpr std::uint32_t on_path = 0xfffffffeu;

  const auto states = stg.num_states();
  std::vector<std::uint32_t> label( states, unvisited );
  std::vector<attractor> found;
  std::vector<std::uint64_t> path;

  for ( std::uint64_t s = 0u; s < states; ++s )
  {
    if ( label[s] != unvisited )
    {
      continue;
    }
    path.clear();
    auto x = s;
    while ( label[x] == unvisited )
    {
      label[x] = on_path;
      path.push_back( x );
      x = stg.successor( x );
    }
    std::uint32_t id;
    if ( label[x] == on_path )
    {
      id = static_cast<std::uint32_t>( found.size() );
      const auto start = std::find( path.begin(), path.end(), x );
      attractor a;
      a.states.assign( start, path.end() );
      std::rotate( a.states.begin(), std::min_element( a.states.begin(), a.states.end() ), a.states.end() );
      found.push_back( std::move( a ) );
    }
    else
    {
      id = label[x];
    }
    for ( auto p : path )
    {
      label[p] = id;
    }
    found[id].basin_size += path.size();
  }

  std::vector<std::uint32_t> order( found.size() );
  for ( std::uint32_t i = 0u; i < order.size(); ++i )
  {
    order[i] = i;
  }
  std::sort( order.begin(), order.end(),
             [&]( auto a, auto b ) { return found[a].representative() < found[b].representative(); } );
  std::vector<std::uint32_t> rank( found.size() );
  attractor_landscape result;
  result.attractors.reserve( found.size() );
  for ( std::uint32_t i = 0u; i < order.size(); ++i )
  {
    rank[order[i]] = i;
    result.attractors.push_back( std::move( found[order[i]] ) );
  }
  for ( auto& l : label )
  {
    l = rank[l];
  }
  result.basin_of = std::move( label );
  return result;
}

/*! \brief All attractors, each rotated to its smallest configuration and sorted by it */
inline std::vector<attractor> attractors( const state_graph& stg )
{
  return attractor_landscape_of( stg ).attractors;
}

inline std::vector<attractor> attractors( const boolean_network& net, const stg_options& options = {} )
{
  return attractors( state_transition_graph( net, options ) );
}

/*! \brief Whether `a` is a cycle of `stg` given in cycle order */
inline bool is_attractor_of( const state_graph& stg, const attractor& a )
{
  if ( a.states.empty() )
  {
    return false;
  }
  for ( std::size_t i = 0u; i < a.states.size(); ++i )
  {
    if ( a.states[i] >= stg.num_states() || stg.successor( a.states[i] ) != a.states[( i + 1u ) % a.states.size()] )
    {
      return false;
    }
  }
  return true;
}

/*! \brief Configurations whose trajectories end in `a`, in increasing order */
inline std::vector<std::uint64_t> basin( const state_graph& stg, const attractor& a )
{
  if ( !is_attractor_of( stg, a ) )
  {
    throw argument_error( "the given cycle is not an attractor of this network" );
  }
  const auto landscape = attractor_landscape_of( stg );
  const auto it = std::find_if( landscape.attractors.begin(), landscape.attractors.end(),
                                [&]( const auto& b ) { return b.representative() == *std::min_element( a.states.begin(), a.states.end() ); } );
  const auto id = static_cast<std::uint32_t>( it - landscape.attractors.begin() );
  std::vector<std::uint64_t> result;
  for ( std::uint64_t x = 0u; x < stg.num_states(); ++x )
  {
    if ( landscape.basin_of[x] == id )
    {
      result.push_back( x );
    }
  }
  return result;
}

inline std::vector<std::uint64_t> basin( const boolean_network& net, const attractor& a, const stg_options& options = {} )
{
  return basin( state_transition_graph( net, options ), a );
}

/*! \brief A simulated path: transient states followed by one pass through the cycle */
struct trajectory_result
{
  std::vector<configuration> states;
  std::optional<std::size_t> cycle_start; // index of the first cycle state; empty if the step budget ran out
};

/*! \brief Iterates from `x0` until a configuration repeats or `max_steps` updates were made */
inline trajectory_result trajectory( const boolean_network& net, const configuration& x0, std::size_t max_steps )
{
  if ( x0.size() != net.size() )
  {
    throw argument_error( "initial configuration has " + std::to_string( x0.size() ) + " nodes, network has " +
                          std::to_string( net.size() ) );
  }
  trajectory_result result;
  std::map<std::string, std::size_t> seen;
  auto x = x0;
  for ( std::size_t t = 0u;; ++t )
  {
    auto [it, fresh] = seen.emplace( x.to_string(), result.states.size() );
    if ( !fresh )
    {
      result.cycle_start = it->second;
      break;
    }
    result.states.push_back( x );
    if ( t == max_steps )
    {
      break;
    }
    x = step( net, x );
  }
  return result;
}

inline trajectory_result trajectory( const boolean_network& net, std::uint64_t x0, std::size_t max_steps )
{
  return trajectory( net, configuration( net.size(), x0 ), max_steps );
}

} // namespace bnkit
