/*!
  \file canalization.hpp
  \brief Node-level and per-input canalization measures, and the effective graph

  For every look-up table row the measures aggregate over the schemata of the
  row's own output value that cover it:

    k_r = sum over rows of agg(#wildcards) / 2^k
    k_e = k - k_r
    k_s = sum over rows of agg(#position-free marks) / 2^k

  Per-input redundancy r_ji and symmetry s_ji average the indicator "input j
  is a wildcard" (resp. "is position-free") over the covering schemata, then
  over rows; e_ji = 1 - r_ji.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "minimize.hpp"
#include "parallel.hpp"

namespace bnkit
{

enum class aggregation
{
  max,
  mean,
  min
};

inline const char* to_string( aggregation agg )
{
  switch ( agg )
  {
  case aggregation::max:
    return "max";
  case aggregation::mean:
    return "mean";
  case aggregation::min:
    return "min";
  }
  return "max";
}

inline aggregation parse_aggregation( std::string_view s )
{
  if ( s == "max" )
  {
    return aggregation::max;
  }
  if ( s == "mean" || s == "avg" )
  {
    return aggregation::mean;
  }
  if ( s == "min" )
  {
    return aggregation::min;
  }
  throw argument_error( "unknown aggregation '" + std::string( s ) + "' (expected max, mean or min)" );
}

/*! \brief Wildcard and two-symbol schemata of a node with per-row coverage */
struct redescription
{
  std::size_t k = 0u;
  bit_vector outputs;
  std::vector<schema> wildcard;
  std::vector<two_symbol_schema> two_symbol;
  std::vector<std::vector<std::size_t>> wildcard_cover;   // row -> indices into wildcard
  std::vector<std::vector<std::size_t>> two_symbol_cover; // row -> indices into two_symbol

  std::size_t num_rows() const { return outputs.size(); }
};

inline redescription redescribe( const boolean_node& node, const two_symbol_options& options = {} )
{
  redescription red;
  red.k = node.k();
  red.outputs = node.lut();
  red.wildcard = wildcard_schemata( node );
  red.two_symbol = two_symbol_schemata( node, options );
  red.wildcard_cover.resize( node.num_rows() );
  red.two_symbol_cover.resize( node.num_rows() );
  for ( std::uint64_t r = 0u; r < node.num_rows(); ++r )
  {
    for ( std::size_t s = 0u; s < red.wildcard.size(); ++s )
    {
      if ( red.wildcard[s].output == node.output( r ) && covers( red.wildcard[s], r ) )
      {
        red.wildcard_cover[r].push_back( s );
      }
    }
    for ( std::size_t s = 0u; s < red.two_symbol.size(); ++s )
    {
      if ( red.two_symbol[s].output() == node.output( r ) && covers( red.two_symbol[s], r ) )
      {
        red.two_symbol_cover[r].push_back( s );
      }
    }
  }
  return red;
}

namespace detail
{

template<typename Value>
double aggregate_rows( const std::vector<std::vector<std::size_t>>& cover, aggregation agg, Value&& value )
{
  double total = 0.0;
  for ( const auto& row : cover )
  {
    if ( row.empty() )
    {
      continue;
    }
    double acc = agg == aggregation::min ? value( row.front() ) : 0.0;
    for ( auto s : row )
    {
      const double v = value( s );
      switch ( agg )
      {
      case aggregation::max:
        acc = std::max( acc, v );
        break;
      case aggregation::min:
        acc = std::min( acc, v );
        break;
      case aggregation::mean:
        acc += v;
        break;
      }
    }
    if ( agg == aggregation::mean )
    {
      acc /= static_cast<double>( row.size() );
    }
    total += acc;
  }
  return total / static_cast<double>( cover.size() );
}

} // namespace detail

inline double input_redundancy( const redescription& red, aggregation agg = aggregation::max )
{
  return detail::aggregate_rows( red.wildcard_cover, agg,
                                 [&]( std::size_t s ) { return static_cast<double>( red.wildcard[s].num_wildcards() ); } );
}

/*! \brief Input redundancy tallied over the two-symbol schemata instead of the wildcard schemata */
inline double input_redundancy_two_symbol( const redescription& red, aggregation agg = aggregation::max )
{
  return detail::aggregate_rows( red.two_symbol_cover, agg, [&]( std::size_t s ) {
    return static_cast<double>( red.two_symbol[s].representative.num_wildcards() );
  } );
}

inline double effective_connectivity( const redescription& red, aggregation agg = aggregation::max )
{
  return static_cast<double>( red.k ) - input_redundancy( red, agg );
}

inline double input_symmetry( const redescription& red, aggregation agg = aggregation::max )
{
  return detail::aggregate_rows( red.two_symbol_cover, agg, [&]( std::size_t s ) {
    return static_cast<double>( red.two_symbol[s].num_position_free() );
  } );
}

inline double input_redundancy( const boolean_node& node, aggregation agg = aggregation::max )
{
  return input_redundancy( redescribe( node ), agg );
}

inline double effective_connectivity( const boolean_node& node, aggregation agg = aggregation::max )
{
  return effective_connectivity( redescribe( node ), agg );
}

inline double input_symmetry( const boolean_node& node, aggregation agg = aggregation::max,
                              const two_symbol_options& options = {} )
{
  return input_symmetry( redescribe( node, options ), agg );
}

struct node_measures
{
  std::size_t k = 0u;
  double k_r = 0.0;
  double k_e = 0.0;
  double k_s = 0.0;
  // normalized by k; zero for k = 0
  double k_r_norm = 0.0;
  double k_e_norm = 0.0;
  double k_s_norm = 0.0;
};

inline node_measures measure( const redescription& red, aggregation agg = aggregation::max )
{
  node_measures m;
  m.k = red.k;
  m.k_r = input_redundancy( red, agg );
  m.k_e = static_cast<double>( red.k ) - m.k_r;
  m.k_s = input_symmetry( red, agg );
  if ( red.k > 0u )
  {
    const auto k = static_cast<double>( red.k );
    m.k_r_norm = m.k_r / k;
    m.k_e_norm = m.k_e / k;
    m.k_s_norm = m.k_s / k;
  }
  return m;
}

struct edge_measure
{
  double r = 0.0;
  double e = 1.0;
  double s = 0.0;
};

/*! \brief Per-input measures for the input at `position` (always averaged over covering schemata) */
inline edge_measure edge_measures_at( const redescription& red, std::size_t position )
{
  if ( position >= red.k )
  {
    throw argument_error( "input position " + std::to_string( position ) + " out of range for k = " + std::to_string( red.k ) );
  }
  edge_measure m;
  m.r = detail::aggregate_rows( red.wildcard_cover, aggregation::mean, [&]( std::size_t s ) {
    return red.wildcard[s].is_wildcard( position ) ? 1.0 : 0.0;
  } );
  m.e = 1.0 - m.r;
  m.s = detail::aggregate_rows( red.two_symbol_cover, aggregation::mean, [&]( std::size_t s ) {
    return red.two_symbol[s].is_position_free( position ) ? 1.0 : 0.0;
  } );
  return m;
}

inline edge_measure edge_measures( const boolean_node& node, std::size_t j, const two_symbol_options& options = {} )
{
  const auto position = node.input_position( j );
  if ( !position )
  {
    throw argument_error( "node " + std::to_string( j ) + " is not an input of '" + node.name() + "'" );
  }
  return edge_measures_at( redescribe( node, options ), *position );
}

struct weighted_edge
{
  std::size_t source;
  std::size_t target;
  double r;
  double e;
  double s;
};

/*! \brief Interaction graph reweighted by per-input effectiveness */
class effective_graph
{
public:
  effective_graph() = default;

  effective_graph( std::size_t n, std::vector<weighted_edge> edges ) : n_( n ), edges_( std::move( edges ) )
  {
    e_.assign( n * n, 0.0 );
    r_.assign( n * n, 0.0 );
    s_.assign( n * n, 0.0 );
    for ( const auto& ed : edges_ )
    {
      e_[ed.source * n + ed.target] = ed.e;
      r_[ed.source * n + ed.target] = ed.r;
      s_[ed.source * n + ed.target] = ed.s;
    }
  }

  std::size_t size() const noexcept { return n_; }

  /*! \brief Effectiveness of j on i; zero for pairs that are not interaction edges */
  double e( std::size_t j, std::size_t i ) const { return e_.at( j * n_ + i ); }
  double r( std::size_t j, std::size_t i ) const { return r_.at( j * n_ + i ); }
  double s( std::size_t j, std::size_t i ) const { return s_.at( j * n_ + i ); }

  /*! \brief Every interaction edge with its measures, including zero-weight ones */
  const std::vector<weighted_edge>& edges() const noexcept { return edges_; }

  /*! \brief Interaction edges whose input is fully redundant (e = 0) */
  std::vector<weighted_edge> redundant_edges( double tolerance = 1e-12 ) const
  {
    std::vector<weighted_edge> result;
    std::copy_if( edges_.begin(), edges_.end(), std::back_inserter( result ),
                  [tolerance]( const auto& ed ) { return ed.e <= tolerance; } );
    return result;
  }

  /*! \brief Sum of incoming effectiveness of node i */
  double in_strength( std::size_t i ) const
  {
    double total = 0.0;
    for ( std::size_t j = 0u; j < n_; ++j )
    {
      total += e( j, i );
    }
    return total;
  }

private:
  std::size_t n_ = 0u;
  std::vector<weighted_edge> edges_;
  std::vector<double> e_, r_, s_;
};

/*! \brief Redescribes every node of a network, in parallel across nodes */
inline std::vector<redescription> redescribe( const boolean_network& net, const two_symbol_options& options = {},
                                              std::size_t threads = 1u )
{
  std::vector<redescription> result( net.size() );
  parallel_for( net.size(), threads, [&]( std::size_t i ) { result[i] = redescribe( net.node( i ), options ); } );
  return result;
}

inline effective_graph build_effective_graph( const boolean_network& net, const std::vector<redescription>& reds )
{
  std::vector<weighted_edge> edges;
  for ( const auto& node : net.nodes() )
  {
    for ( std::size_t t = 0u; t < node.k(); ++t )
    {
      const auto m = edge_measures_at( reds.at( node.id() ), t );
      edges.push_back( { node.inputs()[t], node.id(), m.r, m.e, m.s } );
    }
  }
  return effective_graph( net.size(), std::move( edges ) );
}

inline effective_graph build_effective_graph( const boolean_network& net, const two_symbol_options& options = {},
                                              std::size_t threads = 1u )
{
  return build_effective_graph( net, redescribe( net, options, threads ) );
}

} // namespace bnkit
