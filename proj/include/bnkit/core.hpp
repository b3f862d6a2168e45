/*!
  \file core.hpp
  \brief Boolean automata, networks, configurations and the synchronous update
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bnkit
{

/*! \brief Base class of all errors raised by the library */
struct error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct argument_error : error
{
  using error::error;
};

/*! \brief A configured size limit (in-degree, node count, subset budget) was exceeded */
struct capacity_error : error
{
  using error::error;
};

struct lookup_error : error
{
  using error::error;
};

using bit_vector = std::vector<std::uint8_t>;

/*! \brief Largest in-degree for which a look-up table is materialized */
inline constexpr std::size_t lut_max_inputs = 24u;

/*! \brief Row index of an input pattern; input 0 is the most significant position */
inline std::uint64_t pattern_to_row( std::span<const std::uint8_t> pattern )
{
  std::uint64_t row = 0u;
  for ( auto b : pattern )
  {
    if ( b > 1u )
    {
      throw argument_error( "input pattern entries must be 0 or 1" );
    }
    row = ( row << 1u ) | b;
  }
  return row;
}

inline bit_vector row_to_pattern( std::uint64_t row, std::size_t k )
{
  bit_vector pattern( k );
  for ( std::size_t t = 0u; t < k; ++t )
  {
    pattern[t] = static_cast<std::uint8_t>( ( row >> ( k - 1u - t ) ) & 1u );
  }
  return pattern;
}

/*! \brief Pattern of row `row` as a string of k characters, first input first */
inline std::string row_pattern_string( std::uint64_t row, std::size_t k )
{
  std::string s( k, '0' );
  for ( std::size_t t = 0u; t < k; ++t )
  {
    s[t] = ( ( row >> ( k - 1u - t ) ) & 1u ) ? '1' : '0';
  }
  return s;
}

/*! \brief A Boolean automaton defined by its look-up table

  Row `r` of the table holds the output for the input pattern whose binary
  reading (first input most significant) equals `r`.
*/
class boolean_node
{
public:
  boolean_node( std::size_t id, std::string name, std::vector<std::size_t> inputs, bit_vector lut )
      : id_( id ), name_( std::move( name ) ), inputs_( std::move( inputs ) ), lut_( std::move( lut ) )
  {
    if ( inputs_.size() > lut_max_inputs )
    {
      throw capacity_error( "node '" + name_ + "' has " + std::to_string( inputs_.size() ) +
                            " inputs; look-up tables are limited to " + std::to_string( lut_max_inputs ) );
    }
    if ( lut_.size() != ( std::size_t{ 1 } << inputs_.size() ) )
    {
      throw argument_error( "node '" + name_ + "': look-up table has " + std::to_string( lut_.size() ) +
                            " rows, expected 2^" + std::to_string( inputs_.size() ) );
    }
    if ( std::any_of( lut_.begin(), lut_.end(), []( auto v ) { return v > 1u; } ) )
    {
      throw argument_error( "node '" + name_ + "': look-up table entries must be 0 or 1" );
    }
    auto sorted = inputs_;
    std::sort( sorted.begin(), sorted.end() );
    if ( std::adjacent_find( sorted.begin(), sorted.end() ) != sorted.end() )
    {
      throw argument_error( "node '" + name_ + "': duplicate input" );
    }
  }

  std::size_t id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t k() const noexcept { return inputs_.size(); }
  const std::vector<std::size_t>& inputs() const noexcept { return inputs_; }
  const bit_vector& lut() const noexcept { return lut_; }
  std::size_t num_rows() const noexcept { return lut_.size(); }

  std::uint8_t output( std::uint64_t row ) const { return lut_.at( row ); }

  /*! \brief Position of `j` in the input list, if it is an input */
  std::optional<std::size_t> input_position( std::size_t j ) const
  {
    auto it = std::find( inputs_.begin(), inputs_.end(), j );
    if ( it == inputs_.end() )
    {
      return std::nullopt;
    }
    return static_cast<std::size_t>( it - inputs_.begin() );
  }

  bool is_constant() const noexcept
  {
    return std::adjacent_find( lut_.begin(), lut_.end(), std::not_equal_to<>{} ) == lut_.end();
  }

  friend bool operator==( const boolean_node&, const boolean_node& ) = default;

private:
  std::size_t id_;
  std::string name_;
  std::vector<std::size_t> inputs_;
  bit_vector lut_;
};

inline std::uint8_t node_output( const boolean_node& node, std::span<const std::uint8_t> pattern )
{
  if ( pattern.size() != node.k() )
  {
    throw argument_error( "node '" + node.name() + "' expects " + std::to_string( node.k() ) +
                          " input states, got " + std::to_string( pattern.size() ) );
  }
  return node.output( pattern_to_row( pattern ) );
}

/*! \brief A network of Boolean automata; node `i` has id `i` */
class boolean_network
{
public:
  boolean_network() = default;

  explicit boolean_network( std::vector<boolean_node> nodes, std::string name = {} )
      : nodes_( std::move( nodes ) ), name_( std::move( name ) )
  {
    for ( std::size_t i = 0u; i < nodes_.size(); ++i )
    {
      if ( nodes_[i].id() != i )
      {
        throw argument_error( "node at position " + std::to_string( i ) + " has id " + std::to_string( nodes_[i].id() ) );
      }
      for ( auto j : nodes_[i].inputs() )
      {
        if ( j >= nodes_.size() )
        {
          throw argument_error( "node '" + nodes_[i].name() + "' references unknown node " + std::to_string( j ) );
        }
      }
    }
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<boolean_node>& nodes() const noexcept { return nodes_; }
  const boolean_node& node( std::size_t i ) const { return nodes_.at( i ); }

  /*! \brief Interaction edges (j, i) for every input j of node i, ordered by target then input position */
  std::vector<std::pair<std::size_t, std::size_t>> edges() const
  {
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for ( const auto& n : nodes_ )
    {
      for ( auto j : n.inputs() )
      {
        result.emplace_back( j, n.id() );
      }
    }
    return result;
  }

  /*! \brief Out-neighbours of every node in the interaction graph */
  std::vector<std::vector<std::size_t>> successors() const
  {
    std::vector<std::vector<std::size_t>> out( nodes_.size() );
    for ( const auto& n : nodes_ )
    {
      for ( auto j : n.inputs() )
      {
        out[j].push_back( n.id() );
      }
    }
    for ( auto& v : out )
    {
      std::sort( v.begin(), v.end() );
    }
    return out;
  }

  std::optional<std::size_t> find( std::string_view name ) const
  {
    for ( const auto& n : nodes_ )
    {
      if ( n.name() == name )
      {
        return n.id();
      }
    }
    return std::nullopt;
  }

  /*! \brief Resolves a node by name, falling back to a 0-based numeric id */
  std::size_t resolve( std::string_view name_or_id ) const
  {
    if ( auto idx = find( name_or_id ) )
    {
      return *idx;
    }
    if ( !name_or_id.empty() && std::all_of( name_or_id.begin(), name_or_id.end(), []( char c ) { return c >= '0' && c <= '9'; } ) )
    {
      const auto idx = std::stoull( std::string( name_or_id ) );
      if ( idx < nodes_.size() )
      {
        return idx;
      }
    }
    throw lookup_error( "unknown node '" + std::string( name_or_id ) + "'" );
  }

  friend bool operator==( const boolean_network& a, const boolean_network& b ) { return a.nodes_ == b.nodes_; }

private:
  std::vector<boolean_node> nodes_;
  std::string name_;
};

/*! \brief Collective state of a network; bit i is the state of node i

  Node 0 occupies the least-significant bit of the first word.
*/
class configuration
{
public:
  configuration() = default;

  explicit configuration( std::size_t num_nodes, std::uint64_t value = 0u )
      : size_( num_nodes ), words_( ( num_nodes + 63u ) / 64u, 0u )
  {
    if ( num_nodes < 64u && ( value >> num_nodes ) != 0u )
    {
      throw argument_error( "configuration value " + std::to_string( value ) + " does not fit in " +
                            std::to_string( num_nodes ) + " bits" );
    }
    if ( !words_.empty() )
    {
      words_[0] = value;
    }
    else if ( value != 0u )
    {
      throw argument_error( "configuration of an empty network must be 0" );
    }
  }

  std::size_t size() const noexcept { return size_; }

  bool operator[]( std::size_t i ) const { return ( words_[i / 64u] >> ( i % 64u ) ) & 1u; }

  void set( std::size_t i, bool v )
  {
    const auto mask = std::uint64_t{ 1 } << ( i % 64u );
    if ( v )
    {
      words_[i / 64u] |= mask;
    }
    else
    {
      words_[i / 64u] &= ~mask;
    }
  }

  /*! \brief Integer value; only defined for networks of at most 64 nodes */
  std::uint64_t value() const
  {
    if ( size_ > 64u )
    {
      throw capacity_error( "configuration of " + std::to_string( size_ ) + " nodes has no single-word value" );
    }
    return words_.empty() ? 0u : words_[0];
  }

  /*! \brief States as a string, node 0 first */
  std::string to_string() const
  {
    std::string s( size_, '0' );
    for ( std::size_t i = 0u; i < size_; ++i )
    {
      s[i] = ( *this )[i] ? '1' : '0';
    }
    return s;
  }

  friend bool operator==( const configuration&, const configuration& ) = default;

private:
  std::size_t size_ = 0u;
  std::vector<std::uint64_t> words_;
};

inline configuration encode( std::span<const std::uint8_t> states )
{
  configuration c( states.size() );
  for ( std::size_t i = 0u; i < states.size(); ++i )
  {
    if ( states[i] > 1u )
    {
      throw argument_error( "state of node " + std::to_string( i ) + " must be 0 or 1" );
    }
    c.set( i, states[i] != 0u );
  }
  return c;
}

inline bit_vector decode( const configuration& c )
{
  bit_vector states( c.size() );
  for ( std::size_t i = 0u; i < c.size(); ++i )
  {
    states[i] = c[i] ? 1u : 0u;
  }
  return states;
}

inline bit_vector decode( std::uint64_t value, std::size_t num_nodes )
{
  return decode( configuration( num_nodes, value ) );
}

/*! \brief Formats a single-word configuration as a state string, node 0 first */
inline std::string state_string( std::uint64_t value, std::size_t num_nodes )
{
  std::string s( num_nodes, '0' );
  for ( std::size_t i = 0u; i < num_nodes; ++i )
  {
    s[i] = ( ( value >> i ) & 1u ) ? '1' : '0';
  }
  return s;
}

/*! \brief Synchronous update of a configuration stored in one machine word

  Every node reads the same pre-update configuration.
*/
inline std::uint64_t step( const boolean_network& net, std::uint64_t x )
{
  if ( net.size() > 64u )
  {
    throw capacity_error( "single-word update needs at most 64 nodes" );
  }
  std::uint64_t next = 0u;
  for ( const auto& node : net.nodes() )
  {
    std::uint64_t row = 0u;
    for ( auto j : node.inputs() )
    {
      row = ( row << 1u ) | ( ( x >> j ) & 1u );
    }
    next |= static_cast<std::uint64_t>( node.lut()[row] ) << node.id();
  }
  return next;
}

inline configuration step( const boolean_network& net, const configuration& x )
{
  if ( x.size() != net.size() )
  {
    throw argument_error( "configuration has " + std::to_string( x.size() ) + " states, network has " +
                          std::to_string( net.size() ) + " nodes" );
  }
  configuration next( net.size() );
  for ( const auto& node : net.nodes() )
  {
    std::uint64_t row = 0u;
    for ( auto j : node.inputs() )
    {
      row = ( row << 1u ) | ( x[j] ? 1u : 0u );
    }
    next.set( node.id(), node.lut()[row] != 0u );
  }
  return next;
}

} // namespace bnkit
