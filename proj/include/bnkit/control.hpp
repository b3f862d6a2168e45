/*!
  \file control.hpp
  \brief Controlled dynamics under driver bit-flips, reachability measures and driver heuristics

  A driver set D adds, from every configuration x, an edge to each x ^ m
  where m is a non-empty subset of the driver bits. Configurations that
  agree outside D are therefore mutually reachable, which lets reachability
  be computed on the quotient graph of these cosets: from x, the reachable
  configurations other than x number 2^|D| * (#cosets reachable from the
  coset of x, itself included) - 1.

  Reachable fractions are normalized by the number of other configurations,
  2^N - 1. With a single attractor the attractor reachability is 1.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "dynamics.hpp"
#include "parallel.hpp"

namespace bnkit
{

/*! \brief Sorted, duplicate-free set of driver node ids */
class driver_set
{
public:
  driver_set() = default;

  explicit driver_set( std::vector<std::size_t> nodes ) : nodes_( std::move( nodes ) )
  {
    std::sort( nodes_.begin(), nodes_.end() );
    nodes_.erase( std::unique( nodes_.begin(), nodes_.end() ), nodes_.end() );
  }

  const std::vector<std::size_t>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  bool contains( std::size_t i ) const { return std::binary_search( nodes_.begin(), nodes_.end(), i ); }

  /*! \brief Driver bits as a configuration mask */
  std::uint64_t mask() const
  {
    std::uint64_t m = 0u;
    for ( auto i : nodes_ )
    {
      m |= std::uint64_t{ 1 } << i;
    }
    return m;
  }

  bool operator==( const driver_set& ) const = default;

private:
  std::vector<std::size_t> nodes_;
};

/*! \brief Validates driver ids against a network */
inline driver_set make_driver_set( const boolean_network& net, std::vector<std::size_t> nodes )
{
  for ( auto i : nodes )
  {
    if ( i >= net.size() )
    {
      throw argument_error( "unknown driver node id " + std::to_string( i ) + " (network has " + std::to_string( net.size() ) +
                            " nodes)" );
    }
  }
  return driver_set( std::move( nodes ) );
}

/*! \brief Resolves driver names (or numeric ids) */
inline driver_set make_driver_set( const boolean_network& net, const std::vector<std::string>& names )
{
  std::vector<std::size_t> ids;
  for ( const auto& n : names )
  {
    ids.push_back( net.resolve( n ) );
  }
  return driver_set( std::move( ids ) );
}

/*! \brief State-transition graph plus driver bit-flip edges, generated on the fly */
class controlled_state_graph
{
public:
  controlled_state_graph( std::shared_ptr<const state_graph> base, driver_set drivers )
      : base_( std::move( base ) ), drivers_( std::move( drivers ) )
  {
    if ( !drivers_.empty() && drivers_.nodes().back() >= base_->num_nodes() )
    {
      throw argument_error( "driver node id " + std::to_string( drivers_.nodes().back() ) + " out of range" );
    }
    mask_ = drivers_.mask();
  }

  const state_graph& base() const noexcept { return *base_; }
  const std::shared_ptr<const state_graph>& shared_base() const noexcept { return base_; }
  const driver_set& drivers() const noexcept { return drivers_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t num_nodes() const noexcept { return base_->num_nodes(); }
  std::uint64_t num_states() const noexcept { return base_->num_states(); }

  /*! \brief Calls fn on the dynamics successor, then on every flip target by increasing flip mask */
  template<typename Fn>
  void foreach_successor( std::uint64_t x, Fn&& fn ) const
  {
    fn( base_->successor( x ) );
    for ( std::uint64_t sub = ( 0u - mask_ ) & mask_; sub != 0u; sub = ( sub - mask_ ) & mask_ )
    {
      fn( x ^ sub );
    }
  }

  /*! \brief Out-edges of x in deterministic order; the first one is the dynamics edge */
  std::vector<std::uint64_t> successors( std::uint64_t x ) const
  {
    std::vector<std::uint64_t> out;
    out.reserve( std::size_t{ 1 } << drivers_.size() );
    foreach_successor( x, [&]( auto y ) { out.push_back( y ); } );
    return out;
  }

private:
  std::shared_ptr<const state_graph> base_;
  driver_set drivers_;
  std::uint64_t mask_ = 0u;
};

inline controlled_state_graph controlled_stg( const boolean_network& net, const driver_set& drivers,
                                              const stg_options& options = {} )
{
  make_driver_set( net, drivers.nodes() );
  return controlled_state_graph( std::make_shared<const state_graph>( state_transition_graph( net, options ) ), drivers );
}

/*! \brief Fraction of other configurations reachable from `x`, by forward traversal */
inline double reachable_fraction( const controlled_state_graph& g, std::uint64_t x )
{
  const auto states = g.num_states();
  if ( x >= states )
  {
    throw argument_error( "configuration " + std::to_string( x ) + " out of range" );
  }
  if ( states == 1u )
  {
    return 1.0;
  }
  std::vector<bool> seen( states, false );
  std::vector<std::uint64_t> stack;
  std::uint64_t count = 0u;
  auto visit = [&]( std::uint64_t y ) {
    if ( !seen[y] )
    {
      seen[y] = true;
      stack.push_back( y );
      if ( y != x )
      {
        ++count;
      }
    }
  };
  g.foreach_successor( x, visit );
  while ( !stack.empty() )
  {
    const auto y = stack.back();
    stack.pop_back();
    g.foreach_successor( y, visit );
  }
  return static_cast<double>( count ) / static_cast<double>( states - 1u );
}

namespace detail
{

/*! \brief Quotient of a controlled graph by "equal outside the driver bits" */
class coset_graph
{
public:
  coset_graph( const state_graph& base, std::uint64_t mask ) : base_( base ), mask_( mask )
  {
    for ( std::size_t i = 0u; i < base.num_nodes(); ++i )
    {
      if ( !( ( mask >> i ) & 1u ) )
      {
        free_.push_back( i );
      }
    }
    num_cosets_ = std::uint64_t{ 1 } << free_.size();
  }

  std::uint64_t num_cosets() const noexcept { return num_cosets_; }
  std::uint64_t coset_size() const noexcept { return base_.num_states() / num_cosets_; }

  std::uint64_t coset_of( std::uint64_t x ) const
  {
    std::uint64_t c = 0u;
    for ( std::size_t b = 0u; b < free_.size(); ++b )
    {
      c |= ( ( x >> free_[b] ) & 1u ) << b;
    }
    return c;
  }

  /*! \brief Smallest member of coset c */
  std::uint64_t base_state( std::uint64_t c ) const
  {
    std::uint64_t x = 0u;
    for ( std::size_t b = 0u; b < free_.size(); ++b )
    {
      x |= ( ( c >> b ) & 1u ) << free_[b];
    }
    return x;
  }

  template<typename Fn>
  void foreach_member( std::uint64_t c, Fn&& fn ) const
  {
    const auto x = base_state( c );
    std::uint64_t sub = 0u;
    do
    {
      fn( x | sub );
      sub = ( sub - mask_ ) & mask_;
    } while ( sub != 0u );
  }

  /*! \brief Distinct cosets entered by dynamics edges out of c, excluding c */
  std::vector<std::uint64_t> out_cosets( std::uint64_t c ) const
  {
    std::vector<std::uint64_t> out;
    foreach_member( c, [&]( std::uint64_t x ) {
      const auto d = coset_of( base_.successor( x ) );
      if ( d != c )
      {
        out.push_back( d );
      }
    } );
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
    return out;
  }

private:
  const state_graph& base_;
  std::uint64_t mask_;
  std::vector<std::size_t> free_;
  std::uint64_t num_cosets_ = 1u;
};

/*! \brief Strongly connected components; component ids are in reverse topological order (sinks first) */
struct scc_result
{
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0u;
};

template<typename Successors>
scc_result strongly_connected_components( std::uint64_t n, Successors&& successors )
{
  constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
  scc_result result;
  result.component.assign( n, none );
  std::vector<std::uint32_t> index( n, none ), low( n, 0u );
  std::vector<bool> on_stack( n, false );
  std::vector<std::uint64_t> stack;
  struct frame
  {
    std::uint64_t v;
    std::vector<std::uint64_t> succ;
    std::size_t next;
  };
  std::vector<frame> call;
  std::uint32_t counter = 0u;

  for ( std::uint64_t root = 0u; root < n; ++root )
  {
    if ( index[root] != none )
    {
      continue;
    }
    auto enter = [&]( std::uint64_t v ) {
      index[v] = low[v] = counter++;
      stack.push_back( v );
      on_stack[v] = true;
      call.push_back( { v, successors( v ), 0u } );
    };
    enter( root );
    while ( !call.empty() )
    {
      auto& f = call.back();
      if ( f.next < f.succ.size() )
      {
        const auto w = f.succ[f.next++];
        if ( index[w] == none )
        {
          enter( w );
        }
        else if ( on_stack[w] )
        {
          low[f.v] = std::min( low[f.v], index[w] );
        }
        continue;
      }
      const auto v = f.v;
      if ( low[v] == index[v] )
      {
        std::uint64_t w;
        do
        {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = result.count;
        } while ( w != v );
        ++result.count;
      }
      call.pop_back();
      if ( !call.empty() )
      {
        low[call.back().v] = std::min( low[call.back().v], low[v] );
      }
    }
  }
  return result;
}

/*! \brief Largest condensation handled by the dense bitset closure */
inline constexpr std::uint64_t dense_closure_limit = std::uint64_t{ 1 } << 15;

/*! \brief For every coset, the number of cosets reachable from it (itself included) */
inline std::vector<std::uint64_t> reachable_coset_counts( const state_graph& base, std::uint64_t mask, std::size_t threads )
{
  coset_graph cg( base, mask );
  const auto n = cg.num_cosets();

  if ( mask == 0u )
  {
    // functional graph: reach(x) = 1 + reach(succ(x)) off cycles, cycle length on cycles
    std::vector<std::uint64_t> reach( n, 0u );
    std::vector<std::uint64_t> path;
    std::vector<bool> on_path( n, false );
    for ( std::uint64_t s = 0u; s < n; ++s )
    {
      if ( reach[s] != 0u )
      {
        continue;
      }
      path.clear();
      auto x = s;
      while ( reach[x] == 0u && !on_path[x] )
      {
        on_path[x] = true;
        path.push_back( x );
        x = base.successor( x );
      }
      auto end = path.size();
      if ( reach[x] == 0u )
      {
        const auto start = static_cast<std::size_t>( std::find( path.begin(), path.end(), x ) - path.begin() );
        const auto len = path.size() - start;
        for ( auto i = start; i < path.size(); ++i )
        {
          reach[path[i]] = len;
        }
        end = start;
      }
      for ( auto i = end; i-- > 0u; )
      {
        reach[path[i]] = 1u + reach[base.successor( path[i] )];
      }
      for ( auto p : path )
      {
        on_path[p] = false;
      }
    }
    return reach;
  }

  auto scc = strongly_connected_components( n, [&]( std::uint64_t c ) { return cg.out_cosets( c ); } );
  const auto m = scc.count;
  std::vector<std::uint64_t> size( m, 0u );
  std::vector<std::vector<std::uint32_t>> dag( m );
  for ( std::uint64_t c = 0u; c < n; ++c )
  {
    const auto a = scc.component[c];
    ++size[a];
    for ( auto d : cg.out_cosets( c ) )
    {
      if ( scc.component[d] != a )
      {
        dag[a].push_back( scc.component[d] );
      }
    }
  }
  for ( auto& out : dag )
  {
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
  }

  std::vector<std::uint64_t> comp_reach( m, 0u );
  if ( m <= dense_closure_limit )
  {
    // successors of a component have smaller ids, so one increasing sweep closes the relation
    const std::size_t words = ( m + 63u ) / 64u;
    std::vector<std::uint64_t> bits( static_cast<std::size_t>( m ) * words, 0u );
    for ( std::uint32_t a = 0u; a < m; ++a )
    {
      auto* row = &bits[static_cast<std::size_t>( a ) * words];
      row[a / 64u] |= std::uint64_t{ 1 } << ( a % 64u );
      for ( auto b : dag[a] )
      {
        const auto* other = &bits[static_cast<std::size_t>( b ) * words];
        for ( std::size_t w = 0u; w <= b / 64u; ++w )
        {
          row[w] |= other[w];
        }
      }
      std::uint64_t total = 0u;
      for ( std::size_t w = 0u; w <= a / 64u; ++w )
      {
        for ( auto word = row[w]; word != 0u; word &= word - 1u )
        {
          total += size[w * 64u + static_cast<std::size_t>( std::countr_zero( word ) )];
        }
      }
      comp_reach[a] = total;
    }
  }
  else
  {
    parallel_for( m, threads, [&]( std::size_t a ) {
      std::vector<bool> seen( m, false );
      std::vector<std::uint32_t> stack{ static_cast<std::uint32_t>( a ) };
      seen[a] = true;
      std::uint64_t total = 0u;
      while ( !stack.empty() )
      {
        const auto v = stack.back();
        stack.pop_back();
        total += size[v];
        for ( auto w : dag[v] )
        {
          if ( !seen[w] )
          {
            seen[w] = true;
            stack.push_back( w );
          }
        }
      }
      comp_reach[a] = total;
    } );
  }

  std::vector<std::uint64_t> reach( n );
  for ( std::uint64_t c = 0u; c < n; ++c )
  {
    reach[c] = comp_reach[scc.component[c]];
  }
  return reach;
}

inline double mean_reachable( const state_graph& base, std::uint64_t mask, std::size_t threads )
{
  const auto states = base.num_states();
  if ( states == 1u )
  {
    return 1.0;
  }
  const auto reach = reachable_coset_counts( base, mask, threads );
  const auto coset = states / reach.size();
  long double total = 0.0L;
  for ( auto r : reach )
  {
    total += static_cast<long double>( coset * r - 1u );
  }
  total *= static_cast<long double>( coset );
  return static_cast<double>( total / ( static_cast<long double>( states ) * static_cast<long double>( states - 1u ) ) );
}

} // namespace detail

/*! \brief Mean reachable fraction over all configurations */
inline double mean_reachable( const controlled_state_graph& g, std::size_t threads = 1u )
{
  return detail::mean_reachable( g.base(), g.mask(), threads );
}

inline double mean_reachable( const boolean_network& net, const driver_set& drivers, const stg_options& options = {} )
{
  return mean_reachable( controlled_stg( net, drivers, options ), options.threads );
}

/*! \brief Mean reachable fraction computed by one forward traversal per configuration */
inline double mean_reachable_by_traversal( const controlled_state_graph& g, std::size_t threads = 1u )
{
  std::vector<double> r( g.num_states() );
  parallel_for( r.size(), threads, [&]( std::size_t x ) { r[x] = reachable_fraction( g, x ); }, 64u );
  return std::accumulate( r.begin(), r.end(), 0.0L ) / static_cast<long double>( r.size() );
}

/*! \brief Reachability gained by control: mean reachable with D minus mean reachable without drivers */
inline double mean_controlled( const controlled_state_graph& g, std::size_t threads = 1u )
{
  return mean_reachable( g, threads ) - detail::mean_reachable( g.base(), 0u, threads );
}

inline double mean_controlled( const boolean_network& net, const driver_set& drivers, const stg_options& options = {} )
{
  return mean_controlled( controlled_stg( net, drivers, options ), options.threads );
}

/*! \brief Whether the controlled graph is strongly connected (forward and backward search from configuration 0) */
inline bool is_fully_controllable( const controlled_state_graph& g )
{
  const auto states = g.num_states();
  std::vector<std::uint64_t> offset( states + 1u, 0u );
  for ( std::uint64_t x = 0u; x < states; ++x )
  {
    ++offset[g.base().successor( x ) + 1u];
  }
  std::partial_sum( offset.begin(), offset.end(), offset.begin() );
  std::vector<std::uint64_t> pred( states );
  {
    auto fill = offset;
    for ( std::uint64_t x = 0u; x < states; ++x )
    {
      pred[fill[g.base().successor( x )]++] = x;
    }
  }

  auto covers_all = [&]( auto&& neighbors ) {
    std::vector<bool> seen( states, false );
    std::vector<std::uint64_t> stack{ 0u };
    seen[0] = true;
    std::uint64_t count = 1u;
    while ( !stack.empty() )
    {
      const auto x = stack.back();
      stack.pop_back();
      neighbors( x, [&]( std::uint64_t y ) {
        if ( !seen[y] )
        {
          seen[y] = true;
          ++count;
          stack.push_back( y );
        }
      } );
    }
    return count == states;
  };

  const auto mask = g.mask();
  auto flips = [mask]( std::uint64_t x, auto&& fn ) {
    for ( std::uint64_t sub = ( 0u - mask ) & mask; sub != 0u; sub = ( sub - mask ) & mask )
    {
      fn( x ^ sub );
    }
  };
  const bool forward = covers_all( [&]( std::uint64_t x, auto&& fn ) { g.foreach_successor( x, fn ); } );
  if ( !forward )
  {
    return false;
  }
  return covers_all( [&]( std::uint64_t x, auto&& fn ) {
    for ( auto p = offset[x]; p < offset[x + 1u]; ++p )
    {
      fn( pred[p] );
    }
    flips( x, fn );
  } );
}

inline bool is_fully_controllable( const boolean_network& net, const driver_set& drivers, const stg_options& options = {} )
{
  return is_fully_controllable( controlled_stg( net, drivers, options ) );
}

/*! \brief Attractors linked when some member of the target is reachable from some member of the source */
struct controlled_attractor_graph
{
  std::vector<attractor> attractors;
  std::vector<std::pair<std::size_t, std::size_t>> edges; // (from, to), sorted, no self loops

  bool has_edge( std::size_t from, std::size_t to ) const
  {
    return std::binary_search( edges.begin(), edges.end(), std::pair{ from, to } );
  }

  std::size_t out_degree( std::size_t from ) const
  {
    return static_cast<std::size_t>(
        std::count_if( edges.begin(), edges.end(), [from]( const auto& e ) { return e.first == from; } ) );
  }
};

namespace detail
{

inline controlled_attractor_graph attractor_graph( const state_graph& base, std::uint64_t mask, std::vector<attractor> atts,
                                                   std::size_t threads )
{
  coset_graph cg( base, mask );
  controlled_attractor_graph cag;
  const auto count = atts.size();
  std::vector<std::vector<std::size_t>> targets( count );
  parallel_for( count, threads, [&]( std::size_t k ) {
    std::vector<bool> seen( cg.num_cosets(), false );
    std::vector<std::uint64_t> stack;
    for ( auto x : atts[k].states )
    {
      const auto c = cg.coset_of( x );
      if ( !seen[c] )
      {
        seen[c] = true;
        stack.push_back( c );
      }
    }
    while ( !stack.empty() )
    {
      const auto c = stack.back();
      stack.pop_back();
      for ( auto d : cg.out_cosets( c ) )
      {
        if ( !seen[d] )
        {
          seen[d] = true;
          stack.push_back( d );
        }
      }
    }
    for ( std::size_t g = 0u; g < count; ++g )
    {
      if ( g != k && std::any_of( atts[g].states.begin(), atts[g].states.end(), [&]( auto x ) { return seen[cg.coset_of( x )]; } ) )
      {
        targets[k].push_back( g );
      }
    }
  } );
  for ( std::size_t k = 0u; k < count; ++k )
  {
    for ( auto g : targets[k] )
    {
      cag.edges.emplace_back( k, g );
    }
  }
  cag.attractors = std::move( atts );
  return cag;
}

inline double mean_reachable_attractors( const controlled_attractor_graph& cag )
{
  const auto count = cag.attractors.size();
  if ( count <= 1u )
  {
    return 1.0;
  }
  return static_cast<double>( cag.edges.size() ) / static_cast<double>( count * ( count - 1u ) );
}

} // namespace detail

inline controlled_attractor_graph make_controlled_attractor_graph( const controlled_state_graph& g, std::size_t threads = 1u )
{
  return detail::attractor_graph( g.base(), g.mask(), attractors( g.base() ), threads );
}

inline controlled_attractor_graph make_controlled_attractor_graph( const boolean_network& net, const driver_set& drivers,
                                                                   const stg_options& options = {} )
{
  return make_controlled_attractor_graph( controlled_stg( net, drivers, options ), options.threads );
}

/*! \brief Mean over attractors of the fraction of other attractors reachable */
inline double mean_reachable_attractors( const controlled_attractor_graph& cag )
{
  return detail::mean_reachable_attractors( cag );
}

inline double mean_reachable_attractors( const boolean_network& net, const driver_set& drivers, const stg_options& options = {} )
{
  return mean_reachable_attractors( make_controlled_attractor_graph( net, drivers, options ) );
}

enum class control_metric
{
  reach,
  attractors
};

inline const char* to_string( control_metric m ) { return m == control_metric::reach ? "reach" : "attractors"; }

inline control_metric parse_control_metric( std::string_view s )
{
  if ( s == "reach" )
  {
    return control_metric::reach;
  }
  if ( s == "attractors" )
  {
    return control_metric::attractors;
  }
  throw argument_error( "unknown metric '" + std::string( s ) + "' (expected reach or attractors)" );
}

struct driver_search_options
{
  std::size_t max_size = 1u;
  control_metric metric = control_metric::reach;
  std::uint64_t budget = 1'000'000u;
  std::uint64_t warn_above = 100'000u;
  std::size_t threads = 1u;
  std::size_t max_nodes = default_max_nodes;
};

struct driver_score
{
  driver_set drivers;
  double score;
};

struct driver_search_result
{
  std::vector<driver_score> ranked; // best first, ties in lexicographic order of the node lists
  std::uint64_t evaluated = 0u;
  bool large = false; // more subsets than the warning threshold
};

/*! \brief Number of subsets of size <= max_size, saturated at the numeric limit */
inline std::uint64_t count_subsets( std::size_t n, std::size_t max_size )
{
  std::uint64_t total = 0u, binom = 1u;
  constexpr auto limit = std::numeric_limits<std::uint64_t>::max();
  for ( std::size_t s = 0u; s <= std::min( n, max_size ); ++s )
  {
    if ( s > 0u )
    {
      // binom(n, s) = binom(n, s - 1) * (n - s + 1) / s
      const std::uint64_t factor = n - s + 1u;
      if ( binom > limit / factor )
      {
        return limit;
      }
      binom = binom * factor / s;
    }
    if ( total > limit - binom )
    {
      return limit;
    }
    total += binom;
  }
  return total;
}

/*! \brief Scores every driver subset up to a size and ranks them */
inline driver_search_result driver_search( const boolean_network& net, const driver_search_options& options )
{
  driver_search_result result;
  const auto total = count_subsets( net.size(), options.max_size );
  if ( total > options.budget )
  {
    throw capacity_error( "driver search over " + std::to_string( total ) + " subsets exceeds the budget of " +
                          std::to_string( options.budget ) );
  }
  result.large = total > options.warn_above;

  const auto base = state_transition_graph( net, { options.max_nodes, options.threads } );
  std::vector<attractor> atts;
  if ( options.metric == control_metric::attractors )
  {
    atts = attractors( base );
  }

  std::vector<std::vector<std::size_t>> subsets;
  subsets.reserve( total );
  for ( std::size_t s = 0u; s <= std::min( net.size(), options.max_size ); ++s )
  {
    std::vector<std::size_t> combo( s );
    std::iota( combo.begin(), combo.end(), 0u );
    while ( true )
    {
      subsets.push_back( combo );
      std::size_t i = s;
      while ( i > 0u && combo[i - 1u] == net.size() - s + i - 1u )
      {
        --i;
      }
      if ( i == 0u )
      {
        break;
      }
      ++combo[i - 1u];
      for ( auto j = i; j < s; ++j )
      {
        combo[j] = combo[j - 1u] + 1u;
      }
    }
  }

  std::vector<double> score( subsets.size() );
  parallel_for( subsets.size(), options.threads, [&]( std::size_t i ) {
    const auto mask = driver_set( subsets[i] ).mask();
    if ( options.metric == control_metric::reach )
    {
      score[i] = detail::mean_reachable( base, mask, 1u );
    }
    else
    {
      score[i] = detail::mean_reachable_attractors( detail::attractor_graph( base, mask, atts, 1u ) );
    }
  } );

  std::vector<std::size_t> order( subsets.size() );
  std::iota( order.begin(), order.end(), 0u );
  std::sort( order.begin(), order.end(), [&]( auto a, auto b ) {
    if ( score[a] != score[b] )
    {
      return score[a] > score[b];
    }
    return subsets[a] < subsets[b];
  } );
  for ( auto i : order )
  {
    result.ranked.push_back( { driver_set( subsets[i] ), score[i] } );
  }
  result.evaluated = subsets.size();
  return result;
}

/*! \brief Drivers from a maximum matching of the interaction graph

  Edges j -> i (j is an input of i) are matched from out-copies to in-copies;
  nodes whose in-copy stays unmatched are drivers. A perfect matching still
  needs one driver, the lowest id.
*/
inline driver_set sc_drivers( const boolean_network& net )
{
  const auto n = net.size();
  if ( n == 0u )
  {
    return {};
  }
  const auto out = net.successors();
  std::vector<std::size_t> match_in( n, n ); // in-copy i -> matched out-copy
  std::vector<std::size_t> visited( n, n );

  std::function<bool( std::size_t, std::size_t )> augment = [&]( std::size_t j, std::size_t round ) {
    for ( auto i : out[j] )
    {
      if ( visited[i] == round )
      {
        continue;
      }
      visited[i] = round;
      if ( match_in[i] == n || augment( match_in[i], round ) )
      {
        match_in[i] = j;
        return true;
      }
    }
    return false;
  };
  for ( std::size_t j = 0u; j < n; ++j )
  {
    augment( j, j );
  }

  std::vector<std::size_t> drivers;
  for ( std::size_t i = 0u; i < n; ++i )
  {
    if ( match_in[i] == n )
    {
      drivers.push_back( i );
    }
  }
  if ( drivers.empty() )
  {
    drivers.push_back( 0u );
  }
  return driver_set( std::move( drivers ) );
}

/*! \brief Whether every node is in S or has an input in S */
inline bool is_dominating_set( const boolean_network& net, const driver_set& s )
{
  for ( const auto& node : net.nodes() )
  {
    if ( s.contains( node.id() ) )
    {
      continue;
    }
    if ( std::none_of( node.inputs().begin(), node.inputs().end(), [&]( auto j ) { return s.contains( j ); } ) )
    {
      return false;
    }
  }
  return true;
}

inline constexpr std::size_t exact_mds_max_nodes = 20u;

/*! \brief Dominating set: greedy by newly covered nodes, or exhaustive minimum for small networks */
inline driver_set mds_drivers( const boolean_network& net, bool exact = false )
{
  const auto n = net.size();
  const auto out = net.successors();
  if ( exact )
  {
    if ( n > exact_mds_max_nodes )
    {
      throw capacity_error( "exact dominating set search needs N <= " + std::to_string( exact_mds_max_nodes ) +
                            ", network has N = " + std::to_string( n ) );
    }
    std::vector<std::uint32_t> cover( n );
    for ( std::size_t v = 0u; v < n; ++v )
    {
      cover[v] = 1u << v;
      for ( auto w : out[v] )
      {
        cover[v] |= 1u << w;
      }
    }
    const std::uint32_t all = n == 0u ? 0u : static_cast<std::uint32_t>( ( std::uint64_t{ 1 } << n ) - 1u );
    for ( std::size_t s = 0u; s <= n; ++s )
    {
      std::vector<std::size_t> combo( s );
      std::iota( combo.begin(), combo.end(), 0u );
      while ( true )
      {
        std::uint32_t covered = 0u;
        for ( auto v : combo )
        {
          covered |= cover[v];
        }
        if ( covered == all )
        {
          return driver_set( combo );
        }
        std::size_t i = s;
        while ( i > 0u && combo[i - 1u] == n - s + i - 1u )
        {
          --i;
        }
        if ( i == 0u )
        {
          break;
        }
        ++combo[i - 1u];
        for ( auto j = i; j < s; ++j )
        {
          combo[j] = combo[j - 1u] + 1u;
        }
      }
    }
    return {};
  }

  std::vector<bool> covered( n, false );
  std::size_t remaining = n;
  std::vector<std::size_t> chosen;
  while ( remaining > 0u )
  {
    std::size_t best = n, best_gain = 0u;
    for ( std::size_t v = 0u; v < n; ++v )
    {
      std::size_t gain = covered[v] ? 0u : 1u;
      for ( auto w : out[v] )
      {
        gain += ( w != v && !covered[w] ) ? 1u : 0u;
      }
      if ( gain > best_gain )
      {
        best = v;
        best_gain = gain;
      }
    }
    chosen.push_back( best );
    auto mark = [&]( std::size_t w ) {
      if ( !covered[w] )
      {
        covered[w] = true;
        --remaining;
      }
    };
    mark( best );
    for ( auto w : out[best] )
    {
      mark( w );
    }
  }
  return driver_set( std::move( chosen ) );
}

} // namespace bnkit
