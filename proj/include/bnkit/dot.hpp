/*!
  \file dot.hpp
  \brief Graphviz DOT export of interaction, effective, canalizing-map, state and attractor graphs
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "canalization.hpp"
#include "control.hpp"
#include "core.hpp"
#include "dcm.hpp"
#include "dynamics.hpp"

namespace bnkit
{

namespace detail
{

inline std::string dot_quote( std::string_view s )
{
  std::string out = "\"";
  for ( auto c : s )
  {
    if ( c == '"' || c == '\\' )
    {
      out += '\\';
    }
    if ( c == '\n' )
    {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

inline std::string format_weight( double w )
{
  char buf[32];
  std::snprintf( buf, sizeof( buf ), "%.12g", w );
  return buf;
}

/*! \brief Accumulates statements; an empty body renders as "digraph { }" */
class dot_writer
{
public:
  explicit dot_writer( std::string name ) : name_( std::move( name ) ) {}

  void line( std::string stmt ) { body_.push_back( std::move( stmt ) ); }

  std::string str() const
  {
    if ( body_.empty() )
    {
      return "digraph { }\n";
    }
    std::string out = "digraph " + dot_quote( name_ ) + " {\n";
    for ( const auto& s : body_ )
    {
      out += "  " + s + ";\n";
    }
    return out + "}\n";
  }

private:
  std::string name_;
  std::vector<std::string> body_;
};

inline std::string node_key( std::size_t i ) { return "n" + std::to_string( i ); }

} // namespace detail

/*! \brief Interaction graph: an edge j -> i for every input j of node i */
inline std::string export_dot( const boolean_network& net )
{
  detail::dot_writer w( net.name().empty() ? "interaction" : net.name() );
  for ( const auto& node : net.nodes() )
  {
    w.line( detail::node_key( node.id() ) + " [label=" + detail::dot_quote( node.name() ) + "]" );
  }
  for ( auto [j, i] : net.edges() )
  {
    w.line( detail::node_key( j ) + " -> " + detail::node_key( i ) );
  }
  return w.str();
}

/*! \brief Effective graph: zero-weight edges are dropped, others carry weight and label e_ji */
inline std::string export_dot( const boolean_network& net, const effective_graph& eg, double tolerance = 1e-12 )
{
  detail::dot_writer w( net.name().empty() ? "effective" : net.name() );
  for ( const auto& node : net.nodes() )
  {
    w.line( detail::node_key( node.id() ) + " [label=" + detail::dot_quote( node.name() ) + "]" );
  }
  for ( const auto& e : eg.edges() )
  {
    if ( e.e <= tolerance )
    {
      continue;
    }
    const auto weight = detail::format_weight( e.e );
    w.line( detail::node_key( e.source ) + " -> " + detail::node_key( e.target ) + " [weight=" + weight + ", label=\"" + weight +
            "\", penwidth=" + detail::format_weight( 0.5 + 2.5 * e.e ) + "]" );
  }
  return w.str();
}

/*! \brief Canalizing map: s-units as circles (white for 0, black for 1), t-units as diamonds labelled by threshold

  Fibers that are alternatives of one disjunction share a `samehead` port.
  Only s-units that take part in some fiber, or are always on, are drawn.
*/
inline std::string export_dot( const boolean_network& net, const dynamics_canalizing_map& map )
{
  detail::dot_writer w( net.name().empty() ? "dcm" : net.name() );
  std::vector<bool> used( map.s_units.size(), false );
  for ( const auto& f : map.fibers )
  {
    if ( f.source_type == fiber::end::s_unit )
    {
      used[f.source] = true;
    }
    if ( f.target_type == fiber::end::s_unit )
    {
      used[f.target] = true;
    }
  }
  auto s_key = []( std::size_t s ) { return "s" + std::to_string( s ); };
  auto t_key = []( std::size_t t ) { return "t" + std::to_string( t ); };
  for ( std::size_t s = 0u; s < map.s_units.size(); ++s )
  {
    const auto& u = map.s_units[s];
    if ( !used[s] && !u.always_on )
    {
      continue;
    }
    std::string attrs = "shape=circle, style=filled, label=" + detail::dot_quote( net.node( u.node ).name() );
    attrs += u.state ? ", fillcolor=black, fontcolor=white" : ", fillcolor=white, fontcolor=black";
    if ( u.always_on )
    {
      attrs += ", peripheries=2";
    }
    w.line( s_key( s ) + " [" + attrs + "]" );
  }
  for ( std::size_t t = 0u; t < map.t_units.size(); ++t )
  {
    w.line( t_key( t ) + " [shape=diamond, style=filled, fillcolor=lightgray, label=\"" +
            std::to_string( map.t_units[t].threshold ) + "\"]" );
  }
  for ( const auto& f : map.fibers )
  {
    const auto from = f.source_type == fiber::end::s_unit ? s_key( f.source ) : t_key( f.source );
    const auto to = f.target_type == fiber::end::s_unit ? s_key( f.target ) : t_key( f.target );
    std::string attrs;
    switch ( f.kind )
    {
    case fiber_kind::direct:
      attrs = "style=bold";
      break;
    case fiber_kind::input_necessary:
      attrs = "style=solid";
      break;
    case fiber_kind::input_disjunctive:
      attrs = "style=dashed";
      break;
    case fiber_kind::output:
      attrs = "style=solid, arrowhead=normal";
      break;
    }
    if ( f.merge )
    {
      attrs += ", samehead=\"m" + std::to_string( *f.merge ) + "\"";
    }
    w.line( from + " -> " + to + " [" + attrs + "]" );
  }
  return w.str();
}

/*! \brief State-transition graph, nodes labelled by their state strings (node 0 first) */
inline std::string export_dot( const state_graph& stg )
{
  detail::dot_writer w( "stg" );
  for ( std::uint64_t x = 0u; x < stg.num_states(); ++x )
  {
    w.line( "c" + std::to_string( x ) + " [label=\"" + state_string( x, stg.num_nodes() ) + "\"]" );
  }
  for ( std::uint64_t x = 0u; x < stg.num_states(); ++x )
  {
    w.line( "c" + std::to_string( x ) + " -> c" + std::to_string( stg.successor( x ) ) );
  }
  return w.str();
}

/*! \brief Controlled state-transition graph; flip edges are dashed */
inline std::string export_dot( const controlled_state_graph& g )
{
  detail::dot_writer w( "cstg" );
  const auto n = g.num_nodes();
  for ( std::uint64_t x = 0u; x < g.num_states(); ++x )
  {
    w.line( "c" + std::to_string( x ) + " [label=\"" + state_string( x, n ) + "\"]" );
  }
  for ( std::uint64_t x = 0u; x < g.num_states(); ++x )
  {
    bool first = true;
    g.foreach_successor( x, [&]( std::uint64_t y ) {
      w.line( "c" + std::to_string( x ) + " -> c" + std::to_string( y ) + ( first ? "" : " [style=dashed]" ) );
      first = false;
    } );
  }
  return w.str();
}

/*! \brief Controlled attractor graph; attractors labelled by their cycle states */
inline std::string export_dot( const boolean_network& net, const controlled_attractor_graph& cag )
{
  detail::dot_writer w( "cag" );
  for ( std::size_t a = 0u; a < cag.attractors.size(); ++a )
  {
    std::string label;
    for ( auto x : cag.attractors[a].states )
    {
      label += ( label.empty() ? "" : "\n" ) + state_string( x, net.size() );
    }
    w.line( "a" + std::to_string( a ) + " [shape=box, label=" + detail::dot_quote( "A" + std::to_string( a + 1u ) + "\n" + label ) +
            "]" );
  }
  for ( auto [from, to] : cag.edges )
  {
    w.line( "a" + std::to_string( from ) + " -> a" + std::to_string( to ) );
  }
  return w.str();
}

} // namespace bnkit
