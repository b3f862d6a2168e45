/*!
  \file cli.hpp
  \brief Command-line front end: subcommands, report assembly and JSON/CSV/DOT output

  Exit codes: 0 on success, 2 on usage errors, 1 on data or capacity errors.
*/

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnkit.hpp"

namespace bnkit::cli
{

inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr int report_schema_version = 1;

using json = nlohmann::ordered_json;

/*! \brief Raised for invocations that are well-formed for the parser but not meaningful */
struct usage_error : error
{
  using error::error;
};

enum class output_format
{
  json,
  csv,
  dot
};

struct common_options
{
  std::string model;
  std::string file;
  std::string format = "json";
  std::size_t threads = 0u;
  bool lenient = false;
  bool trivial_groups = false;
};

/*! \brief RFC 4180 field quoting */
inline std::string csv_field( std::string_view s )
{
  if ( s.find_first_of( ",\"\r\n" ) == std::string_view::npos )
  {
    return std::string( s );
  }
  std::string out = "\"";
  for ( auto c : s )
  {
    out += c;
    if ( c == '"' )
    {
      out += '"';
    }
  }
  return out + "\"";
}

/*! \brief Shortest decimal form that reads back to the same double */
inline std::string format_number( double v )
{
  char buf[64];
  auto [end, ec] = std::to_chars( buf, buf + sizeof( buf ), v );
  return ec == std::errc{} ? std::string( buf, end ) : std::to_string( v );
}

class csv_table
{
public:
  explicit csv_table( std::vector<std::string> header ) { row( std::move( header ) ); }

  void row( const std::vector<std::string>& fields )
  {
    for ( std::size_t i = 0u; i < fields.size(); ++i )
    {
      text_ += ( i ? "," : "" ) + csv_field( fields[i] );
    }
    text_ += "\r\n";
  }

  const std::string& str() const noexcept { return text_; }

private:
  std::string text_;
};

inline std::string join( const std::vector<std::string>& parts, std::string_view sep )
{
  std::string out;
  for ( std::size_t i = 0u; i < parts.size(); ++i )
  {
    out += ( i ? std::string( sep ) : "" ) + parts[i];
  }
  return out;
}

inline std::vector<std::string> node_names( const boolean_network& net, const std::vector<std::size_t>& ids )
{
  std::vector<std::string> names;
  for ( auto i : ids )
  {
    names.push_back( net.node( i ).name() );
  }
  return names;
}

/*! \brief Splits a comma-separated node list, keeping names that themselves contain commas

  At every position the longest comma-delimited prefix naming a node wins.
*/
inline std::vector<std::size_t> parse_node_list( const boolean_network& net, std::string_view text )
{
  std::vector<std::string_view> tokens;
  std::size_t start = 0u;
  while ( start <= text.size() )
  {
    const auto comma = text.find( ',', start );
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    tokens.push_back( text.substr( start, end - start ) );
    start = end + 1u;
  }
  std::vector<std::size_t> ids;
  for ( std::size_t i = 0u; i < tokens.size(); )
  {
    if ( tokens[i].empty() && tokens.size() == 1u )
    {
      break;
    }
    std::optional<std::size_t> found;
    std::size_t used = 0u;
    for ( auto j = tokens.size(); j > i; --j )
    {
      const auto first = tokens[i].data() - text.data();
      const auto last = tokens[j - 1u].data() + tokens[j - 1u].size() - text.data();
      const auto candidate = text.substr( first, last - first );
      if ( auto idx = net.find( candidate ) )
      {
        found = idx;
        used = j - i;
        break;
      }
    }
    if ( !found )
    {
      found = net.resolve( tokens[i] );
      used = 1u;
    }
    ids.push_back( *found );
    i += used;
  }
  return ids;
}

inline output_format parse_format( std::string_view s )
{
  if ( s == "json" )
  {
    return output_format::json;
  }
  if ( s == "csv" )
  {
    return output_format::csv;
  }
  return output_format::dot;
}

inline boolean_network load_network( const common_options& opts )
{
  if ( opts.model.empty() == opts.file.empty() )
  {
    throw usage_error( "exactly one of --model or --file is required" );
  }
  if ( !opts.model.empty() )
  {
    return load_builtin( opts.model );
  }
  const auto text = read_text_file( opts.file );
  return parse_cnet( text, cnet_options{ .unlisted_rows_are_off = opts.lenient },
                     std::filesystem::path( opts.file ).stem().string() );
}

/*! \brief Writes the text payload or the JSON report for one invocation */
class report
{
public:
  report( std::string command, std::vector<std::string> arguments, const common_options& opts, const boolean_network& net )
      : format_( parse_format( opts.format ) )
  {
    doc_["schema_version"] = report_schema_version;
    doc_["tool"] = "bnkit";
    doc_["version"] = std::string( tool_version );
    doc_["command"] = { { "name", command }, { "arguments", arguments } };
    json names = json::array();
    for ( const auto& n : net.nodes() )
    {
      names.push_back( n.name() );
    }
    doc_["model"] = { { "name", net.name() },
                      { "source", opts.model.empty() ? "file" : "builtin" },
                      { "num_nodes", net.size() },
                      { "nodes", names } };
    command_ = std::move( command );
  }

  output_format format() const noexcept { return format_; }

  void require( std::initializer_list<output_format> allowed ) const
  {
    for ( auto f : allowed )
    {
      if ( f == format_ )
      {
        return;
      }
    }
    throw usage_error( "--format " + std::string( format_ == output_format::json ? "json" : format_ == output_format::csv ? "csv" : "dot" ) +
                       " is not available for '" + command_ + "'" );
  }

  void write( std::ostream& out, json result, const std::string& text = {} )
  {
    if ( format_ == output_format::json )
    {
      doc_["result"] = std::move( result );
      out << doc_.dump( 2 ) << "\n";
    }
    else
    {
      out << text;
    }
  }

private:
  output_format format_;
  std::string command_;
  json doc_;
};

inline json schema_json( const schema& s ) { return { { "schema", s.to_string() }, { "output", s.output } }; }

inline json two_symbol_json( const two_symbol_schema& ts )
{
  json groups = json::array();
  for ( const auto& g : ts.groups )
  {
    groups.push_back( { { "positions", g.positions }, { "zeros", g.zeros }, { "ones", g.ones }, { "wildcards", g.wildcards } } );
  }
  return { { "schema", ts.to_string() },
           { "representative", ts.representative.to_string() },
           { "output", ts.output() },
           { "groups", groups } };
}

inline void run_info( report& rep, std::ostream& out, const boolean_network& net )
{
  rep.require( { output_format::json, output_format::csv, output_format::dot } );
  if ( rep.format() == output_format::dot )
  {
    out << export_dot( net );
    return;
  }
  json nodes = json::array();
  csv_table csv( { "id", "name", "k", "inputs", "constant" } );
  for ( const auto& node : net.nodes() )
  {
    const auto inputs = node_names( net, node.inputs() );
    nodes.push_back( { { "id", node.id() }, { "name", node.name() }, { "k", node.k() }, { "inputs", inputs }, { "constant", node.is_constant() } } );
    csv.row( { std::to_string( node.id() ), node.name(), std::to_string( node.k() ), join( inputs, ";" ),
               node.is_constant() ? "true" : "false" } );
  }
  rep.write( out, { { "num_edges", net.edges().size() }, { "nodes", nodes } }, csv.str() );
}

inline void run_canalize( report& rep, std::ostream& out, const boolean_network& net, const common_options& opts,
                          const std::string& node, const std::string& agg_name )
{
  rep.require( { output_format::json, output_format::csv } );
  const auto agg = parse_aggregation( agg_name );
  const two_symbol_options ts{ opts.trivial_groups };
  std::vector<std::size_t> ids;
  if ( node.empty() )
  {
    for ( std::size_t i = 0u; i < net.size(); ++i )
    {
      ids.push_back( i );
    }
  }
  else
  {
    ids.push_back( net.resolve( node ) );
  }
  std::vector<redescription> reds( ids.size() );
  parallel_for( ids.size(), opts.threads, [&]( std::size_t i ) { reds[i] = redescribe( net.node( ids[i] ), ts ); } );

  json nodes = json::array();
  csv_table csv( { "id", "name", "k", "k_r", "k_e", "k_s", "k_r_norm", "k_e_norm", "k_s_norm" } );
  for ( std::size_t i = 0u; i < ids.size(); ++i )
  {
    const auto& n = net.node( ids[i] );
    const auto m = measure( reds[i], agg );
    json wild = json::array(), two = json::array();
    for ( const auto& s : reds[i].wildcard )
    {
      wild.push_back( schema_json( s ) );
    }
    for ( const auto& s : reds[i].two_symbol )
    {
      two.push_back( two_symbol_json( s ) );
    }
    nodes.push_back( { { "id", n.id() },
                       { "name", n.name() },
                       { "inputs", node_names( net, n.inputs() ) },
                       { "k", m.k },
                       { "k_r", m.k_r },
                       { "k_e", m.k_e },
                       { "k_s", m.k_s },
                       { "k_r_norm", m.k_r_norm },
                       { "k_e_norm", m.k_e_norm },
                       { "k_s_norm", m.k_s_norm },
                       { "wildcard_schemata", wild },
                       { "two_symbol_schemata", two } } );
    csv.row( { std::to_string( n.id() ), n.name(), std::to_string( m.k ), format_number( m.k_r ), format_number( m.k_e ),
               format_number( m.k_s ), format_number( m.k_r_norm ), format_number( m.k_e_norm ), format_number( m.k_s_norm ) } );
  }
  rep.write( out, { { "aggregation", to_string( agg ) }, { "trivial_groups", opts.trivial_groups }, { "nodes", nodes } }, csv.str() );
}

inline void run_effective_graph( report& rep, std::ostream& out, const boolean_network& net, const common_options& opts )
{
  const auto eg = build_effective_graph( net, two_symbol_options{ opts.trivial_groups }, opts.threads );
  if ( rep.format() == output_format::dot )
  {
    out << export_dot( net, eg );
    return;
  }
  json edges = json::array();
  csv_table csv( { "source", "target", "r", "e", "s" } );
  for ( const auto& e : eg.edges() )
  {
    const auto& src = net.node( e.source ).name();
    const auto& dst = net.node( e.target ).name();
    edges.push_back( { { "source", src }, { "target", dst }, { "r", e.r }, { "e", e.e }, { "s", e.s } } );
    csv.row( { src, dst, format_number( e.r ), format_number( e.e ), format_number( e.s ) } );
  }
  rep.write( out, { { "num_edges", eg.edges().size() }, { "edges", edges } }, csv.str() );
}

inline void run_dcm( report& rep, std::ostream& out, const boolean_network& net, const common_options& opts, const std::string& node,
                     bool wildcard_only )
{
  const two_symbol_options ts{ opts.trivial_groups };
  const dcm_options dopts{ wildcard_only };
  const auto map = node.empty() ? build_dcm( net, dopts, ts, opts.threads ) : canalizing_map( net, net.resolve( node ), dopts, ts );
  if ( rep.format() == output_format::dot )
  {
    out << export_dot( net, map );
    return;
  }
  auto s_label = [&]( std::size_t s ) {
    return net.node( map.s_units[s].node ).name() + "=" + std::to_string( map.s_units[s].state );
  };
  auto end_label = [&]( fiber::end type, std::size_t index ) {
    return type == fiber::end::s_unit ? s_label( index ) : map.t_units[index].id();
  };

  json s_units = json::array(), t_units = json::array(), fibers = json::array();
  for ( std::size_t s = 0u; s < map.s_units.size(); ++s )
  {
    const auto& u = map.s_units[s];
    s_units.push_back( { { "index", s }, { "node", net.node( u.node ).name() }, { "state", u.state }, { "always_on", u.always_on } } );
  }
  for ( const auto& t : map.t_units )
  {
    json inputs = json::array(), quotas = json::array();
    for ( const auto& in : t.inputs )
    {
      json entry = { { "s_unit", in.s_unit }, { "label", s_label( in.s_unit ) }, { "kind", to_string( in.kind ) } };
      entry["quota"] = in.quota ? json( *in.quota ) : json( nullptr );
      inputs.push_back( entry );
    }
    for ( const auto& q : t.quotas )
    {
      quotas.push_back( q.required );
    }
    t_units.push_back( { { "id", t.id() },
                         { "node", net.node( t.node ).name() },
                         { "state", t.state },
                         { "threshold", t.threshold },
                         { "inputs", inputs },
                         { "quotas", quotas } } );
  }
  csv_table csv( { "source", "target", "kind", "merge" } );
  for ( const auto& f : map.fibers )
  {
    const auto src = end_label( f.source_type, f.source );
    const auto dst = end_label( f.target_type, f.target );
    json entry = { { "source", src }, { "target", dst }, { "kind", to_string( f.kind ) } };
    entry["merge"] = f.merge ? json( *f.merge ) : json( nullptr );
    fibers.push_back( entry );
    csv.row( { src, dst, to_string( f.kind ), f.merge ? std::to_string( *f.merge ) : "" } );
  }
  json result = { { "scope", node.empty() ? "network" : net.node( net.resolve( node ) ).name() },
                  { "wildcard_only", wildcard_only },
                  { "num_t_units", map.t_units.size() },
                  { "num_fibers", map.fibers.size() },
                  { "s_units", s_units },
                  { "t_units", t_units },
                  { "fibers", fibers } };
  rep.write( out, std::move( result ), csv.str() );
}

inline json attractor_json( const boolean_network& net, const attractor& a, std::size_t index )
{
  json states = json::array();
  for ( auto x : a.states )
  {
    states.push_back( state_string( x, net.size() ) );
  }
  return { { "index", index }, { "period", a.period() }, { "basin_size", a.basin_size }, { "states", states } };
}

inline void run_attractors( report& rep, std::ostream& out, const boolean_network& net, const common_options& opts )
{
  rep.require( { output_format::json, output_format::csv } );
  const auto atts = attractors( net, { default_max_nodes, opts.threads } );
  json list = json::array();
  csv_table csv( { "index", "period", "basin_size", "states" } );
  for ( std::size_t a = 0u; a < atts.size(); ++a )
  {
    list.push_back( attractor_json( net, atts[a], a + 1u ) );
    std::vector<std::string> states;
    for ( auto x : atts[a].states )
    {
      states.push_back( state_string( x, net.size() ) );
    }
    csv.row( { std::to_string( a + 1u ), std::to_string( atts[a].period() ), std::to_string( atts[a].basin_size ), join( states, ";" ) } );
  }
  rep.write( out, { { "state_order", "node 0 first" }, { "count", atts.size() }, { "attractors", list } }, csv.str() );
}

inline void run_stg( report& rep, std::ostream& out, const boolean_network& net, const common_options& opts, const std::string& drivers )
{
  const auto d = make_driver_set( net, parse_node_list( net, drivers ) );
  const auto g = controlled_stg( net, d, { default_max_nodes, opts.threads } );
  if ( rep.format() == output_format::dot )
  {
    out << ( d.empty() ? export_dot( g.base() ) : export_dot( g ) );
    return;
  }
  json edges = json::array();
  csv_table csv( { "source", "target", "kind" } );
  for ( std::uint64_t x = 0u; x < g.num_states(); ++x )
  {
    bool first = true;
    const auto src = state_string( x, net.size() );
    g.foreach_successor( x, [&]( std::uint64_t y ) {
      const auto dst = state_string( y, net.size() );
      const char* kind = first ? "dynamics" : "control";
      edges.push_back( { { "source", src }, { "target", dst }, { "kind", kind } } );
      csv.row( { src, dst, kind } );
      first = false;
    } );
  }
  rep.write( out,
             { { "state_order", "node 0 first" },
               { "drivers", node_names( net, d.nodes() ) },
               { "num_states", g.num_states() },
               { "edges", edges } },
             csv.str() );
}

inline json evaluate_drivers( const boolean_network& net, const std::shared_ptr<const state_graph>& base, const driver_set& d,
                              std::size_t threads )
{
  const controlled_state_graph g( base, d );
  const auto cag = make_controlled_attractor_graph( g, threads );
  return { { "drivers", node_names( net, d.nodes() ) },
           { "mean_reachable", mean_reachable( g, threads ) },
           { "mean_controlled", mean_controlled( g, threads ) },
           { "mean_reachable_attractors", mean_reachable_attractors( cag ) },
           { "fully_controllable", is_fully_controllable( g ) } };
}

inline void run_control( report& rep, std::ostream& out, const boolean_network& net, const common_options& opts,
                         const std::string& drivers, bool exact_mds )
{
  const auto d = make_driver_set( net, parse_node_list( net, drivers ) );
  const auto base = std::make_shared<const state_graph>( state_transition_graph( net, { default_max_nodes, opts.threads } ) );
  const controlled_state_graph g( base, d );
  const auto cag = make_controlled_attractor_graph( g, opts.threads );
  if ( rep.format() == output_format::dot )
  {
    out << export_dot( net, cag );
    return;
  }
  const auto uncontrolled = mean_reachable( controlled_state_graph( base, {} ), opts.threads );
  const auto sc = sc_drivers( net );
  const auto mds = mds_drivers( net, exact_mds );

  json given = evaluate_drivers( net, base, d, opts.threads );
  json sc_eval = evaluate_drivers( net, base, sc, opts.threads );
  json mds_eval = evaluate_drivers( net, base, mds, opts.threads );
  mds_eval["exact"] = exact_mds;

  json atts = json::array(), edges = json::array();
  for ( std::size_t a = 0u; a < cag.attractors.size(); ++a )
  {
    atts.push_back( attractor_json( net, cag.attractors[a], a + 1u ) );
  }
  for ( auto [from, to] : cag.edges )
  {
    edges.push_back( { from + 1u, to + 1u } );
  }

  csv_table csv( { "set", "drivers", "mean_reachable", "mean_controlled", "mean_reachable_attractors", "fully_controllable" } );
  for ( const auto& [label, e] : { std::pair<const char*, const json*>{ "given", &given }, { "sc", &sc_eval }, { "mds", &mds_eval } } )
  {
    csv.row( { label, join( ( *e )["drivers"].get<std::vector<std::string>>(), ";" ),
               format_number( ( *e )["mean_reachable"].get<double>() ), format_number( ( *e )["mean_controlled"].get<double>() ),
               format_number( ( *e )["mean_reachable_attractors"].get<double>() ),
               ( *e )["fully_controllable"].get<bool>() ? "true" : "false" } );
  }

  json result = given;
  result["mean_reachable_uncontrolled"] = uncontrolled;
  result["attractor_graph"] = { { "attractors", atts }, { "edges", edges } };
  result["structural"] = { { "sc", sc_eval }, { "mds", mds_eval } };
  rep.write( out, std::move( result ), csv.str() );
}

inline void run_drivers( report& rep, std::ostream& out, std::ostream& err, const boolean_network& net, const common_options& opts,
                         std::size_t max_size, const std::string& metric, std::uint64_t budget )
{
  rep.require( { output_format::json, output_format::csv } );
  driver_search_options so;
  so.max_size = max_size;
  so.metric = parse_control_metric( metric );
  so.budget = budget;
  so.threads = opts.threads;
  const auto total = count_subsets( net.size(), max_size );
  if ( total > so.warn_above && total <= so.budget )
  {
    err << "warning: scoring " << total << " driver subsets\n";
  }
  const auto result = driver_search( net, so );
  json ranked = json::array();
  csv_table csv( { "rank", "size", "drivers", "score" } );
  for ( std::size_t r = 0u; r < result.ranked.size(); ++r )
  {
    const auto& entry = result.ranked[r];
    const auto names = node_names( net, entry.drivers.nodes() );
    ranked.push_back( { { "rank", r + 1u }, { "drivers", names }, { "score", entry.score } } );
    csv.row( { std::to_string( r + 1u ), std::to_string( names.size() ), join( names, ";" ), format_number( entry.score ) } );
  }
  rep.write( out,
             { { "metric", to_string( so.metric ) }, { "max_size", max_size }, { "evaluated", result.evaluated }, { "ranked", ranked } },
             csv.str() );
}

/*! \brief Entry point shared by the executable and the tests */
inline int cli_main( int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr )
{
  CLI::App app{ "Canalization and control analysis of Boolean network models", "bnkit" };
  app.set_version_flag( "--version", std::string( tool_version ) );
  app.require_subcommand( 1, 1 );

  common_options opts;
  std::string node, agg = "max", drivers, metric = "reach";
  std::size_t max_size = 1u;
  std::uint64_t budget = 1'000'000u;
  bool exact_mds = false, wildcard_only = false;

  auto add_common = [&]( CLI::App* sub, std::vector<std::string> formats ) {
    auto* m = sub->add_option( "--model", opts.model, "Bundled model (thaliana, drosophila, budding_yeast)" );
    auto* f = sub->add_option( "--file", opts.file, "Path to a .cnet file" )->check( CLI::ExistingFile );
    m->excludes( f );
    sub->add_option( "--format", opts.format, "Output format" )->check( CLI::IsMember( formats ) );
    sub->add_option( "--threads", opts.threads, "Worker threads (0 = all cores)" )->check( CLI::NonNegativeNumber );
    sub->add_flag( "--lenient", opts.lenient, "Read --file with unlisted rows as 0 and row-less inputs as self-loops" );
    sub->add_flag( "--trivial-groups", opts.trivial_groups, "Also mark groups of identical symbols as position-free" );
  };

  auto* info = app.add_subcommand( "info", "Nodes, inputs and interaction graph" );
  add_common( info, { "json", "csv", "dot" } );

  auto* canalize = app.add_subcommand( "canalize", "Per-node redundancy, effectiveness and symmetry" );
  add_common( canalize, { "json", "csv" } );
  canalize->add_option( "--node", node, "Restrict to one node (name or 0-based id)" );
  canalize->add_option( "--agg", agg, "Aggregation over covering schemata" )->check( CLI::IsMember( { "max", "mean", "min" } ) );

  auto* effective = app.add_subcommand( "effective-graph", "Interaction graph weighted by input effectiveness" );
  add_common( effective, { "json", "csv", "dot" } );

  auto* dcm = app.add_subcommand( "dcm", "Canalizing map of a node or of the whole network" );
  add_common( dcm, { "json", "csv", "dot" } );
  dcm->add_option( "--node", node, "Canalizing map of one node only" );
  dcm->add_flag( "--wildcard-only", wildcard_only, "Build from wildcard schemata only" );

  auto* atts = app.add_subcommand( "attractors", "Attractors and basin sizes of the synchronous dynamics" );
  add_common( atts, { "json", "csv" } );

  auto* stg = app.add_subcommand( "stg", "State-transition graph, optionally with driver flips" );
  add_common( stg, { "json", "csv", "dot" } );
  stg->add_option( "--drivers", drivers, "Comma-separated driver nodes" );

  auto* control = app.add_subcommand( "control", "Reachability measures for a driver set, plus SC and MDS driver sets" );
  add_common( control, { "json", "csv", "dot" } );
  control->add_option( "--drivers", drivers, "Comma-separated driver nodes (default: none)" );
  control->add_flag( "--exact-mds", exact_mds, "Exhaustive minimum dominating set (N <= 20)" );

  auto* search = app.add_subcommand( "drivers", "Score and rank every driver subset up to a size" );
  add_common( search, { "json", "csv" } );
  search->add_option( "--max-size", max_size, "Largest subset size" )->check( CLI::NonNegativeNumber );
  search->add_option( "--metric", metric, "Score to rank by" )->check( CLI::IsMember( { "reach", "attractors" } ) );
  search->add_option( "--budget", budget, "Refuse searches over more subsets than this" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const auto code = app.exit( e, out, err );
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  std::vector<std::string> arguments;
  for ( int i = 1; i < argc; ++i )
  {
    arguments.emplace_back( argv[i] );
  }

  try
  {
    const auto net = load_network( opts );
    report rep( sub->get_name(), arguments, opts, net );
    if ( sub == info )
    {
      run_info( rep, out, net );
    }
    else if ( sub == canalize )
    {
      run_canalize( rep, out, net, opts, node, agg );
    }
    else if ( sub == effective )
    {
      run_effective_graph( rep, out, net, opts );
    }
    else if ( sub == dcm )
    {
      run_dcm( rep, out, net, opts, node, wildcard_only );
    }
    else if ( sub == atts )
    {
      run_attractors( rep, out, net, opts );
    }
    else if ( sub == stg )
    {
      run_stg( rep, out, net, opts, drivers );
    }
    else if ( sub == control )
    {
      run_control( rep, out, net, opts, drivers, exact_mds );
    }
    else
    {
      run_drivers( rep, out, err, net, opts, max_size, metric, budget );
    }
  }
  catch ( const usage_error& e )
  {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }
  catch ( const cnet_parse_error& e )
  {
    err << "error: " << ( opts.file.empty() ? opts.model : opts.file ) << ": " << e.what() << "\n";
    return 1;
  }
  catch ( const error& e )
  {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  catch ( const std::bad_alloc& )
  {
    err << "error: out of memory\n";
    return 1;
  }
  return 0;
}

} // namespace bnkit::cli
