#include <catch_amalgamated.hpp>

#include <chrono>

#include <bnkit/cnet.hpp>
#include <bnkit/dynamics.hpp>
#include <bnkit/models.hpp>

#include "oracles.hpp"

using namespace bnkit;

namespace
{

const boolean_network negation = parse_cnet( ".v 1\n.n 1 1 1\n0 1\n1 0\n.e\n" );

std::vector<std::string> strings( const std::vector<std::uint64_t>& xs, std::size_t n )
{
  std::vector<std::string> out;
  for ( auto x : xs )
  {
    out.push_back( state_string( x, n ) );
  }
  return out;
}

} // namespace

TEST_CASE( "state-transition graph of the toy network", "[dynamics]" )
{
  const auto stg = state_transition_graph( parse_cnet( oracle::t1_cnet ) );
  CHECK( stg.num_states() == 4u );
  // 00->00, 01->10, 10->10, 11->11 (node 0 first)
  CHECK( stg.successors() == std::vector<std::uint32_t>{ 0u, 1u, 1u, 3u } );
  CHECK( state_transition_graph( negation ).successors() == std::vector<std::uint32_t>{ 1u, 0u } );
}

TEST_CASE( "attractors of small networks", "[dynamics]" )
{
  const auto t1 = parse_cnet( oracle::t1_cnet );
  const auto atts = attractors( t1 );
  REQUIRE( atts.size() == 3u );
  CHECK( strings( atts[0].states, 2u ) == std::vector<std::string>{ "00" } );
  CHECK( strings( atts[1].states, 2u ) == std::vector<std::string>{ "10" } );
  CHECK( strings( atts[2].states, 2u ) == std::vector<std::string>{ "11" } );
  CHECK( atts[1].basin_size == 2u );

  const auto cycle = attractors( negation );
  REQUIRE( cycle.size() == 1u );
  CHECK( cycle[0].period() == 2u );
  CHECK( cycle[0].states == std::vector<std::uint64_t>{ 0u, 1u } );
}

TEST_CASE( "basins and trajectories", "[dynamics]" )
{
  const auto t1 = parse_cnet( oracle::t1_cnet );
  const auto stg = state_transition_graph( t1 );
  const auto atts = attractors( stg );
  CHECK( strings( basin( stg, atts[1] ), 2u ) == std::vector<std::string>{ "10", "01" } );

  attractor foreign;
  foreign.states = { 2u }; // "01" is transient
  CHECK_THROWS_AS( basin( stg, foreign ), argument_error );
  foreign.states = { 0u, 3u };
  CHECK_THROWS_AS( basin( stg, foreign ), argument_error );

  const auto path = trajectory( t1, 2u, 10u ); // from "01"
  REQUIRE( path.states.size() == 2u );
  CHECK( path.states[0].to_string() == "01" );
  CHECK( path.states[1].to_string() == "10" );
  CHECK( path.cycle_start == 1u );

  const auto neg = trajectory( negation, 0u, 10u );
  CHECK( neg.states.size() == 2u );
  CHECK( neg.cycle_start == 0u );

  const auto cut = trajectory( negation, 0u, 1u );
  CHECK( cut.states.size() == 2u );
  CHECK_FALSE( cut.cycle_start.has_value() );
}

TEST_CASE( "node limit is enforced", "[dynamics]" )
{
  std::mt19937_64 rng( 1 );
  const auto net = oracle::random_network( rng, 12u, 2u );
  CHECK_THROWS_AS( state_transition_graph( net, { .max_nodes = 10u } ), capacity_error );
  CHECK_NOTHROW( state_transition_graph( net, { .max_nodes = 12u } ) );
}

TEST_CASE( "attractors agree with Floyd cycle detection", "[dynamics]" )
{
  std::mt19937_64 rng( 17 );
  for ( int trial = 0; trial < 120; ++trial )
  {
    const auto net = oracle::random_network( rng, 1u + trial % 11, 3u );
    const auto stg = state_transition_graph( net, { .threads = 1u + trial % 3 } );
    const auto atts = attractors( stg );
    const auto expected = oracle::floyd_attractors( net );
    REQUIRE( atts.size() == expected.size() );
    std::uint64_t total = 0u;
    for ( std::size_t a = 0u; a < atts.size(); ++a )
    {
      auto members = atts[a].states;
      // cycle order, starting at the minimum
      REQUIRE( members.front() == *std::min_element( members.begin(), members.end() ) );
      for ( std::size_t i = 0u; i < members.size(); ++i )
      {
        REQUIRE( stg.successor( members[i] ) == members[( i + 1u ) % members.size()] );
      }
      if ( a > 0u )
      {
        REQUIRE( atts[a - 1u].representative() < atts[a].representative() );
      }
      std::sort( members.begin(), members.end() );
      REQUIRE( expected.count( members ) == 1u );
      REQUIRE( expected.at( members ) == atts[a].basin_size );
      REQUIRE( basin( stg, atts[a] ).size() == atts[a].basin_size );
      total += atts[a].basin_size;
    }
    REQUIRE( total == stg.num_states() );
  }
}

TEST_CASE( "flowering model has ten attractors", "[dynamics]" )
{
  const auto start = std::chrono::steady_clock::now();
  const auto atts = attractors( load_builtin( "thaliana" ) );
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  CHECK( atts.size() == 10u );
  CHECK( elapsed.count() < 10.0 );
}
