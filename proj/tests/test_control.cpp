#include <catch_amalgamated.hpp>

#include <bnkit/cnet.hpp>
#include <bnkit/control.hpp>
#include <bnkit/models.hpp>

#include "oracles.hpp"

using namespace bnkit;
using Catch::Approx;

namespace
{

constexpr double tol = 1e-12;

boolean_network chain()
{
  // a -> b -> c, a constant
  return parse_cnet( ".v 3\n.l 1 a\n.l 2 b\n.l 3 c\n.n 1 0\n1\n.n 2 1 1\n0 0\n1 1\n.n 3 1 2\n0 0\n1 1\n.e\n" );
}

boolean_network cycle3()
{
  return parse_cnet( ".v 3\n.n 1 1 3\n0 0\n1 1\n.n 2 1 1\n0 0\n1 1\n.n 3 1 2\n0 0\n1 1\n.e\n" );
}

std::vector<std::vector<std::uint64_t>> cycles_of( const std::vector<attractor>& atts )
{
  std::vector<std::vector<std::uint64_t>> out;
  for ( const auto& a : atts )
  {
    out.push_back( a.states );
  }
  return out;
}

} // namespace

TEST_CASE( "controlled edges flip driver bits only", "[control]" )
{
  const auto t1 = parse_cnet( oracle::t1_cnet );
  const auto empty = controlled_stg( t1, driver_set{} );
  for ( std::uint64_t x = 0u; x < 4u; ++x )
  {
    CHECK( empty.successors( x ) == std::vector<std::uint64_t>{ empty.base().successor( x ) } );
  }
  const auto g = controlled_stg( t1, driver_set( { 1 } ) );
  // from 00: dynamics edge to itself, control edge to 01 only
  CHECK( g.successors( 0u ) == std::vector<std::uint64_t>{ 0u, 2u } );

  const auto all = controlled_stg( t1, driver_set( { 0, 1 } ) );
  for ( std::uint64_t x = 0u; x < 4u; ++x )
  {
    auto s = all.successors( x );
    CHECK( s.size() == 4u ); // 2^|D| - 1 flips plus the dynamics edge
    std::sort( s.begin() + 1, s.end() );
    std::vector<std::uint64_t> others;
    for ( std::uint64_t y = 0u; y < 4u; ++y )
    {
      if ( y != x )
      {
        others.push_back( y );
      }
    }
    CHECK( std::vector<std::uint64_t>( s.begin() + 1, s.end() ) == others );
  }
  CHECK_THROWS_AS( controlled_stg( t1, driver_set( { 2 } ) ), argument_error );
  CHECK_THROWS_AS( make_driver_set( t1, std::vector<std::string>{ "x9" } ), lookup_error );
}

TEST_CASE( "reachability on the toy network", "[control]" )
{
  const auto t1 = parse_cnet( oracle::t1_cnet );
  const driver_set d( { 1 } );
  const auto g = controlled_stg( t1, d );
  CHECK( reachable_fraction( g, 0u ) == Approx( 1.0 ).margin( tol ) );             // 00
  CHECK( reachable_fraction( g, 3u ) == Approx( 1.0 / 3.0 ).margin( tol ) );       // 11
  CHECK( reachable_fraction( g, 1u ) == Approx( 1.0 / 3.0 ).margin( tol ) );       // 10
  CHECK( reachable_fraction( g, 2u ) == Approx( 1.0 ).margin( tol ) );             // 01
  CHECK( reachable_fraction( controlled_stg( t1, {} ), 0u ) == 0.0 );              // fixed point
  CHECK( std::abs( mean_reachable( g ) - 2.0 / 3.0 ) <= tol );
  CHECK( std::abs( mean_reachable( t1, driver_set{} ) - 1.0 / 12.0 ) <= tol );
  CHECK( std::abs( mean_controlled( g ) - 7.0 / 12.0 ) <= tol );
  CHECK_FALSE( is_fully_controllable( g ) );
  CHECK( is_fully_controllable( t1, driver_set( { 0, 1 } ) ) );

  const auto cag = make_controlled_attractor_graph( g );
  CHECK( cag.edges == std::vector<std::pair<std::size_t, std::size_t>>{ { 0, 1 }, { 0, 2 }, { 1, 2 }, { 2, 1 } } );
  CHECK( std::abs( mean_reachable_attractors( cag ) - 2.0 / 3.0 ) <= tol );
}

TEST_CASE( "single-attractor networks reach every attractor by convention", "[control]" )
{
  const auto neg = parse_cnet( ".v 1\n.n 1 1 1\n0 1\n1 0\n.e\n" );
  CHECK( mean_reachable_attractors( neg, driver_set{} ) == 1.0 );
}

TEST_CASE( "reachability agrees with explicit-graph oracles", "[control]" )
{
  std::mt19937_64 rng( 123 );
  for ( int trial = 0; trial < 80; ++trial )
  {
    const auto net = oracle::random_network( rng, 1u + trial % 8, 3u );
    const auto base = std::make_shared<const state_graph>( state_transition_graph( net ) );
    const auto atts = attractors( *base );
    for ( int pick = 0; pick < 3; ++pick )
    {
      std::vector<std::size_t> nodes;
      for ( std::size_t i = 0u; i < net.size(); ++i )
      {
        if ( rng() % 3 == 0 )
        {
          nodes.push_back( i );
        }
      }
      const driver_set d( nodes );
      const controlled_state_graph g( base, d );
      const auto r = oracle::reachable_fractions( net, d.mask() );
      for ( std::uint64_t x = 0u; x < g.num_states(); ++x )
      {
        REQUIRE( std::abs( reachable_fraction( g, x ) - r[x] ) <= tol );
      }
      const auto expected = oracle::mean( r );
      REQUIRE( std::abs( mean_reachable( g ) - expected ) <= tol );
      REQUIRE( std::abs( mean_reachable_by_traversal( g, 2u ) - expected ) <= tol );
      const bool full = std::all_of( r.begin(), r.end(), []( double v ) { return v == 1.0; } );
      REQUIRE( is_fully_controllable( g ) == full );

      const auto cag = make_controlled_attractor_graph( g );
      const auto edges = oracle::attractor_edges( net, d.mask(), cycles_of( atts ) );
      REQUIRE( std::set<std::pair<std::size_t, std::size_t>>( cag.edges.begin(), cag.edges.end() ) == edges );
    }
  }
}

TEST_CASE( "large condensations use the sparse closure", "[control]" )
{
  // every node keeps its state: with one driver each of the 2^16 cosets is its own component
  std::string text = ".v 17\n";
  for ( int i = 1; i <= 17; ++i )
  {
    text += ".n " + std::to_string( i ) + " 1 " + std::to_string( i ) + "\n0 0\n1 1\n";
  }
  const auto net = parse_cnet( text + ".e\n" );
  const auto base = std::make_shared<const state_graph>( state_transition_graph( net ) );
  REQUIRE( base->num_states() / 2u > detail::dense_closure_limit );
  const controlled_state_graph g( base, driver_set( { 0 } ) );
  const double expected = 1.0 / static_cast<double>( g.num_states() - 1u );
  CHECK( std::abs( mean_reachable( g ) - expected ) <= tol );
  CHECK( std::abs( reachable_fraction( g, 12345u ) - expected ) <= tol );
  CHECK( mean_controlled( g ) == Approx( expected ).margin( tol ) );
}

TEST_CASE( "control laws on random nested driver sets", "[control]" )
{
  std::mt19937_64 rng( 9 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const auto net = oracle::random_network( rng, 1u + trial % 10, 3u );
    const auto base = std::make_shared<const state_graph>( state_transition_graph( net ) );
    std::vector<std::size_t> small, large;
    for ( std::size_t i = 0u; i < net.size(); ++i )
    {
      const auto roll = rng() % 3;
      if ( roll == 0 )
      {
        small.push_back( i );
      }
      if ( roll <= 1 )
      {
        large.push_back( i );
      }
    }
    const controlled_state_graph a( base, driver_set( small ) ), b( base, driver_set( large ) );
    const auto ra = mean_reachable( a ), rb = mean_reachable( b );
    REQUIRE( ra <= rb + tol );
    REQUIRE( mean_controlled( a ) <= ra + tol );
    REQUIRE( mean_controlled( b ) >= -tol );
    REQUIRE( mean_reachable_attractors( make_controlled_attractor_graph( a ) ) <=
             mean_reachable_attractors( make_controlled_attractor_graph( b ) ) + tol );
    REQUIRE( is_fully_controllable( a ) == ( ra == 1.0 ) );
    REQUIRE( is_fully_controllable( b ) == ( rb == 1.0 ) );
    std::vector<std::size_t> all( net.size() );
    std::iota( all.begin(), all.end(), 0u );
    REQUIRE( is_fully_controllable( controlled_state_graph( base, driver_set( all ) ) ) );
  }
}

TEST_CASE( "driver search ranks every subset", "[control]" )
{
  const auto t1 = parse_cnet( oracle::t1_cnet );
  const auto none = driver_search( t1, { .max_size = 0u } );
  REQUIRE( none.ranked.size() == 1u );
  CHECK( none.ranked[0].drivers.empty() );
  CHECK( std::abs( none.ranked[0].score - 1.0 / 12.0 ) <= tol );

  const auto one = driver_search( t1, { .max_size = 1u } );
  REQUIRE( one.ranked.size() == 3u );
  CHECK( one.evaluated == 3u );
  for ( const auto& entry : one.ranked )
  {
    CHECK( entry.score == mean_reachable( t1, entry.drivers ) );
  }
  const auto x2 = std::find_if( one.ranked.begin(), one.ranked.end(), []( const auto& e ) { return e.drivers == driver_set( { 1 } ); } );
  REQUIRE( x2 != one.ranked.end() );
  CHECK( std::abs( x2->score - 2.0 / 3.0 ) <= tol );
  for ( std::size_t i = 1u; i < one.ranked.size(); ++i )
  {
    CHECK( one.ranked[i - 1u].score >= one.ranked[i].score );
  }

  const auto att = driver_search( t1, { .max_size = 2u, .metric = control_metric::attractors } );
  CHECK( att.ranked.size() == 4u );
  CHECK( att.ranked[0].score == 1.0 );
  CHECK( att.ranked[0].drivers == driver_set( { 0, 1 } ) );
  // equal scores are ordered by driver ids
  CHECK( att.ranked[1].score == att.ranked[2].score );
  CHECK( att.ranked[1].drivers == driver_set( { 0 } ) );
  CHECK( att.ranked[2].drivers == driver_set( { 1 } ) );

  CHECK_THROWS_AS( driver_search( load_builtin( "thaliana" ), { .max_size = 15u, .budget = 1000u } ), capacity_error );
  CHECK( count_subsets( 15u, 4u ) == 1941u );
  CHECK( count_subsets( 3u, 10u ) == 8u );
}

TEST_CASE( "structural controllability drivers", "[control]" )
{
  CHECK( sc_drivers( chain() ).nodes() == std::vector<std::size_t>{ 0 } );
  CHECK( sc_drivers( parse_cnet( oracle::t1_cnet ) ).nodes() == std::vector<std::size_t>{ 0 } );
  const auto isolated = parse_cnet( ".v 2\n.n 1 0\n1\n.n 2 1 2\n0 0\n1 1\n.e\n" );
  CHECK( sc_drivers( isolated ).contains( 0 ) );
}

TEST_CASE( "dominating-set drivers", "[control]" )
{
  const auto t1 = parse_cnet( oracle::t1_cnet );
  CHECK( mds_drivers( t1 ).nodes() == std::vector<std::size_t>{ 0 } );
  CHECK( mds_drivers( cycle3() ).size() == 2u );
  CHECK( mds_drivers( cycle3(), true ).size() == 2u );

  // star: hub 1 feeds every leaf
  const auto star = parse_cnet( ".v 4\n.n 1 0\n1\n.n 2 1 1\n0 0\n1 1\n.n 3 1 1\n0 0\n1 1\n.n 4 1 1\n0 1\n1 0\n.e\n" );
  CHECK( mds_drivers( star ).nodes() == std::vector<std::size_t>{ 0 } );
  CHECK( mds_drivers( star, true ).nodes() == std::vector<std::size_t>{ 0 } );

  std::mt19937_64 rng( 3 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const auto net = oracle::random_network( rng, 1u + trial % 12, 3u );
    const auto greedy = mds_drivers( net );
    const auto exact = mds_drivers( net, true );
    REQUIRE( is_dominating_set( net, greedy ) );
    REQUIRE( is_dominating_set( net, exact ) );
    REQUIRE( exact.size() <= greedy.size() );
    // no smaller dominating set exists
    const auto n = net.size();
    for ( std::uint64_t m = 0u; m < ( std::uint64_t{ 1 } << n ); ++m )
    {
      if ( static_cast<std::size_t>( std::popcount( m ) ) >= exact.size() )
      {
        continue;
      }
      std::vector<std::size_t> s;
      for ( std::size_t i = 0u; i < n; ++i )
      {
        if ( ( m >> i ) & 1u )
        {
          s.push_back( i );
        }
      }
      REQUIRE_FALSE( is_dominating_set( net, driver_set( s ) ) );
    }
  }
  std::mt19937_64 big( 4 );
  CHECK_THROWS_AS( mds_drivers( oracle::random_network( big, 21u, 2u ), true ), capacity_error );
}

TEST_CASE( "structural driver sets of the flowering model are evaluated", "[control]" )
{
  const auto th = load_builtin( "thaliana" );
  const auto base = std::make_shared<const state_graph>( state_transition_graph( th ) );
  const auto sc = sc_drivers( th );
  CHECK_FALSE( sc.empty() );
  const controlled_state_graph g( base, sc );
  const auto r = mean_reachable( g );
  CHECK( r >= 0.0 );
  CHECK( is_fully_controllable( g ) == ( r == 1.0 ) );

  const auto d = make_driver_set( th, std::vector<std::string>{ "UFO", "LUG", "CLF", "SEP", "TFL1" } );
  const auto cag = make_controlled_attractor_graph( controlled_state_graph( base, d ) );
  CHECK( cag.attractors.size() == 10u );
  CHECK_FALSE( cag.edges.empty() );
}
