#include <catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include <bnkit/minimize.hpp>
#include <bnkit/models.hpp>

#include "oracles.hpp"

using namespace bnkit;

namespace
{

std::vector<std::string> strings_of( const std::vector<schema>& schemata )
{
  std::vector<std::string> out;
  for ( const auto& s : schemata )
  {
    out.push_back( s.to_string() );
  }
  return out;
}

boolean_node make_node( bit_vector lut )
{
  std::size_t k = 0u;
  while ( ( std::size_t{ 1 } << k ) < lut.size() )
  {
    ++k;
  }
  std::vector<std::size_t> inputs( k );
  std::iota( inputs.begin(), inputs.end(), 0u );
  return boolean_node( k, "f", inputs, std::move( lut ) );
}

} // namespace

TEST_CASE( "schema literals and coverage", "[minimize]" )
{
  const auto s = make_schema( "1#0", 1u );
  CHECK( s.to_string() == "1#0" );
  CHECK( s.num_wildcards() == 1u );
  CHECK( s.literal( 0 ) == symbol::one );
  CHECK( s.is_wildcard( 1 ) );
  CHECK( covers( s, 0b100u ) );
  CHECK( covers( s, 0b110u ) );
  CHECK_FALSE( covers( s, 0b101u ) );
  CHECK( expand( s ) == std::vector<std::uint64_t>{ 0b100u, 0b110u } );
  CHECK_THROWS_AS( make_schema( "1x", 0u ), argument_error );
  CHECK( make_schema( "#1", 0u ) < make_schema( "0#", 0u ) );
}

TEST_CASE( "prime implicants of small functions", "[minimize]" )
{
  const auto and2 = make_node( { 0, 0, 0, 1 } );
  CHECK( strings_of( prime_implicants( and2, 1u ) ) == std::vector<std::string>{ "11" } );
  CHECK( strings_of( prime_implicants( and2, 0u ) ) == std::vector<std::string>{ "#0", "0#" } );

  const auto xor2 = make_node( { 0, 1, 1, 0 } );
  CHECK( strings_of( prime_implicants( xor2, 1u ) ) == std::vector<std::string>{ "01", "10" } );

  const auto constant = make_node( { 1, 1, 1, 1 } );
  CHECK( strings_of( prime_implicants( constant, 1u ) ) == std::vector<std::string>{ "##" } );
  CHECK( prime_implicants( constant, 0u ).empty() );

  const boolean_node zero_inputs( 0, "c", {}, { 0 } );
  CHECK( strings_of( prime_implicants( zero_inputs, 0u ) ) == std::vector<std::string>{ "" } );
}

TEST_CASE( "wildcard schemata list OFF primes before ON primes", "[minimize]" )
{
  const auto or2 = make_node( { 0, 1, 1, 1 } );
  const auto all = wildcard_schemata( or2 );
  REQUIRE( all.size() == 3u );
  CHECK( all[0].output == 0u );
  CHECK( all[0].to_string() == "00" );
  CHECK( all[1].to_string() == "#1" );
  CHECK( all[2].to_string() == "1#" );
}

TEST_CASE( "in-degree above the minimizer limit is a capacity error", "[minimize]" )
{
  std::vector<std::size_t> inputs( k_max + 1u );
  std::iota( inputs.begin(), inputs.end(), 0u );
  const boolean_node wide( 0, "w", inputs, bit_vector( std::size_t{ 1 } << ( k_max + 1u ), 0u ) );
  CHECK_THROWS_AS( prime_implicants( wide, 0u ), capacity_error );
  CHECK_THROWS_AS( two_symbol_schemata( wide ), capacity_error );
}

TEST_CASE( "prime implicants equal the exhaustive 3^k minimizer", "[minimize]" )
{
  std::mt19937_64 rng( 2024 );
  for ( int trial = 0; trial < 500; ++trial )
  {
    const auto k = static_cast<std::size_t>( trial % 7 );
    const auto node = oracle::random_node( rng, k );
    for ( std::uint8_t v = 0u; v <= 1u; ++v )
    {
      REQUIRE( strings_of( prime_implicants( node, v ) ) == oracle::prime_implicants( node.lut(), k, v ) );
    }
  }
}

TEST_CASE( "two-symbol schemata of symmetric functions", "[minimize]" )
{
  const auto and2 = make_node( { 0, 0, 0, 1 } );
  const auto ts = two_symbol_schemata( and2 );
  REQUIRE( ts.size() == 2u );
  // OFF: "#0" and "0#" merge into one group of two positions holding one 0 and one #
  CHECK( ts[0].output() == 0u );
  CHECK( ts[0].to_string() == "oo" );
  REQUIRE( ts[0].groups.size() == 1u );
  CHECK( ts[0].groups[0].zeros == 1u );
  CHECK( ts[0].groups[0].wildcards == 1u );
  // ON: "11" has no permutation redundancy unless identical symbols count
  CHECK( ts[1].to_string() == "11" );
  CHECK( ts[1].groups.empty() );

  const auto with_trivial = two_symbol_schemata( and2, { .trivial_groups = true } );
  CHECK( with_trivial[1].to_string() == "oo" );
  CHECK( with_trivial[1].groups[0].is_trivial() );

  const auto xor2 = make_node( { 0, 1, 1, 0 } );
  const auto x = two_symbol_schemata( xor2 );
  // "00" and "11" are not permutations of each other; "01" and "10" are
  REQUIRE( x.size() == 3u );
  CHECK( x[0].to_string() == "00" );
  CHECK( x[1].to_string() == "11" );
  CHECK( x[2].to_string() == "oo" );
}

TEST_CASE( "TFL1 two-symbol redescription", "[minimize]" )
{
  const auto th = load_builtin( "thaliana" );
  const auto& tfl1 = th.node( *th.find( "TFL1" ) );
  const auto ts = two_symbol_schemata( tfl1 );
  std::vector<std::string> strings;
  for ( const auto& s : ts )
  {
    strings.push_back( s.to_string() + ":" + std::to_string( s.output() ) );
  }
  // inputs in file order: AP1, EMF1, LFY, AP2; ordered by output, then representative
  CHECK( strings == std::vector<std::string>{ "o#o#:0", "#0##:0", "010#:1" } );
}

TEST_CASE( "two-symbol schemata redescribe exactly the wildcard coverage", "[minimize]" )
{
  std::mt19937_64 rng( 77 );
  for ( int trial = 0; trial < 500; ++trial )
  {
    const auto k = static_cast<std::size_t>( trial % 7 );
    const auto node = oracle::random_node( rng, k );
    for ( bool trivial : { false, true } )
    {
      const auto ts = two_symbol_schemata( node, { .trivial_groups = trivial } );
      for ( std::uint8_t v = 0u; v <= 1u; ++v )
      {
        const auto primes = oracle::prime_implicants( node.lut(), k, v );
        const std::set<std::string> prime_set( primes.begin(), primes.end() );
        std::set<std::uint64_t> from_primes, from_orbits, from_counting;
        for ( const auto& p : primes )
        {
          for ( std::uint64_t r = 0u; r < node.num_rows(); ++r )
          {
            if ( oracle::matches( p, r ) )
            {
              from_primes.insert( r );
            }
          }
        }
        std::set<std::string> orbit_union;
        for ( const auto& s : ts )
        {
          if ( s.output() != v )
          {
            continue;
          }
          // groups are disjoint
          std::set<std::size_t> seen;
          for ( const auto& g : s.groups )
          {
            REQUIRE( g.positions.size() == g.zeros + g.ones + g.wildcards );
            for ( auto p : g.positions )
            {
              REQUIRE( seen.insert( p ).second );
            }
          }
          for ( const auto& member : expand_schemata( s ) )
          {
            REQUIRE( oracle::consistent( node.lut(), member.to_string(), v ) );
            orbit_union.insert( member.to_string() );
            for ( auto r : expand( member ) )
            {
              from_orbits.insert( r );
            }
          }
          for ( std::uint64_t r = 0u; r < node.num_rows(); ++r )
          {
            if ( covers( s, r ) )
            {
              from_counting.insert( r );
            }
          }
        }
        if ( !trivial )
        {
          // every orbit member is itself a prime implicant, and every prime is in some orbit
          REQUIRE( orbit_union == prime_set );
        }
        REQUIRE( from_orbits == from_primes );
        REQUIRE( from_counting == from_primes );
      }
    }
  }
}

TEST_CASE( "two-symbol representatives are the smallest orbit member", "[minimize]" )
{
  std::mt19937_64 rng( 5 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const auto node = oracle::random_node( rng, static_cast<std::size_t>( trial % 6 ) );
    for ( const auto& s : two_symbol_schemata( node ) )
    {
      const auto orbit = expand_schemata( s );
      auto smallest = orbit.front().to_string();
      for ( const auto& m : orbit )
      {
        smallest = std::min( smallest, m.to_string() );
      }
      REQUIRE( s.representative.to_string() == smallest );
    }
  }
}
