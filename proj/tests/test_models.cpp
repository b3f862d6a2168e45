#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <openssl/sha.h>

#include <bnkit/models.hpp>

using namespace bnkit;

namespace
{

std::string sha256_hex( std::string_view data )
{
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256( reinterpret_cast<const unsigned char*>( data.data() ), data.size(), digest );
  std::string hex;
  char buf[3];
  for ( auto b : digest )
  {
    std::snprintf( buf, sizeof( buf ), "%02x", b );
    hex += buf;
  }
  return hex;
}

const std::pair<const char*, const char*> pinned[] = {
    { "thaliana", "2e572341f3efbf6cd5905452ab593b841722eef2357fa4866ce6f5b48010c715" },
    { "drosophila", "5926ddb6f97265090aef835aaed2776aa6ecd6922dc715c5269cd5346c0fb7b5" },
    { "budding_yeast", "06ce39c674d5e98da12e6bdff805073bf918f2f576c7d4864d9978d0c6ec556e" } };

} // namespace

TEST_CASE( "model files and embedded copies match their pinned digests", "[models]" )
{
  for ( auto [name, digest] : pinned )
  {
    const auto path = std::filesystem::path( BNKIT_SOURCE_DIR ) / "data" / "models" / ( std::string( name ) + ".cnet" );
    CHECK( sha256_hex( read_text_file( path ) ) == digest );
    CHECK( sha256_hex( builtin_model_text( name ) ) == digest );
  }
}

TEST_CASE( "bundled models load with their node names", "[models]" )
{
  const auto th = load_builtin( "thaliana" );
  CHECK( th.size() == 15u );
  for ( auto n : { "TFL1", "AP1", "EMF1", "LFY", "AG", "AP2" } )
  {
    CHECK( th.find( n ).has_value() );
  }
  CHECK( load_builtin( "drosophila" ).size() == 17u );
  CHECK( load_builtin( "budding_yeast" ).size() == 12u );
  CHECK_THROWS_AS( load_builtin( "unknown" ), lookup_error );
}

TEST_CASE( "TFL1 turns on only when LFY = 0, EMF1 = 1 and AP1 = 0", "[models]" )
{
  const auto th = load_builtin( "thaliana" );
  const auto& tfl1 = th.node( *th.find( "TFL1" ) );
  const auto lfy = *tfl1.input_position( *th.find( "LFY" ) );
  const auto emf1 = *tfl1.input_position( *th.find( "EMF1" ) );
  const auto ap1 = *tfl1.input_position( *th.find( "AP1" ) );
  for ( std::uint64_t r = 0u; r < tfl1.num_rows(); ++r )
  {
    const auto p = row_to_pattern( r, tfl1.k() );
    const bool expected = p[lfy] == 0u && p[emf1] == 1u && p[ap1] == 0u;
    CHECK( tfl1.output( r ) == ( expected ? 1u : 0u ) );
  }
}

TEST_CASE( "model directory override", "[models]" )
{
  const auto dir = std::filesystem::temp_directory_path() / "bnkit_model_override";
  std::filesystem::create_directories( dir );
  {
    std::ofstream( dir / "thaliana.cnet" ) << ".v 1\n.n 1 0\n1\n.e\n";
  }
  ::setenv( "BNKIT_MODEL_DIR", dir.c_str(), 1 );
  const auto net = load_builtin( "thaliana" );
  ::unsetenv( "BNKIT_MODEL_DIR" );
  std::filesystem::remove_all( dir );
  CHECK( net.size() == 1u );
  CHECK( load_builtin( "thaliana" ).size() == 15u );
}
