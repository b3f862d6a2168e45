/*!
  \file models.hpp
  \brief Bundled example networks

  The model files are stored verbatim under data/models and embedded at build
  time. Setting BNKIT_MODEL_DIR makes load_builtin read `<dir>/<name>.cnet`
  instead of the embedded copy.
*/

#pragma once

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "cnet.hpp"
#include "core.hpp"

#include <bnkit/builtin_models_data.hpp>

namespace bnkit
{

inline constexpr std::array<std::string_view, 3> builtin_model_names = { "thaliana", "drosophila", "budding_yeast" };

/*! \brief Embedded text of a bundled model */
inline std::string_view builtin_model_text( std::string_view name )
{
  if ( name == "thaliana" )
  {
    return detail::thaliana_cnet;
  }
  if ( name == "drosophila" )
  {
    return detail::drosophila_cnet;
  }
  if ( name == "budding_yeast" )
  {
    return detail::budding_yeast_cnet;
  }
  std::string known;
  for ( auto n : builtin_model_names )
  {
    known += known.empty() ? "" : ", ";
    known += n;
  }
  throw lookup_error( "unknown model '" + std::string( name ) + "' (available: " + known + ")" );
}

inline std::string read_text_file( const std::filesystem::path& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw error( "cannot open '" + path.string() + "'" );
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/*! \brief Loads a bundled model in the permissive published-file dialect */
inline boolean_network load_builtin( std::string_view name )
{
  auto text = std::string( builtin_model_text( name ) );
  if ( const char* dir = std::getenv( "BNKIT_MODEL_DIR" ); dir && *dir )
  {
    const auto path = std::filesystem::path( dir ) / ( std::string( name ) + ".cnet" );
    if ( std::filesystem::exists( path ) )
    {
      text = read_text_file( path );
    }
  }
  return parse_cnet( text, cnet_options{ .unlisted_rows_are_off = true }, std::string( name ) );
}

} // namespace bnkit
