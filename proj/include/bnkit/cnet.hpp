/*!
  \file cnet.hpp
  \brief Reader and writer for the .cnet truth-table format

  Grammar of the accepted dialect:

    # ...                       comment
    # node <id> = <name>        node label (comment form)
    .v <N>                      header, first directive
    .l <id> <name>              node label
    .n <id> <k> <id_1> ... <id_k>
    <pattern> <bit>             look-up table row, pattern over {0,1,-}^k
    .e                          end of document (optional)

  Ids are 1-based in files and 0-based in memory. The first pattern character
  refers to `id_1`, the most significant input. Rows containing `-` expand to
  every matching pattern. The writer emits every row fully expanded.
*/

#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace bnkit
{

enum class cnet_error_kind
{
  syntax,
  missing_header,
  duplicate_node,
  undeclared_node,
  contradiction,
  missing_rows,
  node_count
};

inline const char* to_string( cnet_error_kind kind )
{
  switch ( kind )
  {
  case cnet_error_kind::syntax:
    return "syntax error";
  case cnet_error_kind::missing_header:
    return "missing header";
  case cnet_error_kind::duplicate_node:
    return "duplicate node";
  case cnet_error_kind::undeclared_node:
    return "undeclared node";
  case cnet_error_kind::contradiction:
    return "contradictory rows";
  case cnet_error_kind::missing_rows:
    return "missing rows";
  case cnet_error_kind::node_count:
    return "node count mismatch";
  }
  return "error";
}

class cnet_parse_error : public error
{
public:
  cnet_parse_error( cnet_error_kind kind, std::size_t line, const std::string& message )
      : error( "line " + std::to_string( line ) + ": " + to_string( kind ) + ": " + message ), kind_( kind ), line_( line )
  {
  }

  cnet_error_kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

private:
  cnet_error_kind kind_;
  std::size_t line_;
};

struct cnet_options
{
  /*! \brief Accept the permissive dialect of published model files

    Unlisted rows default to output 0, and a `k = 0` node without a row keeps
    its own state (it becomes a self-loop identity node).
  */
  bool unlisted_rows_are_off = false;
};

namespace detail
{

inline std::vector<std::string_view> split_ws( std::string_view s )
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0u;
  while ( i < s.size() )
  {
    while ( i < s.size() && std::isspace( static_cast<unsigned char>( s[i] ) ) )
    {
      ++i;
    }
    const auto start = i;
    while ( i < s.size() && !std::isspace( static_cast<unsigned char>( s[i] ) ) )
    {
      ++i;
    }
    if ( i > start )
    {
      tokens.push_back( s.substr( start, i - start ) );
    }
  }
  return tokens;
}

inline std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
  {
    s.remove_prefix( 1 );
  }
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

inline std::optional<std::size_t> to_index( std::string_view token )
{
  if ( token.empty() || token.size() > 9u )
  {
    return std::nullopt;
  }
  std::size_t v = 0u;
  for ( char c : token )
  {
    if ( c < '0' || c > '9' )
    {
      return std::nullopt;
    }
    v = v * 10u + static_cast<std::size_t>( c - '0' );
  }
  return v;
}

struct node_block
{
  std::size_t line;
  std::vector<std::size_t> inputs;
  std::vector<std::int8_t> rows; // -1 = unlisted
  bool has_row = false;
};

} // namespace detail

/*! \brief Parses a .cnet document into a network with 0-based node ids */
inline boolean_network parse_cnet( std::string_view text, const cnet_options& options = {}, std::string name = {} )
{
  using detail::to_index;

  std::optional<std::size_t> num_nodes;
  std::map<std::size_t, std::string> labels;
  std::vector<std::optional<detail::node_block>> blocks;
  detail::node_block* current = nullptr;
  std::size_t line_no = 0u;

  auto fail = [&]( cnet_error_kind kind, const std::string& msg ) -> cnet_parse_error {
    return cnet_parse_error( kind, line_no, msg );
  };

  auto node_index = [&]( std::string_view token, cnet_error_kind kind ) {
    auto id = to_index( token );
    if ( !id )
    {
      throw fail( cnet_error_kind::syntax, "expected a node id, got '" + std::string( token ) + "'" );
    }
    if ( *id < 1u || *id > *num_nodes )
    {
      throw fail( kind, "node id " + std::to_string( *id ) + " outside 1.." + std::to_string( *num_nodes ) );
    }
    return *id - 1u;
  };

  std::size_t pos = 0u;
  while ( pos <= text.size() )
  {
    auto eol = text.find( '\n', pos );
    if ( eol == std::string_view::npos )
    {
      eol = text.size();
    }
    const auto line = detail::trim( text.substr( pos, eol - pos ) );
    pos = eol + 1u;
    ++line_no;

    if ( line.empty() )
    {
      continue;
    }
    if ( line.front() == '#' )
    {
      // "# node <id> = <name>"
      const auto tokens = detail::split_ws( line.substr( 1 ) );
      if ( tokens.size() >= 4u && tokens[0] == "node" && tokens[2] == "=" )
      {
        if ( auto id = to_index( tokens[1] ); id && *id >= 1u )
        {
          const auto at = line.find( '=' );
          labels.emplace( *id - 1u, std::string( detail::trim( line.substr( at + 1u ) ) ) );
        }
      }
      continue;
    }

    const auto tokens = detail::split_ws( line );
    if ( line.front() == '.' )
    {
      const auto directive = tokens[0];
      if ( directive == ".e" )
      {
        break;
      }
      if ( directive == ".v" )
      {
        if ( num_nodes )
        {
          throw fail( cnet_error_kind::syntax, "repeated .v header" );
        }
        if ( tokens.size() != 2u || !to_index( tokens[1] ) )
        {
          throw fail( cnet_error_kind::syntax, "expected '.v <N>'" );
        }
        num_nodes = *to_index( tokens[1] );
        blocks.resize( *num_nodes );
        continue;
      }
      if ( !num_nodes )
      {
        throw fail( cnet_error_kind::missing_header, "'" + std::string( directive ) + "' before the .v header" );
      }
      if ( directive == ".l" )
      {
        if ( tokens.size() < 3u )
        {
          throw fail( cnet_error_kind::syntax, "expected '.l <id> <name>'" );
        }
        const auto id = node_index( tokens[1], cnet_error_kind::undeclared_node );
        const auto at = static_cast<std::size_t>( tokens[2].data() - line.data() );
        labels[id] = std::string( detail::trim( line.substr( at ) ) );
        continue;
      }
      if ( directive == ".n" )
      {
        if ( tokens.size() < 3u )
        {
          throw fail( cnet_error_kind::syntax, "expected '.n <id> <k> <inputs...>'" );
        }
        const auto id = node_index( tokens[1], cnet_error_kind::undeclared_node );
        const auto k = to_index( tokens[2] );
        if ( !k )
        {
          throw fail( cnet_error_kind::syntax, "invalid in-degree '" + std::string( tokens[2] ) + "'" );
        }
        if ( tokens.size() != 3u + *k )
        {
          throw fail( cnet_error_kind::syntax, "node " + std::string( tokens[1] ) + " declares " + std::to_string( *k ) +
                                                   " inputs but lists " + std::to_string( tokens.size() - 3u ) );
        }
        if ( *k > lut_max_inputs )
        {
          throw capacity_error( "line " + std::to_string( line_no ) + ": in-degree " + std::to_string( *k ) +
                                " exceeds the look-up table limit of " + std::to_string( lut_max_inputs ) );
        }
        if ( blocks[id] )
        {
          throw fail( cnet_error_kind::duplicate_node, "node " + std::string( tokens[1] ) + " defined twice (first at line " +
                                                           std::to_string( blocks[id]->line ) + ")" );
        }
        detail::node_block block{ line_no, {}, std::vector<std::int8_t>( std::size_t{ 1 } << *k, -1 ) };
        for ( std::size_t t = 0u; t < *k; ++t )
        {
          const auto input = node_index( tokens[3u + t], cnet_error_kind::undeclared_node );
          if ( std::find( block.inputs.begin(), block.inputs.end(), input ) != block.inputs.end() )
          {
            throw fail( cnet_error_kind::syntax, "input " + std::string( tokens[3u + t] ) + " listed twice" );
          }
          block.inputs.push_back( input );
        }
        blocks[id] = std::move( block );
        current = &*blocks[id];
        continue;
      }
      throw fail( cnet_error_kind::syntax, "unknown directive '" + std::string( directive ) + "'" );
    }

    // look-up table row
    if ( !current )
    {
      throw fail( cnet_error_kind::syntax, "row outside of a .n block" );
    }
    const auto k = current->inputs.size();
    std::string_view pattern, output;
    if ( k == 0u && tokens.size() == 1u )
    {
      output = tokens[0];
    }
    else if ( tokens.size() == 2u )
    {
      pattern = tokens[0];
      output = tokens[1];
    }
    else
    {
      throw fail( cnet_error_kind::syntax, "expected '<pattern> <bit>'" );
    }
    if ( pattern.size() != k )
    {
      throw fail( cnet_error_kind::syntax, "pattern '" + std::string( pattern ) + "' has length " +
                                               std::to_string( pattern.size() ) + ", expected " + std::to_string( k ) );
    }
    if ( output != "0" && output != "1" )
    {
      throw fail( cnet_error_kind::syntax, "output must be 0 or 1, got '" + std::string( output ) + "'" );
    }
    std::uint64_t fixed = 0u, free_mask = 0u;
    for ( std::size_t t = 0u; t < k; ++t )
    {
      const auto bit = std::uint64_t{ 1 } << ( k - 1u - t );
      switch ( pattern[t] )
      {
      case '0':
        break;
      case '1':
        fixed |= bit;
        break;
      case '-':
        free_mask |= bit;
        break;
      default:
        throw fail( cnet_error_kind::syntax, "pattern character '" + std::string( 1, pattern[t] ) + "' is not 0, 1 or -" );
      }
    }
    const auto value = static_cast<std::int8_t>( output == "1" ? 1 : 0 );
    // enumerate all subsets of the free positions
    std::uint64_t sub = 0u;
    do
    {
      auto& slot = current->rows[fixed | sub];
      if ( slot != -1 && slot != value )
      {
        throw fail( cnet_error_kind::contradiction,
                    "pattern " + row_pattern_string( fixed | sub, k ) + " assigned both outputs" );
      }
      slot = value;
      sub = ( sub - free_mask ) & free_mask;
    } while ( sub != 0u );
    current->has_row = true;
  }

  if ( !num_nodes )
  {
    throw cnet_parse_error( cnet_error_kind::missing_header, line_no, "document has no .v header" );
  }

  std::vector<boolean_node> nodes;
  nodes.reserve( *num_nodes );
  for ( std::size_t i = 0u; i < *num_nodes; ++i )
  {
    if ( !blocks[i] )
    {
      throw cnet_parse_error( cnet_error_kind::node_count, line_no,
                              ".v declares " + std::to_string( *num_nodes ) + " nodes but node " +
                                  std::to_string( i + 1u ) + " has no .n block" );
    }
    auto& block = *blocks[i];
    auto label = labels.count( i ) ? labels[i] : "x" + std::to_string( i + 1u );

    if ( block.inputs.empty() && !block.has_row && options.unlisted_rows_are_off )
    {
      nodes.emplace_back( i, std::move( label ), std::vector<std::size_t>{ i }, bit_vector{ 0u, 1u } );
      continue;
    }
    bit_vector lut( block.rows.size() );
    for ( std::size_t r = 0u; r < block.rows.size(); ++r )
    {
      if ( block.rows[r] == -1 )
      {
        if ( !options.unlisted_rows_are_off )
        {
          throw cnet_parse_error( cnet_error_kind::missing_rows, block.line,
                                  "node " + std::to_string( i + 1u ) + " has no row for pattern " +
                                      row_pattern_string( r, block.inputs.size() ) );
        }
        lut[r] = 0u;
      }
      else
      {
        lut[r] = static_cast<std::uint8_t>( block.rows[r] );
      }
    }
    nodes.emplace_back( i, std::move( label ), std::move( block.inputs ), std::move( lut ) );
  }
  return boolean_network( std::move( nodes ), std::move( name ) );
}

/*! \brief Writes a network with every look-up table row expanded */
inline std::string write_cnet( const boolean_network& net )
{
  std::ostringstream os;
  if ( !net.name().empty() )
  {
    os << "# " << net.name() << "\n";
  }
  os << ".v " << net.size() << "\n\n";
  for ( const auto& node : net.nodes() )
  {
    os << ".l " << node.id() + 1u << " " << node.name() << "\n";
  }
  for ( const auto& node : net.nodes() )
  {
    os << "\n.n " << node.id() + 1u << " " << node.k();
    for ( auto j : node.inputs() )
    {
      os << " " << j + 1u;
    }
    os << "\n";
    for ( std::uint64_t r = 0u; r < node.num_rows(); ++r )
    {
      if ( node.k() > 0u )
      {
        os << row_pattern_string( r, node.k() ) << " ";
      }
      os << static_cast<int>( node.output( r ) ) << "\n";
    }
  }
  os << "\n.e end of file\n";
  return os.str();
}

} // namespace bnkit
