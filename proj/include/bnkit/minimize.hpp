/*!
  \file minimize.hpp
  \brief Schema redescription of look-up tables

  Wildcard schemata are the prime implicants of a node's ON-set and OFF-set,
  found by Quine-McCluskey merging. Two-symbol schemata further group input
  positions whose symbols may be permuted freely.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "core.hpp"

namespace bnkit
{

/*! \brief Largest in-degree accepted by the exact minimizer */
inline constexpr std::size_t k_max = 16u;

/*! \brief Largest number of grouped positions verified by full permutation expansion */
inline constexpr std::size_t max_grouped_positions = 12u;

enum class symbol : std::uint8_t
{
  wildcard = 0, // '#'
  zero = 1,
  one = 2
};

inline char to_char( symbol s )
{
  return s == symbol::wildcard ? '#' : ( s == symbol::zero ? '0' : '1' );
}

/*! \brief A wildcard schema over k inputs

  Literal t constrains input t. In the masks, input t occupies bit k-1-t so
  that a schema covers a look-up table row r iff (r & care) == value.
*/
struct schema
{
  std::uint32_t care = 0u;
  std::uint32_t value = 0u;
  std::uint8_t k = 0u;
  std::uint8_t output = 0u;

  std::uint32_t bit( std::size_t t ) const { return std::uint32_t{ 1 } << ( k - 1u - t ); }

  symbol literal( std::size_t t ) const
  {
    if ( !( care & bit( t ) ) )
    {
      return symbol::wildcard;
    }
    return ( value & bit( t ) ) ? symbol::one : symbol::zero;
  }

  void set_literal( std::size_t t, symbol s )
  {
    const auto b = bit( t );
    care &= ~b;
    value &= ~b;
    if ( s != symbol::wildcard )
    {
      care |= b;
      if ( s == symbol::one )
      {
        value |= b;
      }
    }
  }

  std::size_t num_wildcards() const { return k - static_cast<std::size_t>( std::popcount( care ) ); }

  bool is_wildcard( std::size_t t ) const { return !( care & bit( t ) ); }

  std::string to_string() const
  {
    std::string s( k, '#' );
    for ( std::size_t t = 0u; t < k; ++t )
    {
      s[t] = to_char( literal( t ) );
    }
    return s;
  }

  std::uint64_t key() const { return ( std::uint64_t{ care } << 32u ) | value; }

  friend bool operator==( const schema&, const schema& ) = default;
};

/*! \brief Lexicographic order on literal strings ('#' < '0' < '1'), then output */
inline bool operator<( const schema& a, const schema& b )
{
  const auto sa = a.to_string(), sb = b.to_string();
  return sa != sb ? sa < sb : a.output < b.output;
}

/*! \brief Parses a literal string such as "0#1" */
inline schema make_schema( std::string_view literals, std::uint8_t output )
{
  if ( literals.size() > 32u )
  {
    throw argument_error( "schema longer than 32 literals" );
  }
  schema s{ 0u, 0u, static_cast<std::uint8_t>( literals.size() ), output };
  for ( std::size_t t = 0u; t < literals.size(); ++t )
  {
    switch ( literals[t] )
    {
    case '#':
    case '-':
    case '2':
      break;
    case '0':
      s.set_literal( t, symbol::zero );
      break;
    case '1':
      s.set_literal( t, symbol::one );
      break;
    default:
      throw argument_error( "invalid schema literal '" + std::string( 1, literals[t] ) + "'" );
    }
  }
  return s;
}

inline bool covers( const schema& s, std::uint64_t row ) { return ( row & s.care ) == s.value; }

inline bool covers( const schema& s, std::span<const std::uint8_t> pattern )
{
  if ( pattern.size() != s.k )
  {
    throw argument_error( "pattern length " + std::to_string( pattern.size() ) + " does not match schema length " +
                          std::to_string( s.k ) );
  }
  return covers( s, pattern_to_row( pattern ) );
}

/*! \brief All look-up table rows covered by a schema, ascending */
inline std::vector<std::uint64_t> expand( const schema& s )
{
  std::vector<std::uint64_t> rows;
  const std::uint32_t full = s.k == 32u ? ~std::uint32_t{ 0 } : ( ( std::uint32_t{ 1 } << s.k ) - 1u );
  const std::uint32_t free_mask = ~s.care & full;
  std::uint32_t sub = 0u;
  do
  {
    rows.push_back( s.value | sub );
    sub = ( sub - free_mask ) & free_mask;
  } while ( sub != 0u );
  std::sort( rows.begin(), rows.end() );
  return rows;
}

namespace detail
{

inline void check_capacity( const boolean_node& node )
{
  if ( node.k() > k_max )
  {
    throw capacity_error( "node '" + node.name() + "' has " + std::to_string( node.k() ) +
                          " inputs; exact minimization is limited to k <= " + std::to_string( k_max ) );
  }
}

} // namespace detail

/*! \brief Prime implicants of the set of rows whose output equals `value`

  Iterative pairwise merging: at each level, two implicants with equal care
  masks that differ in a single cared bit merge into one with that bit freed.
  Implicants that never merge are prime. Sorted by literal string.
*/
inline std::vector<schema> prime_implicants( const boolean_node& node, std::uint8_t value )
{
  detail::check_capacity( node );
  const auto k = static_cast<std::uint8_t>( node.k() );
  const std::uint32_t full = ( std::uint32_t{ 1 } << k ) - 1u;

  std::vector<schema> primes;
  std::vector<schema> level;
  for ( std::uint64_t r = 0u; r < node.num_rows(); ++r )
  {
    if ( node.output( r ) == value )
    {
      level.push_back( schema{ full, static_cast<std::uint32_t>( r ), k, value } );
    }
  }
  if ( level.empty() )
  {
    return primes;
  }
  if ( level.size() == node.num_rows() )
  {
    return { schema{ 0u, 0u, k, value } };
  }

  while ( !level.empty() )
  {
    std::unordered_set<std::uint64_t> present;
    present.reserve( level.size() * 2u );
    for ( const auto& s : level )
    {
      present.insert( s.key() );
    }
    std::unordered_set<std::uint64_t> merged, produced;
    std::vector<schema> next;
    for ( const auto& s : level )
    {
      for ( std::uint32_t rest = s.care & ~s.value; rest; rest &= rest - 1u )
      {
        const std::uint32_t b = rest & ( ~rest + 1u );
        const schema partner{ s.care, s.value | b, k, value };
        if ( present.count( partner.key() ) )
        {
          merged.insert( s.key() );
          merged.insert( partner.key() );
          const schema m{ s.care & ~b, s.value, k, value };
          if ( produced.insert( m.key() ).second )
          {
            next.push_back( m );
          }
        }
      }
    }
    for ( const auto& s : level )
    {
      if ( !merged.count( s.key() ) )
      {
        primes.push_back( s );
      }
    }
    level = std::move( next );
  }
  std::sort( primes.begin(), primes.end() );
  return primes;
}

/*! \brief Wildcard redescription: prime implicants of the OFF-set followed by those of the ON-set */
inline std::vector<schema> wildcard_schemata( const boolean_node& node )
{
  auto result = prime_implicants( node, 0u );
  auto ones = prime_implicants( node, 1u );
  result.insert( result.end(), ones.begin(), ones.end() );
  return result;
}

/*! \brief A set of input positions whose symbols may be permuted freely

  The symbol multiset is stored as counts; `zeros + ones + wildcards` equals
  the number of positions.
*/
struct symbol_group
{
  std::vector<std::size_t> positions;
  std::size_t zeros = 0u;
  std::size_t ones = 0u;
  std::size_t wildcards = 0u;

  /*! \brief A group whose symbols are all identical permutes onto itself */
  bool is_trivial() const
  {
    const auto n = positions.size();
    return zeros == n || ones == n || wildcards == n;
  }

  friend bool operator==( const symbol_group&, const symbol_group& ) = default;
};

struct two_symbol_schema
{
  schema representative;
  std::vector<symbol_group> groups;

  std::uint8_t output() const { return representative.output; }
  std::size_t k() const { return representative.k; }

  /*! \brief Number of position-free marks */
  std::size_t num_position_free() const
  {
    std::size_t n = 0u;
    for ( const auto& g : groups )
    {
      n += g.positions.size();
    }
    return n;
  }

  bool is_position_free( std::size_t t ) const
  {
    return std::any_of( groups.begin(), groups.end(), [t]( const auto& g ) {
      return std::find( g.positions.begin(), g.positions.end(), t ) != g.positions.end();
    } );
  }

  /*! \brief Literal string with position-free inputs shown as 'o' */
  std::string to_string() const
  {
    auto s = representative.to_string();
    for ( const auto& g : groups )
    {
      for ( auto p : g.positions )
      {
        s[p] = 'o';
      }
    }
    return s;
  }

  friend bool operator==( const two_symbol_schema&, const two_symbol_schema& ) = default;
};

/*! \brief Row coverage by counting: every group must supply its required zeros and ones */
inline bool covers( const two_symbol_schema& ts, std::uint64_t row )
{
  const auto& rep = ts.representative;
  std::uint32_t fixed_care = rep.care;
  for ( const auto& g : ts.groups )
  {
    std::size_t c0 = 0u, c1 = 0u;
    for ( auto p : g.positions )
    {
      fixed_care &= ~rep.bit( p );
      if ( ( row >> ( rep.k - 1u - p ) ) & 1u )
      {
        ++c1;
      }
      else
      {
        ++c0;
      }
    }
    if ( c0 < g.zeros || c1 < g.ones )
    {
      return false;
    }
  }
  return ( row & fixed_care ) == ( rep.value & fixed_care );
}

inline bool covers( const two_symbol_schema& ts, std::span<const std::uint8_t> pattern )
{
  if ( pattern.size() != ts.k() )
  {
    throw argument_error( "pattern length " + std::to_string( pattern.size() ) + " does not match schema length " +
                          std::to_string( ts.k() ) );
  }
  return covers( ts, pattern_to_row( pattern ) );
}

namespace detail
{

/*! \brief Calls fn for every schema obtained by permuting symbols within each group */
template<typename Fn>
bool for_each_permutation( const schema& base, const std::vector<symbol_group>& groups, Fn&& fn )
{
  std::vector<std::vector<symbol>> symbols( groups.size() );
  for ( std::size_t g = 0u; g < groups.size(); ++g )
  {
    for ( auto p : groups[g].positions )
    {
      symbols[g].push_back( base.literal( p ) );
    }
    std::sort( symbols[g].begin(), symbols[g].end() );
  }
  // odometer over the groups' permutation sequences
  auto current = base;
  auto apply = [&]( std::size_t g ) {
    for ( std::size_t i = 0u; i < groups[g].positions.size(); ++i )
    {
      current.set_literal( groups[g].positions[i], symbols[g][i] );
    }
  };
  for ( std::size_t g = 0u; g < groups.size(); ++g )
  {
    apply( g );
  }
  while ( true )
  {
    if ( !fn( current ) )
    {
      return false;
    }
    std::size_t g = 0u;
    for ( ; g < groups.size(); ++g )
    {
      const bool more = std::next_permutation( symbols[g].begin(), symbols[g].end() );
      apply( g );
      if ( more )
      {
        break;
      }
    }
    if ( g == groups.size() )
    {
      return true;
    }
  }
}

inline symbol_group make_group( const schema& s, std::vector<std::size_t> positions )
{
  std::sort( positions.begin(), positions.end() );
  symbol_group g;
  for ( auto p : positions )
  {
    switch ( s.literal( p ) )
    {
    case symbol::zero:
      ++g.zeros;
      break;
    case symbol::one:
      ++g.ones;
      break;
    case symbol::wildcard:
      ++g.wildcards;
      break;
    }
  }
  g.positions = std::move( positions );
  return g;
}

} // namespace detail

/*! \brief All wildcard schemata redescribed by a two-symbol schema, sorted */
inline std::vector<schema> expand_schemata( const two_symbol_schema& ts )
{
  std::vector<schema> result;
  detail::for_each_permutation( ts.representative, ts.groups, [&]( const schema& s ) {
    result.push_back( s );
    return true;
  } );
  std::sort( result.begin(), result.end() );
  result.erase( std::unique( result.begin(), result.end() ), result.end() );
  return result;
}

/*! \brief All look-up table rows covered by some permutation of a two-symbol schema */
inline std::vector<std::uint64_t> expand( const two_symbol_schema& ts )
{
  std::set<std::uint64_t> rows;
  for ( const auto& s : expand_schemata( ts ) )
  {
    for ( auto r : expand( s ) )
    {
      rows.insert( r );
    }
  }
  return { rows.begin(), rows.end() };
}

struct two_symbol_options
{
  /*! \brief Also report groups of positions sharing an identical literal */
  bool trivial_groups = false;
};

namespace detail
{

class group_finder
{
public:
  explicit group_finder( const std::vector<schema>& primes )
  {
    for ( const auto& s : primes )
    {
      primes_.insert( s.key() );
    }
  }

  bool contains( const schema& s ) const { return primes_.count( s.key() ) != 0u; }

  bool closed( const schema& s, const std::vector<symbol_group>& groups ) const
  {
    return for_each_permutation( s, groups, [this]( const schema& p ) { return contains( p ); } );
  }

  /*! \brief Greedy group construction around one prime implicant

    Seeds are position pairs holding different symbols whose swap is another
    prime implicant; each seed grows by every further position that keeps all
    permutations inside the prime implicant set.
  */
  std::vector<symbol_group> grow( const schema& s ) const
  {
    const std::size_t k = s.k;
    std::vector<symbol_group> groups;
    std::vector<bool> used( k, false );
    std::size_t grouped = 0u;

    auto try_extend = [&]( std::size_t gi, std::size_t p ) {
      if ( grouped + 1u > max_grouped_positions )
      {
        return false;
      }
      auto positions = groups[gi].positions;
      positions.push_back( p );
      auto trial = groups;
      trial[gi] = make_group( s, positions );
      if ( !closed( s, trial ) )
      {
        return false;
      }
      groups = std::move( trial );
      used[p] = true;
      ++grouped;
      return true;
    };

    for ( std::size_t i = 0u; i < k; ++i )
    {
      if ( used[i] )
      {
        continue;
      }
      for ( std::size_t j = i + 1u; j < k; ++j )
      {
        if ( used[j] || s.literal( i ) == s.literal( j ) || grouped + 2u > max_grouped_positions )
        {
          continue;
        }
        auto trial = groups;
        trial.push_back( make_group( s, { i, j } ) );
        if ( !closed( s, trial ) )
        {
          continue;
        }
        groups = std::move( trial );
        used[i] = used[j] = true;
        grouped += 2u;
        for ( std::size_t p = i + 1u; p < k; ++p )
        {
          if ( !used[p] )
          {
            try_extend( groups.size() - 1u, p );
          }
        }
        break;
      }
    }

    // saturate: a position rejected earlier may fit once a group has grown
    for ( bool changed = true; changed; )
    {
      changed = false;
      for ( std::size_t gi = 0u; gi < groups.size(); ++gi )
      {
        for ( std::size_t p = 0u; p < k; ++p )
        {
          if ( !used[p] && try_extend( gi, p ) )
          {
            changed = true;
          }
        }
      }
    }
    return groups;
  }

private:
  std::unordered_set<std::uint64_t> primes_;
};

inline void add_trivial_groups( two_symbol_schema& ts )
{
  const auto& s = ts.representative;
  for ( auto sym : { symbol::wildcard, symbol::zero, symbol::one } )
  {
    std::vector<std::size_t> positions;
    for ( std::size_t t = 0u; t < s.k; ++t )
    {
      if ( s.literal( t ) == sym && !ts.is_position_free( t ) )
      {
        positions.push_back( t );
      }
    }
    if ( positions.size() >= 2u )
    {
      ts.groups.push_back( make_group( s, std::move( positions ) ) );
    }
  }
}

inline void canonicalize( two_symbol_schema& ts )
{
  // representative: lexicographically smallest member of the permutation orbit
  ts.representative = expand_schemata( ts ).front();
  for ( auto& g : ts.groups )
  {
    g = make_group( ts.representative, g.positions );
  }
  std::sort( ts.groups.begin(), ts.groups.end(),
             []( const auto& a, const auto& b ) { return a.positions.front() < b.positions.front(); } );
}

} // namespace detail

/*! \brief Two-symbol schemata redescribing the prime implicants of one output value

  Every prime implicant lies in the permutation orbit of some returned schema,
  every orbit member is a prime implicant, and no returned orbit is strictly
  contained in another.
*/
inline std::vector<two_symbol_schema> two_symbol_schemata( const boolean_node& node, std::uint8_t value,
                                                           const two_symbol_options& options = {} )
{
  const auto primes = prime_implicants( node, value );
  detail::group_finder finder( primes );

  struct candidate
  {
    two_symbol_schema ts;
    std::vector<schema> orbit;
  };
  std::vector<candidate> candidates;
  for ( const auto& s : primes )
  {
    two_symbol_schema ts{ s, finder.grow( s ) };
    detail::canonicalize( ts );
    auto orbit = expand_schemata( ts );
    const bool seen = std::any_of( candidates.begin(), candidates.end(),
                                   [&]( const auto& c ) { return c.orbit == orbit; } );
    if ( !seen )
    {
      candidates.push_back( { std::move( ts ), std::move( orbit ) } );
    }
  }

  std::vector<two_symbol_schema> result;
  for ( std::size_t a = 0u; a < candidates.size(); ++a )
  {
    const bool dominated = std::any_of( candidates.begin(), candidates.end(), [&]( const auto& other ) {
      return other.orbit.size() > candidates[a].orbit.size() &&
             std::includes( other.orbit.begin(), other.orbit.end(), candidates[a].orbit.begin(), candidates[a].orbit.end() );
    } );
    if ( !dominated )
    {
      result.push_back( candidates[a].ts );
    }
  }
  if ( options.trivial_groups )
  {
    for ( auto& ts : result )
    {
      detail::add_trivial_groups( ts );
      std::sort( ts.groups.begin(), ts.groups.end(),
                 []( const auto& a, const auto& b ) { return a.positions.front() < b.positions.front(); } );
    }
  }
  std::sort( result.begin(), result.end(), []( const auto& a, const auto& b ) {
    return a.representative < b.representative;
  } );
  return result;
}

/*! \brief Two-symbol redescription of both output values, OFF-set first */
inline std::vector<two_symbol_schema> two_symbol_schemata( const boolean_node& node, const two_symbol_options& options = {} )
{
  auto result = two_symbol_schemata( node, 0u, options );
  auto ones = two_symbol_schemata( node, 1u, options );
  result.insert( result.end(), ones.begin(), ones.end() );
  return result;
}

} // namespace bnkit
