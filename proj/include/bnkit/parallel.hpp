/*!
  \file parallel.hpp
  \brief Minimal fork-join loop over an index range
*/

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bnkit
{

/*! \brief Resolves a requested worker count; 0 means all available cores */
inline std::size_t resolve_threads( std::size_t requested )
{
  if ( requested != 0u )
  {
    return requested;
  }
  return std::max<std::size_t>( 1u, std::thread::hardware_concurrency() );
}

/*! \brief Runs fn(i) for i in [0, n) on up to `threads` workers

  Indices are handed out dynamically in blocks. The first exception thrown by
  any worker is rethrown on the calling thread.
*/
template<typename Fn>
void parallel_for( std::size_t n, std::size_t threads, Fn&& fn, std::size_t block = 1u )
{
  threads = std::min( resolve_threads( threads ), std::max<std::size_t>( 1u, ( n + block - 1u ) / block ) );
  if ( threads <= 1u )
  {
    for ( std::size_t i = 0u; i < n; ++i )
    {
      fn( i );
    }
    return;
  }

  std::atomic<std::size_t> next{ 0u };
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> stop{ false };

  auto worker = [&]() {
    while ( !stop.load( std::memory_order_relaxed ) )
    {
      const auto begin = next.fetch_add( block );
      if ( begin >= n )
      {
        return;
      }
      const auto end = std::min( n, begin + block );
      try
      {
        for ( auto i = begin; i < end; ++i )
        {
          fn( i );
        }
      }
      catch ( ... )
      {
        std::lock_guard lock( failure_mutex );
        if ( !failure )
        {
          failure = std::current_exception();
        }
        stop = true;
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve( threads - 1u );
  for ( std::size_t t = 1u; t < threads; ++t )
  {
    pool.emplace_back( worker );
  }
  worker();
  for ( auto& th : pool )
  {
    th.join();
  }
  if ( failure )
  {
    std::rethrow_exception( failure );
  }
}

} // namespace bnkit
