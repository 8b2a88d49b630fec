#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adnil {

// jobs semantics everywhere: 1 = the serial reference path, k >= 2 = k
// shards, 0 = one shard per available thread.
inline int resolve_jobs(int jobs) {
  if (jobs < 0) jobs = 0;
#ifdef _OPENMP
  if (jobs == 0) jobs = omp_get_max_threads();
#else
  if (jobs == 0) jobs = 1;
#endif
  return std::max(jobs, 1);
}

// Splits [0, count) into contiguous shards and calls
// work(shard_index, begin, end) for each, in parallel when OpenMP is
// available.  Every shard writes only to its own slot, so results merged in
// shard order are independent of the thread count.
template <class Fn>
void for_each_shard(std::size_t count, int jobs, Fn&& work) {
  const std::size_t shards =
      std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)),
                            std::max<std::size_t>(count, 1));
  auto shard_range = [&](std::size_t s) {
    const std::size_t begin = count * s / shards;
    const std::size_t end = count * (s + 1) / shards;
    return std::pair<std::size_t, std::size_t>(begin, end);
  };
#ifdef _OPENMP
  if (shards > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(shards))
    for (long long s = 0; s < static_cast<long long>(shards); ++s) {
      auto [begin, end] = shard_range(static_cast<std::size_t>(s));
      work(static_cast<std::size_t>(s), begin, end);
    }
    return;
  }
#endif
  for (std::size_t s = 0; s < shards; ++s) {
    auto [begin, end] = shard_range(s);
    work(s, begin, end);
  }
}

}  // namespace adnil
