#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace proxyvote {

// Runs fn(chunk) for chunk in [0, chunks) on `workers` threads and returns the
// result of the smallest chunk that produced one. Chunks above the current best
// are skipped, chunks below it always finish, so the answer does not depend on
// scheduling. An exception from the smallest failing chunk is rethrown.
template <class T, class Fn>
std::optional<T> parallel_find_first(std::size_t chunks, unsigned workers, Fn&& fn) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::mutex mu;
  std::optional<T> result;
  std::exception_ptr error;

  auto work = [&] {
    while (true) {
      std::size_t chunk = next.fetch_add(1);
      if (chunk >= chunks || chunk > best.load()) return;
      try {
        std::optional<T> found = fn(chunk);
        if (!found) continue;
        std::lock_guard lock(mu);
        if (chunk < best.load()) {
          best.store(chunk);
          result = std::move(found);
          error = nullptr;
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (chunk < best.load()) {
          best.store(chunk);
          result.reset();
          error = std::current_exception();
        }
      }
    }
  };

  workers = std::max(1u, workers);
  if (workers == 1 || chunks < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, chunks); ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return result;
}

template <class Fn>
std::uint64_t parallel_sum(std::size_t chunks, unsigned workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  std::mutex mu;
  std::exception_ptr error;
  auto work = [&] {
    while (true) {
      std::size_t chunk = next.fetch_add(1);
      if (chunk >= chunks) return;
      try {
        total.fetch_add(fn(chunk));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1 || chunks < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, chunks); ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return total.load();
}

}  // namespace proxyvote
