// Work sharing over an index range with one state object per worker.

#ifndef ARCWORDS_SRC_PARALLEL_HPP_
#define ARCWORDS_SRC_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace arcwords::detail {

  // Calls body(state, i) for every i in [0, count), each i exactly once, on
  // `jobs` threads. Items are claimed dynamically, so callers must merge the
  // returned states with an order-independent reducer.
  template <typename Make, typename Body>
  auto parallel_shards(std::size_t count, std::size_t jobs, Make make, Body body) {
    using State = decltype(make());
    jobs        = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
    std::vector<State> states;
    states.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      states.push_back(make());
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     run = [&](State& st) {
      try {
        for (std::size_t i = next++; i < count; i = next++) {
          body(st, i);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        next = count;
      }
    };
    if (jobs == 1) {
      run(states[0]);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t j = 0; j < jobs; ++j) {
        threads.emplace_back(run, std::ref(states[j]));
      }
      for (auto& t : threads) {
        t.join();
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }
    return states;
  }

}  // namespace arcwords::detail

#endif  // ARCWORDS_SRC_PARALLEL_HPP_
