#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace etaeigen {

template <class Result>
void ordered_parallel_map(std::size_t count, unsigned workers, const std::function<Result(std::size_t)>& work,
                          const std::function<void(std::size_t, Result&)>& emit) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      Result r = work(i);
      emit(i, r);
    }
    return;
  }

  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<bool> ready(count, false);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancelled{false};
  std::mutex mutex;
  std::condition_variable cv;

  auto worker = [&] {
    while (!cancelled.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      std::optional<Result> r;
      std::exception_ptr err;
      try {
        r.emplace(work(i));
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        slots[i] = std::move(r);
        errors[i] = err;
        ready[i] = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

  std::exception_ptr failure;
  for (std::size_t i = 0; i < count && !failure; ++i) {
    std::optional<Result> r;
    {
      std::unique_lock lock(mutex);
      cv.wait(lock, [&] { return ready[i]; });
      if (errors[i]) {
        failure = errors[i];
        break;
      }
      r = std::move(slots[i]);
    }
    try {
      emit(i, *r);
    } catch (...) {
      failure = std::current_exception();
    }
  }
  if (failure) cancelled = true;
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace etaeigen
