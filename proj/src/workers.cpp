#include "z4kit/workers.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace z4kit {

Runner thread_runner(unsigned workers) {
  if (workers <= 1) return serial_runner();
  return [workers](std::size_t count, const TaskBody& body) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto loop = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    };
    const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < spawn; ++w) pool.emplace_back(loop);
      loop();
    }
    if (failure) std::rethrow_exception(failure);
  };
}

unsigned default_worker_count(unsigned fallback) {
  if (const char* env = std::getenv("Z4KIT_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return fallback;
}

}  // namespace z4kit
