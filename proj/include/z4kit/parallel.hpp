#pragma once

#include <cstddef>
#include <functional>

namespace z4kit {

// Work is exposed as `count` independent tasks; whoever owns the threads
// decides how to run them. Library code never spawns threads itself.
using TaskBody = std::function<void(std::size_t)>;
using Runner = std::function<void(std::size_t count, const TaskBody& body)>;

inline Runner serial_runner() {
  return [](std::size_t count, const TaskBody& body) {
    for (std::size_t i = 0; i < count; ++i) body(i);
  };
}

}  // namespace z4kit
