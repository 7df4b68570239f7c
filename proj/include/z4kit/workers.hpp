#pragma once

#include "z4kit/parallel.hpp"

namespace z4kit {

// Thread pool runner. workers <= 1 runs serially on the calling thread.
Runner thread_runner(unsigned workers);

// Worker count from Z4KIT_WORKERS, falling back to `fallback`.
unsigned default_worker_count(unsigned fallback = 1);

}  // namespace z4kit
