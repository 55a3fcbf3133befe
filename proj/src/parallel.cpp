#include "mstruct/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "mstruct/numeric.hpp"

namespace mstruct {

int worker_count() {
  static const int cached = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("MSTRUCT_THREADS")) {
      if (auto parsed = parse_integer(env); parsed && *parsed > 0) {
        return static_cast<int>(std::min<long long>(*parsed, 256));
      }
    }
    return hw;
  }();
  return cached;
}

void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk) {
  if (n <= 0) return;
  const int workers = std::min<std::int64_t>(worker_count(), n);
  if (workers <= 1) {
    chunk(0, n);
    return;
  }
  const std::int64_t per = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = per * w;
    const std::int64_t end = std::min<std::int64_t>(begin + per, n);
    if (begin >= end) break;
    threads.emplace_back([&chunk, begin, end] { chunk(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace mstruct
