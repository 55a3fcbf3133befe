#pragma once

#include <cstdint>
#include <functional>

namespace mstruct {

/// Worker cap: the MSTRUCT_THREADS environment variable when set to a
/// positive value, otherwise (unset or 0) the hardware thread count.
int worker_count();

/// Splits [0, n) into contiguous chunks and runs `chunk` on each, possibly
/// concurrently. Callers keep results deterministic by writing to disjoint
/// slots and reducing in index order afterwards.
void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t begin, std::int64_t end)>& chunk);

}  // namespace mstruct
