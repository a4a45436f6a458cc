// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

namespace mtf {

/// Worker count: hardware concurrency, capped by MTF_SPECTRA_THREADS when set to a positive integer.
unsigned worker_count();

/// Calls body(i) for i in [0, count), split into contiguous chunks over worker_count() threads.
/// The first exception thrown by any worker is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace mtf
