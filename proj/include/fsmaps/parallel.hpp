#pragma once

#include <cstddef>
#include <functional>

namespace fsmaps {

/// Worker count used by the exhaustive enumerations. 0 restores the default
/// (hardware concurrency). Results never depend on this value.
void set_thread_count(unsigned threads);
unsigned thread_count();

/// Runs body(i) for i in [0, n) on thread_count() workers; `body` receives the
/// worker index as its second argument.
void parallel_for(std::size_t n, const std::function<void(std::size_t item, unsigned worker)>& body);

}  // namespace fsmaps
