#ifndef SHELLKIT_PARALLEL_HPP
#define SHELLKIT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace shellkit::detail {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index is
/// processed exactly once; the first exception is rethrown after joining.
template <class Fn>
void parallel_for(int count, int threads, Fn&& fn)
{
	threads = std::clamp(threads, 1, std::max(count, 1));
	if (threads == 1) {
		for (int i = 0; i < count; ++i) {
			fn(i);
		}
		return;
	}
	std::atomic<int> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	std::vector<std::thread> pool;
	pool.reserve(threads);
	for (int t = 0; t < threads; ++t) {
		pool.emplace_back([&] {
			for (int i = next++; i < count; i = next++) {
				try {
					fn(i);
				} catch (...) {
					std::lock_guard lock(failure_mutex);
					if (!failure) {
						failure = std::current_exception();
					}
				}
			}
		});
	}
	for (auto& th : pool) {
		th.join();
	}
	if (failure) {
		std::rethrow_exception(failure);
	}
}

} // namespace shellkit::detail

#endif
