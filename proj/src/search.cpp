#include "shellkit/search.hpp"

#include "parallel.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <random>
#include <string>

namespace shellkit {

namespace {

// ---------------------------------------------------------------------------
// Depth-first enumeration from above

std::vector<int> ordered_members(IndexSubset s, EnumerationOrder order)
{
	std::vector<int> v = s.to_vector();
	// Pushed in this order, so the last one is expanded first.
	if (order == EnumerationOrder::Lexicographic) {
		std::reverse(v.begin(), v.end());
	}
	return v;
}

/// Runs the DFS below one initial stack entry; returns false if `visit`
/// asked to stop.
bool explore(const PssRowFamily& pss, DfsItem root, EnumerationOrder order,
             const std::function<bool(const Word&)>& visit)
{
	std::vector<DfsItem> stack;
	stack.push_back(std::move(root));
	while (!stack.empty()) {
		DfsItem item = std::move(stack.back());
		stack.pop_back();
		Word extended;
		extended.letters.reserve(item.tail.letters.size() + 1);
		extended.letters.push_back(item.suffix);
		extended.letters.insert(extended.letters.end(), item.tail.letters.begin(), item.tail.letters.end());
		if (item.setment.empty()) {
			if (!visit(extended)) {
				return false;
			}
			continue;
		}
		for (int a : ordered_members(item.setment, order)) {
			const IndexSubset lower = item.setment.without(a);
			if (pss.is_pss(lower, a)) {
				stack.push_back(DfsItem{lower, a, extended});
			}
		}
	}
	return true;
}

std::vector<DfsItem> initial_stack(const PssRowFamily& pss, EnumerationOrder order)
{
	const IndexSubset all = IndexSubset::full(pss.size());
	std::vector<DfsItem> roots;
	std::vector<int> ks = all.to_vector();
	if (order == EnumerationOrder::Arbitrary) {
		std::reverse(ks.begin(), ks.end());
	}
	for (int k : ks) {
		if (pss.is_pss(all.without(k), k)) {
			roots.push_back(DfsItem{all.without(k), k, Word{}});
		}
	}
	return roots;
}

// ---------------------------------------------------------------------------
// Level dynamic programming

using Mask = std::uint64_t;
using Wide = unsigned __int128;

BigCount to_big(Wide w)
{
	BigCount b = static_cast<std::uint64_t>(w >> 64);
	b <<= 64;
	b += static_cast<std::uint64_t>(w);
	return b;
}
BigCount to_big(const BigCount& b) { return b; }

/// Words on a support of size s number at most s!, so 128 bits suffice up to
/// 34 letters.
constexpr int kWideLimit = 34;

template <class C>
using Entries = std::vector<std::pair<Mask, C>>;

/// Level s+1 from level s: every reachable setment B passes its word count to
/// B ∪ {c} for each admissible suffix c.
template <class C>
Entries<C> rise(const PssRowFamily& pss, const Entries<C>& level, int threads)
{
	const IndexSubset all = IndexSubset::full(pss.size());
	const int chunks = std::max(1, std::min<int>(threads, static_cast<int>(level.size() / 1024) + 1));
	std::vector<absl::flat_hash_map<Mask, C>> partial(chunks);
	detail::parallel_for(chunks, threads, [&](int t) {
		const std::size_t lo = level.size() * t / chunks;
		const std::size_t hi = level.size() * (t + 1) / chunks;
		auto& out = partial[t];
		for (std::size_t i = lo; i < hi; ++i) {
			const IndexSubset setment(level[i].first);
			for (int c : all - setment) {
				if (pss.is_pss(setment, c)) {
					out[setment.with(c).bits()] += level[i].second;
				}
			}
		}
	});
	for (int t = 1; t < chunks; ++t) {
		for (auto& [mask, count] : partial[t]) {
			partial[0][mask] += count;
		}
		partial[t].clear();
	}
	Entries<C> next(partial[0].begin(), partial[0].end());
	std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
	return next;
}

/// Stored level keys for the falling pass, spilled to disk past a threshold.
class LevelStore
{
public:
	LevelStore(std::size_t threshold, std::filesystem::path dir) : threshold_(threshold), dir_(std::move(dir)) {}

	LevelStore(const LevelStore&) = delete;
	LevelStore& operator=(const LevelStore&) = delete;

	~LevelStore()
	{
		if (!spill_root_.empty()) {
			std::error_code ec;
			std::filesystem::remove_all(spill_root_, ec);
		}
	}

	void push(std::vector<Mask> keys)
	{
		const int s = static_cast<int>(levels_.size());
		in_memory_ += keys.size();
		if (in_memory_ <= threshold_) {
			levels_.push_back(std::move(keys));
			spilled_.push_back(false);
			return;
		}
		in_memory_ -= keys.size();
		std::ofstream out(path(s), std::ios::binary);
		out.write(reinterpret_cast<const char*>(keys.data()), static_cast<std::streamsize>(keys.size() * sizeof(Mask)));
		if (!out) {
			throw std::runtime_error("cannot spill level " + std::to_string(s) + " to " + path(s).string());
		}
		levels_.emplace_back();
		spilled_.push_back(true);
	}

	std::vector<Mask> take(int s)
	{
		if (!spilled_[s]) {
			return std::move(levels_[s]);
		}
		std::ifstream in(path(s), std::ios::binary | std::ios::ate);
		const auto bytes = static_cast<std::size_t>(in.tellg());
		std::vector<Mask> keys(bytes / sizeof(Mask));
		in.seekg(0);
		in.read(reinterpret_cast<char*>(keys.data()), static_cast<std::streamsize>(bytes));
		std::filesystem::remove(path(s));
		return keys;
	}

	int size() const { return static_cast<int>(levels_.size()); }

private:
	std::filesystem::path path(int s)
	{
		if (spill_root_.empty()) {
			std::filesystem::path base = dir_;
			if (base.empty()) {
				const char* env = std::getenv("SHELLKIT_LEVEL_SPILL_DIR");
				base = env != nullptr && *env != '\0' ? std::filesystem::path(env)
				                                      : std::filesystem::temp_directory_path();
			}
			std::random_device rd;
			spill_root_ = base / ("shellkit-levels-" + std::to_string(rd()));
			std::filesystem::create_directories(spill_root_);
		}
		return spill_root_ / ("level-" + std::to_string(s) + ".bin");
	}

	std::size_t threshold_;
	std::filesystem::path dir_;
	std::filesystem::path spill_root_;
	std::size_t in_memory_ = 0;
	std::vector<std::vector<Mask>> levels_;
	std::vector<bool> spilled_;
};

template <class C>
LevelSummary rising_pass_as(const PssRowFamily& pss, const CountOptions& options, LevelStore* store)
{
	const int n = pss.size();
	const IndexSubset all = IndexSubset::full(n);
	LevelSummary summary;
	summary.by_last_letter.assign(n, BigCount(0));

	Entries<C> level{{Mask{0}, C(1)}};
	for (int s = 0; s <= n && !level.empty(); ++s) {
		summary.level_sizes.push_back(level.size());
		if (options.on_level) {
			options.on_level(s, level.size());
		}
		if (s > 0) {
			summary.max_partial_length = s;
		}
		if (store != nullptr) {
			std::vector<Mask> keys;
			keys.reserve(level.size());
			for (const auto& e : level) {
				keys.push_back(e.first);
			}
			store->push(std::move(keys));
		}
		if (s == n - 1) {
			for (const auto& [mask, count] : level) {
				const int k = (all - IndexSubset(mask)).first();
				if (pss.is_pss(IndexSubset(mask), k)) {
					summary.by_last_letter[k] = to_big(count);
				}
			}
		}
		if (s == n) {
			summary.count = to_big(level.front().second);
			break;
		}
		level = rise(pss, level, options.threads);
	}
	summary.level_sizes.resize(n + 1, 0);
	return summary;
}

template <class C>
std::vector<BigCount> falling_pass_as(const PssRowFamily& pss, const CountOptions& options)
{
	const int n = pss.size();
	const IndexSubset all = IndexSubset::full(n);
	LevelStore store(options.spill_threshold, options.spill_dir);
	rising_pass_as<C>(pss, options, &store);

	std::vector<BigCount> first(n, BigCount(0));
	if (store.size() <= n) {
		return first; // the top level was never reached
	}
	// completions[B]: number of ways to extend a word with support B to a full word.
	Entries<C> above{{all.bits(), C(1)}};
	store.take(n);
	auto lookup = [&above](Mask m) -> C {
		auto it = std::lower_bound(above.begin(), above.end(), m, [](const auto& e, Mask v) { return e.first < v; });
		return it != above.end() && it->first == m ? it->second : C(0);
	};
	for (int s = n - 1; s >= 1; --s) {
		const std::vector<Mask> keys = store.take(s);
		Entries<C> here(keys.size());
		detail::parallel_for(static_cast<int>(keys.size()), options.threads > 1 && keys.size() > 4096 ? options.threads : 1,
		                     [&](int i) {
			                     const IndexSubset setment(keys[i]);
			                     C total(0);
			                     for (int c : all - setment) {
				                     if (pss.is_pss(setment, c)) {
					                     total += lookup(setment.with(c).bits());
				                     }
			                     }
			                     here[i] = {keys[i], total};
		                     });
		std::erase_if(here, [](const auto& e) { return e.second == C(0); });
		above = std::move(here);
	}
	for (const auto& [mask, count] : above) {
		first[IndexSubset(mask).first()] = to_big(count);
	}
	return first;
}

} // namespace

std::uint64_t for_each_full_word(const PssRowFamily& pss, const std::function<bool(const Word&)>& visit,
                                 const EnumerateOptions& options)
{
	const std::uint64_t limit = options.limit.value_or(std::numeric_limits<std::uint64_t>::max());
	if (limit == 0) {
		return 0;
	}
	std::vector<DfsItem> roots = initial_stack(pss, options.order);
	std::uint64_t emitted = 0;
	auto counted = [&](const Word& w) {
		++emitted;
		return visit(w) && emitted < limit;
	};

	if (options.threads <= 1 || roots.size() <= 1) {
		for (auto& root : roots) {
			if (!explore(pss, std::move(root), options.order, counted)) {
				break;
			}
		}
		return emitted;
	}

	// One buffer per initial stack entry, replayed in stack order.
	std::vector<std::vector<Word>> buffers(roots.size());
	detail::parallel_for(static_cast<int>(roots.size()), options.threads, [&](int r) {
		auto& buf = buffers[r];
		explore(pss, roots[r], options.order, [&](const Word& w) {
			buf.push_back(w);
			return buf.size() < limit;
		});
	});
	for (auto& buf : buffers) {
		for (const Word& w : buf) {
			if (!counted(w)) {
				return emitted;
			}
		}
		buf.clear();
		buf.shrink_to_fit();
	}
	return emitted;
}

std::vector<Word> enumerate_full_words(const PssRowFamily& pss, const EnumerateOptions& options)
{
	std::vector<Word> out;
	for_each_full_word(
		pss,
		[&](const Word& w) {
			out.push_back(w);
			return true;
		},
		options);
	return out;
}

LevelSummary rising_pass(const PssRowFamily& pss, const CountOptions& options)
{
	if (pss.size() <= kWideLimit) {
		return rising_pass_as<Wide>(pss, options, nullptr);
	}
	return rising_pass_as<BigCount>(pss, options, nullptr);
}

BigCount count_full_words(const PssRowFamily& pss, const CountOptions& options)
{
	return rising_pass(pss, options).count;
}

std::vector<BigCount> count_by_last_letter(const PssRowFamily& pss, const CountOptions& options)
{
	return rising_pass(pss, options).by_last_letter;
}

std::vector<BigCount> count_by_first_letter(const PssRowFamily& pss, const CountOptions& options)
{
	if (pss.size() <= kWideLimit) {
		return falling_pass_as<Wide>(pss, options);
	}
	return falling_pass_as<BigCount>(pss, options);
}

int max_partial_length(const PssRowFamily& pss, const CountOptions& options)
{
	return rising_pass(pss, options).max_partial_length;
}

std::vector<std::pair<IndexSubset, int>> level_keys(const PssRowFamily& pss, int s)
{
	const IndexSubset all = IndexSubset::full(pss.size());
	Entries<BigCount> level{{Mask{0}, BigCount(1)}};
	for (int t = 0; t < s && !level.empty(); ++t) {
		level = rise(pss, level, 1);
	}
	std::vector<std::pair<IndexSubset, int>> keys;
	for (const auto& e : level) {
		const IndexSubset setment(e.first);
		for (int c : all - setment) {
			if (pss.is_pss(setment, c)) {
				keys.emplace_back(setment, c);
			}
		}
	}
	return keys;
}

} // namespace shellkit
