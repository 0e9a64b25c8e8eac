#ifndef SHELLKIT_SEARCH_HPP
#define SHELLKIT_SEARCH_HPP

#include "shellkit/big_count.hpp"
#include "shellkit/index_subset.hpp"
#include "shellkit/pss.hpp"
#include "shellkit/word.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace shellkit {

/// Stack entry of the depth-first search from above: the potential setment
/// still to be peeled, its suffix, and the letters already fixed after it.
struct DfsItem
{
	IndexSubset setment;
	int suffix;
	Word tail;
};

enum class EnumerationOrder {
	/// Deterministic: among siblings the lowest facet index is expanded first,
	/// so words come out ordered by their reversal.
	Lexicographic,
	/// Siblings expanded highest index first.
	Arbitrary,
};

struct EnumerateOptions
{
	std::optional<std::uint64_t> limit;
	EnumerationOrder order = EnumerationOrder::Lexicographic;
	/// Workers over the initial stack. Output is identical for every value.
	int threads = 1;
};

/// Streams every full word exactly once (up to `limit`). `visit` returns
/// false to stop early. Returns the number of words visited.
std::uint64_t for_each_full_word(const PssRowFamily& pss, const std::function<bool(const Word&)>& visit,
                                 const EnumerateOptions& options = {});

std::vector<Word> enumerate_full_words(const PssRowFamily& pss, const EnumerateOptions& options = {});

/// Called once per finished level with (level, number of setments on it).
using LevelObserver = std::function<void(int, std::size_t)>;

struct CountOptions
{
	int threads = 1;
	LevelObserver on_level;
	/// Stored levels beyond this many setments go to disk (falling pass only).
	std::size_t spill_threshold = 50'000'000;
	/// Spill directory; empty means $SHELLKIT_LEVEL_SPILL_DIR, else the
	/// system temp directory.
	std::filesystem::path spill_dir;
};

/// Everything one rising level pass yields.
struct LevelSummary
{
	BigCount count;
	/// Entry k: number of full words ending in k.
	std::vector<BigCount> by_last_letter;
	/// Length of the longest word of the language.
	int max_partial_length = 0;
	/// Reachable setments per level 0..n.
	std::vector<std::size_t> level_sizes;
};

LevelSummary rising_pass(const PssRowFamily& pss, const CountOptions& options = {});

BigCount count_full_words(const PssRowFamily& pss, const CountOptions& options = {});
std::vector<BigCount> count_by_last_letter(const PssRowFamily& pss, const CountOptions& options = {});

/// Entry b: number of full words starting with b (falling pass over stored
/// levels).
std::vector<BigCount> count_by_first_letter(const PssRowFamily& pss, const CountOptions& options = {});

int max_partial_length(const PssRowFamily& pss, const CountOptions& options = {});

/// Keys (setment, suffix) of the level-s map: exactly the pairs
/// (support of α, b) over words αb of length s+1.
std::vector<std::pair<IndexSubset, int>> level_keys(const PssRowFamily& pss, int s);

} // namespace shellkit

#endif
