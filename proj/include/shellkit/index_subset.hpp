#ifndef SHELLKIT_INDEX_SUBSET_HPP
#define SHELLKIT_INDEX_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace shellkit {

/// Largest supported number of facets; index subsets are single machine words.
inline constexpr int kMaxFacets = 64;

/// A subset of the facet-index alphabet. Indices are 0-based internally and
/// rendered 1-based for users.
class IndexSubset
{
public:
	constexpr IndexSubset() = default;
	constexpr explicit IndexSubset(std::uint64_t bits) : bits_(bits) {}

	static constexpr IndexSubset single(int i) { return IndexSubset(std::uint64_t{1} << i); }

	/// {0, ..., n-1}
	static constexpr IndexSubset full(int n)
	{
		return IndexSubset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
	}

	static IndexSubset of(std::initializer_list<int> indices)
	{
		IndexSubset s;
		for (int i : indices) {
			s = s.with(i);
		}
		return s;
	}

	constexpr std::uint64_t bits() const { return bits_; }
	constexpr bool empty() const { return bits_ == 0; }
	constexpr int size() const { return std::popcount(bits_); }
	constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
	constexpr bool subset_of(IndexSubset o) const { return (bits_ & ~o.bits_) == 0; }
	constexpr bool intersects(IndexSubset o) const { return (bits_ & o.bits_) != 0; }

	constexpr IndexSubset with(int i) const { return IndexSubset(bits_ | (std::uint64_t{1} << i)); }
	constexpr IndexSubset without(int i) const { return IndexSubset(bits_ & ~(std::uint64_t{1} << i)); }

	/// Lowest member; undefined on the empty set.
	constexpr int first() const { return std::countr_zero(bits_); }

	constexpr IndexSubset operator|(IndexSubset o) const { return IndexSubset(bits_ | o.bits_); }
	constexpr IndexSubset operator&(IndexSubset o) const { return IndexSubset(bits_ & o.bits_); }
	/// Set difference.
	constexpr IndexSubset operator-(IndexSubset o) const { return IndexSubset(bits_ & ~o.bits_); }
	IndexSubset& operator|=(IndexSubset o) { bits_ |= o.bits_; return *this; }
	IndexSubset& operator&=(IndexSubset o) { bits_ &= o.bits_; return *this; }
	IndexSubset& operator-=(IndexSubset o) { bits_ &= ~o.bits_; return *this; }

	constexpr auto operator<=>(const IndexSubset&) const = default;

	/// Iterates members in ascending order.
	class iterator
	{
	public:
		using value_type = int;
		using difference_type = std::ptrdiff_t;
		constexpr iterator() = default;
		constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
		constexpr int operator*() const { return std::countr_zero(rest_); }
		constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
		constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
		constexpr bool operator==(const iterator&) const = default;
	private:
		std::uint64_t rest_ = 0;
	};
	constexpr iterator begin() const { return iterator(bits_); }
	constexpr iterator end() const { return iterator(0); }

	std::vector<int> to_vector() const { return {begin(), end()}; }

	/// "{1,3,4}" with 1-based indices.
	std::string to_string() const;

private:
	std::uint64_t bits_ = 0;
};

} // namespace shellkit

#endif
