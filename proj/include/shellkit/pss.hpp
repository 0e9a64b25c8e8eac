#ifndef SHELLKIT_PSS_HPP
#define SHELLKIT_PSS_HPP

#include "shellkit/big_count.hpp"
#include "shellkit/index_subset.hpp"
#include "shellkit/wildcard_rows.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace shellkit {

/// Compressed PSS-poset: for each suffix k, disjoint 012e-rows over
/// [n]\{k} whose union is the set of potential setments of k.
class PssRowFamily
{
public:
	PssRowFamily(int n, std::vector<std::vector<Row012e>> rows_per_suffix);

	int size() const { return n_; }
	std::span<const Row012e> rows(int k) const { return rows_[k]; }
	std::size_t row_count() const;

	/// Membership of (a, k); a must not contain k.
	bool is_pss(IndexSubset a, int k) const
	{
		const std::uint64_t bits = a.bits();
		for (std::uint32_t r = first_[k]; r < first_[k + 1]; ++r) {
			const FlatRow& row = flat_[r];
			if ((bits & row.zeros) != 0 || (row.ones & ~bits) != 0) {
				continue;
			}
			bool ok = true;
			for (std::uint32_t b = row.bubble_begin; b < row.bubble_end; ++b) {
				if ((bits & bubbles_[b]) == 0) {
					ok = false;
					break;
				}
			}
			if (ok) {
				return true;
			}
		}
		return false;
	}

	/// Suffixes c ∉ a with is_pss(a, c), restricted to `candidates`.
	IndexSubset suffixes_of(IndexSubset a, IndexSubset candidates) const
	{
		IndexSubset out;
		for (int c : candidates) {
			if (is_pss(a, c)) {
				out = out.with(c);
			}
		}
		return out;
	}

	/// Number of PSSes with suffix k.
	BigCount pss_count(int k) const;
	/// Total number of PSSes, Σ_k |rows(k)|.
	BigCount pss_count() const;
	/// Total number of PSSes whose setment is nonempty.
	BigCount nonempty_pss_count() const;

private:
	struct FlatRow
	{
		std::uint64_t zeros;
		std::uint64_t ones;
		std::uint32_t bubble_begin;
		std::uint32_t bubble_end;
	};

	int n_;
	std::vector<std::vector<Row012e>> rows_;
	std::vector<FlatRow> flat_;
	std::vector<std::uint64_t> bubbles_;
	std::vector<std::uint32_t> first_;
};

} // namespace shellkit

#endif
