#ifndef SHELLKIT_WILDCARD_ROWS_HPP
#define SHELLKIT_WILDCARD_ROWS_HPP

#include "shellkit/big_count.hpp"
#include "shellkit/index_subset.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shellkit {

/// A 012e-row: a family of subsets of `universe` given by forced zeros,
/// forced ones, free positions (twos) and e-bubbles, each bubble demanding at
/// least one member.
///
/// The four parts partition the universe and every bubble has at least two
/// variables; the constructor rejects anything else.
class Row012e
{
public:
	Row012e(IndexSubset universe, IndexSubset zeros, IndexSubset ones, IndexSubset twos,
	        std::vector<IndexSubset> bubbles);

	static Row012e all_twos(IndexSubset universe);

	IndexSubset universe() const { return zeros_ | ones_ | twos_ | bubbled_; }
	IndexSubset zeros() const { return zeros_; }
	IndexSubset ones() const { return ones_; }
	IndexSubset twos() const { return twos_; }
	const std::vector<IndexSubset>& bubbles() const { return bubbles_; }

	/// a ∩ zeros = ∅, ones ⊆ a, and a meets every bubble.
	bool contains(IndexSubset a) const
	{
		if ((a & zeros_).bits() != 0 || !ones_.subset_of(a)) {
			return false;
		}
		for (IndexSubset b : bubbles_) {
			if (!b.intersects(a)) {
				return false;
			}
		}
		return true;
	}

	/// 2^|twos| · Π (2^|bubble| − 1)
	BigCount cardinality() const;

	/// Forces every variable of `vars` to 0. Returns false (row left in an
	/// unspecified state) if the row becomes empty.
	bool force_zero(IndexSubset vars);
	/// Forces variable `v` to 1; false if the row becomes empty.
	bool force_one(int v);
	/// Adds the constraint "some member of `vars` is 1" where `vars` ⊆ twos.
	void add_bubble(IndexSubset vars);
	/// Replaces the bubble containing `part` (a proper subset of it) by a
	/// bubble on `part`; the other variables of the old bubble become free.
	void narrow_bubble(IndexSubset part);

	bool operator==(const Row012e&) const = default;

private:
	Row012e() = default;

	IndexSubset zeros_;
	IndexSubset ones_;
	IndexSubset twos_;
	IndexSubset bubbled_;
	std::vector<IndexSubset> bubbles_;
};

inline bool row_contains(const Row012e& r, IndexSubset a) { return r.contains(a); }
inline BigCount row_cardinality(const Row012e& r) { return r.cardinality(); }

/// Total size of a disjoint row list.
BigCount total_cardinality(std::span<const Row012e> rows);

/// Symbolic test: no set lies in both rows.
bool rows_disjoint(const Row012e& a, const Row012e& b);

/// Calls `visit` once per member set.
void for_each_member(const Row012e& r, const std::function<void(IndexSubset)>& visit);
std::vector<IndexSubset> enumerate_row(const Row012e& r);

/// Positional dump over indices 0..n-1: '0', '1', '2', and 'a', 'b', ... for
/// bubbles; indices outside the universe print as '.'.
std::string to_pattern(const Row012e& r, int n);

/// A clause with at most one negated variable: (¬x_neg ∨ ⋁ positives).
struct Clause
{
	std::optional<int> negated;
	IndexSubset positives;

	bool satisfied_by(IndexSubset a) const
	{
		return (negated && !a.contains(*negated)) || positives.intersects(a);
	}
};

/// Conjunction of dual Horn and pure-positive clauses plus unit negations.
struct DualHornFormula
{
	IndexSubset universe;
	/// Variables fixed to 0.
	IndexSubset forced_zero;
	std::vector<Clause> clauses;

	/// Throws InvalidArgument on variables outside the universe or on a clause
	/// with neither literal kind.
	void validate() const;

	bool satisfied_by(IndexSubset a) const;
};

/// Restricts a disjoint row list to the members satisfying `clause`. The
/// result is again disjoint and normalized.
std::vector<Row012e> impose_clause(std::span<const Row012e> rows, const Clause& clause);

/// Mod(f) as a disjoint union of 012e-rows; empty when unsatisfiable.
std::vector<Row012e> solve_dual_horn(const DualHornFormula& f);

} // namespace shellkit

#endif
