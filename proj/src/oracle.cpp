#include "shellkit/oracle.hpp"

#include "shellkit/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace shellkit::oracle {

namespace {

bool codim_one(const VertexSet& x, const VertexSet& y) { return x.is_subset_of(y) && x.count() + 1 == y.count(); }

template <class Accept>
std::vector<Word> filter_permutations(int n, Accept accept)
{
	if (n > 10) {
		throw Error(ErrorKind::InvalidArgument, "permutation oracle limited to 10 letters");
	}
	std::vector<int> perm(n);
	std::iota(perm.begin(), perm.end(), 0);
	std::vector<Word> out;
	do {
		Word w{perm};
		if (accept(w)) {
			out.push_back(std::move(w));
		}
	} while (std::next_permutation(perm.begin(), perm.end()));
	return out;
}

} // namespace

bool potential_setment(const FacetFamily& family, IndexSubset a, int k)
{
	const VertexSet& fk = family.facet(k);
	for (int i : a) {
		const VertexSet meet_i = family.facet(i) & fk;
		bool policed = false;
		for (int j : a) {
			const VertexSet meet_j = family.facet(j) & fk;
			if (meet_i.is_subset_of(meet_j) && codim_one(meet_j, fk)) {
				policed = true;
				break;
			}
		}
		if (!policed) {
			return false;
		}
	}
	return true;
}

bool is_partial_shelling(const FacetFamily& family, const Word& word)
{
	for (int k = 1; k < word.length(); ++k) {
		const VertexSet& gk = family.facet(word.letters[k]);
		for (int i = 0; i < k; ++i) {
			const VertexSet gi = family.facet(word.letters[i]) & gk;
			bool ok = false;
			for (int j = 0; j < k && !ok; ++j) {
				const VertexSet gj = family.facet(word.letters[j]) & gk;
				ok = gi.is_subset_of(gj) && codim_one(gj, gk);
			}
			if (!ok) {
				return false;
			}
		}
	}
	return true;
}

bool is_partial_peeling(const FacetFamily& family, const Word& word)
{
	if (word.length() == 0) {
		return true;
	}
	VertexSet seen = family.facet(word.letters[0]);
	for (int k = 1; k < word.length(); ++k) {
		const VertexSet& gk = family.facet(word.letters[k]);
		if (!codim_one(seen & gk, gk)) {
			return false;
		}
		seen |= gk;
	}
	return true;
}

std::vector<Word> shellings_by_permutation(const FacetFamily& family)
{
	return filter_permutations(family.size(), [&](const Word& w) { return is_partial_shelling(family, w); });
}

std::vector<Word> peelings_by_permutation(const FacetFamily& family)
{
	return filter_permutations(family.size(), [&](const Word& w) { return is_partial_peeling(family, w); });
}

std::vector<IndexSubset> models_by_enumeration(const DualHornFormula& f)
{
	std::vector<IndexSubset> out;
	const std::uint64_t u = f.universe.bits();
	std::uint64_t sub = 0;
	do {
		const IndexSubset a(sub);
		bool ok = !a.intersects(f.forced_zero);
		for (const auto& c : f.clauses) {
			if (!ok) {
				break;
			}
			const bool negated_false = c.negated && !a.contains(*c.negated);
			ok = negated_false || a.intersects(c.positives);
		}
		if (ok) {
			out.push_back(a);
		}
		sub = (sub - u) & u;
	} while (sub != 0);
	std::sort(out.begin(), out.end());
	return out;
}

BigCount linear_extensions_by_ideals(const Poset& p)
{
	const int n = p.size();
	if (n > 24) {
		throw Error(ErrorKind::InvalidArgument, "ideal-lattice oracle limited to 24 elements");
	}
	std::vector<std::uint32_t> down(n, 0);
	for (int v = 0; v < n; ++v) {
		for (int q = 0; q < n; ++q) {
			if (q != v && p.less_equal(q, v)) {
				down[v] |= 1U << q;
			}
		}
	}
	// ways[I]: number of ways to list the order ideal I as a prefix.
	std::unordered_map<std::uint32_t, BigCount> ways{{0U, BigCount(1)}};
	for (int size = 0; size < n; ++size) {
		std::unordered_map<std::uint32_t, BigCount> next;
		for (const auto& [ideal, count] : ways) {
			for (int v = 0; v < n; ++v) {
				if (((ideal >> v) & 1U) == 0 && (down[v] & ~ideal) == 0) {
					next[ideal | (1U << v)] += count;
				}
			}
		}
		ways = std::move(next);
	}
	return ways.empty() ? BigCount(0) : ways.begin()->second;
}

std::uint64_t linear_extensions_by_permutation(const Poset& p)
{
	const auto words = filter_permutations(p.size(), [&](const Word& w) {
		for (int a = 0; a < w.length(); ++a) {
			for (int b = a + 1; b < w.length(); ++b) {
				if (p.less_equal(w.letters[b], w.letters[a])) {
					return false;
				}
			}
		}
		return true;
	});
	return words.size();
}

} // namespace shellkit::oracle
