#include "shellkit/peelings.hpp"

#include "parallel.hpp"

#include <algorithm>

namespace shellkit {

bool CoveringInstance::coverable() const
{
	return std::none_of(per_vertex.begin(), per_vertex.end(), [](const auto& e) { return e.second.empty(); });
}

DualHornFormula CoveringInstance::to_formula(int n) const
{
	DualHornFormula f;
	f.universe = IndexSubset::full(n).without(suffix);
	f.forced_zero = forbidden;

	std::vector<IndexSubset> sets;
	sets.reserve(per_vertex.size());
	for (const auto& e : per_vertex) {
		sets.push_back(e.second);
	}
	std::sort(sets.begin(), sets.end(), [](IndexSubset a, IndexSubset b) {
		return a.size() != b.size() ? a.size() < b.size() : a < b;
	});
	sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
	for (std::size_t i = 0; i < sets.size(); ++i) {
		const bool absorbed = std::any_of(sets.begin(), sets.begin() + static_cast<std::ptrdiff_t>(i),
		                                  [&](IndexSubset smaller) { return smaller.subset_of(sets[i]); });
		if (!absorbed) {
			f.clauses.push_back(Clause{std::nullopt, sets[i]});
		}
	}
	return f;
}

CoveringInstance covering_instance(const FacetFamily& family, int k, int v)
{
	const int n = family.size();
	CoveringInstance inst;
	inst.suffix = k;
	inst.removed_vertex = v;
	inst.target = family.facet(k);
	inst.target.reset(v);
	for (int i = 0; i < n; ++i) {
		if (i == k) {
			continue;
		}
		if (family.facet(i).test(v)) {
			inst.forbidden = inst.forbidden.with(i);
		} else {
			inst.allowed = inst.allowed.with(i);
		}
	}
	for (auto x = inst.target.find_first(); x != VertexSet::npos; x = inst.target.find_next(x)) {
		IndexSubset holders;
		for (int i : inst.allowed) {
			if (family.facet(i).test(x)) {
				holders = holders.with(i);
			}
		}
		inst.per_vertex.emplace_back(static_cast<int>(x), holders);
	}
	return inst;
}

PssRowFamily peeling_pss_rows(const FacetFamily& family, int threads)
{
	const int n = family.size();
	std::vector<std::vector<Row012e>> rows(n);
	detail::parallel_for(n, threads, [&](int k) {
		const VertexSet& fk = family.facet(k);
		auto& out = rows[k];
		for (auto v = fk.find_first(); v != VertexSet::npos; v = fk.find_next(v)) {
			const CoveringInstance inst = covering_instance(family, k, static_cast<int>(v));
			if (!inst.coverable()) {
				continue;
			}
			auto part = solve_dual_horn(inst.to_formula(n));
			out.insert(out.end(), part.begin(), part.end());
		}
		// Any single set starts a peeling; the covering rows only produce ∅
		// when F_k is a singleton.
		if (fk.count() >= 2) {
			const IndexSubset universe = IndexSubset::full(n).without(k);
			out.emplace_back(universe, universe, IndexSubset(), IndexSubset(), std::vector<IndexSubset>{});
		}
	});
	return PssRowFamily(n, std::move(rows));
}

BigCount count_peelings(const FacetFamily& family, const CountOptions& options)
{
	return count_full_words(peeling_pss_rows(family, options.threads), options);
}

std::vector<Word> enumerate_peelings(const FacetFamily& family, const EnumerateOptions& options)
{
	return enumerate_full_words(peeling_pss_rows(family, options.threads), options);
}

BigCount count_linear_extensions(const Poset& p, const CountOptions& options)
{
	return count_peelings(poset_to_ideals(p), options);
}

} // namespace shellkit
