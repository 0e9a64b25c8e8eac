#ifndef SHELLKIT_PEELINGS_HPP
#define SHELLKIT_PEELINGS_HPP

#include "shellkit/big_count.hpp"
#include "shellkit/complex.hpp"
#include "shellkit/poset.hpp"
#include "shellkit/pss.hpp"
#include "shellkit/search.hpp"
#include "shellkit/wildcard_rows.hpp"

#include <utility>
#include <vector>

namespace shellkit {

/// Set-covering view of the setments A with (∪_{i∈A} F_i) ∩ F_k = F_k \ {v}.
struct CoveringInstance
{
	int suffix;
	int removed_vertex;
	/// X = F_k \ {v}
	VertexSet target;
	/// Indices i ≠ k with v ∉ F_i.
	IndexSubset allowed;
	/// Indices i ≠ k with v ∈ F_i; they may not occur in A.
	IndexSubset forbidden;
	/// For each x ∈ X: {i ∈ allowed : x ∈ F_i}.
	std::vector<std::pair<int, IndexSubset>> per_vertex;

	/// False when some x ∈ X lies in no allowed set.
	bool coverable() const;

	/// Pure-positive formula over [n]\{k}: one clause per x ∈ X, forbidden
	/// indices forced to 0. Absorbed and repeated clauses are dropped.
	DualHornFormula to_formula(int n) const;
};

CoveringInstance covering_instance(const FacetFamily& family, int k, int v);

/// PSS rows of the peeling language: for every k, the rows of all (k, v)
/// covering instances plus the empty setment.
PssRowFamily peeling_pss_rows(const FacetFamily& family, int threads = 1);

BigCount count_peelings(const FacetFamily& family, const CountOptions& options = {});

std::vector<Word> enumerate_peelings(const FacetFamily& family, const EnumerateOptions& options = {});

/// Number of linear extensions, via peelings of the principal ideals.
BigCount count_linear_extensions(const Poset& p, const CountOptions& options = {});

} // namespace shellkit

#endif
