#ifndef SHELLKIT_SHELLING_HPP
#define SHELLKIT_SHELLING_HPP

#include "shellkit/complex.hpp"
#include "shellkit/index_subset.hpp"
#include "shellkit/pss.hpp"
#include "shellkit/wildcard_rows.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shellkit {

/// A policeable hooligan i of some suffix k together with every cop j that
/// polices it, i.e. F_i ∩ F_k ⊆ F_j ∩ F_k ≺ F_k.
struct PolicedHooligan
{
	int hooligan;
	IndexSubset cops;

	bool operator==(const PolicedHooligan&) const = default;
};

/// Cops, policeable and non-policeable hooligans of one suffix k. The three
/// parts partition [n]\{k}.
struct SuffixClassification
{
	IndexSubset cops;
	std::vector<PolicedHooligan> policeable;
	IndexSubset non_policeable;

	IndexSubset hooligans() const;
};

struct CopHooliganTable
{
	int n = 0;
	std::vector<SuffixClassification> suffixes;

	const SuffixClassification& operator[](int k) const { return suffixes[k]; }
};

/// X ≺ Y: X ⊂ Y and |X| = |Y| − 1.
bool is_facet_of(const VertexSet& x, const VertexSet& y);

CopHooliganTable classify(const FacetFamily& family);

/// Dual Horn formula over [n]\{k} whose models are the potential setments of
/// k: non-policeable hooligans are forced to 0, and each policeable hooligan
/// i contributes (¬x_i ∨ ⋁ cops of i).
DualHornFormula build_formula(const CopHooliganTable& table, int k);

/// Solves the n per-suffix formulas, on up to `threads` workers.
PssRowFamily pss_rows(const FacetFamily& family, int threads = 1);
PssRowFamily pss_rows(const CopHooliganTable& table, int threads = 1);

struct FailureReport
{
	/// Suffixes without cops, when there are at least two of them.
	std::optional<IndexSubset> type1;
	bool type2 = false;
	/// (k, non-policeable hooligan of k) for every k when type2 holds.
	std::vector<std::pair<int, int>> type2_witnesses;
	bool type3 = false;
	bool type4 = false;
	int max_partial_length = 0;

	bool shellable() const { return !type4; }
};

std::optional<IndexSubset> detect_type1(const CopHooliganTable& table);

struct Type2Result
{
	bool failed = false;
	std::vector<std::pair<int, int>> witnesses;
};
Type2Result detect_type2(const CopHooliganTable& table);

/// No PSS on level n−1.
bool detect_type3(const PssRowFamily& pss);

/// Intersection table with cops in upper case, hooligans in lower case and
/// '!' after non-policeable hooligans.
std::string render_intersection_table(const FacetFamily& family, const CopHooliganTable& table);

} // namespace shellkit

#endif
