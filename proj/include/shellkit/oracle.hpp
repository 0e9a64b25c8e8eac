#ifndef SHELLKIT_ORACLE_HPP
#define SHELLKIT_ORACLE_HPP

#include "shellkit/big_count.hpp"
#include "shellkit/complex.hpp"
#include "shellkit/index_subset.hpp"
#include "shellkit/poset.hpp"
#include "shellkit/wildcard_rows.hpp"
#include "shellkit/word.hpp"

#include <cstdint>
#include <vector>

/// Brute-force reference checks that evaluate the defining conditions
/// directly on facet sets. Exponential; meant for small instances.
namespace shellkit::oracle {

/// (∀i∈A)(∃j∈A) F_i∩F_k ⊆ F_j∩F_k ≺ F_k
bool potential_setment(const FacetFamily& family, IndexSubset a, int k);

/// The facet sequence satisfies the shelling condition at every position.
bool is_partial_shelling(const FacetFamily& family, const Word& word);

/// (G_1 ∪ ... ∪ G_{k-1}) ∩ G_k ≺ G_k at every position k >= 2.
bool is_partial_peeling(const FacetFamily& family, const Word& word);

/// All permutations of [n] that are shellings, in lexicographic order.
std::vector<Word> shellings_by_permutation(const FacetFamily& family);
/// All permutations of [n] that are peelings, in lexicographic order.
std::vector<Word> peelings_by_permutation(const FacetFamily& family);

/// Every subset of the universe satisfying f, ascending by bitmask.
std::vector<IndexSubset> models_by_enumeration(const DualHornFormula& f);

/// Linear extensions by a DP over the lattice of order ideals.
BigCount linear_extensions_by_ideals(const Poset& p);
/// Linear extensions by testing all permutations.
std::uint64_t linear_extensions_by_permutation(const Poset& p);

} // namespace shellkit::oracle

#endif
