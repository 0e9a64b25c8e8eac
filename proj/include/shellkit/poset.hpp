#ifndef SHELLKIT_POSET_HPP
#define SHELLKIT_POSET_HPP

#include "shellkit/complex.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace shellkit {

/// Finite poset given by its cover relation.
class Poset
{
public:
	/// `relations` are (lower, upper) pairs over element indices. They need
	/// not be a transitive reduction; redundant pairs are dropped. Throws
	/// CycleDetected if the relation is not acyclic.
	Poset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& relations);

	int size() const { return static_cast<int>(elements_.size()); }
	const std::vector<std::string>& elements() const { return elements_; }
	const std::vector<std::pair<int, int>>& covers() const { return covers_; }

	/// below(p)[q] is true iff q <= p.
	const std::vector<std::vector<bool>>& below() const { return below_; }
	bool less_equal(int q, int p) const { return below_[p][q]; }

private:
	std::vector<std::string> elements_;
	std::vector<std::pair<int, int>> covers_;
	std::vector<std::vector<bool>> below_;
};

/// `elements a b c` followed by `a < b` cover lines; ';' also separates
/// statements. Without an elements line, elements appear in first-use order.
Poset parse_poset(std::istream& in);
Poset parse_poset(const std::string& text);

/// Principal ideals p↓ in element order, as a peeling-mode family over the
/// poset's elements.
FacetFamily poset_to_ideals(const Poset& p);

} // namespace shellkit

#endif
