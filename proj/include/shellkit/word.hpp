#ifndef SHELLKIT_WORD_HPP
#define SHELLKIT_WORD_HPP

#include "shellkit/index_subset.hpp"

#include <string>
#include <vector>

namespace shellkit {

/// A simple word over the facet-index alphabet (0-based letters).
struct Word
{
	std::vector<int> letters;

	int length() const { return static_cast<int>(letters.size()); }

	IndexSubset support() const
	{
		IndexSubset s;
		for (int a : letters) {
			s = s.with(a);
		}
		return s;
	}

	bool is_simple() const { return support().size() == length(); }

	/// 1-based letters joined by `sep`, e.g. "3,4,1,2".
	std::string to_string(const std::string& sep = ",") const;

	/// Parses 1-based digits without separator ("3412"); only meaningful for n <= 9.
	static Word from_digits(const std::string& digits);

	auto operator<=>(const Word&) const = default;
};

} // namespace shellkit

#endif
