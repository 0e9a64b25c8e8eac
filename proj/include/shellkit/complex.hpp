#ifndef SHELLKIT_COMPLEX_HPP
#define SHELLKIT_COMPLEX_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace shellkit {

/// Set of vertex ids; every set of one family has the same width (|W|).
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

enum class FamilyMode {
	/// Facets of a simplicial complex: pairwise incomparable.
	Shelling,
	/// Arbitrary distinct nonempty sets.
	Peeling,
};

/// Ordered list of facets F_1..F_n over interned vertex tokens.
///
/// Invariants (checked on construction): 1 <= n <= 64, no empty facet, no two
/// equal facets and, in shelling mode, no facet contained in another.
class FacetFamily
{
public:
	FacetFamily(std::vector<VertexSet> facets, std::vector<std::string> vertex_names, FamilyMode mode);

	/// Interns tokens in first-appearance order. Repeated tokens inside one
	/// facet are collapsed.
	static FacetFamily from_tokens(const std::vector<std::vector<std::string>>& facets, FamilyMode mode);

	int size() const { return static_cast<int>(facets_.size()); }
	int vertex_count() const { return static_cast<int>(names_.size()); }
	FamilyMode mode() const { return mode_; }

	const VertexSet& facet(int i) const { return facets_[i]; }
	std::span<const VertexSet> facets() const { return facets_; }
	const std::string& vertex_name(int v) const { return names_[v]; }
	const std::vector<std::string>& vertex_names() const { return names_; }

	/// Vertex tokens of facet i in vertex-id order.
	std::vector<std::string> facet_tokens(int i) const;

	/// Same family in another mode (revalidated).
	FacetFamily with_mode(FamilyMode mode) const;

	bool operator==(const FacetFamily&) const = default;

private:
	std::vector<VertexSet> facets_;
	std::vector<std::string> names_;
	FamilyMode mode_;
};

struct ParseOptions
{
	FamilyMode mode = FamilyMode::Shelling;
	/// JSON array of arrays of strings instead of the line format.
	bool json = false;
	/// Drop facets strictly contained in another before validation.
	bool maximalize = false;
};

/// Line format: one facet per non-blank line, whitespace-separated tokens,
/// '#' starts a comment line.
FacetFamily parse_facets(std::istream& in, const ParseOptions& options = {});
FacetFamily parse_facets(const std::string& text, const ParseOptions& options = {});

/// Writes the line format; parse_facets(write_facets(f)) == f.
void write_facets(std::ostream& out, const FacetFamily& family);
std::string to_facet_text(const FacetFamily& family);

} // namespace shellkit

#endif
