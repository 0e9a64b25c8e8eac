#include "shellkit/complex.hpp"

#include "shellkit/error.hpp"
#include "shellkit/index_subset.hpp"
#include "shellkit/word.hpp"

#include <json.hpp>

#include <istream>
#include <sstream>
#include <unordered_map>

namespace shellkit {

const char* to_string(ErrorKind kind)
{
	switch (kind) {
	case ErrorKind::EmptyFacet: return "EmptyFacet";
	case ErrorKind::DuplicateFacet: return "DuplicateFacet";
	case ErrorKind::ComparableFacets: return "ComparableFacets";
	case ErrorKind::TooManyFacets: return "TooManyFacets";
	case ErrorKind::EmptyFamily: return "EmptyFamily";
	case ErrorKind::CycleDetected: return "CycleDetected";
	case ErrorKind::UnknownElement: return "UnknownElement";
	case ErrorKind::Syntax: return "Syntax";
	case ErrorKind::InvalidArgument: return "InvalidArgument";
	}
	return "Error";
}

std::string IndexSubset::to_string() const
{
	std::string s = "{";
	bool first = true;
	for (int i : *this) {
		if (!first) {
			s += ',';
		}
		first = false;
		s += std::to_string(i + 1);
	}
	return s + "}";
}

std::string Word::to_string(const std::string& sep) const
{
	std::string s;
	for (std::size_t i = 0; i < letters.size(); ++i) {
		if (i > 0) {
			s += sep;
		}
		s += std::to_string(letters[i] + 1);
	}
	return s;
}

Word Word::from_digits(const std::string& digits)
{
	Word w;
	for (char c : digits) {
		w.letters.push_back(c - '1');
	}
	return w;
}

namespace {

std::string describe(const FacetFamily& fam, int i)
{
	std::string s = "F" + std::to_string(i + 1) + "={";
	bool first = true;
	for (const auto& t : fam.facet_tokens(i)) {
		if (!first) {
			s += ',';
		}
		first = false;
		s += t;
	}
	return s + "}";
}

} // namespace

FacetFamily::FacetFamily(std::vector<VertexSet> facets, std::vector<std::string> vertex_names, FamilyMode mode)
	: facets_(std::move(facets)), names_(std::move(vertex_names)), mode_(mode)
{
	const int n = size();
	if (n == 0) {
		throw Error(ErrorKind::EmptyFamily, "no facets given");
	}
	if (n > kMaxFacets) {
		throw Error(ErrorKind::TooManyFacets, std::to_string(n) + " facets, at most 64 supported");
	}
	for (int i = 0; i < n; ++i) {
		if (facets_[i].size() != names_.size()) {
			throw Error(ErrorKind::InvalidArgument, "facet width does not match vertex count");
		}
		if (facets_[i].none()) {
			throw Error(ErrorKind::EmptyFacet, "facet " + std::to_string(i + 1) + " is empty");
		}
	}
	for (int i = 0; i < n; ++i) {
		for (int j = i + 1; j < n; ++j) {
			if (facets_[i] == facets_[j]) {
				throw Error(ErrorKind::DuplicateFacet, describe(*this, i) + " equals " + describe(*this, j));
			}
			if (mode_ == FamilyMode::Shelling) {
				if (facets_[i].is_subset_of(facets_[j])) {
					throw Error(ErrorKind::ComparableFacets, describe(*this, i) + " is contained in " + describe(*this, j));
				}
				if (facets_[j].is_subset_of(facets_[i])) {
					throw Error(ErrorKind::ComparableFacets, describe(*this, j) + " is contained in " + describe(*this, i));
				}
			}
		}
	}
}

FacetFamily FacetFamily::from_tokens(const std::vector<std::vector<std::string>>& facets, FamilyMode mode)
{
	std::unordered_map<std::string, int> ids;
	std::vector<std::string> names;
	std::vector<std::vector<int>> members;
	members.reserve(facets.size());
	for (const auto& facet : facets) {
		auto& m = members.emplace_back();
		for (const auto& tok : facet) {
			auto [it, inserted] = ids.try_emplace(tok, static_cast<int>(names.size()));
			if (inserted) {
				names.push_back(tok);
			}
			m.push_back(it->second);
		}
	}
	std::vector<VertexSet> sets;
	sets.reserve(members.size());
	for (const auto& m : members) {
		VertexSet s(names.size());
		for (int v : m) {
			s.set(v);
		}
		sets.push_back(std::move(s));
	}
	return FacetFamily(std::move(sets), std::move(names), mode);
}

std::vector<std::string> FacetFamily::facet_tokens(int i) const
{
	std::vector<std::string> out;
	const VertexSet& f = facets_[i];
	for (auto v = f.find_first(); v != VertexSet::npos; v = f.find_next(v)) {
		out.push_back(names_[v]);
	}
	return out;
}

FacetFamily FacetFamily::with_mode(FamilyMode mode) const
{
	return FacetFamily(facets_, names_, mode);
}

namespace {

std::vector<std::vector<std::string>> read_line_format(std::istream& in)
{
	std::vector<std::vector<std::string>> facets;
	std::string line;
	while (std::getline(in, line)) {
		const auto start = line.find_first_not_of(" \t\r");
		if (start == std::string::npos || line[start] == '#') {
			continue;
		}
		std::istringstream ls(line);
		auto& f = facets.emplace_back();
		std::string tok;
		while (ls >> tok) {
			f.push_back(tok);
		}
	}
	return facets;
}

std::vector<std::vector<std::string>> read_json_format(std::istream& in)
{
	nlohmann::json doc;
	try {
		doc = nlohmann::json::parse(in);
	} catch (const nlohmann::json::exception& e) {
		throw Error(ErrorKind::Syntax, e.what());
	}
	if (!doc.is_array()) {
		throw Error(ErrorKind::Syntax, "expected a JSON array of facets");
	}
	std::vector<std::vector<std::string>> facets;
	for (const auto& f : doc) {
		if (!f.is_array()) {
			throw Error(ErrorKind::Syntax, "each facet must be a JSON array of strings");
		}
		auto& out = facets.emplace_back();
		for (const auto& v : f) {
			if (!v.is_string()) {
				throw Error(ErrorKind::Syntax, "vertex tokens must be strings");
			}
			out.push_back(v.get<std::string>());
		}
	}
	return facets;
}

/// Drops facets strictly contained in another one.
std::vector<std::vector<std::string>> drop_non_maximal(const std::vector<std::vector<std::string>>& facets)
{
	// Intern once in peeling mode so comparability can be checked on bitsets.
	FacetFamily all = FacetFamily::from_tokens(facets, FamilyMode::Peeling);
	std::vector<std::vector<std::string>> kept;
	for (int i = 0; i < all.size(); ++i) {
		bool maximal = true;
		for (int j = 0; j < all.size() && maximal; ++j) {
			if (j != i && all.facet(i).is_proper_subset_of(all.facet(j))) {
				maximal = false;
			}
		}
		if (maximal) {
			kept.push_back(facets[i]);
		}
	}
	return kept;
}

} // namespace

FacetFamily parse_facets(std::istream& in, const ParseOptions& options)
{
	auto facets = options.json ? read_json_format(in) : read_line_format(in);
	if (options.maximalize && options.mode == FamilyMode::Shelling && !facets.empty()) {
		facets = drop_non_maximal(facets);
	}
	return FacetFamily::from_tokens(facets, options.mode);
}

FacetFamily parse_facets(const std::string& text, const ParseOptions& options)
{
	std::istringstream in(text);
	return parse_facets(in, options);
}

void write_facets(std::ostream& out, const FacetFamily& family)
{
	for (int i = 0; i < family.size(); ++i) {
		bool first = true;
		for (const auto& tok : family.facet_tokens(i)) {
			if (!first) {
				out << ' ';
			}
			first = false;
			out << tok;
		}
		out << '\n';
	}
}

std::string to_facet_text(const FacetFamily& family)
{
	std::ostringstream out;
	write_facets(out, family);
	return out.str();
}

} // namespace shellkit
