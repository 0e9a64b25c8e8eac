#include "shellkit/poset.hpp"

#include "shellkit/error.hpp"
#include "shellkit/index_subset.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace shellkit {

Poset::Poset(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& relations)
	: elements_(std::move(elements))
{
	const int n = size();
	std::vector<std::vector<int>> up(n);
	for (auto [lo, hi] : relations) {
		if (lo < 0 || hi < 0 || lo >= n || hi >= n) {
			throw Error(ErrorKind::UnknownElement, "relation refers to a missing element");
		}
		if (lo == hi) {
			throw Error(ErrorKind::CycleDetected, elements_[lo] + " < " + elements_[lo]);
		}
		up[lo].push_back(hi);
	}

	// Kahn's algorithm; leftover vertices lie on a cycle.
	std::vector<int> indegree(n, 0);
	for (int v = 0; v < n; ++v) {
		for (int w : up[v]) {
			++indegree[w];
		}
	}
	std::vector<int> order;
	for (int v = 0; v < n; ++v) {
		if (indegree[v] == 0) {
			order.push_back(v);
		}
	}
	for (std::size_t head = 0; head < order.size(); ++head) {
		for (int w : up[order[head]]) {
			if (--indegree[w] == 0) {
				order.push_back(w);
			}
		}
	}
	if (static_cast<int>(order.size()) != n) {
		auto it = std::find_if(indegree.begin(), indegree.end(), [](int d) { return d > 0; });
		throw Error(ErrorKind::CycleDetected,
		            "element " + elements_[static_cast<int>(it - indegree.begin())] + " lies on a cycle");
	}

	below_.assign(n, std::vector<bool>(n, false));
	for (int v = 0; v < n; ++v) {
		below_[v][v] = true;
	}
	for (int v : order) {
		for (int w : up[v]) {
			for (int q = 0; q < n; ++q) {
				if (below_[v][q]) {
					below_[w][q] = true;
				}
			}
		}
	}

	// q < p is a cover iff no r with q < r < p.
	for (int p = 0; p < n; ++p) {
		for (int q = 0; q < n; ++q) {
			if (q == p || !below_[p][q]) {
				continue;
			}
			bool cover = true;
			for (int r = 0; r < n && cover; ++r) {
				if (r != p && r != q && below_[p][r] && below_[r][q]) {
					cover = false;
				}
			}
			if (cover) {
				covers_.emplace_back(q, p);
			}
		}
	}
	std::sort(covers_.begin(), covers_.end());
}

namespace {

std::vector<std::string> split_statements(std::istream& in)
{
	std::vector<std::string> out;
	std::string line;
	while (std::getline(in, line)) {
		std::istringstream ls(line);
		std::string part;
		while (std::getline(ls, part, ';')) {
			const auto start = part.find_first_not_of(" \t\r");
			if (start == std::string::npos || part[start] == '#') {
				continue;
			}
			out.push_back(part);
		}
	}
	return out;
}

} // namespace

Poset parse_poset(std::istream& in)
{
	std::vector<std::string> elements;
	std::unordered_map<std::string, int> ids;
	bool declared = false;
	std::vector<std::pair<int, int>> relations;

	auto lookup = [&](const std::string& tok) {
		auto it = ids.find(tok);
		if (it != ids.end()) {
			return it->second;
		}
		if (declared) {
			throw Error(ErrorKind::UnknownElement, "'" + tok + "' is not listed in the elements line");
		}
		ids.emplace(tok, static_cast<int>(elements.size()));
		elements.push_back(tok);
		return static_cast<int>(elements.size()) - 1;
	};

	for (const auto& stmt : split_statements(in)) {
		std::istringstream ss(stmt);
		std::vector<std::string> toks;
		std::string t;
		while (ss >> t) {
			toks.push_back(t);
		}
		if (toks.front() == "elements") {
			if (declared || !elements.empty()) {
				throw Error(ErrorKind::Syntax, "the elements line must come first and only once");
			}
			declared = true;
			for (std::size_t i = 1; i < toks.size(); ++i) {
				if (!ids.emplace(toks[i], static_cast<int>(elements.size())).second) {
					throw Error(ErrorKind::Syntax, "element '" + toks[i] + "' listed twice");
				}
				elements.push_back(toks[i]);
			}
			continue;
		}
		if (toks.size() != 3 || toks[1] != "<") {
			throw Error(ErrorKind::Syntax, "expected '<lower> < <upper>', got '" + stmt + "'");
		}
		relations.emplace_back(lookup(toks[0]), lookup(toks[2]));
	}
	return Poset(std::move(elements), relations);
}

Poset parse_poset(const std::string& text)
{
	std::istringstream in(text);
	return parse_poset(in);
}

FacetFamily poset_to_ideals(const Poset& p)
{
	const int n = p.size();
	std::vector<VertexSet> ideals;
	ideals.reserve(n);
	for (int v = 0; v < n; ++v) {
		VertexSet s(n);
		for (int q = 0; q < n; ++q) {
			if (p.less_equal(q, v)) {
				s.set(q);
			}
		}
		ideals.push_back(std::move(s));
	}
	return FacetFamily(std::move(ideals), p.elements(), FamilyMode::Peeling);
}

} // namespace shellkit
