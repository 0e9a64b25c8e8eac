#include "shellkit/generators.hpp"

#include "shellkit/error.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace shellkit {

namespace {

/// Family over `names` whose facets are the given id lists, sorted
/// lexicographically by their ascending id sequences.
FacetFamily family_from_ids(std::vector<std::string> names, std::vector<std::vector<int>> facets)
{
	for (auto& f : facets) {
		std::sort(f.begin(), f.end());
	}
	std::sort(facets.begin(), facets.end());
	std::vector<VertexSet> sets;
	sets.reserve(facets.size());
	for (const auto& f : facets) {
		VertexSet s(names.size());
		for (int v : f) {
			s.set(v);
		}
		sets.push_back(std::move(s));
	}
	return FacetFamily(std::move(sets), std::move(names), FamilyMode::Shelling);
}

struct DisjointSets
{
	std::vector<int> parent;
	explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
	int find(int x)
	{
		while (parent[x] != x) {
			x = parent[x] = parent[parent[x]];
		}
		return x;
	}
	bool unite(int a, int b)
	{
		a = find(a);
		b = find(b);
		if (a == b) {
			return false;
		}
		parent[a] = b;
		return true;
	}
};

} // namespace

FacetFamily gen_m2m(int m)
{
	if (m < 3) {
		throw Error(ErrorKind::InvalidArgument, "M(2,m) needs m >= 3");
	}
	std::vector<std::string> names;
	for (int i = 1; i <= m; ++i) {
		names.push_back(std::to_string(i));
	}
	std::vector<std::vector<int>> facets;
	for (int i = 0; i < m; ++i) {
		for (int j = i + 1; j < m; ++j) {
			facets.push_back({i, j});
		}
	}
	return family_from_ids(std::move(names), std::move(facets));
}

std::vector<std::vector<std::string>> consecutive_blocks(const std::vector<int>& sizes)
{
	std::vector<std::vector<std::string>> blocks;
	int next = 1;
	for (int s : sizes) {
		if (s < 1) {
			throw Error(ErrorKind::InvalidArgument, "block sizes must be positive");
		}
		auto& b = blocks.emplace_back();
		for (int i = 0; i < s; ++i) {
			b.push_back(std::to_string(next++));
		}
	}
	return blocks;
}

FacetFamily gen_partition_matroid(const std::vector<std::vector<std::string>>& blocks)
{
	if (blocks.empty()) {
		throw Error(ErrorKind::InvalidArgument, "a partition matroid needs at least one block");
	}
	std::vector<std::string> names;
	std::map<std::string, int> ids;
	std::vector<std::vector<int>> block_ids;
	for (const auto& b : blocks) {
		if (b.empty()) {
			throw Error(ErrorKind::InvalidArgument, "empty block");
		}
		auto& out = block_ids.emplace_back();
		for (const auto& tok : b) {
			if (!ids.emplace(tok, static_cast<int>(names.size())).second) {
				throw Error(ErrorKind::InvalidArgument, "blocks overlap in '" + tok + "'");
			}
			out.push_back(static_cast<int>(names.size()));
			names.push_back(tok);
		}
	}
	std::vector<std::vector<int>> facets{{}};
	for (const auto& b : block_ids) {
		std::vector<std::vector<int>> grown;
		for (const auto& partial : facets) {
			for (int v : b) {
				auto f = partial;
				f.push_back(v);
				grown.push_back(std::move(f));
			}
		}
		facets = std::move(grown);
	}
	return family_from_ids(std::move(names), std::move(facets));
}

std::vector<Edge> complete_graph(int m)
{
	std::vector<Edge> edges;
	for (int i = 1; i <= m; ++i) {
		for (int j = i + 1; j <= m; ++j) {
			edges.emplace_back(std::to_string(i), std::to_string(j));
		}
	}
	return edges;
}

std::vector<Edge> parse_edge_list(std::istream& in)
{
	std::vector<Edge> edges;
	std::string line;
	while (std::getline(in, line)) {
		const auto start = line.find_first_not_of(" \t\r");
		if (start == std::string::npos || line[start] == '#') {
			continue;
		}
		std::istringstream ls(line);
		Edge e;
		std::string extra;
		if (!(ls >> e.first >> e.second) || (ls >> extra)) {
			throw Error(ErrorKind::Syntax, "expected 'u v' per line, got '" + line + "'");
		}
		edges.push_back(std::move(e));
	}
	return edges;
}

FacetFamily gen_spanning_trees(const std::vector<Edge>& edges)
{
	if (edges.empty() || edges.size() > 16) {
		throw Error(ErrorKind::InvalidArgument, "need between 1 and 16 edges");
	}
	std::map<std::string, int> vertex;
	std::vector<std::pair<int, int>> ends;
	std::set<std::pair<int, int>> seen;
	for (const auto& [u, v] : edges) {
		if (u == v) {
			throw Error(ErrorKind::InvalidArgument, "loop at '" + u + "'");
		}
		const int a = vertex.emplace(u, static_cast<int>(vertex.size())).first->second;
		const int b = vertex.emplace(v, static_cast<int>(vertex.size())).first->second;
		if (!seen.insert(std::minmax(a, b)).second) {
			throw Error(ErrorKind::InvalidArgument, "parallel edge " + u + "-" + v);
		}
		ends.emplace_back(a, b);
	}
	const int nv = static_cast<int>(vertex.size());
	DisjointSets connectivity(nv);
	int components = nv;
	for (auto [a, b] : ends) {
		components -= connectivity.unite(a, b) ? 1 : 0;
	}
	if (components != 1) {
		throw Error(ErrorKind::InvalidArgument, "graph is disconnected");
	}

	std::vector<std::string> names;
	for (const auto& [u, v] : edges) {
		names.push_back(u + "-" + v);
	}
	const int ne = static_cast<int>(edges.size());
	std::vector<std::vector<int>> trees;
	for (std::uint32_t mask = 0; mask < (1U << ne); ++mask) {
		if (std::popcount(mask) != nv - 1) {
			continue;
		}
		DisjointSets forest(nv);
		bool acyclic = true;
		std::vector<int> tree;
		for (int e = 0; e < ne && acyclic; ++e) {
			if ((mask >> e) & 1U) {
				acyclic = forest.unite(ends[e].first, ends[e].second);
				tree.push_back(e);
			}
		}
		if (acyclic) {
			trees.push_back(std::move(tree));
		}
	}
	return family_from_ids(std::move(names), std::move(trees));
}

void ChessboardShape::validate() const
{
	if (row_lengths.empty()) {
		throw Error(ErrorKind::InvalidArgument, "a chessboard needs at least one row");
	}
	for (std::size_t r = 0; r < row_lengths.size(); ++r) {
		if (row_lengths[r] < 1) {
			throw Error(ErrorKind::InvalidArgument, "row lengths must be positive");
		}
		if (r > 0 && row_lengths[r] > row_lengths[r - 1]) {
			throw Error(ErrorKind::InvalidArgument, "row lengths must be weakly decreasing");
		}
	}
	if (squares() > 64) {
		throw Error(ErrorKind::InvalidArgument, "at most 64 squares supported");
	}
}

int ChessboardShape::squares() const { return std::accumulate(row_lengths.begin(), row_lengths.end(), 0); }

std::vector<std::vector<std::pair<int, int>>> rook_placements(const ChessboardShape& shape)
{
	shape.validate();
	std::vector<std::vector<std::pair<int, int>>> out;
	std::vector<std::pair<int, int>> current;
	std::uint64_t used_columns = 0;
	const int rows = static_cast<int>(shape.row_lengths.size());

	auto place = [&](auto&& self, int r) -> void {
		if (r == rows) {
			out.push_back(current);
			return;
		}
		self(self, r + 1);
		for (int c = 0; c < shape.row_lengths[r]; ++c) {
			if ((used_columns >> c) & 1U) {
				continue;
			}
			used_columns |= std::uint64_t{1} << c;
			current.emplace_back(r, c);
			self(self, r + 1);
			current.pop_back();
			used_columns &= ~(std::uint64_t{1} << c);
		}
	};
	place(place, 0);
	return out;
}

FacetFamily gen_chessboard(const ChessboardShape& shape)
{
	shape.validate();
	const int rows = static_cast<int>(shape.row_lengths.size());
	std::vector<std::string> names;
	std::vector<std::vector<int>> square_id(rows);
	for (int r = 0; r < rows; ++r) {
		for (int c = 0; c < shape.row_lengths[r]; ++c) {
			square_id[r].push_back(static_cast<int>(names.size()));
			names.push_back("r" + std::to_string(r + 1) + "c" + std::to_string(c + 1));
		}
	}

	std::vector<std::vector<int>> facets;
	for (const auto& placement : rook_placements(shape)) {
		std::uint64_t row_used = 0;
		std::uint64_t col_used = 0;
		for (auto [r, c] : placement) {
			row_used |= std::uint64_t{1} << r;
			col_used |= std::uint64_t{1} << c;
		}
		bool maximal = true;
		for (int r = 0; r < rows && maximal; ++r) {
			if ((row_used >> r) & 1U) {
				continue;
			}
			for (int c = 0; c < shape.row_lengths[r]; ++c) {
				if (((col_used >> c) & 1U) == 0) {
					maximal = false;
					break;
				}
			}
		}
		if (maximal) {
			std::vector<int> f;
			for (auto [r, c] : placement) {
				f.push_back(square_id[r][c]);
			}
			facets.push_back(std::move(f));
		}
	}
	return family_from_ids(std::move(names), std::move(facets));
}

} // namespace shellkit
