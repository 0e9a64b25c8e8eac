#ifndef SHELLKIT_GENERATORS_HPP
#define SHELLKIT_GENERATORS_HPP

#include "shellkit/complex.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace shellkit {

/// Bases of the rank-2 uniform matroid on [m]: all 2-subsets, lexicographic.
FacetFamily gen_m2m(int m);

/// Bases of the partition matroid with the given blocks: all transversals,
/// lexicographic in block order.
FacetFamily gen_partition_matroid(const std::vector<std::vector<std::string>>& blocks);

/// Blocks {1..s1}, {s1+1..s1+s2}, ... for the given sizes.
std::vector<std::vector<std::string>> consecutive_blocks(const std::vector<int>& sizes);

using Edge = std::pair<std::string, std::string>;

/// Edge sets of all spanning trees; edge ids are "u-v" tokens. Trees come in
/// lexicographic order of their edge positions in `edges`.
FacetFamily gen_spanning_trees(const std::vector<Edge>& edges);

std::vector<Edge> complete_graph(int m);

/// Edge list file: one "u v" pair per line, '#' comments.
std::vector<Edge> parse_edge_list(std::istream& in);

/// Row lengths of a left-aligned chessboard, weakly decreasing.
struct ChessboardShape
{
	std::vector<int> row_lengths;

	void validate() const;
	int squares() const;
};

/// Inclusion-maximal non-taking rook placements. Squares are named "r<i>c<j>"
/// (1-based); placements come in lexicographic order of their squares taken
/// row by row.
FacetFamily gen_chessboard(const ChessboardShape& shape);

/// Every placement of rooks on the board with no two sharing a row or column
/// (including the empty one), as lists of (row, column).
std::vector<std::vector<std::pair<int, int>>> rook_placements(const ChessboardShape& shape);

} // namespace shellkit

#endif
