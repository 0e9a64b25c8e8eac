#include "shellkit/shelling.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace shellkit {

IndexSubset SuffixClassification::hooligans() const
{
	IndexSubset h = non_policeable;
	for (const auto& p : policeable) {
		h = h.with(p.hooligan);
	}
	return h;
}

bool is_facet_of(const VertexSet& x, const VertexSet& y)
{
	return x.is_subset_of(y) && x.count() + 1 == y.count();
}

CopHooliganTable classify(const FacetFamily& family)
{
	const int n = family.size();
	CopHooliganTable table;
	table.n = n;
	table.suffixes.resize(n);

	for (int k = 0; k < n; ++k) {
		const VertexSet& fk = family.facet(k);
		const std::size_t rank = fk.count();
		std::vector<VertexSet> meet(n);
		SuffixClassification& sc = table.suffixes[k];
		for (int j = 0; j < n; ++j) {
			if (j == k) {
				continue;
			}
			meet[j] = family.facet(j) & fk;
			if (meet[j].count() + 1 == rank) {
				sc.cops = sc.cops.with(j);
			}
		}
		for (int i = 0; i < n; ++i) {
			if (i == k || sc.cops.contains(i)) {
				continue;
			}
			IndexSubset police;
			for (int j : sc.cops) {
				if (meet[i].is_subset_of(meet[j])) {
					police = police.with(j);
				}
			}
			if (police.empty()) {
				sc.non_policeable = sc.non_policeable.with(i);
			} else {
				sc.policeable.push_back({i, police});
			}
		}
	}
	return table;
}

DualHornFormula build_formula(const CopHooliganTable& table, int k)
{
	const SuffixClassification& sc = table[k];
	DualHornFormula f;
	f.universe = IndexSubset::full(table.n).without(k);
	f.forced_zero = sc.non_policeable;
	for (const auto& p : sc.policeable) {
		f.clauses.push_back(Clause{p.hooligan, p.cops});
	}
	return f;
}

PssRowFamily pss_rows(const CopHooliganTable& table, int threads)
{
	std::vector<std::vector<Row012e>> rows(table.n);
	detail::parallel_for(table.n, threads, [&](int k) { rows[k] = solve_dual_horn(build_formula(table, k)); });
	return PssRowFamily(table.n, std::move(rows));
}

PssRowFamily pss_rows(const FacetFamily& family, int threads)
{
	return pss_rows(classify(family), threads);
}

std::optional<IndexSubset> detect_type1(const CopHooliganTable& table)
{
	IndexSubset copless;
	for (int k = 0; k < table.n; ++k) {
		if (table[k].cops.empty()) {
			copless = copless.with(k);
		}
	}
	if (copless.size() >= 2) {
		return copless;
	}
	return std::nullopt;
}

Type2Result detect_type2(const CopHooliganTable& table)
{
	Type2Result result;
	for (int k = 0; k < table.n; ++k) {
		if (table[k].non_policeable.empty()) {
			result.witnesses.clear();
			return result;
		}
		result.witnesses.emplace_back(k, table[k].non_policeable.first());
	}
	result.failed = table.n > 0;
	return result;
}

bool detect_type3(const PssRowFamily& pss)
{
	const IndexSubset all = IndexSubset::full(pss.size());
	for (int k = 0; k < pss.size(); ++k) {
		if (pss.is_pss(all.without(k), k)) {
			return false;
		}
	}
	return true;
}

namespace {

std::string cell_text(const FacetFamily& family, const VertexSet& s)
{
	std::vector<std::string> toks;
	bool short_tokens = true;
	for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
		toks.push_back(family.vertex_name(static_cast<int>(v)));
		short_tokens = short_tokens && toks.back().size() == 1;
	}
	if (toks.empty()) {
		return "{}";
	}
	std::string out;
	for (std::size_t i = 0; i < toks.size(); ++i) {
		if (i > 0 && !short_tokens) {
			out += ',';
		}
		out += toks[i];
	}
	return out;
}

} // namespace

std::string render_intersection_table(const FacetFamily& family, const CopHooliganTable& table)
{
	const int n = family.size();
	std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
	std::size_t width = 1;
	for (int k = 0; k < n; ++k) {
		for (int j = 0; j < n; ++j) {
			std::string c;
			if (j == k) {
				c = "-";
			} else {
				c = cell_text(family, family.facet(j) & family.facet(k));
				if (table[k].cops.contains(j)) {
					std::transform(c.begin(), c.end(), c.begin(), [](unsigned char ch) { return std::toupper(ch); });
					c = "[" + c + "]";
				} else if (table[k].non_policeable.contains(j)) {
					c += "!";
				}
			}
			width = std::max(width, c.size());
			cells[k][j] = std::move(c);
		}
	}
	std::ostringstream out;
	out << std::setw(5) << "";
	for (int j = 0; j < n; ++j) {
		out << ' ' << std::setw(static_cast<int>(width)) << ("F" + std::to_string(j + 1));
	}
	out << '\n';
	for (int k = 0; k < n; ++k) {
		out << std::setw(5) << ("F" + std::to_string(k + 1));
		for (int j = 0; j < n; ++j) {
			out << ' ' << std::setw(static_cast<int>(width)) << cells[k][j];
		}
		out << '\n';
	}
	return out.str();
}

} // namespace shellkit
