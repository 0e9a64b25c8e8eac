#include "support.hpp"

#include "shellkit/error.hpp"
#include "shellkit/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace shellkit;

namespace {

std::multiset<std::string> patterns(const std::vector<Row012e>& rows, int n)
{
	std::multiset<std::string> out;
	for (const auto& r : rows) {
		out.insert(to_pattern(r, n));
	}
	return out;
}

std::vector<IndexSubset> union_of(const std::vector<Row012e>& rows)
{
	std::vector<IndexSubset> all;
	for (const auto& r : rows) {
		const auto m = enumerate_row(r);
		all.insert(all.end(), m.begin(), m.end());
	}
	std::sort(all.begin(), all.end());
	return all;
}

void check_rows_exact(const DualHornFormula& f, const std::vector<Row012e>& rows)
{
	for (std::size_t i = 0; i < rows.size(); ++i) {
		CHECK(rows[i].universe() == f.universe);
		for (IndexSubset b : rows[i].bubbles()) {
			CHECK(b.size() >= 2);
		}
		for (std::size_t j = i + 1; j < rows.size(); ++j) {
			CHECK(rows_disjoint(rows[i], rows[j]));
		}
	}
	const auto all = union_of(rows);
	const auto models = oracle::models_by_enumeration(f);
	CHECK(all == models);
	CHECK(total_cardinality(rows) == BigCount(models.size()));
}

} // namespace

TEST_CASE("the 46-model formula compresses to three rows")
{
	const DualHornFormula f = testing::formula7();
	const auto rows = solve_dual_horn(f);
	CHECK(patterns(rows, 8) == std::multiset<std::string>{"00221222", "00000200", "00a202a0"});
	std::multiset<BigCount> sizes;
	for (const auto& r : rows) {
		sizes.insert(r.cardinality());
	}
	CHECK(sizes == std::multiset<BigCount>{32, 2, 12});
	CHECK(total_cardinality(rows) == 46);
	check_rows_exact(f, rows);
}

TEST_CASE("row construction and cardinality")
{
	const IndexSubset u = IndexSubset::full(6);
	const Row012e r(u, IndexSubset::of({0}), IndexSubset::of({1}), IndexSubset::of({2}),
	                {IndexSubset::of({3, 4, 5})});
	CHECK(r.cardinality() == 2 * 7);
	CHECK(r.contains(IndexSubset::of({1, 3})));
	CHECK_FALSE(r.contains(IndexSubset::of({1})));
	CHECK_FALSE(r.contains(IndexSubset::of({0, 1, 3})));
	CHECK(enumerate_row(r).size() == 14);
	CHECK(to_pattern(r, 7) == "012aaa.");

	CHECK_THROWS_AS(Row012e(u, IndexSubset::of({0}), IndexSubset::of({0}), {}, {}), Error);
	CHECK_THROWS_AS(Row012e(u, {}, {}, IndexSubset::of({0, 1}), {IndexSubset::of({2})}), Error);
	CHECK(Row012e::all_twos(IndexSubset::full(10)).cardinality() == 1024);
}

TEST_CASE("row mutators keep bubbles normalized")
{
	Row012e r(IndexSubset::full(3), {}, {}, {}, {IndexSubset::of({0, 1, 2})});
	CHECK(r.force_zero(IndexSubset::of({0, 1})));
	CHECK(r.bubbles().empty());
	CHECK(r.ones() == IndexSubset::of({2}));

	Row012e s(IndexSubset::full(2), {}, {}, {}, {IndexSubset::of({0, 1})});
	CHECK_FALSE(s.force_zero(IndexSubset::of({0, 1})));

	Row012e t(IndexSubset::full(4), {}, {}, IndexSubset::of({3}), {IndexSubset::of({0, 1, 2})});
	CHECK(t.force_one(1));
	CHECK(t.bubbles().empty());
	CHECK(t.twos() == IndexSubset::of({0, 2, 3}));

	Row012e u(IndexSubset::full(4), {}, {}, IndexSubset::of({3}), {IndexSubset::of({0, 1, 2})});
	u.narrow_bubble(IndexSubset::of({0, 1}));
	CHECK(u.bubbles() == std::vector<IndexSubset>{IndexSubset::of({0, 1})});
	CHECK(u.twos() == IndexSubset::of({2, 3}));
}

TEST_CASE("imposing one clause")
{
	const std::vector<Row012e> start{Row012e::all_twos(IndexSubset::full(3))};
	const auto a = impose_clause(start, Clause{std::nullopt, IndexSubset::of({0, 1})});
	CHECK(total_cardinality(a) == 6);
	const auto b = impose_clause(start, Clause{2, IndexSubset::of({0})});
	CHECK(total_cardinality(b) == 6);
	const auto c = impose_clause(start, Clause{0, IndexSubset::of({0})});
	CHECK(total_cardinality(c) == 8);
}

TEST_CASE("solver matches brute force on random formulas")
{
	std::mt19937_64 rng(2024);
	std::uniform_int_distribution<int> vars(1, 12);
	for (int trial = 0; trial < 500; ++trial) {
		const DualHornFormula f = testing::random_formula(rng, vars(rng));
		check_rows_exact(f, solve_dual_horn(f));
	}
}

TEST_CASE("symbolic disjointness agrees with enumeration")
{
	std::mt19937_64 rng(99);
	std::uniform_int_distribution<int> cell(0, 4);
	const int n = 6;
	auto random_row = [&] {
		IndexSubset z, o, t, e1, e2;
		for (int v = 0; v < n; ++v) {
			switch (cell(rng)) {
			case 0: z = z.with(v); break;
			case 1: o = o.with(v); break;
			case 2: t = t.with(v); break;
			case 3: e1 = e1.with(v); break;
			default: e2 = e2.with(v); break;
			}
		}
		std::vector<IndexSubset> bubbles;
		for (IndexSubset e : {e1, e2}) {
			if (e.size() >= 2) {
				bubbles.push_back(e);
			} else {
				t |= e;
			}
		}
		return Row012e(IndexSubset::full(n), z, o, t, bubbles);
	};
	for (int trial = 0; trial < 400; ++trial) {
		const Row012e a = random_row();
		const Row012e b = random_row();
		const auto ma = enumerate_row(a);
		bool shared = false;
		for (IndexSubset x : ma) {
			shared = shared || b.contains(x);
		}
		CHECK(rows_disjoint(a, b) == !shared);
		CHECK(BigCount(ma.size()) == a.cardinality());
	}
}

TEST_CASE("formula validation")
{
	DualHornFormula f;
	f.universe = IndexSubset::full(3);
	f.clauses.push_back({std::nullopt, IndexSubset::of({5})});
	CHECK_THROWS_AS(solve_dual_horn(f), Error);
	f.clauses = {{std::nullopt, IndexSubset()}};
	CHECK_THROWS_AS(solve_dual_horn(f), Error);
}
