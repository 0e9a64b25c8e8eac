#ifndef SHELLKIT_TESTS_SUPPORT_HPP
#define SHELLKIT_TESTS_SUPPORT_HPP

#include "shellkit/complex.hpp"
#include "shellkit/poset.hpp"
#include "shellkit/wildcard_rows.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace shellkit::testing {

inline const char* const kDelta0 = "a c d f\na b c f\na b c d e g\nc d e f g\n";
inline const char* const kL1 = "a b e\nd f\nb c e\nd e\n";

inline FacetFamily delta0() { return parse_facets(std::string(kDelta0)); }

inline FacetFamily l1_family()
{
	ParseOptions opts;
	opts.mode = FamilyMode::Peeling;
	return parse_facets(std::string(kL1), opts);
}

/// The dual Horn formula with 8 variables, 46 models and 3 compressed rows.
inline DualHornFormula formula7()
{
	DualHornFormula f;
	f.universe = IndexSubset::full(8);
	f.forced_zero = IndexSubset::of({0, 1});
	f.clauses.push_back({7, IndexSubset::of({4})});
	f.clauses.push_back({3, IndexSubset::of({2, 4, 6})});
	return f;
}

/// Random family of `n` distinct nonempty subsets of a `vertices`-element
/// ground set. In shelling mode only pairwise incomparable draws are kept,
/// so the result may be shorter than n.
inline FacetFamily random_family(std::mt19937_64& rng, int n, int vertices, FamilyMode mode)
{
	std::vector<std::uint32_t> sets;
	std::uniform_int_distribution<std::uint32_t> pick(1, (1U << vertices) - 1);
	for (int attempt = 0; attempt < 200 && static_cast<int>(sets.size()) < n; ++attempt) {
		const std::uint32_t s = pick(rng);
		bool ok = true;
		for (std::uint32_t t : sets) {
			const bool comparable = (s & t) == s || (s & t) == t;
			if (s == t || (mode == FamilyMode::Shelling && comparable)) {
				ok = false;
				break;
			}
		}
		if (ok) {
			sets.push_back(s);
		}
	}
	std::vector<std::vector<std::string>> tokens;
	for (std::uint32_t s : sets) {
		std::vector<std::string> f;
		for (int v = 0; v < vertices; ++v) {
			if ((s >> v) & 1U) {
				f.push_back("v" + std::to_string(v));
			}
		}
		tokens.push_back(f);
	}
	return FacetFamily::from_tokens(tokens, mode);
}

/// Pure-shelling families tend to be tiny; this biases draws towards sets of
/// one fixed size so cops actually occur.
inline FacetFamily random_pure_family(std::mt19937_64& rng, int n, int vertices, int dim)
{
	std::vector<int> ground(vertices);
	std::vector<std::vector<std::string>> tokens;
	std::vector<std::vector<int>> seen;
	for (int attempt = 0; attempt < 500 && static_cast<int>(tokens.size()) < n; ++attempt) {
		for (int v = 0; v < vertices; ++v) {
			ground[v] = v;
		}
		std::shuffle(ground.begin(), ground.end(), rng);
		std::vector<int> f(ground.begin(), ground.begin() + dim);
		std::sort(f.begin(), f.end());
		if (std::find(seen.begin(), seen.end(), f) != seen.end()) {
			continue;
		}
		seen.push_back(f);
		std::vector<std::string> t;
		for (int v : f) {
			t.push_back("v" + std::to_string(v));
		}
		tokens.push_back(t);
	}
	return FacetFamily::from_tokens(tokens, FamilyMode::Shelling);
}

/// Random poset on `n` elements: each pair i<j (in a hidden order) is
/// related with probability p.
inline Poset random_poset(std::mt19937_64& rng, int n, double p)
{
	std::vector<int> order(n);
	for (int i = 0; i < n; ++i) {
		order[i] = i;
	}
	std::shuffle(order.begin(), order.end(), rng);
	std::bernoulli_distribution coin(p);
	std::vector<std::pair<int, int>> rel;
	for (int a = 0; a < n; ++a) {
		for (int b = a + 1; b < n; ++b) {
			if (coin(rng)) {
				rel.emplace_back(order[a], order[b]);
			}
		}
	}
	std::vector<std::string> names;
	for (int i = 0; i < n; ++i) {
		names.push_back("p" + std::to_string(i));
	}
	return Poset(names, rel);
}

/// Random dual Horn formula over `vars` variables.
inline DualHornFormula random_formula(std::mt19937_64& rng, int vars)
{
	DualHornFormula f;
	f.universe = IndexSubset::full(vars);
	std::uniform_int_distribution<int> var(0, vars - 1);
	std::uniform_int_distribution<int> clause_count(0, vars + 2);
	std::bernoulli_distribution coin(0.5);
	std::bernoulli_distribution rare(0.15);
	for (int v = 0; v < vars; ++v) {
		if (rare(rng)) {
			f.forced_zero = f.forced_zero.with(v);
		}
	}
	const int clauses = clause_count(rng);
	for (int c = 0; c < clauses; ++c) {
		Clause cl;
		std::uniform_int_distribution<int> width(1, std::min(vars, 5));
		const int w = width(rng);
		for (int i = 0; i < w; ++i) {
			cl.positives = cl.positives.with(var(rng));
		}
		if (coin(rng)) {
			int neg = var(rng);
			if (!cl.positives.contains(neg)) {
				cl.negated = neg;
			}
		}
		f.clauses.push_back(cl);
	}
	return f;
}

} // namespace shellkit::testing

#endif
