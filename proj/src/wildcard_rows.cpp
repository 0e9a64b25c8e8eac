#include "shellkit/wildcard_rows.hpp"

#include "shellkit/error.hpp"

#include <algorithm>

namespace shellkit {

Row012e::Row012e(IndexSubset universe, IndexSubset zeros, IndexSubset ones, IndexSubset twos,
                 std::vector<IndexSubset> bubbles)
	: zeros_(zeros), ones_(ones), twos_(twos), bubbles_(std::move(bubbles))
{
	IndexSubset seen = zeros_;
	auto claim = [&](IndexSubset part) {
		if (seen.intersects(part)) {
			throw Error(ErrorKind::InvalidArgument, "row parts overlap");
		}
		seen |= part;
	};
	claim(ones_);
	claim(twos_);
	for (IndexSubset b : bubbles_) {
		if (b.size() < 2) {
			throw Error(ErrorKind::InvalidArgument, "e-bubble " + b.to_string() + " has fewer than two variables");
		}
		claim(b);
		bubbled_ |= b;
	}
	if (seen != universe) {
		throw Error(ErrorKind::InvalidArgument, "row parts do not cover the universe");
	}
}

Row012e Row012e::all_twos(IndexSubset universe)
{
	Row012e r;
	r.twos_ = universe;
	return r;
}

BigCount Row012e::cardinality() const
{
	BigCount c = BigCount(1) << twos_.size();
	for (IndexSubset b : bubbles_) {
		c *= (BigCount(1) << b.size()) - 1;
	}
	return c;
}

bool Row012e::force_zero(IndexSubset vars)
{
	if (ones_.intersects(vars)) {
		return false;
	}
	zeros_ |= (vars & universe());
	twos_ -= vars;
	if (!bubbled_.intersects(vars)) {
		return true;
	}
	bubbled_ -= vars;
	std::size_t out = 0;
	for (std::size_t i = 0; i < bubbles_.size(); ++i) {
		IndexSubset b = bubbles_[i] - vars;
		if (b.empty()) {
			return false;
		}
		if (b.size() == 1) {
			ones_ |= b;
			bubbled_ -= b;
			continue;
		}
		bubbles_[out++] = b;
	}
	bubbles_.resize(out);
	return true;
}

bool Row012e::force_one(int v)
{
	if (zeros_.contains(v)) {
		return false;
	}
	if (twos_.contains(v)) {
		twos_ = twos_.without(v);
		ones_ = ones_.with(v);
		return true;
	}
	if (bubbled_.contains(v)) {
		auto it = std::find_if(bubbles_.begin(), bubbles_.end(), [v](IndexSubset b) { return b.contains(v); });
		const IndexSubset bubble = *it;
		bubbles_.erase(it);
		bubbled_ -= bubble;
		twos_ |= bubble.without(v);
		ones_ = ones_.with(v);
	}
	return true;
}

void Row012e::narrow_bubble(IndexSubset part)
{
	auto it = std::find_if(bubbles_.begin(), bubbles_.end(), [part](IndexSubset b) { return part.subset_of(b); });
	const IndexSubset bubble = *it;
	bubbles_.erase(it);
	bubbled_ -= bubble;
	twos_ |= bubble;
	add_bubble(part);
}

void Row012e::add_bubble(IndexSubset vars)
{
	twos_ -= vars;
	if (vars.size() == 1) {
		ones_ |= vars;
		return;
	}
	bubbles_.push_back(vars);
	bubbled_ |= vars;
}

BigCount total_cardinality(std::span<const Row012e> rows)
{
	BigCount total = 0;
	for (const auto& r : rows) {
		total += r.cardinality();
	}
	return total;
}

bool rows_disjoint(const Row012e& a, const Row012e& b)
{
	if (a.zeros().intersects(b.ones()) || b.zeros().intersects(a.ones())) {
		return true;
	}
	for (IndexSubset e : a.bubbles()) {
		if (e.subset_of(b.zeros())) {
			return true;
		}
	}
	for (IndexSubset e : b.bubbles()) {
		if (e.subset_of(a.zeros())) {
			return true;
		}
	}
	return false;
}

void for_each_member(const Row012e& r, const std::function<void(IndexSubset)>& visit)
{
	const auto& bubbles = r.bubbles();
	// Odometer over one nonempty submask per bubble, then all submasks of twos.
	std::vector<std::uint64_t> pick(bubbles.size());
	for (std::size_t i = 0; i < bubbles.size(); ++i) {
		pick[i] = bubbles[i].bits() & (~bubbles[i].bits() + 1);
	}
	const std::uint64_t twos = r.twos().bits();
	while (true) {
		std::uint64_t base = r.ones().bits();
		for (std::uint64_t p : pick) {
			base |= p;
		}
		std::uint64_t sub = 0;
		do {
			visit(IndexSubset(base | sub));
			sub = (sub - twos) & twos;
		} while (sub != 0);

		std::size_t i = 0;
		for (; i < pick.size(); ++i) {
			const std::uint64_t mask = bubbles[i].bits();
			pick[i] = (pick[i] - mask) & mask;
			if (pick[i] != 0) {
				break;
			}
			pick[i] = mask & (~mask + 1);
		}
		if (i == pick.size()) {
			return;
		}
	}
}

std::vector<IndexSubset> enumerate_row(const Row012e& r)
{
	std::vector<IndexSubset> out;
	for_each_member(r, [&](IndexSubset a) { out.push_back(a); });
	return out;
}

std::string to_pattern(const Row012e& r, int n)
{
	std::string s(static_cast<std::size_t>(n), '.');
	for (int i : r.zeros()) {
		s[i] = '0';
	}
	for (int i : r.ones()) {
		s[i] = '1';
	}
	for (int i : r.twos()) {
		s[i] = '2';
	}
	for (std::size_t b = 0; b < r.bubbles().size(); ++b) {
		const char tag = b < 26 ? static_cast<char>('a' + b) : static_cast<char>('A' + (b - 26));
		for (int i : r.bubbles()[b]) {
			s[i] = tag;
		}
	}
	return s;
}

void DualHornFormula::validate() const
{
	if (!forced_zero.subset_of(universe)) {
		throw Error(ErrorKind::InvalidArgument, "forced zeros outside the universe");
	}
	for (const auto& c : clauses) {
		if (!c.positives.subset_of(universe) || (c.negated && !universe.contains(*c.negated))) {
			throw Error(ErrorKind::InvalidArgument, "clause mentions a variable outside the universe");
		}
		if (!c.negated && c.positives.empty()) {
			throw Error(ErrorKind::InvalidArgument, "empty clause");
		}
	}
}

bool DualHornFormula::satisfied_by(IndexSubset a) const
{
	if (a.intersects(forced_zero)) {
		return false;
	}
	return std::all_of(clauses.begin(), clauses.end(), [a](const Clause& c) { return c.satisfied_by(a); });
}

namespace {

/// Appends the members of `r` that meet `positives`, split into disjoint rows.
void require_some(Row012e r, IndexSubset positives, std::vector<Row012e>& out)
{
	if (positives.intersects(r.ones())) {
		out.push_back(std::move(r));
		return;
	}
	for (IndexSubset b : r.bubbles()) {
		if (b.subset_of(positives)) {
			out.push_back(std::move(r));
			return;
		}
	}
	const IndexSubset live = positives - r.zeros();
	if (live.empty()) {
		return;
	}

	// Row i takes the members whose first hit lies in part i, with all earlier
	// parts zeroed: the free part first, then each touched bubble.
	const IndexSubset free_part = live & r.twos();
	if (!free_part.empty()) {
		Row012e hit = r;
		hit.add_bubble(free_part);
		out.push_back(std::move(hit));
		r.force_zero(free_part);
	}
	std::vector<IndexSubset> touched;
	for (IndexSubset b : r.bubbles()) {
		if (b.intersects(live)) {
			touched.push_back(b & live);
		}
	}
	for (IndexSubset q : touched) {
		// q is a proper part of its bubble, so meeting q satisfies the bubble
		// and frees the remaining variables.
		Row012e hit = r;
		hit.narrow_bubble(q);
		out.push_back(std::move(hit));
		if (!r.force_zero(q)) {
			return;
		}
	}
}

} // namespace

std::vector<Row012e> impose_clause(std::span<const Row012e> rows, const Clause& clause)
{
	std::vector<Row012e> out;
	if (clause.negated && clause.positives.contains(*clause.negated)) {
		out.assign(rows.begin(), rows.end());
		return out;
	}
	for (const Row012e& r : rows) {
		if (!clause.negated) {
			require_some(r, clause.positives, out);
			continue;
		}
		const int v = *clause.negated;
		if (r.zeros().contains(v)) {
			out.push_back(r);
			continue;
		}
		// Branch on the positive side first: members meeting the positives keep
		// v untouched; the rest must have v = 0 as well.
		require_some(r, clause.positives, out);
		Row012e rest = r;
		if (rest.force_zero(clause.positives.with(v))) {
			out.push_back(std::move(rest));
		}
	}
	return out;
}

std::vector<Row012e> solve_dual_horn(const DualHornFormula& f)
{
	f.validate();
	Row012e start = Row012e::all_twos(f.universe);
	std::vector<Row012e> rows;
	if (start.force_zero(f.forced_zero)) {
		rows.push_back(std::move(start));
	}
	std::vector<Clause> ordered = f.clauses;
	std::stable_sort(ordered.begin(), ordered.end(),
	                 [](const Clause& a, const Clause& b) { return a.positives.size() < b.positives.size(); });
	for (const auto& c : ordered) {
		if (rows.empty()) {
			break;
		}
		rows = impose_clause(rows, c);
	}
	return rows;
}

} // namespace shellkit
